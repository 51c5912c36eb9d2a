import pandas as pd
records = pd.read_json('events.json')
print(records.shape)

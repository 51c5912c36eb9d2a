import pandas as pd
stamps = pd.to_datetime(['2024-01-01', '2024-02-01'])
print(stamps)

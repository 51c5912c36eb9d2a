import pandas as pd
frame = pd.DataFrame({'name': ['a', 'b'], 'score': [3, 4]})
frame.to_json('scores.json')

import pandas as pd
parts = [pd.read_csv('a.csv'), pd.read_csv('b.csv')]
combined = pd.concat(parts, ignore_index=True)
combined.to_csv('combined.csv', index=False)

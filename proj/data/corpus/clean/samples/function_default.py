import pandas as pd

def summarize(path, limit=5):
    table = pd.read_csv(path)
    top = table.head(limit)
    return top

print(summarize('items.csv'))

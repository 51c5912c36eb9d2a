import pandas as pd
scores = pd.read_csv('scores.csv')
ranked = scores.sort_values('points', ascending=False)
print(ranked.head(3))

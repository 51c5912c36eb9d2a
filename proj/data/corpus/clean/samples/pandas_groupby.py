import pandas as pd
orders = pd.read_csv('orders.csv')
totals = orders.groupby('region').sum()
print(totals)

import pandas as pd
left = pd.read_csv('customers.csv')
right = pd.read_csv('orders.csv')
joined = pd.merge(left, right, on='customer_id')
print(joined.head(10))

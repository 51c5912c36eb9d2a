import pandas as pd
report = pd.read_excel('quarterly.xlsx', sheet_name='Q1')
print(report.describe())

import pandas as pd
raw = pd.read_excel('survey.xls')
clean = raw.dropna()
print(clean.describe())

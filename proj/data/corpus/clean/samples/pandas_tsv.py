import pandas as pd
table = pd.read_csv('genes.tsv', sep='\t')
print(len(table))

import numpy as np
import pandas as pd
prices = pd.read_csv('prices.csv')
average = np.mean(prices['close'])
print(average)

import pandas as pd
import matplotlib.pyplot as plt
weather = pd.read_csv('weather.csv')
plt.plot(weather['day'], weather['temp'])

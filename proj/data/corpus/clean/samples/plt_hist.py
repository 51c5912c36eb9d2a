import matplotlib.pyplot as plt
ages = [21, 25, 30, 30, 41]
plt.hist(ages, bins=5)

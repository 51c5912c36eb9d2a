import matplotlib.pyplot as plt
plt.bar(['a', 'b'], [3, 5])
plt.savefig('bars.png')

import matplotlib.pyplot as plt
xs = [1, 2, 3]
ys = [2, 4, 9]
plt.plot(xs, ys)
plt.title('growth')
plt.show()

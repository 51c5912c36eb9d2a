import numpy as np
import matplotlib.pyplot as plt
xs = np.linspace(0, 6, 50)
plt.plot(xs, np.sin(xs))

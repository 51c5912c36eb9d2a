import numpy as np
flat = np.arange(6)
matrix = np.reshape(flat, (2, 3))
print(matrix)

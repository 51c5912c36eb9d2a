import numpy as np
a = [1, 2, 3]
b = [4, 5, 6]
print(np.dot(a, b))

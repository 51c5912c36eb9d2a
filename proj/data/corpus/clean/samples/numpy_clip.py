import numpy as np
signal = [-2, 0, 3, 8]
bounded = np.clip(signal, 0, 5)
print(bounded)

import numpy as np
weights = np.ones(4)
weights[0] = 0.5
print(weights.sum())

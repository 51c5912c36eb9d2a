import numpy as np

def spread(samples):
    return np.std(samples)

print(spread([1, 2, 3, 4]))

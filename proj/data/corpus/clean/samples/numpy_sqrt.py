import numpy as np
side = np.sqrt(16.0)
print(side)

import numpy as np
values = [2.5, 3.5, 4.0]
print(np.mean(values))

import numpy as np
steps = np.arange(0, 10, 2)
for step in steps:
    print(step)

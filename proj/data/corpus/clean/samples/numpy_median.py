import numpy as np
readings = [10, 12, 9, 15]
middle = np.median(readings)
print(middle)

# compute the average of the readings
import numpy as np
readings = [3, 4, 5]  # sensor values
print(np.mean(readings))

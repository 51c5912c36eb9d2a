import numpy as np
total = 0
for value in [1, 2, 3]:
    if value > 1:
        total += value
    else:
        total -= 1
print(np.abs(total))

import numpy as np
grid = np.zeros((3, 3))
grid[1, 1] = 5
print(grid)

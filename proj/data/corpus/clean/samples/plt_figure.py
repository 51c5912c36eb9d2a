import matplotlib.pyplot as plt
plt.figure(figsize=(4, 3))

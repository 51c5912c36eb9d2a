names = ['ada', 'grace']
for index, name in enumerate(names):
    print(index, name.upper())

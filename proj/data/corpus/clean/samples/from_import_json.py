from json import loads
parsed = loads('[1, 2, 3]')
print(parsed)

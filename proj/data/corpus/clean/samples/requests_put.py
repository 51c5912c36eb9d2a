import requests
status = requests.put('https://example.com/items/1', data={'qty': 2})
print(status.ok)

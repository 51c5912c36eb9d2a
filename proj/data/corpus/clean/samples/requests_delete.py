import requests
gone = requests.delete('https://example.com/items/1')
print(gone.status_code)

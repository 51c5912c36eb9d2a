import requests
response = requests.get('https://example.com/api/items', timeout=10)
print(response.status_code)

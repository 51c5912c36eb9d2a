import requests
meta = requests.head('https://example.com/file.zip')
print(meta.headers)

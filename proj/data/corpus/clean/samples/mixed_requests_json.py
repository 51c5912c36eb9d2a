import requests
import json
reply = requests.get('https://example.com/data')
payload = json.loads(reply.text)
print(payload)

import requests
payload = {'name': 'widget', 'qty': 3}
reply = requests.post('https://example.com/api/orders', json=payload)
print(reply.status_code)

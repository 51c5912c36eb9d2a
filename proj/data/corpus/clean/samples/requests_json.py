import requests

def fetch_user(user_id):
    url = 'https://example.com/users/' + str(user_id)
    response = requests.get(url)
    response.raise_for_status()
    return response.json()

print(fetch_user(7))

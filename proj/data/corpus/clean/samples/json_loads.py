import json
text = '{"a": 1}'
config = json.loads(text)
print(config['a'])

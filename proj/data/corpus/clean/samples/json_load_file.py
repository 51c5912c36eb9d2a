import json
with open('config.json') as handle:
    config = json.load(handle)
print(config)

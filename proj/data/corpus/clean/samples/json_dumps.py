import json
settings = {'debug': True, 'level': 3}
print(json.dumps(settings, indent=2))

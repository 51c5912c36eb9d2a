import json
state = {'step': 4}
with open('state.json', 'w') as out:
    json.dump(state, out)

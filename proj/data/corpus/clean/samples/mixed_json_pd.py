import json
import pandas as pd
with open('meta.json') as f:
    meta = json.load(f)
frame = pd.read_json(meta['path'])

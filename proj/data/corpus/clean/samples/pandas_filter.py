import pandas as pd

def load_adults(path):
    people = pd.read_csv(path)
    adults = people[people['age'] >= 18]
    return adults

result = load_adults('people.csv')
print(result)

import glob
import json
import os
import sys

import jsonschema
from referencing import Registry, Resource

root = sys.argv[1]
schemas = {}
for path in glob.glob(os.path.join(root, "docs/schema/*.schema.json")):
    with open(path) as f:
        schemas[os.path.basename(path)] = json.load(f)
registry = Registry().with_resources(
    [(s["$id"], Resource.from_contents(s)) for s in schemas.values()]
)


def validator(name):
    return jsonschema.Draft202012Validator(schemas[name], registry=registry)


def load(path):
    with open(path) as f:
        return json.load(f)


checked = 0
for path in sorted(glob.glob(os.path.join(root, "docs/worked/*.json"))):
    validator("worked.schema.json").validate(load(path))
    checked += 1
for path in sorted(glob.glob(os.path.join(root, "data/fixtures/*.json"))):
    name = os.path.basename(path)
    if name == "truncated.json":
        continue
    if name.startswith("witness_"):
        schema = "witness.schema.json"
    elif name.startswith("ext_table_"):
        schema = "reports.schema.json"
    else:
        schema = "input.schema.json"
    validator(schema).validate(load(path))
    checked += 1

# the schemas must reject obviously wrong documents
worked = load(os.path.join(root, "docs/worked/sweedler_q.json"))
worked["hh"]["dims"][0]["dim"] = "one"
assert not validator("worked.schema.json").is_valid(worked)
hopf = load(os.path.join(root, "data/fixtures/sweedler_q.json"))
del hopf["antipode"]
assert not validator("input.schema.json").is_valid(hopf)

print(f"{checked} documents match their schemas")

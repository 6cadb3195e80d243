"""Regenerate the JSON input files in this directory from the bundled fixtures."""
import json
import pathlib

from lcfhomology import fixtures

HERE = pathlib.Path(__file__).parent


def write(name, data):
    (HERE / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n")


for name, make in fixtures.SIMPLICIAL.items():
    write(name, make().to_json())
for name, (make, p) in fixtures.QUILLEN.items():
    G = make()
    write(name, {"kind": "group", "degree": G.degree,
                 "generators": [list(g) for g in G.generators], "prime": p})
write("point", {"kind": "poset", "dims": [0], "covers": []})

"""JSON descriptions of semigroups.

Three kinds are accepted (see README for the exact grammar):

  {"kind": "table", "generators": ["a","b"], "table": [[...], ...],
   "gen_elements": [0,1], "element_names": [...]}
  {"kind": "transformations", "states": 5, "maps": {"a": [1,1,2,2,4], ...}}
  {"kind": "family", "family": "tsetlin", "n": 3}

For "table", ``gen_elements`` defaults to the first len(generators)
elements.  For "transformations", generator order is the order of the keys
in ``maps``.  For "family", remaining keys are family parameters.
"""

from __future__ import annotations

import json

from .core import ASemigroup, SemigroupError, semigroup_from_table, semigroup_from_transformations
from .families import FamilySpec, build


def semigroup_from_spec(data: dict) -> ASemigroup:
    if not isinstance(data, dict) or "kind" not in data:
        raise SemigroupError("spec must be an object with a 'kind' field")
    kind = data["kind"]
    if kind == "table":
        table = data.get("table")
        gen_names = data.get("generators")
        if table is None or gen_names is None:
            raise SemigroupError("table spec needs 'table' and 'generators'")
        gens = data.get("gen_elements", list(range(len(gen_names))))
        if len(gens) != len(gen_names):
            raise SemigroupError("gen_elements and generators must align")
        return semigroup_from_table(
            table, gens, gen_names, data.get("element_names")
        )
    if kind == "transformations":
        states = data.get("states")
        maps = data.get("maps")
        if states is None or not maps:
            raise SemigroupError("transformation spec needs 'states' and 'maps'")
        return semigroup_from_transformations(states, maps)
    if kind == "family":
        name = data.get("family")
        if not name:
            raise SemigroupError("family spec needs a 'family' name")
        params = {k: v for k, v in data.items() if k not in ("kind", "family")}
        return build(FamilySpec(name, params))
    raise SemigroupError(f"unknown spec kind {kind!r}")


def load_spec(path: str) -> ASemigroup:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SemigroupError(f"invalid JSON in {path}: {exc}") from exc
    return semigroup_from_spec(data)

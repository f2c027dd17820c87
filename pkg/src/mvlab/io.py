"""JSON serialization for BZ data, polytope sets, reports and Lambda-modules.

All output is sorted so identical inputs give byte-identical files.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from .polytope import BZDatum, from_values
from .rootsys import parse_root_system


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def bz_to_json(M: BZDatum) -> dict:
    entries = sorted(([list(g), v] for g, v in zip(M.rs.gammas, M.entries)))
    return {"root_system": M.system, "normalized": True,
            "entries": [{"gamma": g, "M": v} for g, v in entries]}


def bz_from_json(d: dict, experimental: bool = False) -> BZDatum:
    rs = parse_root_system(d["root_system"], experimental=experimental)
    return from_values(rs, ((e["gamma"], e["M"]) for e in d["entries"]))


def set_to_json(system: str, S) -> dict:
    data = sorted((bz_to_json(M) for M in S), key=lambda d: [e["M"] for e in d["entries"]])
    return {"root_system": system, "polytopes": data}


def set_from_json(d: dict, experimental: bool = False) -> list[BZDatum]:
    return [bz_from_json(p, experimental) for p in d["polytopes"]]


# -- modules --------------------------------------------------------------------------


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else str(x)


def module_to_json(X) -> dict:
    q = X.quiver
    return {
        "root_system": q.rs.name,
        "orientation": [list(e) for e in q.orientation],
        "dims": list(X.dims),
        "arrows": {a.key: [[_num(x) for x in row] for row in X.maps[a.index]]
                   for a in q.arrows},
    }


def module_from_json(d: dict):
    from .preproj import LambdaModule, build_preprojective
    rs = parse_root_system(d["root_system"])
    alg = build_preprojective(rs, [tuple(e) for e in d["orientation"]])
    q = alg.quiver
    maps = {}
    for key, m in d.get("arrows", {}).items():
        if key not in q.by_key:
            raise ValueError(f"unknown arrow {key}")
        maps[q.by_key[key].index] = [[Fraction(x) for x in row] for row in m]
    return alg, LambdaModule(q, d["dims"], maps)


FIXTURES = ("T", "TPrime", "N_gamma0", "N_s1gamma0")


def load_fixture(name: str):
    """Shipped D4 modules: T = S2+S2, TPrime = X+S2, N(gamma0), N(s1 gamma0)."""
    text = resources.files("mvlab.preproj.fixtures").joinpath(f"{name}.json").read_text()
    return module_from_json(json.loads(text))

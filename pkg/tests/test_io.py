import json

import pytest

from mvlab import io
from mvlab.crystal import generate
from mvlab.d4example import d4_modules
from mvlab.preproj import is_isomorphic
from mvlab.rootsys import parse_root_system


@pytest.mark.parametrize("name", ["A2", "D4", "C2@A3"])
def test_set_round_trip(name):
    S = generate(parse_root_system(name), 2)
    text = io.dumps(io.set_to_json(name, S))
    back = io.set_from_json(json.loads(text))
    assert sorted(b.entries for b in back) == sorted(M.entries for M in S)
    assert text == io.dumps(io.set_to_json(name, list(reversed(S))))


def test_bz_json_shape():
    M = generate(parse_root_system("A2"), 1)[1]
    d = io.bz_to_json(M)
    assert d["root_system"] == "A2" and d["normalized"]
    assert len(d["entries"]) == 6
    assert io.bz_from_json(d) == M


def test_module_round_trip():
    _, _, Tp = d4_modules()
    _, back = io.module_from_json(json.loads(io.dumps(io.module_to_json(Tp))))
    assert back.dims == Tp.dims and is_isomorphic(back, Tp)


def test_unknown_arrow_rejected():
    _, T, _ = d4_modules()
    d = io.module_to_json(T)
    d["arrows"]["1->3"] = [[0]]
    with pytest.raises(ValueError):
        io.module_from_json(d)

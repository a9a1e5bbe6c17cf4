import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sdcat import serialize
from sdcat.fincat import FinGroupoid, dihedral_group, pair_groupoid, zigzag
from sdcat.oracle import corpus
from sdcat.subdivision import build_sd

CORPUS = corpus()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(sorted(CORPUS)), st.booleans())
def test_roundtrip_is_byte_stable(name, with_names):
    C = CORPUS[name]
    text = serialize.dumps_category(C, with_names)
    back = serialize.loads_category(text)
    assert np.array_equal(back.comp, C.comp)
    assert np.array_equal(back.dom, C.dom) and np.array_equal(back.cod, C.cod)
    assert serialize.dumps_category(back, with_names) == text
    assert isinstance(back, FinGroupoid)


def test_builders():
    cases = {
        '{"builder": "dihedral", "n": 3}': (1, 6),
        '{"builder": "zigzag", "k": 2}': (3, 5),
        '{"builder": "pair_groupoid", "n": 2, "vertex_group": {"builder": "cyclic", "n": 2}}': (2, 8),
        '{"builder": "disjoint_union", "parts": [{"builder": "cyclic", "n": 2}, {"builder": "cyclic", "n": 3}]}': (2, 5),
        '{"builder": "direct_product", "parts": [{"builder": "cyclic", "n": 2}, {"builder": "klein_four"}]}': (1, 8),
        '{"builder": "opposite", "of": {"builder": "poset_interval", "n": 2}}': (3, 6),
    }
    for text, shape in cases.items():
        C = serialize.loads_category(text)
        assert (C.n_objects, C.n_morphisms) == shape, text
    with pytest.raises(ValueError):
        serialize.loads_category('{"builder": "nope"}')


def test_bad_ids():
    d = serialize.category_to_dict(zigzag(2))
    d["morphisms"][0]["id"] = 7
    with pytest.raises(ValueError):
        serialize.category_from_dict(d)


def test_poset_loads_as_category():
    C = serialize.loads_category(serialize.dumps_category(zigzag(2)))
    assert not isinstance(C, FinGroupoid)


def test_sd_index_and_dot():
    sd = build_sd(dihedral_group(3), 2)
    idx = serialize.sd_index(sd)
    assert len(idx["objects"]) == 31 and len(idx["morphisms"]) == 191
    assert idx["objects"][0] == {"id": 0, "base": 0, "chain": []}
    json.dumps(idx)
    dot = serialize.sd_to_dot(sd)
    assert dot.startswith("digraph Sd {") and dot.count("->") == 191 - 31


def test_functor_roundtrip():
    G = pair_groupoid(2)
    from sdcat.fincat import identity_functor
    F = identity_functor(G)
    back = serialize.functor_from_dict(serialize.functor_to_dict(F), G, G)
    assert back.same_maps(F)

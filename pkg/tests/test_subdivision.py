import itertools
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from sdcat import delta
from sdcat.errors import NotLoopFree, TruncationMismatch
from sdcat.fincat import (
    Functor, check_functor, cyclic_group, dihedral_group, discrete, identity_functor, is_isomorphism,
    klein_four, opposite, pair_groupoid, poset_category, poset_interval, validate_category, zigzag,
)
from sdcat.oracle import automorphism_group, find_isomorphisms
from sdcat.subdivision import (
    Simplex, alpha, build_sd, enumerate_simplices, is_loop_free, nondeg_root, op_iso, restrict_simplex,
    sd_coproduct_iso, sd_of_functor,
)

D3 = dihedral_group(3)
R, R2, S, RS, R2S = 1, 2, 3, 4, 5  # r^i s^j has id i + 3j


def test_restrict_examples():
    y = Simplex(0, (S, R))  # <r|s>
    assert restrict_simplex(D3, 0b111, y) == (0, (S, R))
    assert restrict_simplex(D3, 0b101, y) == (0, (D3.compose(R, S),))
    # <h|g|f^-1|f> restricted to {0, 2, 4}
    f, g, h = R, S, RS
    y = Simplex(0, (f, D3.inverse(f), g, h))
    start, chain = restrict_simplex(D3, 0b10101, y)
    assert (start, chain) == (0, (0, D3.compose(h, g)))
    root, eta = nondeg_root(D3, start, chain)
    assert root == Simplex(0, (D3.compose(h, g),)) and eta == (0, 0, 1)


def test_nondeg_root_examples():
    assert nondeg_root(D3, 0, (0, 0)) == (Simplex(0), (0, 0, 0))
    assert nondeg_root(D3, 0, (R, S)) == (Simplex(0, (R, S)), (0, 1, 2))


@pytest.mark.parametrize("k", [1, 2, 3])
def test_nondeg_root_idempotent(k):
    for s in enumerate_simplices(klein_four(), k):
        root, eta = nondeg_root(klein_four(), s.base, s.chain)
        assert root == s and eta == tuple(range(s.dim + 1))


def test_d3_counts():
    sd = build_sd(D3, 2)
    C = sd.category
    assert (C.n_objects, C.n_morphisms) == (31, 191)
    assert Counter(s.dim for s in sd.simplices) == {0: 1, 1: 5, 2: 25}
    assert validate_category(C) == []


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "V4", "D3", "Q8", "Pair2", "Pair3", "Pair2xZ2",
                                  "Disc3", "D3+Pair2", "Z3+Pair3+Disc1"])
def test_corpus_sd_valid_and_counting(name, sds):
    sd = sds[name]
    assert validate_category(sd.category) == []
    for y, s in enumerate(sd.simplices):
        assert len(sd.category.incoming(y)) == 2 ** (s.dim + 1) - 1


@pytest.mark.parametrize("C,k", [(cyclic_group(3), 3), (pair_groupoid(2), 3), (cyclic_group(2), 4),
                                 (zigzag(3), "full"), (poset_interval(3), "full")])
def test_deeper_truncations(C, k):
    sd = build_sd(C, k)
    assert validate_category(sd.category) == []
    for y, s in enumerate(sd.simplices):
        assert len(sd.category.incoming(y)) == 2 ** (s.dim + 1) - 1


def _relation(sd, j):
    """Morphism j as a relation from vertices of its source to vertices of its target."""
    nu = delta.mask_elements(int(sd.mor_mask[j]))
    return {(e, nu[p]) for p, e in enumerate(sd.mor_eta[j])}


@pytest.mark.parametrize("C,k", [(D3, 2), (poset_interval(3), "full"), (pair_groupoid(2), 3)])
def test_composition_matches_relation_composition(C, k):
    sd = build_sd(C, k)
    A = sd.category
    rel = [_relation(sd, j) for j in A.morphisms]
    for b in A.morphisms:
        for a in A.incoming(int(A.dom[b])):
            ab = {(i, kk) for i, j in rel[a] for j2, kk in rel[b] if j == j2}
            assert ab == rel[A.compose(b, a)]


GROUPS = [cyclic_group(2), cyclic_group(3), cyclic_group(4), klein_four(), pair_groupoid(2), discrete(2),
          pair_groupoid(2, cyclic_group(2))]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GROUPS), st.integers(0, 3))
def test_sd_is_always_a_category(G, k):
    assert validate_category(build_sd(G, k).category) == []


@settings(max_examples=20, deadline=None)
@given(st.integers(2, 5), st.data())
def test_sd_of_random_poset(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    rel = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    P = poset_category(n, rel)
    assert is_loop_free(P)
    sd = build_sd(P, "full")
    assert validate_category(sd.category) == []
    assert sd.category.hom_counts().max() <= 1


def test_poset_interval_full_is_subset_poset():
    sd = build_sd(poset_interval(2), "full")
    masks = [m for m in range(1, 8)]
    subsets = poset_category(7, [(i, j) for i, j in itertools.product(range(7), repeat=2)
                                 if i != j and masks[i] & masks[j] == masks[i]])
    assert sd.category.n_objects == 7 and sd.category.n_morphisms == 19
    assert len(find_isomorphisms(sd.category, subsets)) >= 1


def test_zigzag_full_is_longer_zigzag():
    sd = build_sd(zigzag(2), "full")
    assert len(find_isomorphisms(sd.category, zigzag(4))) >= 1


def test_sd_squared_is_poset():
    for C in (zigzag(2), poset_interval(2)):
        sd2 = build_sd(build_sd(C, "full").category, "full").category
        assert sd2.hom_counts().max() == 1
    assert build_sd(build_sd(poset_interval(2), "full").category, "full").category.n_objects == 25


def test_full_needs_loop_free():
    with pytest.raises(NotLoopFree):
        build_sd(cyclic_group(2), "full")
    assert not is_loop_free(pair_groupoid(2))
    assert is_loop_free(zigzag(3))


def test_truncation_mismatch():
    with pytest.raises(TruncationMismatch):
        sd_of_functor(identity_functor(D3), build_sd(D3, 2), build_sd(D3, 1))


def _phi():
    return Functor(D3, D3, (0,), tuple((2 * (f % 3)) % 3 + 3 * (f // 3) for f in D3.morphisms))


def test_sd_of_functor_examples():
    sd = build_sd(D3, 2)
    ident = sd_of_functor(identity_functor(D3), sd, sd)
    assert ident.same_maps(identity_functor(sd.category))
    phi = sd_of_functor(_phi(), sd, sd)
    assert is_isomorphism(phi)
    assert phi.obj_map[sd.edge(RS)] == sd.edge(R2S)


def test_sd_of_collapsing_functor():
    # [2] -> [1] sending 0, 1 to 0 and 2 to 1: the arrow 0 -> 1 collapses
    B, C = poset_interval(2), poset_interval(1)
    names_b = [B.name(f) for f in B.morphisms]
    target = {"0<1": 0, "1<2": 2, "0<2": 2}
    mor = [{0: 0, 1: 0, 2: 1}[f] if B.is_identity(f) else target[names_b[f]] for f in B.morphisms]
    F = Functor(B, C, (0, 0, 1), tuple(mor))
    assert check_functor(F)
    sdB, sdC = build_sd(B, 2), build_sd(C, 2)
    SF = sd_of_functor(F, sdB, sdC)
    assert check_functor(SF)
    top = next(y for y, s in enumerate(sdB.simplices) if s.dim == 2)
    assert sdC.simplices[SF.obj_map[top]].dim == 1


@pytest.mark.parametrize("G", [dihedral_group(3), pair_groupoid(3)])
def test_sd_respects_composition(G):
    sd = build_sd(G, 2)
    auts = automorphism_group(G).elements
    induced = {i: sd_of_functor(F, sd, sd) for i, F in enumerate(auts)}
    for (i, F), (j, H) in itertools.product(enumerate(auts), repeat=2):
        assert sd_of_functor(F.then(H), sd, sd).same_maps(induced[i].then(induced[j]))


@pytest.mark.parametrize("C", [D3, zigzag(2), pair_groupoid(3), cyclic_group(4)])
def test_op_iso(C):
    sd, sdo = build_sd(C, 2), build_sd(opposite(C), 2)
    F = op_iso(sd, sdo)
    assert is_isomorphism(F)
    for a in C.objects:
        assert F.obj_map[sd.point(a)] == sdo.point(a)
    back = op_iso(sdo, build_sd(opposite(opposite(C)), 2))
    assert F.then(back).same_maps(identity_functor(sd.category))


def test_op_iso_reverses_chains():
    sd, sdo = build_sd(D3, 2), build_sd(opposite(D3), 2)
    F = op_iso(sd, sdo)
    y = sd.index[Simplex(0, (S, R))]
    assert sdo.simplices[F.obj_map[y]] == Simplex(0, (R, S))


def test_alpha():
    sd = build_sd(D3, 2)
    a = alpha(sd)
    assert is_isomorphism(a)
    assert a.obj_map[sd.edge(R)] == sd.edge(R2)
    assert a.obj_map[sd.edge(S)] == sd.edge(S)
    assert a.obj_map[sd.edge(RS)] == sd.edge(RS)
    assert a.then(a).same_maps(identity_functor(sd.category))
    disc = build_sd(discrete(3), 2)
    assert alpha(disc).same_maps(identity_functor(disc.category))


def test_coproduct_iso():
    F, sds, right = sd_coproduct_iso([D3])
    assert F.same_maps(identity_functor(right.category))
    F, sds, right = sd_coproduct_iso([cyclic_group(2), cyclic_group(2)])
    assert [s.category.n_objects for s in sds] == [3, 3]
    assert right.category.n_objects == 6 and is_isomorphism(F)
    F, _, _ = sd_coproduct_iso([D3, pair_groupoid(2), discrete(1)])
    assert is_isomorphism(F)

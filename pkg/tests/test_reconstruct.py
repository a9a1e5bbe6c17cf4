import pytest

from sdcat.errors import BourbakiViolated, VarianceInconsistent
from sdcat.fincat import (
    Functor, as_groupoid, cyclic_group, dihedral_group, disjoint_union, identity_functor, is_isomorphism,
    opposite, pair_groupoid,
)
from sdcat.oracle import automorphism_group, find_isomorphisms, two_object_z2_groupoid
from sdcat.reconstruct import (
    CONTRAVARIANT, COVARIANT, GraphMap, assemble, check_invariants, conservativity_check, extract_psi,
    group_case, multiobject_case, object_bijection_is_component_matching, psi_prime, reconstruct,
)
from sdcat.subdivision import alpha, build_sd, op_iso, sd_of_functor

D3 = dihedral_group(3)
SD3 = build_sd(D3, 2)
PHI = Functor(D3, D3, (0,), tuple((2 * (f % 3)) % 3 + 3 * (f // 3) for f in D3.morphisms))


def test_extract_from_induced():
    psi = extract_psi(sd_of_functor(PHI, SD3, SD3), SD3, SD3)
    assert psi.obj_map == PHI.obj_map and psi.mor_map == PHI.mor_map
    ident = extract_psi(identity_functor(SD3.category), SD3, SD3)
    assert ident.mor_map == tuple(D3.morphisms)


def test_extract_from_alpha():
    psi = extract_psi(alpha(SD3), SD3, SD3)
    assert psi.mor_map == tuple(D3.inverse(f) for f in D3.morphisms)
    assert psi_prime(psi).mor_map == tuple(D3.morphisms)
    rec = reconstruct(alpha(SD3), SD3, SD3)
    assert rec.variance == {0: CONTRAVARIANT}
    assert rec.functor.same_maps(identity_functor(D3))


def test_extract_wrong_categories():
    other = build_sd(D3, 2)
    with pytest.raises(ValueError):
        extract_psi(identity_functor(SD3.category), other, SD3)


def test_group_case():
    inv = GraphMap(D3, D3, (0,), tuple(D3.inverse(f) for f in D3.morphisms))
    mapping, var = group_case(inv, 0)
    assert var == CONTRAVARIANT and all(mapping[f] == f for f in D3.morphisms)
    mapping, var = group_case(GraphMap(D3, D3, (0,), PHI.mor_map), 0)
    assert var == COVARIANT and tuple(mapping[f] for f in D3.morphisms) == PHI.mor_map
    Z5 = cyclic_group(5)
    with pytest.raises(BourbakiViolated):
        group_case(GraphMap(Z5, Z5, (0,), (0, 2, 1, 3, 4)), 0)


def test_abelian_prefers_covariant():
    Z3 = cyclic_group(3)
    sd = build_sd(Z3, 2)
    rec = reconstruct(alpha(sd), sd, sd)
    assert rec.variance == {0: COVARIANT}
    assert rec.functor.mor_map == (0, 2, 1)
    psi = rec.psi
    assert psi_prime(psi).mor_map == tuple(Z3.inverse(psi.mor_map[f]) for f in Z3.morphisms)


def test_z4_oracle():
    Z4 = cyclic_group(4)
    sd = build_sd(Z4, 2)
    auts = {F.mor_map for F in automorphism_group(Z4).elements}
    for Psi in find_isomorphisms(sd.category, sd.category).functors:
        assert assemble(Psi, sd, sd).mor_map in auts


def test_multiobject_cases():
    G = pair_groupoid(3)
    sd = build_sd(G, 2)
    for F in automorphism_group(G).elements:
        rec = reconstruct(sd_of_functor(F, sd, sd), sd, sd)
        assert rec.functor.same_maps(F) and rec.variance == {0: COVARIANT}
    P2 = pair_groupoid(2)
    sd, sdo = build_sd(P2, 2), build_sd(opposite(P2), 2)
    rec = reconstruct(op_iso(sd, sdo), sd, sdo)
    assert rec.variance == {0: CONTRAVARIANT} and is_isomorphism(rec.functor)


def test_mixed_variance_detected():
    G = pair_groupoid(3)
    f = G.hom(0, 1)[0]
    fi = G.inverse(f)
    mor = list(G.morphisms)
    mor[f], mor[fi] = fi, f
    with pytest.raises(VarianceInconsistent):
        multiobject_case(GraphMap(G, G, tuple(G.objects), tuple(mor)), [0, 1, 2])


def test_two_object_z2():
    G = two_object_z2_groupoid()
    sd = build_sd(G, 2)
    res = find_isomorphisms(sd.category, sd.category)
    assert len(res) > 0
    for Psi in res.functors:
        rec = reconstruct(Psi, sd, sd)
        assert is_isomorphism(rec.functor) and check_invariants(Psi, sd, sd, rec.psi) == []


def test_coproduct_assembly():
    G = as_groupoid(disjoint_union(D3, pair_groupoid(2)))
    sd = build_sd(G, 2)
    for F in automorphism_group(G).elements:
        P = assemble(sd_of_functor(F, sd, sd), sd, sd)
        assert P.same_maps(F)
    Z = as_groupoid(disjoint_union(cyclic_group(2), cyclic_group(2)))
    sd = build_sd(Z, 2)
    crossing = [Psi for Psi in find_isomorphisms(sd.category, sd.category).functors
                if sd.simplices[Psi.obj_map[sd.point(0)]].base == 1]
    assert crossing
    for Psi in crossing:
        rec = reconstruct(Psi, sd, sd)
        assert rec.functor.obj_map == (1, 0) and rec.target_component == {0: 1, 1: 0}
        assert object_bijection_is_component_matching(rec.functor)


def test_alpha_on_z3_is_verified():
    Z3 = cyclic_group(3)
    sd = build_sd(Z3, 2)
    P = assemble(alpha(sd), sd, sd)
    assert is_isomorphism(P)


@pytest.mark.parametrize("G", [D3, pair_groupoid(3)])
def test_conservativity(G):
    auts = automorphism_group(G).elements
    assert len(auts) == 6
    assert all(conservativity_check(F) for F in auts)
    assert conservativity_check(identity_functor(G))


@pytest.mark.parametrize("name", ["Z4", "V4", "D3", "Q8", "Pair2xZ2", "D3+Pair2", "Z2+Z2"])
def test_invariants_on_all_psi(name, sds):
    sd = sds[name]
    for Psi in find_isomorphisms(sd.category, sd.category).functors:
        rec = reconstruct(Psi, sd, sd)
        assert check_invariants(Psi, sd, sd, rec.psi) == []
        assert object_bijection_is_component_matching(rec.functor)

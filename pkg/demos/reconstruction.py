"""
Reconstructing a groupoid isomorphism
=====================================

Every automorphism of Sd(D3 + pair groupoid) comes from an automorphism of
the groupoid itself, possibly twisted by the chain-reversing map alpha.
"""
from sdcat import build_sd, dihedral_group, disjoint_union, find_isomorphisms, pair_groupoid
from sdcat.fincat import as_groupoid, is_isomorphism
from sdcat.reconstruct import check_invariants, reconstruct

G = as_groupoid(disjoint_union(dihedral_group(3), pair_groupoid(2)))
sd = build_sd(G, 2)

res = find_isomorphisms(sd.category, sd.category)
print(len(res), "automorphisms of Sd G, search complete:", res.complete)

seen = set()
for Psi in res.functors:
    rec = reconstruct(Psi, sd, sd)
    assert is_isomorphism(rec.functor)
    assert not check_invariants(Psi, sd, sd, rec.psi)
    seen.add(rec.functor.mor_map)
    print(rec.variance, [G.name(f) for f in rec.functor.mor_map])

print(len(seen), "distinct automorphisms of G recovered")

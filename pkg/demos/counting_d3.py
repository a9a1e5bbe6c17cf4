"""
Counting morphisms in the subdivision of D3
===========================================

Build the 2-truncated subdivision of the six-element dihedral group and
look at it the way the probe module does: only hom-set sizes, no labels.
"""
from collections import Counter

from sdcat import build_sd, dihedral_group
from sdcat import probe

G = dihedral_group(3)
sd = build_sd(G, 2)
C = sd.category
print(f"{C.n_objects} objects, {C.n_morphisms} morphisms")

# each m-simplex receives one morphism per nonempty vertex subset: 2^(m+1)-1
print(Counter((sd.dim(y), len(C.incoming(y))) for y in C.objects))

# the probe recovers dimensions from those counts alone
P = probe.ProbedCategory(C)
print({d: len(ys) for d, ys in sorted(P.by_dim.items())})

# r has id 1, s has id 3, rs has id 4
r, s, rs = sd.edge(1), sd.edge(3), sd.edge(4)
print("s self-inverse:", probe.is_self_inverse(P, s))
print("inverse of <r>:", sd.simplices[probe.inverse_of(P, r)].label(G))

# s and rs do not commute: the 2-simplices they span split 3 + 3
for h in (sd.edge(1), sd.edge(2)):
    print(sd.simplices[h].label(G), probe.count_form(P, s, rs, h))
print("commute:", probe.commutes(P, s, rs))

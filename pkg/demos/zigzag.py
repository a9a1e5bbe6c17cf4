"""
Why the groupoid hypothesis matters
===================================

The zigzag . -> . <- . and its opposite are not isomorphic, yet both full
subdivisions are the five-object zigzag.
"""
from sdcat import build_sd, find_isomorphisms, zigzag
from sdcat.serialize import sd_to_dot

B = zigzag(2)
Bop = zigzag(2, start_forward=False)

plain = find_isomorphisms(B, Bop)
print("B vs B^op:", len(plain), "isomorphisms, exhaustive:", plain.complete)

sdB, sdBop = build_sd(B, "full"), build_sd(Bop, "full")
sub = find_isomorphisms(sdB.category, sdBop.category)
print("Sd B vs Sd B^op:", len(sub), "isomorphisms")
print("Sd B vs zigzag(4):", len(find_isomorphisms(sdB.category, zigzag(4))), "isomorphisms")

# a DOT drawing of Sd B: nodes are chains, edges are face inclusions
print(sd_to_dot(sdB))

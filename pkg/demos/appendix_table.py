"""
Equations between formal composites
===================================

Eight formal composites k^s l^t of two elements f, g.  Each of the 28 ways
two of them can agree is equivalent to exactly one of nine equations.
"""
from sdcat import graphs
from sdcat.fincat import dihedral_group

table = graphs.equation_subgraph_table(extended=True)
for tag, edges in table.items():
    print(f"{tag:<10} {len(edges)} edges")
print("total", sum(len(e) for e in table.values()))

# which truth values of the four generator equations give a consistent picture
for bits in graphs.enumerate_valid_assignments():
    print(dict(zip(graphs.GENERATOR_EQUATIONS, bits)))

# a concrete pair in D3: the evaluation graph has two triangles
G = dihedral_group(3)
ev = graphs.build_ev_graph(G, 3, 4)
for h, verts in ev.fibers.items():
    print(G.name(h), [str(v) for v in verts])

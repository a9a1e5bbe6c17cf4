import itertools

import pytest
from hypothesis import given, strategies as st

from sdcat import graphs
from sdcat.graphs import FormalComposite, formal_composites
from sdcat.fincat import dihedral_group

D3 = dihedral_group(3)
R, R2, S, RS = 1, 2, 3, 4


def test_composites():
    assert len(formal_composites()) == 6 and len(formal_composites(extended=True)) == 8
    fg = FormalComposite("f", 1, "g", 1)
    assert graphs.evaluate(fg, D3, R, S) == D3.compose(R, S)
    assert graphs.evaluate(fg, D3, S, RS) == R2
    assert graphs.evaluate(FormalComposite("f", -1, "g", 1), D3, S, RS) == graphs.evaluate(fg, D3, S, RS)


def test_ev_graph_d3():
    ev = graphs.build_ev_graph(D3, S, RS)
    assert ev.fiber_sizes() == {R: 3, R2: 3}
    assert ev.is_valid()
    with pytest.raises(ValueError):
        graphs.build_ev_graph(D3, S, S)


def test_equation_table():
    table = graphs.equation_subgraph_table(extended=True)
    edges = [e for es in table.values() for e in es]
    assert len(table) == 9 and len(edges) == 28 and len(set(edges)) == 28
    assert len(edges) == len(list(itertools.combinations(formal_composites(True), 2)))
    small = graphs.equation_subgraph_table(extended=False)
    assert sorted(len(es) for es in small.values()) == [2, 2, 2, 2, 2, 2, 3]
    assert sum(len(es) for es in small.values()) == 15


def test_valid_assignments():
    got = {graphs.assignment_label(b) for b in graphs.enumerate_valid_assignments()}
    assert got == {"FFFF", "TFFF", "FTFF", "FFTF", "FFFT", "FFTT"}
    assert "TTTT" not in got and "TFTF" not in got


def test_validity_definition():
    v = formal_composites()
    a, b, c = v[:3]
    assert graphs.is_valid_graph(v, frozenset())
    assert not graphs.is_valid_graph(v, frozenset({frozenset((a, b)), frozenset((b, c))}))
    assert graphs.is_valid_graph(v, frozenset({frozenset(p) for p in itertools.combinations((a, b, c), 2)}))


def test_edges_match_equations(groups):
    table = graphs.equation_subgraph_table(extended=True)
    for G in groups.values():
        for f, g in itertools.permutations(range(G.n_objects, G.n_morphisms), 2):
            if G.dom[f] != G.cod[f] or G.dom[f] != G.dom[g] or G.dom[g] != G.cod[g]:
                continue
            for tag, es in table.items():
                holds = graphs.equation_holds(tag, G, f, g)
                for edge in es:
                    a, b = tuple(edge)
                    assert (graphs.evaluate(a, G, f, g) == graphs.evaluate(b, G, f, g)) == holds


letters = st.tuples(st.sampled_from("fg"), st.sampled_from((1, -1)))


@given(st.lists(letters, max_size=8), st.integers(0, 7))
def test_relator_class_invariances(word, shift):
    word = tuple(word)
    base = graphs.relator_class(word)
    if word:
        k = shift % len(word)
        assert graphs.relator_class(word[k:] + word[:k]) == base
    assert graphs.relator_class(graphs._inverse(word)) == base

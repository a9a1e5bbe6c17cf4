"""Formal composites k^s l^t of two group elements and their evaluation graphs.

C(f, g) has six formal composites, C'(f, g) adds the two of shape
k^-1 l^-1.  Joining two composites when they evaluate to the same element
gives a graph whose components are complete.  Each possible edge holds
exactly when one group equation in f and g holds; the equation for an
edge is found by reducing ev(a)^-1 ev(b) in the free group on f, g and
comparing up to cyclic rotation and inversion.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple

from .fincat import FinGroupoid


class FormalComposite(NamedTuple):
    k: str
    s: int
    l: str
    t: int

    def __str__(self):
        return f"({self.k},{self.s},{self.l},{self.t})"


_SIGNS = ((1, 1), (1, -1), (-1, 1))


def formal_composites(extended: bool = False) -> tuple[FormalComposite, ...]:
    signs = _SIGNS + ((-1, -1),) if extended else _SIGNS
    return tuple(FormalComposite(k, s, l, t) for (k, l) in (("f", "g"), ("g", "f")) for s, t in signs)


def evaluate(gamma: FormalComposite, G: FinGroupoid, f: int, g: int) -> int:
    elem = {"f": f, "g": g}
    return G.compose(G.power(elem[gamma.k], gamma.s), G.power(elem[gamma.l], gamma.t))


@dataclass(frozen=True)
class EvGraph:
    vertices: tuple[FormalComposite, ...]
    edges: frozenset
    fibers: dict

    def is_valid(self) -> bool:
        return is_valid_graph(self.vertices, self.edges)

    def fiber_sizes(self) -> dict:
        return {h: len(vs) for h, vs in self.fibers.items()}


def build_ev_graph(G: FinGroupoid, f: int, g: int, extended: bool = False) -> EvGraph:
    if f == g:
        raise ValueError("f and g must differ")
    verts = formal_composites(extended)
    fibers: dict[int, list] = {}
    for v in verts:
        fibers.setdefault(evaluate(v, G, f, g), []).append(v)
    edges = frozenset(frozenset(p) for vs in fibers.values() for p in combinations(vs, 2))
    return EvGraph(verts, edges, {h: tuple(vs) for h, vs in fibers.items()})


def is_valid_graph(vertices, edges) -> bool:
    """Every connected component is a complete graph."""
    parent = {v: v for v in vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in edges:
        a, b = tuple(e)
        parent[find(a)] = find(b)
    comps: dict = {}
    for v in vertices:
        comps.setdefault(find(v), []).append(v)
    return all(frozenset(p) in edges for vs in comps.values() for p in combinations(vs, 2))


# -- words in the free group on f, g -------------------------------------

Word = tuple[tuple[str, int], ...]


def _reduce(word) -> Word:
    out: list[tuple[str, int]] = []
    for letter in word:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def _inverse(word) -> Word:
    return tuple((x, -e) for x, e in reversed(word))


def _cyclic_reduce(word: Word) -> Word:
    w = list(_reduce(word))
    while len(w) > 1 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def relator_class(word) -> Word:
    """Canonical representative of a relator up to rotation and inversion."""
    w = _cyclic_reduce(tuple(word))
    forms = []
    for cand in (w, _cyclic_reduce(_inverse(w))):
        forms += [cand[i:] + cand[:i] for i in range(max(len(cand), 1))]
    return min(forms)


def _word(gamma: FormalComposite) -> Word:
    return ((gamma.k, gamma.s), (gamma.l, gamma.t))


def _parse(text: str) -> Word:
    """Relator words written like "f g F G" with capitals for inverses."""
    return tuple((c.lower(), 1 if c.islower() else -1) for c in text.split())


# equation tag -> relator (the equation holds iff the relator is trivial)
EQUATIONS: dict[str, str] = {
    "fg=gf": "f g F G",
    "f^2=id": "f f",
    "g^2=id": "g g",
    "f^2=g^2": "f f G G",
    "f^2=g^-2": "f f g g",
    "fgf=g": "f g f G",
    "gfg=f": "g f g F",
    "fg^-1f=g": "f G f G",
    "fgf=g^-1": "f g f g",
}

GENERATOR_EQUATIONS = ("fgf=g", "gfg=f", "fg^-1f=g", "fgf=g^-1")

_CLASS_TO_TAG = {relator_class(_parse(w)): tag for tag, w in EQUATIONS.items()}


def edge_equation(a: FormalComposite, b: FormalComposite) -> str:
    """The equation in f, g equivalent to ev(a) = ev(b)."""
    rel = relator_class(_inverse(_word(a)) + _word(b))
    try:
        return _CLASS_TO_TAG[rel]
    except KeyError:
        raise ValueError(f"edge {a}-{b} gives an unlisted relator {rel}") from None


def equation_holds(tag: str, G: FinGroupoid, f: int, g: int) -> bool:
    value = G.dom[f]
    for x, e in _parse(EQUATIONS[tag]):
        value = G.compose(value, G.power(f if x == "f" else g, e))
    return value == G.dom[f]


def equation_subgraph_table(extended: bool = True) -> dict[str, frozenset]:
    """Equation tag -> set of edges of C'(f,g) (or C(f,g)) it is equivalent to."""
    table: dict[str, set] = {tag: set() for tag in EQUATIONS}
    for a, b in combinations(formal_composites(extended), 2):
        table[edge_equation(a, b)].add(frozenset((a, b)))
    return {tag: frozenset(es) for tag, es in table.items() if es}


def assignment_label(bits) -> str:
    return "".join("T" if b else "F" for b in bits)


def enumerate_valid_assignments() -> list[tuple[bool, ...]]:
    """Truth values of the four generator equations whose edge union is a valid graph."""
    table = equation_subgraph_table(extended=True)
    verts = formal_composites(extended=True)
    valid = []
    for bits in product((False, True), repeat=len(GENERATOR_EQUATIONS)):
        edges = frozenset().union(*(table[t] for t, on in zip(GENERATOR_EQUATIONS, bits) if on))
        if is_valid_graph(verts, edges):
            valid.append(bits)
    return valid

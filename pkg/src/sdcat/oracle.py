"""Brute-force ground truth.

Category isomorphism search (individualisation plus colour refinement on
the hom-count matrix, then morphism-level backtracking with propagation),
automorphism enumeration, a direct census of triangle forms from a Cayley
table, and the named test corpus.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import SearchBudgetExceeded
from .fincat import (FinCategory, FinGroupoid, Functor, cyclic_group, dihedral_group, direct_product, discrete,
                     disjoint_union, frobenius_group_21, is_isomorphism, klein_four, pair_groupoid,
                     quaternion_group)


@dataclass
class IsoSearchConfig:
    node_limit: int = 200_000
    result_limit: int = 10_000
    use_degrees: bool = True      # in/out-degree profile
    use_incoming: bool = True     # incoming-count stratification
    use_hom_matrix: bool = True   # hom-count row multisets and refinement
    raise_on_budget: bool = True

    def __post_init__(self):
        if self.node_limit <= 0 or self.result_limit <= 0:
            raise ValueError("limits must be positive")


@dataclass
class IsoSearchResult:
    functors: list[Functor] = field(default_factory=list)
    complete: bool = True
    nodes: int = 0

    def __len__(self):
        return len(self.functors)


class _Budget(Exception):
    pass


class _Done(Exception):
    pass


def _object_keys(C: FinCategory, cfg: IsoSearchConfig):
    H = C.hom_counts()
    keys = []
    for x in C.objects:
        key = []
        if cfg.use_incoming:
            key.append(int(H[:, x].sum()))
        if cfg.use_degrees:
            key += [int(H[x].sum()), int(H[x, x])]
        if cfg.use_hom_matrix:
            key.append(tuple(sorted(int(v) for v in H[x] if v)))
            key.append(tuple(sorted(int(v) for v in H[:, x] if v)))
        keys.append(tuple(key))
    return keys, H


def _morphism_keys(C: FinCategory, okeys, H):
    return [(int(C.is_identity(f)), okeys[C.dom[f]], okeys[C.cod[f]], int(H[C.dom[f], C.cod[f]]))
            for f in C.morphisms]


def _relabel(keys_a, keys_b):
    table = {k: i for i, k in enumerate(sorted(set(keys_a) | set(keys_b)))}
    return (np.array([table[k] for k in keys_a], dtype=np.int64),
            np.array([table[k] for k in keys_b], dtype=np.int64))


def _mix(x: np.ndarray) -> np.ndarray:
    """splitmix64 finaliser, used to hash multisets of colour codes by summation."""
    x = x.astype(np.uint64) + np.uint64(0x9E3779B97F4A7C15)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return x ^ (x >> np.uint64(31))


class _Pairs:
    """Composable pairs (g, f, g∘f) of a category, kept for refinement."""

    def __init__(self, C: FinCategory):
        G, F = np.nonzero(C.comp >= 0)
        self.g, self.f, self.h = G, F, C.comp[G, F].astype(np.int64)
        self.m = C.n_morphisms

    def signatures(self, c: np.ndarray) -> np.ndarray:
        """Row per morphism: own colour plus a hash of each neighbourhood multiset."""
        k = np.uint64(int(c.max()) + 1)
        cols = [c.astype(np.uint64)]
        # role as right factor, as left factor, and as the composite
        for salt, (owner, a, b) in enumerate(((self.f, self.g, self.h),
                                              (self.g, self.f, self.h),
                                              (self.h, self.g, self.f))):
            code = c[a].astype(np.uint64) * k + c[b].astype(np.uint64)
            vals = _mix(code + np.uint64(salt) * np.uint64(0x632BE59BD9B4E019))
            acc = np.zeros(self.m, dtype=np.uint64)
            np.add.at(acc, owner, vals)
            cols.append(acc)
        return np.stack(cols, axis=1)


def _relabel_rows(ra: np.ndarray, rb: np.ndarray):
    _, inv = np.unique(np.concatenate([ra, rb]), axis=0, return_inverse=True)
    inv = inv.reshape(-1).astype(np.int64)
    return inv[: len(ra)], inv[len(ra):]


def _refine(ca, cb, pa: _Pairs, pb: _Pairs):
    """Joint colour refinement of morphisms until no cell splits."""
    n_colors = len(np.unique(np.concatenate([ca, cb])))
    while True:
        ca, cb = _relabel_rows(pa.signatures(ca), pb.signatures(cb))
        new = int(max(ca.max(), cb.max())) + 1
        if new == n_colors:
            return ca, cb
        n_colors = new


def _histogram_match(ca, cb) -> bool:
    return np.array_equal(np.sort(ca), np.sort(cb))


def find_isomorphisms(A: FinCategory, B: FinCategory, cfg: IsoSearchConfig | None = None) -> IsoSearchResult:
    """Enumerate isomorphisms A -> B in a deterministic order.

    Morphisms are coloured by object invariants and then refined through the
    composition relation; a leaf of the individualisation tree is a
    bijection with discrete colours, which is checked as a functor.
    """
    cfg = cfg or IsoSearchConfig()
    result = IsoSearchResult()
    if A.n_objects != B.n_objects or A.n_morphisms != B.n_morphisms:
        return result
    if A.n_objects == 0:
        result.functors.append(Functor(A, B, (), ()))
        return result

    ka, HA = _object_keys(A, cfg)
    kb, HB = _object_keys(B, cfg)
    if sorted(ka) != sorted(kb):
        return result
    ca, cb = _relabel(_morphism_keys(A, ka, HA), _morphism_keys(B, kb, HB))
    pa, pb = _Pairs(A), _Pairs(B)
    ca, cb = _refine(ca, cb, pa, pb)
    if not _histogram_match(ca, cb):
        return result

    def rec(ca, cb):
        result.nodes += 1
        if result.nodes > cfg.node_limit:
            raise _Budget
        values, counts = np.unique(ca, return_counts=True)
        open_cells = counts > 1
        if not open_cells.any():
            where = np.empty(int(cb.max()) + 1, dtype=np.int64)
            where[cb] = np.arange(len(cb))
            mm = where[ca]
            F = Functor(A, B, tuple(mm[: A.n_objects]), tuple(mm))
            if is_isomorphism(F):
                result.functors.append(F)
                if len(result.functors) >= cfg.result_limit:
                    raise _Done
            return
        # smallest open cell, identities first since they pin objects down
        best = None
        for v, cnt in zip(values[open_cells], counts[open_cells]):
            x = int(np.flatnonzero(ca == v)[0])
            key = (not A.is_identity(x), int(cnt), int(v))
            if best is None or key < best[0]:
                best = (key, x, v)
        _, x, v = best
        fresh = int(max(ca.max(), cb.max())) + 1
        for y in np.flatnonzero(cb == v):
            na, nb = ca.copy(), cb.copy()
            na[x] = fresh
            nb[y] = fresh
            na, nb = _refine(na, nb, pa, pb)
            if _histogram_match(na, nb):
                rec(na, nb)

    try:
        rec(ca, cb)
    except _Done:
        result.complete = False
    except _Budget:
        result.complete = False
        if cfg.raise_on_budget:
            raise SearchBudgetExceeded(result) from None
    return result


@dataclass
class AutomorphismGroup:
    elements: list[Functor]
    complete: bool

    @property
    def order(self) -> int:
        return len(self.elements)


def automorphism_group(A: FinCategory, cfg: IsoSearchConfig | None = None) -> AutomorphismGroup:
    res = find_isomorphisms(A, A, cfg)
    return AutomorphismGroup(res.functors, res.complete)


def brute_triangle_census(G: FinCategory, f: int, g: int, h: int) -> int:
    """Count non-degenerate 2-simplices <p|q> of the form [f g h], straight from the table.

    A pair (p, q) of composable non-identity morphisms is the simplex with
    q first.  It has the form when one of the six listed composites holds.
    """
    comp = G.comp
    count = 0
    for q in range(G.n_objects, G.n_morphisms):
        for p in G.outgoing(int(G.cod[q])):
            if G.is_identity(p):
                continue
            hits = (
                (comp[f, g] == h and (p, q) == (f, g)),
                (comp[g, f] == h and (p, q) == (g, f)),
                (comp[f, h] == g and (p, q) == (f, h)),
                (comp[h, f] == g and (p, q) == (h, f)),
                (comp[h, g] == f and (p, q) == (h, g)),
                (comp[g, h] == f and (p, q) == (g, h)),
            )
            if any(hits):
                count += 1
    return count


def two_object_z2_groupoid() -> FinGroupoid:
    return pair_groupoid(2, cyclic_group(2))


def corpus() -> dict[str, FinGroupoid]:
    """Named groupoids used by the acceptance runs."""
    items = {f"Z{n}": cyclic_group(n) for n in range(2, 8)}
    items["V4"] = klein_four()
    items["D3"] = dihedral_group(3)
    items["D4"] = dihedral_group(4)
    items["Q8"] = quaternion_group()
    items["F21"] = frobenius_group_21()
    items["Z3xD3"] = direct_product(cyclic_group(3), dihedral_group(3))
    items["Pair2"] = pair_groupoid(2)
    items["Pair3"] = pair_groupoid(3)
    items["Pair2xZ2"] = two_object_z2_groupoid()
    items["Disc3"] = discrete(3)
    items["D3+Pair2"] = disjoint_union(dihedral_group(3), pair_groupoid(2))
    items["Z2+Z2"] = disjoint_union(cyclic_group(2), cyclic_group(2))
    items["Z3+Pair3+Disc1"] = disjoint_union(cyclic_group(3), pair_groupoid(3), discrete(1))
    return items

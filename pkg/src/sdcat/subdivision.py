"""The subdivision Sd C as an explicit finite category.

Objects are non-degenerate simplices of the nerve: chains of composable
non-identity morphisms.  A morphism into a simplex y is keyed by a nonempty
vertex subset S of y; its source is the non-degenerate root of the
restriction of y to S.  Composition of (S1: x -> y) followed by
(S2: y -> z) has subset nu_S2(eta2^{-1}(S1)) where eta2 collapses the
restriction of z to S2 onto its root.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import delta
from .errors import NotLoopFree, TruncationMismatch, TruncationTooSmall
from .fincat import FinCategory, FinGroupoid, Functor, coproduct, opposite


@dataclass(frozen=True, order=True)
class Simplex:
    """A non-degenerate simplex: base object plus a chain f_1, ..., f_n (f_1 first)."""
    base: int
    chain: tuple[int, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.chain)

    def vertex(self, C: FinCategory, i: int) -> int:
        return self.base if i == 0 else int(C.cod[self.chain[i - 1]])

    def vertices(self, C: FinCategory) -> list[int]:
        return [self.vertex(C, i) for i in range(self.dim + 1)]

    def label(self, C: FinCategory) -> str:
        if not self.chain:
            return f"<{self.base}>"
        return "<" + "|".join(C.name(f) for f in reversed(self.chain)) + ">"


def restrict_simplex(C: FinCategory, mask: int, y: Simplex) -> tuple[int, tuple[int, ...]]:
    """Restrict y to the vertex subset ``mask``.

    Returns (start object, chain); chain entries may be identities.
    """
    elems = delta.mask_elements(mask)
    if not elems or elems[-1] > y.dim:
        raise ValueError("subset outside the simplex")
    start = y.vertex(C, elems[0])
    out = []
    for lo, hi in zip(elems, elems[1:]):
        acc = y.chain[lo]
        for g in y.chain[lo + 1:hi]:
            acc = C.compose(g, acc)
        out.append(int(acc))
    return start, tuple(out)


def nondeg_root(C: FinCategory, start: int, chain: Sequence[int]) -> tuple[Simplex, tuple[int, ...]]:
    """Delete identities; also return the collapse epi eta as a value tuple."""
    eta = [0]
    kept = []
    for f in chain:
        if C.is_identity(f):
            eta.append(eta[-1])
        else:
            kept.append(int(f))
            eta.append(eta[-1] + 1)
    return Simplex(start, tuple(kept)), tuple(eta)


def is_loop_free(C: FinCategory) -> bool:
    """No non-identity endomorphism and no directed cycle of non-identity morphisms."""
    succ = [set() for _ in C.objects]
    for f in range(C.n_objects, C.n_morphisms):
        a, b = int(C.dom[f]), int(C.cod[f])
        if a == b:
            return False
        succ[a].add(b)
    indeg = [0] * C.n_objects
    for a in C.objects:
        for b in succ[a]:
            indeg[b] += 1
    stack = [a for a in C.objects if indeg[a] == 0]
    seen = 0
    while stack:
        a = stack.pop()
        seen += 1
        for b in succ[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    return seen == C.n_objects


def enumerate_simplices(C: FinCategory, k: int) -> list[Simplex]:
    """All non-degenerate simplices of dimension <= k, sorted by (dim, chain)."""
    levels = [[Simplex(a) for a in C.objects]]
    layer = [Simplex(int(C.dom[f]), (f,)) for f in range(C.n_objects, C.n_morphisms)]
    while layer and len(levels) <= k:
        levels.append(sorted(layer, key=lambda s: s.chain))
        nxt = []
        for s in layer:
            for g in C.outgoing(int(C.cod[s.chain[-1]])):
                if not C.is_identity(g):
                    nxt.append(Simplex(s.base, s.chain + (g,)))
        layer = nxt
    return [s for level in levels for s in level]


class SdCategory:
    """Sd C (or its k-truncation) together with its simplex index.

    ``category`` is an ordinary FinCategory.  Object i is ``simplices[i]``;
    morphism j goes into ``mor_target[j]`` with vertex subset ``mor_mask[j]``
    and collapse epi ``mor_eta[j]``.
    """

    def __init__(self, base: FinCategory, truncation, category, simplices, mor_target, mor_mask, mor_eta):
        self.base = base
        self.truncation = truncation
        self.category = category
        self.simplices = simplices
        self.index = {s: i for i, s in enumerate(simplices)}
        self.mor_target = mor_target
        self.mor_mask = mor_mask
        self.mor_eta = mor_eta
        self.mor_index = {(int(y), int(S)): j for j, (y, S) in enumerate(zip(mor_target, mor_mask))}

    def __repr__(self):
        return f"SdCategory(truncation={self.truncation}, objects={self.category.n_objects}, morphisms={self.category.n_morphisms})"

    @property
    def k(self) -> int:
        return max((s.dim for s in self.simplices), default=0)

    def object_of(self, s: Simplex) -> int:
        return self.index[s]

    def point(self, a: int) -> int:
        """Object id of the 0-simplex <a>."""
        return self.index[Simplex(a)]

    def edge(self, f: int) -> int:
        """Object id of the 1-simplex <f>."""
        return self.index[Simplex(int(self.base.dom[f]), (f,))]

    def morphism(self, target: int, mask: int) -> int:
        return self.mor_index[(target, mask)]

    def dim(self, obj: int) -> int:
        return self.simplices[obj].dim

    def describe_morphism(self, j: int) -> dict:
        y = int(self.mor_target[j])
        return {"id": j, "source": int(self.category.dom[j]), "target": y,
                "subset": delta.mask_elements(int(self.mor_mask[j])),
                "eta": list(self.mor_eta[j])}


def _resolve_truncation(C: FinCategory, k) -> tuple[int, object]:
    if k == "full" or k is None:
        if not is_loop_free(C):
            raise NotLoopFree("the full subdivision needs a loop-free category")
        return max(C.n_objects - 1, 0), "full"
    k = int(k)
    if k < 0:
        raise TruncationTooSmall(f"truncation {k} < 0")
    return k, k


def build_sd(C: FinCategory, k=2) -> SdCategory:
    """Build Sd C truncated at dimension k, or the whole of it when ``k == "full"``."""
    kk, label = _resolve_truncation(C, k)
    simplices = enumerate_simplices(C, kk)
    index = {s: i for i, s in enumerate(simplices)}
    n = len(simplices)

    ident = []
    other = []
    for yi, y in enumerate(simplices):
        full = delta.full_mask(y.dim)
        for mask in range(1, full + 1):
            start, chain = restrict_simplex(C, mask, y)
            root, eta = nondeg_root(C, start, chain)
            rec = (index[root], yi, mask, eta)
            (ident if mask == full else other).append(rec)
    records = ident + other  # identity of object i is morphism i
    m = len(records)
    dom = np.array([r[0] for r in records], dtype=np.int32)
    cod = np.array([r[1] for r in records], dtype=np.int32)
    masks = np.array([r[2] for r in records], dtype=np.int64)
    etas = [r[3] for r in records]
    lookup = {(r[1], r[2]): j for j, r in enumerate(records)}

    incoming = [[] for _ in range(n)]
    outgoing = [[] for _ in range(n)]
    for j, r in enumerate(records):
        incoming[r[1]].append(j)
        outgoing[r[0]].append(j)
    elems = [delta.mask_elements(int(S)) for S in masks]

    comp = np.full((m, m), -1, dtype=np.int32)
    for yi in range(n):
        for b in outgoing[yi]:
            z = int(cod[b])
            eta2, nu2 = etas[b], elems[b]
            for a in incoming[yi]:
                S1 = int(masks[a])
                S = 0
                for j, e in enumerate(eta2):
                    if S1 >> e & 1:
                        S |= 1 << nu2[j]
                comp[b, a] = lookup[(z, S)]

    names = []
    for j, r in enumerate(records):
        ylab = simplices[r[1]].label(C)
        if j < n:
            names.append(f"id{ylab}")
        else:
            names.append("{" + ",".join(map(str, elems[j])) + "}" + ylab)
    cat = FinCategory(n, dom, cod, comp, names)
    return SdCategory(C, label, cat, simplices, cod, masks, etas)


# -- induced functors ---------------------------------------------------

def _check_levels(SdB: SdCategory, SdC: SdCategory):
    if SdB.truncation != SdC.truncation:
        raise TruncationMismatch(f"{SdB.truncation} vs {SdC.truncation}")


def sd_of_functor(F: Functor, SdB: SdCategory, SdC: SdCategory) -> Functor:
    """Sd F: simplices go to the root of their image, subsets to their image under the collapse."""
    _check_levels(SdB, SdC)
    B, C = SdB.base, SdC.base
    obj_map = []
    roots = []
    for s in SdB.simplices:
        start = F.obj_map[s.base]
        root, eta = nondeg_root(C, start, [F.mor_map[f] for f in s.chain])
        obj_map.append(SdC.index[root])
        roots.append(eta)
    mor_map = []
    for j in SdB.category.morphisms:
        y = int(SdB.mor_target[j])
        eta = roots[y]
        S = 0
        for i in delta.mask_elements(int(SdB.mor_mask[j])):
            S |= 1 << eta[i]
        mor_map.append(SdC.morphism(obj_map[y], S))
    return Functor(SdB.category, SdC.category, tuple(obj_map), tuple(mor_map))


def _reversal_functor(SdA: SdCategory, SdB: SdCategory, image_of) -> Functor:
    obj_map = [SdB.index[image_of(s)] for s in SdA.simplices]
    mor_map = []
    for j in SdA.category.morphisms:
        y = int(SdA.mor_target[j])
        S = delta.reverse_mask(int(SdA.mor_mask[j]), SdA.simplices[y].dim)
        mor_map.append(SdB.morphism(obj_map[y], S))
    return Functor(SdA.category, SdB.category, tuple(obj_map), tuple(mor_map))


def op_iso(SdC: SdCategory, SdCop: SdCategory) -> Functor:
    """Sd C -> Sd C^op reversing every chain; SdCop must be built on ``opposite(C)``."""
    _check_levels(SdC, SdCop)
    C = SdC.base

    def rev(s: Simplex) -> Simplex:
        if not s.chain:
            return s
        return Simplex(int(C.cod[s.chain[-1]]), tuple(reversed(s.chain)))

    return _reversal_functor(SdC, SdCop, rev)


def alpha(SdG: SdCategory) -> Functor:
    """The automorphism of Sd G reversing chains and inverting every arrow."""
    G = SdG.base
    if not isinstance(G, FinGroupoid):
        raise TypeError("alpha needs a groupoid")

    def flip(s: Simplex) -> Simplex:
        if not s.chain:
            return s
        return Simplex(int(G.cod[s.chain[-1]]), tuple(G.inverse(f) for f in reversed(s.chain)))

    return _reversal_functor(SdG, SdG, flip)


def sd_opposite(SdC: SdCategory) -> SdCategory:
    return build_sd(opposite(SdC.base), SdC.truncation)


def sd_coproduct_iso(parts: Sequence[FinCategory], k=2):
    """The comparison ∐ Sd(G_i) -> Sd(∐ G_i).

    Returns (functor, list of per-part SdCategory, Sd of the union).
    """
    sds = [build_sd(G, k) for G in parts]
    left, ltags = coproduct([s.category for s in sds])
    union, utags = coproduct(parts)
    right = build_sd(union, k)
    umor = {pf: i for i, pf in enumerate(utags.morphisms)}

    obj_map = []
    for p, x in ltags.objects:
        s = sds[p].simplices[x]
        img = Simplex(s.base + utags.obj_offsets[p], tuple(umor[(p, f)] for f in s.chain))
        obj_map.append(right.index[img])
    mor_map = []
    for p, j in ltags.morphisms:
        sd = sds[p]
        y = int(sd.mor_target[j])
        y_left = ltags.obj_offsets[p] + y
        mor_map.append(right.morphism(obj_map[y_left], int(sd.mor_mask[j])))
    return Functor(left, right.category, tuple(obj_map), tuple(mor_map)), sds, right

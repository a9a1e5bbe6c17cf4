"""Explicit finite categories, groupoids and functors.

Objects and morphisms are dense integer ids.  Morphism ids are canonical:
the identity of object ``a`` is morphism ``a``, so identities come first
in object order.  Composition is a dense table ``comp[g, f] = g∘f`` holding
-1 where ``dom g != cod f``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

import numpy as np

from .errors import NotAGroupoid


class FinCategory:
    """A finite category with a dense composition table.

    ``dom`` and ``cod`` are int arrays indexed by morphism id, ``comp`` is an
    ``m x m`` int array.  Instances are treated as immutable.
    """

    def __init__(self, n_objects: int, dom, cod, comp, names: Sequence[str] | None = None):
        self.n_objects = int(n_objects)
        self.dom = np.asarray(dom, dtype=np.int32)
        self.cod = np.asarray(cod, dtype=np.int32)
        self.comp = np.asarray(comp, dtype=np.int32)
        self.n_morphisms = len(self.dom)
        if self.comp.shape != (self.n_morphisms, self.n_morphisms):
            raise ValueError("composition table has the wrong shape")
        if self.n_morphisms < self.n_objects:
            raise ValueError("every object needs an identity")
        self.names = tuple(names) if names is not None else None
        for arr in (self.dom, self.cod, self.comp):
            arr.setflags(write=False)
        self._hom = None
        self._incoming = None
        self._outgoing = None

    def __repr__(self):
        return f"{type(self).__name__}(objects={self.n_objects}, morphisms={self.n_morphisms})"

    def __eq__(self, other):
        if not isinstance(other, FinCategory):
            return NotImplemented
        return (self.n_objects == other.n_objects
                and np.array_equal(self.dom, other.dom)
                and np.array_equal(self.cod, other.cod)
                and np.array_equal(self.comp, other.comp))

    def __hash__(self):
        return hash((self.n_objects, self.dom.tobytes(), self.cod.tobytes()))

    @property
    def objects(self) -> range:
        return range(self.n_objects)

    @property
    def morphisms(self) -> range:
        return range(self.n_morphisms)

    def identity(self, a: int) -> int:
        return a

    def is_identity(self, f: int) -> bool:
        return f < self.n_objects

    def compose(self, g: int, f: int) -> int:
        """Return g∘f, raising if the pair is not composable."""
        h = int(self.comp[g, f])
        if h < 0:
            raise ValueError(f"morphisms {g} and {f} are not composable")
        return h

    def name(self, f: int) -> str:
        if self.names is not None:
            return self.names[f]
        if self.is_identity(f):
            return f"id{f}"
        return f"m{f}"

    def is_endomorphism(self, f: int) -> bool:
        return self.dom[f] == self.cod[f]

    def _index(self):
        hom: dict[tuple[int, int], list[int]] = {}
        inc = [[] for _ in self.objects]
        out = [[] for _ in self.objects]
        for f in self.morphisms:
            a, b = int(self.dom[f]), int(self.cod[f])
            hom.setdefault((a, b), []).append(f)
            inc[b].append(f)
            out[a].append(f)
        self._hom = {k: tuple(v) for k, v in hom.items()}
        self._incoming = [tuple(v) for v in inc]
        self._outgoing = [tuple(v) for v in out]

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        if self._hom is None:
            self._index()
        return self._hom.get((a, b), ())

    def incoming(self, b: int) -> tuple[int, ...]:
        """All morphisms with codomain b, identity included."""
        if self._incoming is None:
            self._index()
        return self._incoming[b]

    def outgoing(self, a: int) -> tuple[int, ...]:
        if self._outgoing is None:
            self._index()
        return self._outgoing[a]

    def hom_counts(self) -> np.ndarray:
        """Matrix of hom-set sizes, ``H[a, b] = |hom(a, b)|``."""
        H = np.zeros((self.n_objects, self.n_objects), dtype=np.int64)
        np.add.at(H, (self.dom, self.cod), 1)
        return H


class FinGroupoid(FinCategory):
    """A finite category in which every morphism is invertible."""

    def __init__(self, n_objects, dom, cod, comp, inv, names=None):
        super().__init__(n_objects, dom, cod, comp, names)
        self.inv = np.asarray(inv, dtype=np.int32)
        self.inv.setflags(write=False)

    def inverse(self, f: int) -> int:
        return int(self.inv[f])

    def power(self, f: int, k: int) -> int:
        """f composed with itself k times; negative k uses the inverse."""
        if k < 0:
            f, k = self.inverse(f), -k
        acc = int(self.dom[f])
        for _ in range(k):
            acc = self.compose(f, acc)
        return acc


@dataclass(frozen=True)
class Functor:
    source: FinCategory
    target: FinCategory
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "obj_map", tuple(int(x) for x in self.obj_map))
        object.__setattr__(self, "mor_map", tuple(int(x) for x in self.mor_map))

    def __call__(self, f: int) -> int:
        return self.mor_map[f]

    def same_maps(self, other: "Functor") -> bool:
        return self.obj_map == other.obj_map and self.mor_map == other.mor_map

    def then(self, other: "Functor") -> "Functor":
        """The composite ``other ∘ self``."""
        return Functor(self.source, other.target,
                       tuple(other.obj_map[x] for x in self.obj_map),
                       tuple(other.mor_map[f] for f in self.mor_map))


def identity_functor(C: FinCategory) -> Functor:
    return Functor(C, C, tuple(C.objects), tuple(C.morphisms))


# -- validation ---------------------------------------------------------

def validate_category(C: FinCategory) -> list[str]:
    """List violated category axioms; an empty list means C is valid."""
    problems = []
    n, m = C.n_objects, C.n_morphisms
    dom, cod, comp = C.dom, C.cod, C.comp
    if m and (dom.min() < 0 or dom.max() >= n or cod.min() < 0 or cod.max() >= n):
        problems.append("dom/cod out of range")
        return problems
    for a in range(n):
        if dom[a] != a or cod[a] != a:
            problems.append(f"identity {a} is not an endomorphism of object {a}")
    if problems:
        return problems

    composable = dom[:, None] == cod[None, :]
    defined = comp >= 0
    bad = np.argwhere(composable != defined)
    for g, f in bad[:20]:
        problems.append(f"definedness: comp({g},{f}) defined={bool(defined[g, f])}, composable={bool(composable[g, f])}")
    if len(bad):
        return problems
    if (comp >= m).any():
        problems.append("composite id out of range")
        return problems

    G, F = np.nonzero(defined)
    H = comp[G, F]
    wrong = (dom[H] != dom[F]) | (cod[H] != cod[G])
    for g, f, h in zip(G[wrong], F[wrong], H[wrong]):
        problems.append(f"coherence: comp({g},{f})={h} has wrong dom/cod")
    if problems:
        return problems

    f_all = np.arange(m)
    for f in f_all[comp[cod, f_all] != f_all]:
        problems.append(f"left identity law fails at {f}")
    for f in f_all[comp[f_all, dom] != f_all]:
        problems.append(f"right identity law fails at {f}")

    # associativity, one middle morphism at a time
    for g in range(m):
        fs = np.asarray(C.incoming(int(dom[g])))
        hs = np.asarray(C.outgoing(int(cod[g])))
        left = comp[hs[:, None], comp[g, fs][None, :]]
        right = comp[comp[hs, g][:, None], fs[None, :]]
        for i, j in np.argwhere(left != right)[:5]:
            problems.append(f"associativity fails at ({hs[i]},{g},{fs[j]})")
    return problems


def as_groupoid(C: FinCategory) -> FinGroupoid:
    """Attach the inverse table, or raise NotAGroupoid at the first non-invertible morphism."""
    if isinstance(C, FinGroupoid):
        return C
    inv = np.full(C.n_morphisms, -1, dtype=np.int32)
    for f in C.morphisms:
        a, b = int(C.dom[f]), int(C.cod[f])
        for g in C.hom(b, a):
            if C.comp[g, f] == a and C.comp[f, g] == b:
                inv[f] = g
                break
        else:
            raise NotAGroupoid(f)
    return FinGroupoid(C.n_objects, C.dom, C.cod, C.comp, inv, C.names)


def is_groupoid(C: FinCategory) -> bool:
    try:
        as_groupoid(C)
    except NotAGroupoid:
        return False
    return True


def check_functor(F: Functor) -> bool:
    A, B = F.source, F.target
    om = np.asarray(F.obj_map, dtype=np.int64)
    mm = np.asarray(F.mor_map, dtype=np.int64)
    if len(om) != A.n_objects or len(mm) != A.n_morphisms:
        return False
    if A.n_objects == 0:
        return True
    if om.min() < 0 or om.max() >= B.n_objects:
        return False
    if A.n_morphisms and (mm.min() < 0 or mm.max() >= B.n_morphisms):
        return False
    if not np.array_equal(B.dom[mm], om[A.dom]) or not np.array_equal(B.cod[mm], om[A.cod]):
        return False
    if not np.array_equal(mm[: A.n_objects], om):
        return False
    G, Fs = np.nonzero(A.comp >= 0)
    return bool(np.array_equal(mm[A.comp[G, Fs]], B.comp[mm[G], mm[Fs]]))


def is_isomorphism(F: Functor) -> bool:
    A, B = F.source, F.target
    if A.n_objects != B.n_objects or A.n_morphisms != B.n_morphisms:
        return False
    if len(set(F.obj_map)) != A.n_objects or len(set(F.mor_map)) != A.n_morphisms:
        return False
    return check_functor(F)


# -- constructions ------------------------------------------------------

def from_parts(n_objects, dom, cod, identities, table: dict, names=None) -> FinCategory:
    """Build a category from arbitrary morphism ids, renumbering so identities come first.

    ``table`` maps ``(g, f)`` to ``g∘f`` in the caller's numbering.
    """
    m = len(dom)
    if len(identities) != n_objects or len(set(identities)) != n_objects:
        raise ValueError("need exactly one identity per object")
    order = list(identities) + [f for f in range(m) if f not in set(identities)]
    new = {old: i for i, old in enumerate(order)}
    ndom = [dom[old] for old in order]
    ncod = [cod[old] for old in order]
    comp = np.full((m, m), -1, dtype=np.int32)
    for (g, f), h in table.items():
        comp[new[g], new[f]] = new[h]
    nnames = [names[old] for old in order] if names is not None else None
    return FinCategory(n_objects, ndom, ncod, comp, nnames)


def opposite(C: FinCategory) -> FinCategory:
    names = C.names
    if isinstance(C, FinGroupoid):
        return FinGroupoid(C.n_objects, C.cod, C.dom, C.comp.T.copy(), C.inv, names)
    return FinCategory(C.n_objects, C.cod, C.dom, C.comp.T.copy(), names)


@dataclass
class CoproductTags:
    """Which part, and which local id, each object and morphism came from."""
    objects: list[tuple[int, int]] = field(default_factory=list)
    morphisms: list[tuple[int, int]] = field(default_factory=list)
    obj_offsets: list[int] = field(default_factory=list)


def coproduct(parts: Sequence[FinCategory]) -> tuple[FinCategory, CoproductTags]:
    """Disjoint union, keeping identities first in the combined numbering."""
    tags = CoproductTags()
    off = 0
    for p, C in enumerate(parts):
        tags.obj_offsets.append(off)
        tags.objects.extend((p, a) for a in C.objects)
        off += C.n_objects
    n = off
    # identities of every part first, then the rest part by part
    tags.morphisms.extend(tags.objects)
    for p, C in enumerate(parts):
        tags.morphisms.extend((p, f) for f in range(C.n_objects, C.n_morphisms))
    m = len(tags.morphisms)
    new = {pf: i for i, pf in enumerate(tags.morphisms)}
    dom = np.zeros(m, dtype=np.int32)
    cod = np.zeros(m, dtype=np.int32)
    comp = np.full((m, m), -1, dtype=np.int32)
    names = []
    for i, (p, f) in enumerate(tags.morphisms):
        C = parts[p]
        dom[i] = C.dom[f] + tags.obj_offsets[p]
        cod[i] = C.cod[f] + tags.obj_offsets[p]
        names.append(C.name(f) if len(parts) == 1 else f"{C.name(f)}@{p}")
    for p, C in enumerate(parts):
        ids = np.array([new[(p, f)] for f in C.morphisms], dtype=np.int32)
        G, F = np.nonzero(C.comp >= 0)
        comp[ids[G], ids[F]] = ids[C.comp[G, F]]
    if parts and all(isinstance(C, FinGroupoid) for C in parts):
        inv = np.zeros(m, dtype=np.int32)
        for i, (p, f) in enumerate(tags.morphisms):
            inv[i] = new[(p, parts[p].inverse(f))]
        return FinGroupoid(n, dom, cod, comp, inv, names), tags
    return FinCategory(n, dom, cod, comp, names), tags


def disjoint_union(*parts: FinCategory) -> FinCategory:
    return coproduct(parts)[0]


def connected_components(C: FinCategory) -> list[list[int]]:
    """Object classes joined by morphisms, each sorted, ordered by least element."""
    parent = list(C.objects)

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for f in range(C.n_objects, C.n_morphisms):
        a, b = find(int(C.dom[f])), find(int(C.cod[f]))
        if a != b:
            parent[max(a, b)] = min(a, b)
    classes: dict[int, list[int]] = {}
    for a in C.objects:
        classes.setdefault(find(a), []).append(a)
    return sorted(classes.values())


def full_subcategory(C: FinCategory, objs: Sequence[int]) -> tuple[FinCategory, list[int]]:
    """Restrict to the given objects; also returns the old id of each new morphism."""
    objs = list(objs)
    onew = {a: i for i, a in enumerate(objs)}
    keep = list(objs) + [f for f in range(C.n_objects, C.n_morphisms)
                         if C.dom[f] in onew and C.cod[f] in onew]
    mnew = {f: i for i, f in enumerate(keep)}
    m = len(keep)
    comp = np.full((m, m), -1, dtype=np.int32)
    for i, g in enumerate(keep):
        for j, f in enumerate(keep):
            h = C.comp[g, f]
            if h >= 0:
                comp[i, j] = mnew[int(h)]
    dom = [onew[int(C.dom[f])] for f in keep]
    cod = [onew[int(C.cod[f])] for f in keep]
    names = [C.name(f) for f in keep] if C.names is not None else None
    if isinstance(C, FinGroupoid):
        inv = [mnew[C.inverse(f)] for f in keep]
        return FinGroupoid(len(objs), dom, cod, comp, inv, names), keep
    return FinCategory(len(objs), dom, cod, comp, names), keep


# -- builders -----------------------------------------------------------

def group_from_table(table, names=None) -> FinGroupoid:
    """One-object groupoid from a Cayley table ``table[a][b] = a·b`` with identity 0."""
    T = np.asarray(table, dtype=np.int32)
    n = len(T)
    if not (np.array_equal(T[0], np.arange(n)) and np.array_equal(T[:, 0], np.arange(n))):
        raise ValueError("element 0 must be the identity")
    inv = np.argmax(T == 0, axis=1)
    zeros = np.zeros(n, dtype=np.int32)
    return FinGroupoid(1, zeros, zeros, T, inv, names)


def _power_name(base: str, k: int) -> str:
    return base if k == 1 else f"{base}^{k}"


def cyclic_group(n: int) -> FinGroupoid:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    names = ["id"] + [_power_name("r", k) for k in range(1, n)]
    return group_from_table(table, names)


def dihedral_group(n: int) -> FinGroupoid:
    """The group ⟨r, s | r^n, s^2, rsrs⟩ of order 2n; element r^i s^j has id i + n*j."""
    def mul(x, y):
        i, j = x % n, x // n
        k, l = y % n, y // n
        return (i + (k if j == 0 else -k)) % n + n * ((j + l) % 2)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = ["id"] + [_power_name("r", k) for k in range(1, n)]
    names += ["s"] + [_power_name("r", k) + "s" for k in range(1, n)]
    return group_from_table(table, names)


def klein_four() -> FinGroupoid:
    table = [[a ^ b for b in range(4)] for a in range(4)]
    return group_from_table(table, ["id", "a", "b", "ab"])


def quaternion_group() -> FinGroupoid:
    # basis 1, i, j, k with sign; element id = 2*basis + (sign bit)
    units = {(0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
             (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
             (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
             (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1)}
    elems = [(b, s) for b in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (b1, s1), (b2, s2) = elems[x], elems[y]
        b, s = units[(b1, b2)]
        return index[(b, s * s1 * s2)]

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    label = "1ijk"
    names = [("" if s > 0 else "-") + label[b] for b, s in elems]
    names[0] = "id"
    return group_from_table(table, names)


def frobenius_group_21() -> FinGroupoid:
    """Z/7 ⋊ Z/3 with the generator of Z/3 acting by multiplication by 2."""
    elems = [(a, b) for b in range(3) for a in range(7)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        (a, b), (c, d) = elems[x], elems[y]
        return index[((a + pow(2, b) * c) % 7, (b + d) % 3)]

    table = [[mul(x, y) for y in range(21)] for x in range(21)]
    names = ["id" if (a, b) == (0, 0) else
             (_power_name("x", a) if a else "") + (_power_name("y", b) if b else "")
             for a, b in elems]
    return group_from_table(table, names)


def pair_groupoid(n: int, vertex_group: FinGroupoid | None = None) -> FinGroupoid:
    """Indiscrete groupoid on n objects, optionally times a group.

    The morphisms a -> b are the elements of ``vertex_group`` (a single one
    when it is omitted).
    """
    if vertex_group is None:
        vertex_group = group_from_table([[0]], ["id"])
    K = vertex_group
    k = K.n_morphisms
    mors = [(a, a, 0) for a in range(n)]
    mors += [(a, b, g) for a in range(n) for b in range(n) for g in range(k) if (a, b, g) not in
             {(c, c, 0) for c in range(n)}]
    index = {x: i for i, x in enumerate(mors)}
    m = len(mors)
    comp = np.full((m, m), -1, dtype=np.int32)
    inv = np.zeros(m, dtype=np.int32)
    for i, (a, b, g) in enumerate(mors):
        inv[i] = index[(b, a, K.inverse(g))]
        for j, (c, d, h) in enumerate(mors):
            if d == a:
                comp[i, j] = index[(c, b, K.compose(g, h))]
    names = []
    for a, b, g in mors:
        if a == b and g == 0:
            names.append(f"id{a}")
        elif k == 1:
            names.append(f"{a}>{b}")
        else:
            names.append(f"{a}>{b}:{K.name(g)}")
    dom = [a for a, _, _ in mors]
    cod = [b for _, b, _ in mors]
    return FinGroupoid(n, dom, cod, comp, inv, names)


def discrete(n: int) -> FinGroupoid:
    ar = np.arange(n)
    comp = np.where(ar[:, None] == ar[None, :], ar[:, None], -1)
    return FinGroupoid(n, ar, ar, comp, ar, [f"id{a}" for a in range(n)])


def poset_category(n: int, relations) -> FinCategory:
    """Category of a partial order on range(n); ``relations`` holds pairs (a, b) meaning a <= b.

    The reflexive-transitive closure is taken, antisymmetry is the caller's job.
    """
    le = np.eye(n, dtype=bool)
    for a, b in relations:
        le[a, b] = True
    for k in range(n):
        le |= le[:, k:k + 1] & le[k:k + 1, :]
    arrows = [(a, a) for a in range(n)] + [(a, b) for a, b in product(range(n), repeat=2)
                                            if a != b and le[a, b]]
    index = {x: i for i, x in enumerate(arrows)}
    m = len(arrows)
    comp = np.full((m, m), -1, dtype=np.int32)
    for i, (b, c) in enumerate(arrows):
        for j, (a, b2) in enumerate(arrows):
            if b == b2:
                comp[i, j] = index[(a, c)]
    names = [f"id{a}" if a == b else f"{a}<{b}" for a, b in arrows]
    return FinCategory(n, [a for a, _ in arrows], [b for _, b in arrows], comp, names)


def poset_interval(n: int) -> FinCategory:
    """The totally ordered set [n] = {0 < 1 < ... < n}."""
    return poset_category(n + 1, [(i, i + 1) for i in range(n)])


def zigzag(k: int, start_forward: bool = True) -> FinCategory:
    """k arrows between objects 0..k alternating in direction.

    ``zigzag(2)`` is ·→·←·; with ``start_forward=False`` it is ·←·→·.
    """
    rel = []
    for i in range(k):
        forward = (i % 2 == 0) == start_forward
        rel.append((i, i + 1) if forward else (i + 1, i))
    return poset_category(k + 1, rel)


def direct_product(G: FinGroupoid, K: FinGroupoid) -> FinGroupoid:
    """Product of two groups; element (g, k) has id g * |K| + k."""
    if G.n_objects != 1 or K.n_objects != 1:
        raise ValueError("direct_product expects one-object groupoids")
    a, b = G.n_morphisms, K.n_morphisms
    table = [[G.compose(x // b, y // b) * b + K.compose(x % b, y % b) for y in range(a * b)]
             for x in range(a * b)]
    names = []
    for x in range(a * b):
        g, k = x // b, x % b
        parts = [G.name(g)] * (g != 0) + [K.name(k)] * (k != 0)
        names.append("*".join(parts) if parts else "id")
    return group_from_table(table, names)

"""Read groupoid structure off an abstract category shaped like Sd_{<=2} G.

Nothing here looks at simplex labels.  Everything is computed from hom-set
data of a plain FinCategory: dimensions come from incoming-morphism counts,
faces from nonempty hom-sets, and the triangle form of a 2-simplex y from
the multiset of 1-dimensional sources of morphisms into y.

A 2-simplex <p|q> has 1-faces q, p and p∘q (the last is missing when p∘q
is an identity), so y has the form [f g h] exactly when that multiset is
{f, g, h}.  A filler of (f, g) is a 2-simplex whose multiset contains f and
g; whatever is left over is its third side, or the identity flag.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import HypothesisViolated, NotASubdivisionShape
from .fincat import FinCategory


class _IdentityFlag:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "IDENTITY"

    def __reduce__(self):
        return (_IdentityFlag, ())


IDENTITY = _IdentityFlag()


class ProbedCategory:
    """A FinCategory plus cached incoming sets, dimensions and face multisets."""

    def __init__(self, A: FinCategory):
        self.A = A
        dims = []
        for y in A.objects:
            size = len(A.incoming(y)) + 1
            dims.append(size.bit_length() - 2 if size & (size - 1) == 0 else None)
        self._dims = dims
        self._square: dict[int, object] = {}
        self._inverse: dict[int, int | None] = {}

    def dimension(self, y: int) -> int:
        d = self._dims[y]
        if d is None:
            raise NotASubdivisionShape(f"object {y} has {len(self.A.incoming(y))} incoming morphisms")
        return d

    def mt(self, y: int, n: int | None = None) -> list[int]:
        if n is None:
            return list(self.A.incoming(y))
        return [m for m in self.A.incoming(y) if self._dims[self.A.dom[m]] == n]

    @cached_property
    def by_dim(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for y in self.A.objects:
            out.setdefault(self.dimension(y), []).append(y)
        return out

    @cached_property
    def edges(self) -> list[int]:
        return self.by_dim.get(1, [])

    @cached_property
    def triangles(self) -> list[int]:
        return self.by_dim.get(2, [])

    @cached_property
    def face_multiset(self) -> dict[int, tuple[int, ...]]:
        """For each 2-dim object, the sorted sources of its mt_1 arrows."""
        A = self.A
        return {y: tuple(sorted(int(A.dom[m]) for m in self.mt(y, 1))) for y in self.triangles}

    @cached_property
    def form_index(self) -> dict[tuple[int, ...], list[int]]:
        idx: dict[tuple[int, ...], list[int]] = {}
        for y, ms in self.face_multiset.items():
            idx.setdefault(ms, []).append(y)
        return idx

    @cached_property
    def cofaces(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {e: [] for e in self.edges}
        for y, ms in self.face_multiset.items():
            for e in sorted(set(ms)):
                out[e].append(y)
        return out

    @cached_property
    def endpoints(self) -> dict[int, frozenset]:
        return {e: frozenset(proper_faces(self, e)) for e in self.edges}

    @cached_property
    def by_endpoints(self) -> dict[frozenset, list[int]]:
        out: dict[frozenset, list[int]] = {}
        for e, ends in self.endpoints.items():
            out.setdefault(ends, []).append(e)
        return out


def probed(A) -> ProbedCategory:
    return A if isinstance(A, ProbedCategory) else ProbedCategory(A)


# -- basic shape --------------------------------------------------------

def dimension(A, y: int) -> int:
    return probed(A).dimension(y)


def proper_faces(A, y: int) -> set[int]:
    P = probed(A)
    return {int(P.A.dom[m]) for m in P.A.incoming(y)} - {y}


def endpoint_objects(A, e: int) -> frozenset:
    P = probed(A)
    if P.dimension(e) != 1:
        raise ValueError("endpoints are defined for 1-dimensional objects")
    return P.endpoints[e]


def is_endomorphism(A, e: int) -> bool:
    return len(endpoint_objects(A, e)) == 1


@dataclass(frozen=True)
class TriangleForm:
    target: int
    faces: tuple[int, ...]  # 1-dim sources of mt_1, with multiplicity
    degenerate: bool        # third side is an identity

    @property
    def multiplicities(self) -> Counter:
        return Counter(self.faces)


def triangle_form(A, y: int) -> TriangleForm:
    P = probed(A)
    if P.dimension(y) != 2:
        raise ValueError("triangle forms are defined for 2-dimensional objects")
    faces = P.face_multiset[y]
    if len(faces) not in (2, 3):
        raise NotASubdivisionShape(f"2-simplex {y} has {len(faces)} arrows from 1-simplices")
    degenerate = len(faces) == 2
    if degenerate and len(P.mt(y, 0)) != 4:
        raise NotASubdivisionShape(f"degenerate 2-simplex {y} should have four vertex arrows")
    return TriangleForm(y, faces, degenerate)


# -- fillers and counting ----------------------------------------------

def _contains(ms: tuple[int, ...], e_f: int, e_g: int) -> bool:
    if e_f == e_g:
        return ms.count(e_f) >= 2
    return e_f in ms and e_g in ms


def _leftover(ms: tuple[int, ...], e_f: int, e_g: int):
    rest = list(ms)
    rest.remove(e_f)
    rest.remove(e_g)
    return rest[0] if rest else IDENTITY


def fillers(A, e_f: int, e_g: int) -> list[int]:
    P = probed(A)
    return [y for y in P.cofaces[e_f] if _contains(P.face_multiset[y], e_f, e_g)]


def third_sides(A, e_f: int, e_g: int) -> list:
    """Third side of each filler, in filler order (repeats kept)."""
    P = probed(A)
    return [_leftover(P.face_multiset[y], e_f, e_g) for y in fillers(P, e_f, e_g)]


def count_form(A, e_f: int, e_g: int, e_h=IDENTITY) -> int:
    """Number of 2-simplices of the form [f g h]; ``e_h`` may be the identity flag."""
    P = probed(A)
    key = (e_f, e_g) if e_h is IDENTITY else (e_f, e_g, e_h)
    return len(P.form_index.get(tuple(sorted(key)), ()))


@dataclass(frozen=True)
class Relation:
    kind: str
    subtype: str | None = None


def relation_type(A, e_f: int, e_g: int) -> Relation:
    P = probed(A)
    ef, eg = P.endpoints[e_f], P.endpoints[e_g]
    shared = ef & eg
    if not shared:
        return Relation("unrelated")
    endo_f, endo_g = len(ef) == 1, len(eg) == 1
    if endo_f and endo_g:
        return Relation("endo-to-endo")
    if endo_f or endo_g:
        return Relation("end-to-endo")
    n = len(fillers(P, e_f, e_g))
    if ef == eg:
        return Relation("ends-to-ends", {4: "parallel", 2: "opposed"}.get(n, f"{n}-fillers"))
    # which way round the two arrows point cannot be recovered; only sequential stands out
    return Relation("end-to-end", {1: "sequential", 2: "coinitial-or-coterminal"}.get(n, f"{n}-fillers"))


# -- inverse, square, cube ----------------------------------------------

def is_self_inverse(A, e_f: int) -> bool:
    return count_form(A, e_f, e_f, IDENTITY) >= 1


def is_inverse_pair(A, e_f: int, e_g: int) -> bool:
    if e_f == e_g:
        raise ValueError("the pair test needs two distinct 1-simplices")
    return count_form(A, e_f, e_g, IDENTITY) >= 2


def inverse_of(A, e_f: int) -> int | None:
    """The 1-simplex inverse to e_f, found among those with the same endpoints."""
    P = probed(A)
    if e_f not in P._inverse:
        found = None
        if is_self_inverse(P, e_f):
            found = e_f
        else:
            for e in P.by_endpoints[P.endpoints[e_f]]:
                if e != e_f and is_inverse_pair(P, e_f, e):
                    found = e
                    break
        P._inverse[e_f] = found
    return P._inverse[e_f]


def is_groupoid_shaped(A) -> bool:
    """Every 1-simplex has an inverse partner (or is self-inverse)."""
    P = probed(A)
    return all(inverse_of(P, e) is not None for e in P.edges)


def _require_endo(P: ProbedCategory, e: int):
    if len(P.endpoints[e]) != 1:
        raise HypothesisViolated(f"1-simplex {e} is not an endomorphism")


def square_of(A, e_f: int):
    P = probed(A)
    _require_endo(P, e_f)
    if e_f not in P._square:
        if is_self_inverse(P, e_f):
            P._square[e_f] = IDENTITY
        else:
            found = {_leftover(P.face_multiset[y], e_f, e_f) for y in fillers(P, e_f, e_f)}
            found.discard(IDENTITY)
            if len(found) != 1:
                raise HypothesisViolated(f"no unique square for 1-simplex {e_f}: {sorted(found)}")
            P._square[e_f] = found.pop()
    return P._square[e_f]


def _endos_at(P: ProbedCategory, e: int) -> list[int]:
    return P.by_endpoints[P.endpoints[e]]


def cube_of(A, e_f: int) -> int:
    """f³ under f ≠ f⁻¹ and f² ≠ f⁻¹; otherwise HypothesisViolated."""
    P = probed(A)
    _require_endo(P, e_f)
    if is_self_inverse(P, e_f):
        raise HypothesisViolated("f is self-inverse")
    sq = square_of(P, e_f)
    if is_inverse_pair(P, e_f, sq):
        raise HypothesisViolated("f² is the inverse of f, so f³ is an identity")
    hits = []
    for h in _endos_at(P, e_f):
        c = count_form(P, e_f, sq, h)
        inv = h != e_f and is_inverse_pair(P, e_f, h)
        if (inv and c == 4) or (not inv and c == 2):
            hits.append(h)
    if len(hits) != 1:
        raise HypothesisViolated(f"cube criterion matched {len(hits)} candidates")
    return hits[0]


# -- commutativity and composites ----------------------------------------

def _check_basic_hypotheses(P: ProbedCategory, e_f: int, e_g: int):
    _require_endo(P, e_f)
    _require_endo(P, e_g)
    if P.endpoints[e_f] != P.endpoints[e_g]:
        raise HypothesisViolated("endomorphisms of different objects")
    if e_f == e_g:
        raise HypothesisViolated("f = g")
    if is_inverse_pair(P, e_f, e_g):
        raise HypothesisViolated("f = g⁻¹")
    if square_of(P, e_f) == e_g or square_of(P, e_g) == e_f:
        raise HypothesisViolated("one is the square of the other")


def commutes(A, e_f: int, e_g: int) -> bool:
    P = probed(A)
    _check_basic_hypotheses(P, e_f, e_g)
    sides = set(third_sides(P, e_f, e_g))
    return all(count_form(P, e_f, e_g, h) % 2 == 0 for h in sides)


def _inverse_or_fail(P, e):
    inv = inverse_of(P, e)
    if inv is None:
        raise HypothesisViolated(f"1-simplex {e} has no inverse")
    return inv


def _endo_composites(P: ProbedCategory, e_f: int, e_g: int) -> frozenset:
    if e_f == e_g:
        return frozenset([square_of(P, e_f)])
    if is_inverse_pair(P, e_f, e_g):
        return frozenset([IDENTITY])
    f2, g2 = square_of(P, e_f), square_of(P, e_g)
    if f2 == e_g:
        return frozenset([cube_of(P, e_f)])
    if g2 == e_f:
        return frozenset([cube_of(P, e_g)])
    # f² = g⁻¹ gives fg = gf = f⁻¹, and symmetrically
    if f2 is not IDENTITY and is_inverse_pair(P, f2, e_g):
        return frozenset([_inverse_or_fail(P, e_f)])
    if g2 is not IDENTITY and is_inverse_pair(P, g2, e_f):
        return frozenset([_inverse_or_fail(P, e_g)])

    comm = commutes(P, e_f, e_g)
    candidates = [h for h in _endos_at(P, e_f)]

    def c(a, b, h):
        return count_form(P, a, b, h)

    if f2 == g2:
        if f2 is IDENTITY:
            want = (lambda h: c(e_f, e_g, h) == 6) if comm else (lambda h: c(e_f, e_g, h) == 3)
        else:
            want = (lambda h: c(e_f, e_g, h) == 2) if comm else (lambda h: c(e_f, e_g, h) in (1, 3))
    elif f2 is IDENTITY or g2 is IDENTITY:
        want = (lambda h: c(e_f, e_g, h) == 4) if comm else (lambda h: c(e_f, e_g, h) in (2, 3))
    else:
        fi, gi = _inverse_or_fail(P, e_f), _inverse_or_fail(P, e_g)
        if comm:
            def want(h):
                return c(e_f, e_g, h) >= 1 and c(fi, e_g, h) >= 1 and c(e_f, gi, h) >= 1
        elif is_inverse_pair(P, f2, g2):
            def want(h):
                return c(fi, e_g, h) == 2 and c(e_f, gi, h) == 2
        else:
            def want(h):
                ones = c(e_f, e_g, h) == 1 and c(fi, e_g, h) == 1 and c(e_f, gi, h) == 1
                twos = sum(x == 2 for x in (c(e_f, e_g, h), c(fi, e_g, h), c(e_f, gi, h)))
                return ones or (c(fi, gi, h) == 1 and twos >= 2)
    return frozenset(h for h in candidates if want(h))


def composite_pair_set(A, e_f: int, e_g: int) -> frozenset:
    """The set {fg, gf} (defined composites only), each a 1-simplex or IDENTITY.

    Routes through the elementary square, cube and inverse identities
    whenever the case criteria's hypotheses fail.
    """
    P = probed(A)
    rel = relation_type(P, e_f, e_g) if e_f != e_g else None
    if rel is None:
        if len(P.endpoints[e_f]) != 1:
            raise HypothesisViolated("a non-endomorphism cannot be composed with itself")
        return frozenset([square_of(P, e_f)])
    if rel.kind == "endo-to-endo":
        return _endo_composites(P, e_f, e_g)
    if rel.kind == "end-to-end" and rel.subtype == "sequential":
        return frozenset(third_sides(P, e_f, e_g))
    if rel.kind == "ends-to-ends" and rel.subtype == "opposed":
        return frozenset(third_sides(P, e_f, e_g))
    if rel.kind == "end-to-endo":
        f, g = (e_f, e_g) if len(P.endpoints[e_g]) == 1 else (e_g, e_f)
        fi = _inverse_or_fail(P, f)
        hits = [h for h in P.by_endpoints[P.endpoints[f]]
                if h != f and relation_type(P, h, f) == Relation("ends-to-ends", "parallel")
                and h in third_sides(P, fi, g)]
        if len(hits) != 1:
            raise HypothesisViolated(f"end-to-endo criterion matched {len(hits)} candidates")
        return frozenset(hits)
    raise HypothesisViolated(f"not composable: {rel.kind} {rel.subtype or ''}".strip())

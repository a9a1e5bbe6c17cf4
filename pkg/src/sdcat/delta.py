"""Monotone maps [m] -> [n] of the simplex category.

A map is its value vector.  Vertex subsets of [n] are int bitmasks, so a
subset and the monomorphism with that image are interchangeable.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DeltaMap:
    values: tuple[int, ...]
    n: int  # codomain is {0..n}

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise ValueError("domain must be nonempty")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"{vals} is not monotone")
        if vals[0] < 0 or vals[-1] > self.n:
            raise ValueError(f"{vals} leaves the codomain [{self.n}]")

    @property
    def m(self) -> int:
        return len(self.values) - 1

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __len__(self):
        return len(self.values)


def identity(n: int) -> DeltaMap:
    return DeltaMap(tuple(range(n + 1)), n)


def is_mono(mu: DeltaMap) -> bool:
    v = mu.values
    return all(a < b for a, b in zip(v, v[1:]))


def is_epi(mu: DeltaMap) -> bool:
    return set(mu.values) == set(range(mu.n + 1))


def compose(mu2: DeltaMap, mu1: DeltaMap) -> DeltaMap:
    """mu2 ∘ mu1."""
    if mu1.n != mu2.m:
        raise ValueError("codomain of the first map must be the domain of the second")
    return DeltaMap(tuple(mu2.values[v] for v in mu1.values), mu2.n)


def epi_mono_factor(mu: DeltaMap) -> tuple[DeltaMap, DeltaMap]:
    """The unique (epi, mono) pair with mono ∘ epi = mu."""
    image = sorted(set(mu.values))
    pos = {v: i for i, v in enumerate(image)}
    sigma = DeltaMap(tuple(pos[v] for v in mu.values), len(image) - 1)
    nu = DeltaMap(tuple(image), mu.n)
    return sigma, nu


# -- subsets as bitmasks ------------------------------------------------

def subset_mask(elems) -> int:
    mask = 0
    for e in elems:
        mask |= 1 << e
    return mask


def mask_elements(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


def subset_to_mono(mask: int, n: int) -> DeltaMap:
    if mask <= 0:
        raise ValueError("vertex subsets must be nonempty")
    if mask >> (n + 1):
        raise ValueError("subset exceeds the ambient simplex")
    return DeltaMap(tuple(mask_elements(mask)), n)


def mono_to_subset(nu: DeltaMap) -> int:
    if not is_mono(nu):
        raise ValueError("not a monomorphism")
    return subset_mask(nu.values)


def prime_dual(mu: DeltaMap) -> DeltaMap:
    """The conjugate by order reversal: mu'(m - i) = n - mu(i)."""
    return DeltaMap(tuple(mu.n - v for v in reversed(mu.values)), mu.n)


def reverse_mask(mask: int, n: int) -> int:
    """Subset form of prime_dual: S -> {n - i}."""
    return subset_mask(n - i for i in mask_elements(mask))


def epi_fibers(sigma: DeltaMap) -> list[list[int]]:
    """Preimages of 0..n under an epi; these are consecutive intervals."""
    if not is_epi(sigma):
        raise ValueError("not an epimorphism")
    fibers: list[list[int]] = [[] for _ in range(sigma.n + 1)]
    for i, v in enumerate(sigma.values):
        fibers[v].append(i)
    return fibers


def all_maps(m: int, n: int):
    """Every monotone map [m] -> [n]."""
    def rec(prefix, lo):
        if len(prefix) == m + 1:
            yield DeltaMap(tuple(prefix), n)
            return
        for v in range(lo, n + 1):
            yield from rec(prefix + [v], v)
    yield from rec([], 0)

import itertools

import pytest
from hypothesis import given, strategies as st

from sdcat import delta
from sdcat.delta import DeltaMap

PAIRS = [(m, n) for m in range(6) for n in range(6)]


def test_mono_epi_examples():
    assert delta.is_mono(DeltaMap((0, 1, 2), 2)) and delta.is_epi(DeltaMap((0, 1, 2), 2))
    m = DeltaMap((0, 0, 1), 1)
    assert delta.is_epi(m) and not delta.is_mono(m)
    m = DeltaMap((0, 2, 4), 4)
    assert delta.is_mono(m) and not delta.is_epi(m)


def test_rejects_non_monotone():
    with pytest.raises(ValueError):
        DeltaMap((1, 0), 1)
    with pytest.raises(ValueError):
        DeltaMap((0, 3), 2)


def test_factor_examples():
    sigma, nu = delta.epi_mono_factor(DeltaMap((0, 0, 2), 2))
    assert sigma == DeltaMap((0, 0, 1), 1) and nu == DeltaMap((0, 2), 2)
    i = delta.identity(3)
    assert delta.epi_mono_factor(i) == (i, i)
    nu = DeltaMap((1, 3), 4)
    assert delta.epi_mono_factor(nu) == (delta.identity(1), nu)


@pytest.mark.parametrize("m,n", PAIRS)
def test_factorization_unique(m, n):
    monos = {}
    epis = {}
    for k in range(min(m, n) + 1):
        monos[k] = [x for x in delta.all_maps(k, n) if delta.is_mono(x)]
        epis[k] = [x for x in delta.all_maps(m, k) if delta.is_epi(x)]
    for mu in delta.all_maps(m, n):
        sigma, nu = delta.epi_mono_factor(mu)
        assert delta.is_epi(sigma) and delta.is_mono(nu)
        assert delta.compose(nu, sigma) == mu
        pairs = [(s, v) for k in epis for s in epis[k] for v in monos[k] if delta.compose(v, s) == mu]
        assert pairs == [(sigma, nu)]


@pytest.mark.parametrize("m,n", PAIRS)
def test_prime_dual(m, n):
    for mu in delta.all_maps(m, n):
        d = delta.prime_dual(mu)
        assert delta.prime_dual(d) == mu
        assert delta.is_mono(d) == delta.is_mono(mu)
        assert delta.is_epi(d) == delta.is_epi(mu)


def test_prime_dual_examples():
    assert delta.prime_dual(DeltaMap((0, 2), 2)) == DeltaMap((0, 2), 2)
    assert delta.prime_dual(DeltaMap((0, 0, 1), 1)) == DeltaMap((0, 1, 1), 1)
    assert delta.prime_dual(delta.identity(4)) == delta.identity(4)


@pytest.mark.parametrize("n", range(9))
def test_subset_mono_roundtrip(n):
    for mask in range(1, delta.full_mask(n) + 1):
        nu = delta.subset_to_mono(mask, n)
        assert delta.is_mono(nu)
        assert delta.mono_to_subset(nu) == mask
        assert delta.reverse_mask(mask, n) == delta.mono_to_subset(delta.prime_dual(nu))


def test_subset_examples():
    assert delta.subset_to_mono(0b101, 2) == DeltaMap((0, 2), 2)
    assert delta.subset_to_mono(delta.full_mask(3), 3) == delta.identity(3)
    with pytest.raises(ValueError):
        delta.subset_to_mono(0, 2)


def test_fibers():
    assert delta.epi_fibers(DeltaMap((0, 0, 1), 1)) == [[0, 1], [2]]
    with pytest.raises(ValueError):
        delta.epi_fibers(DeltaMap((0, 2), 2))


def test_all_maps_count():
    # monotone maps [m] -> [n] number C(m+n+1, m+1)
    from math import comb
    for m, n in itertools.product(range(5), repeat=2):
        assert len(list(delta.all_maps(m, n))) == comb(m + n + 1, m + 1)


@st.composite
def monotone(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=1, max_size=10)))
    return DeltaMap(tuple(vals), n)


@given(monotone())
def test_factor_property(mu):
    sigma, nu = delta.epi_mono_factor(mu)
    assert delta.compose(nu, sigma) == mu
    assert delta.is_epi(sigma) and delta.is_mono(nu)


@given(st.integers(0, 20), st.data())
def test_mask_roundtrip(n, data):
    mask = data.draw(st.integers(1, delta.full_mask(n)))
    assert delta.subset_mask(delta.mask_elements(mask)) == mask
    assert delta.reverse_mask(delta.reverse_mask(mask, n), n) == mask

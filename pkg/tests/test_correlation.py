import itertools

import pytest
from hypothesis import given, strategies as st

import oracles
from fhgv.correlation import (
    cyclic_min_distance, hamming_correlation, pairwise_distance, set_profile,
)
from fhgv.model import FHSequenceSet, InvalidInput, Sequence, rotate, seq


def test_hamming_correlation_examples():
    x = seq((0, 1, 2, 0), 3)
    assert hamming_correlation(x, x, 0) == 4
    y = seq((0, 0, 1, 1), 2)
    assert hamming_correlation(y, y, 2) == 0
    z = seq((0, 1, 0, 1), 2)
    assert hamming_correlation(z, z, 2) == 4


def test_hamming_correlation_rejects():
    with pytest.raises(InvalidInput):
        hamming_correlation(seq((0, 1), 2), seq((0, 1, 1), 2), 0)
    with pytest.raises(InvalidInput):
        hamming_correlation(seq((0, 1), 2), seq((0, 1), 3), 0)
    with pytest.raises(InvalidInput):
        hamming_correlation(seq((0, 1), 2), seq((0, 1), 2), 2)


def test_pairwise_distance_examples():
    assert pairwise_distance(seq((0, 1, 2), 3), seq((0, 1, 2), 3)) == 0
    assert pairwise_distance(seq((0, 1, 2), 3), seq((1, 2, 0), 3)) == 3
    assert pairwise_distance(seq((0, 0, 1), 2), seq((0, 1, 0), 2)) == 2
    with pytest.raises(InvalidInput):
        pairwise_distance(seq((0, 1), 2), seq((0, 1), 3))


def test_cyclic_min_distance_examples():
    assert cyclic_min_distance(seq((0, 0, 0), 2)) == 0
    assert cyclic_min_distance(seq((0, 1, 0, 1), 2)) == 0
    assert cyclic_min_distance(seq((0, 0, 1), 2)) == 2
    with pytest.raises(InvalidInput):
        cyclic_min_distance(seq((1,), 2))


def test_set_profile_examples():
    p = set_profile(FHSequenceSet.of([(0, 1, 2)], q=3))
    assert (p.Ha, p.Hc, p.Hm) == (0, None, 0)
    p = set_profile(FHSequenceSet.of([(0, 0, 0)], q=2))
    assert (p.Ha, p.Hm) == (3, 3)
    p = set_profile(FHSequenceSet.of([(0, 1), (1, 0)], q=2))
    assert (p.Ha, p.Hc, p.Hm) == (0, 2, 2)
    assert p.Hc_witness == (0, 1, 1)


def _small_words():
    for n in range(2, 9):
        for q in (2, 3):
            for w in itertools.product(range(q), repeat=n):
                yield Sequence(w, q)


def test_identities_exhaustive():
    """Shift identity, delay symmetry, no single mismatch, and Ha = n - d(u)."""
    for u in _small_words():
        n = u.n
        dists = []
        for t in range(n):
            h = hamming_correlation(u, u, t)
            d = pairwise_distance(u, rotate(u, t))
            assert h == n - d
            assert d != 1
            if t:
                dists.append(d)
        du = cyclic_min_distance(u)
        assert du == min(dists) == oracles.self_distance(u.symbols)
        assert set_profile(FHSequenceSet(n, u.q, (u,))).Ha == n - du


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(
    st.lists(st.integers(0, 2), min_size=n, max_size=n),
    st.lists(st.integers(0, 2), min_size=n, max_size=n),
    st.integers(0, n - 1))))
def test_delay_symmetry_and_range(data):
    a, b, t = data
    x, y = seq(a, 3), seq(b, 3)
    n = x.n
    h = hamming_correlation(x, y, t)
    assert 0 <= h <= n
    assert h == hamming_correlation(y, x, (n - t) % n)


@given(st.integers(2, 6).flatmap(lambda n: st.lists(
    st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=6, unique=True)))
def test_profile_matches_brute_force_and_witnesses(rows):
    F = FHSequenceSet.of(rows, q=3)
    p = set_profile(F)
    words = [m.symbols for m in F]
    ha, hc = oracles.profile(words)
    assert (p.Ha, p.Hc) == (ha, hc)
    i, t = p.Ha_witness
    assert oracles.corr(words[i], words[i], t) == p.Ha and 0 < t < F.n
    if hc is not None:
        a, b, t = p.Hc_witness
        assert a != b and oracles.corr(words[a], words[b], t) == p.Hc
    assert p.Hm == max(ha, hc if hc is not None else ha)

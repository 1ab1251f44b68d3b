import random

import pytest

import oracles
from fhgv.codec import ConversionError, code_to_fh, fh_to_code, is_hopping_cyclic
from fhgv.correlation import set_profile
from fhgv.model import FHSequenceSet, HoppingCyclicCode, InvalidInput, canonical_rotation, orbit, seq


def words(*ws, q):
    return [seq(w, q) for w in ws]


def test_is_hopping_cyclic_examples():
    assert is_hopping_cyclic(words((0, 1), (1, 0), q=2)) == (True, None)
    ok, why = is_hopping_cyclic(words((0, 0), q=2))
    assert not ok and "period 1" in why
    ok, why = is_hopping_cyclic(words((0, 1, 2), q=3))
    assert not ok and "1 2 0" in why
    assert is_hopping_cyclic([]) == (True, None)


def test_fh_to_code_examples():
    C = fh_to_code(FHSequenceSet.of([(0, 1, 2)], q=3))
    assert set(C) == set(words((0, 1, 2), (1, 2, 0), (2, 0, 1), q=3))
    assert C.min_distance() == 3
    F = FHSequenceSet.of([(0, 0, 1)], q=2)
    C = fh_to_code(F)
    assert set(C) == set(words((0, 0, 1), (0, 1, 0), (1, 0, 0), q=2))
    assert C.min_distance() == 2 and set_profile(F).Hm == 1


def test_fh_to_code_rejections_carry_witness():
    with pytest.raises(ConversionError) as e:
        fh_to_code(FHSequenceSet.of([(0, 0, 1, 1), (0, 1, 0, 1)], q=2))
    assert e.value.witness == seq((0, 1, 0, 1), 2)
    with pytest.raises(ConversionError) as e:
        fh_to_code(FHSequenceSet.of([(0, 0, 1), (0, 1, 0)], q=2))
    assert set(e.value.witness) == set(words((0, 0, 1), (0, 1, 0), q=2))


def test_code_to_fh_examples():
    C = HoppingCyclicCode.of(words((0, 1, 2), (1, 2, 0), (2, 0, 1), q=3))
    assert code_to_fh(C).members == tuple(words((0, 1, 2), q=3))
    C = HoppingCyclicCode.of(list(orbit(seq((0, 0, 1), 2)) | orbit(seq((0, 1, 1), 2))))
    F = code_to_fh(C)
    assert F.members == tuple(words((0, 0, 1), (0, 1, 1), q=2)) and F.M == 6 // 3
    assert code_to_fh(words((0, 1), (1, 0), q=2)).members == tuple(words((0, 1), q=2))


def test_code_to_fh_rejects_invalid():
    with pytest.raises(ConversionError):
        code_to_fh(words((0, 1, 2), q=3))
    with pytest.raises(ConversionError):
        code_to_fh(HoppingCyclicCode(3, 2, ()))


def random_valid_set(rng, n, q, m):
    reps = {}
    for _ in range(500):
        if len(reps) == m:
            break
        w = seq([rng.randrange(q) for _ in range(n)], q)
        if oracles.self_distance(w.symbols) == 0:
            continue
        reps.setdefault(canonical_rotation(w), w)
    return FHSequenceSet.of(reps.values())


def test_roundtrip_and_parameter_map_random():
    rng = random.Random(7)
    for _ in range(150):
        n, q = rng.randint(3, 8), rng.choice((2, 3))
        F = random_valid_set(rng, n, q, rng.randint(1, 4))
        C = fh_to_code(F)
        assert is_hopping_cyclic(C.codewords)[0]
        assert len(C) == n * F.M
        assert oracles.min_distance([c.symbols for c in C]) == n - set_profile(F).Hm
        assert code_to_fh(C) == FHSequenceSet.of(canonical_rotation(u) for u in F)

import math

import pytest
from hypothesis import given, strategies as st

from snailcalc import euclid, projmat
from snailcalc.errors import ErrorCodes as EC
from snailcalc.errors import InvalidParameters, NotCoprime, NotPositive
from snailcalc.wordcalc import format_word, phi

positive = st.integers(min_value=1, max_value=500)


def coprime_pairs(limit):
    return [(n, p) for n in range(1, limit + 1) for p in range(1, limit + 1) if math.gcd(n, p) == 1]


def test_trace_78_21():
    t = euclid.euclid_trace(78, 21)
    assert t.coefficients == (3, 1, 2, 1)
    assert t.orders[-4:] == (4, 5, 14, 19)
    assert t.d == 3
    assert (t.orders[-1] + t.orders[-2]) * t.d == 99
    assert euclid.period_identity(t) == (33, True)


@pytest.mark.parametrize('q0,q1,coefficients', [
    [5, 5, ()],
    [10, 5, (1,)],
    [1, 7, (0, 6)],
    [7, 1, (6,)],
])
def test_trace_small(q0, q1, coefficients):
    t = euclid.euclid_trace(q0, q1)
    assert t.coefficients == coefficients
    assert t.d == math.gcd(q0, q1)
    assert t.rests[-1] == t.rests[-2] == t.d


@pytest.mark.parametrize('q0,q1', [
    [0, 3],
    [3, -1],
    [2.5, 3],
    [True, 2],
])
def test_trace_invalid(q0, q1):
    with pytest.raises(InvalidParameters) as info:
        euclid.euclid_trace(q0, q1)
    assert info.value.code == EC.invalid_parameters.code


def test_period_identity_random(rng):
    for _ in range(200):
        q0, q1 = rng.randint(1, 500), rng.randint(1, 500)
        period, holds = euclid.period_identity(euclid.euclid_trace(q0, q1))
        assert holds
        assert period == euclid.rotation_period(q0, q1)


@given(positive, positive)
def test_rests_decrease(q0, q1):
    t = euclid.euclid_trace(q0, q1)
    for q, a, rest, divisor in zip(t.rests, t.coefficients, t.rests[2:], t.rests[1:]):
        assert q == a * divisor + rest
        assert 0 < rest <= divisor


@pytest.mark.parametrize('n,p,alpha,beta', [
    [7, 26, (1, 1), (2, 3)],
    [8, 13, (0, 1, 1), (1, 1, 1)],
    [1, 1, (0,), (0,)],
    [2, 1, (1,), (0,)],
    [1, 2, (0,), (1,)],
])
def test_characteristic_sequences(n, p, alpha, beta):
    assert euclid.characteristic_sequences(n, p) == euclid.CharacteristicSequence(alpha, beta)


def test_decompose_7_26():
    w = euclid.decompose_to_word(7, 26)
    assert format_word(w) == 'B^3 A B^2 A'
    assert projmat.apply(phi(w), (1, 1)) == (7, 26)


@pytest.mark.parametrize('n,p', coprime_pairs(40))
def test_decomposition_round_trip(n, p):
    w = euclid.decompose_to_word(n, p)
    assert projmat.apply(phi(w), (1, 1)) == (n, p)
    seq = euclid.characteristic_sequences(n, p)
    assert all(seq.alpha[1:]) and all(seq.beta[:-1])
    assert euclid.index_correspondence(n, p)


def test_decompose_not_coprime():
    with pytest.raises(NotCoprime) as info:
        euclid.decompose_to_word(4, 6)
    assert info.value.code == EC.not_coprime.code


def test_unfold():
    path = euclid.unfold(3, 10)
    assert path[0] == (1, 1)
    assert path[-1] == (3, 10)
    assert len(path) == 1 + 5


@pytest.mark.parametrize('entries,word', [
    [(1, 2, 3, 7), 'B^3 A^2'],
    [(1, 0, 0, 1), 'Id'],
    [(2, 1, 1, 1), 'A B'],
    [(-1, -2, -3, -7), 'B^3 A^2'],
])
def test_factor_positive_matrix(entries, word):
    w = euclid.factor_positive_matrix(projmat.make(*entries))
    assert format_word(w) == word


@pytest.mark.parametrize('entries', [
    (0, 1, -1, 0),
    (1, -1, 0, 1),
    (1, 0, 0, -1),
])
def test_factor_not_positive(entries):
    with pytest.raises(NotPositive) as info:
        euclid.factor_positive_matrix(projmat.make(*entries))
    assert info.value.code == EC.not_positive.code


@given(st.lists(st.sampled_from('AB'), min_size=1, max_size=20))
def test_factor_inverts_phi(letters):
    m = projmat.product(projmat.generator(x) for x in letters)
    assert phi(euclid.factor_positive_matrix(m)) == m


def test_trace_schema():
    js = euclid.EuclidTraceSchema().dump(euclid.euclid_trace(78, 21))
    assert js['d'] == 3
    assert js['coefficients'] == [3, 1, 2, 1]

import math

import pytest
from hypothesis import given, strategies as st

from snailcalc import projmat
from snailcalc.errors import ErrorCodes as EC
from snailcalc.errors import DeterminantInvalid, NotHyperbolic

A, B, Z, Y = (projmat.generator(x) for x in 'ABZY')

generators = st.sampled_from(['A', 'B', 'Z', 'Y'])
matrices = st.lists(generators, max_size=12).map(lambda names: projmat.product(projmat.generator(n) for n in names))


@pytest.mark.parametrize('entries,expected', [
    [(1, 2, 3, 7), (1, 2, 3, 7)],
    [(-1, -2, -3, -7), (1, 2, 3, 7)],
    [(0, -1, 1, 0), (0, 1, -1, 0)],
    [(-1, 0, 0, 1), (1, 0, 0, -1)],
])
def test_sign_normalization(entries, expected):
    assert tuple(projmat.make(*entries)) == expected


@pytest.mark.parametrize('entries', [
    (2, 0, 0, 2),
    (0, 0, 0, 0),
    (1, 2, 3, 4),
])
def test_invalid_determinant(entries):
    with pytest.raises(DeterminantInvalid) as info:
        projmat.make(*entries)
    assert info.value.code == EC.determinant_invalid.code


def test_b3a2():
    m = projmat.mul(projmat.power(B, 3), projmat.power(A, 2))
    assert m == projmat.make(1, 2, 3, 7)
    assert projmat.trace_abs(m) == 8


@pytest.mark.parametrize('lhs,rhs', [
    [projmat.product([projmat.inverse(A), B, projmat.inverse(A)]), Z],
    [projmat.product([projmat.inverse(B), A, projmat.inverse(B)]), Z],
    [projmat.power(projmat.mul(A, projmat.inverse(B)), 3), projmat.IDENTITY],
    [projmat.mul(Z, Z), projmat.IDENTITY],
    [projmat.product([A, Z, A]), B],
    [projmat.product([B, Z, B]), A],
])
def test_relations(lhs, rhs):
    assert lhs == rhs


def test_generator_t_is_yz():
    assert projmat.generator('T') == projmat.mul(Y, Z)
    assert not projmat.generator('T').orientation_preserving


def test_unknown_generator():
    with pytest.raises(ValueError):
        projmat.generator('Q')


@given(matrices, st.integers(min_value=-6, max_value=6))
def test_power_inverse(m, k):
    assert projmat.mul(projmat.power(m, k), projmat.power(m, -k)) == projmat.IDENTITY


@given(matrices, matrices, matrices)
def test_associativity(m1, m2, m3):
    assert projmat.mul(projmat.mul(m1, m2), m3) == projmat.mul(m1, projmat.mul(m2, m3))


@given(matrices, matrices)
def test_mod2_is_multiplicative(m1, m2):
    assert projmat.reduce_mod2(projmat.mul(m1, m2)) == projmat.mul_mod2(
        projmat.reduce_mod2(m1), projmat.reduce_mod2(m2))


def test_golden_eigenvalue():
    m = projmat.mul(A, B)
    expected = (3 + math.sqrt(5)) / 2
    assert projmat.leading_eigenvalue(m) == pytest.approx(expected, rel=1e-9)
    assert projmat.entropy_lower_bound(m) == pytest.approx(math.log(expected), rel=1e-9)


@pytest.mark.parametrize('m', [
    projmat.IDENTITY,
    A,
    Z,
    projmat.mul(A, projmat.inverse(B)),
    Y,
    projmat.mul(Y, projmat.mul(A, B)),
])
def test_not_hyperbolic(m):
    with pytest.raises(NotHyperbolic) as info:
        projmat.leading_eigenvalue(m)
    assert info.value.code == EC.not_hyperbolic.code


def test_huge_trace_entropy():
    m = projmat.power(projmat.mul(A, B), 2000)
    assert projmat.entropy_lower_bound(m) == pytest.approx(2000 * math.log((3 + math.sqrt(5)) / 2), rel=1e-9)


@pytest.mark.parametrize('word,images', [
    ['A', (2, 1, 3)],
    ['BA', (2, 3, 1)],
    ['ABA', (3, 2, 1)],
    ['BABA', (3, 1, 2)],
    ['ABABA', (1, 3, 2)],
    ['BABABA', (1, 2, 3)],
])
def test_permutation_table(word, images):
    row = [r for r in projmat.permutation_table() if r.word == word][0]
    assert row.permutation.images == images


def test_permutation_table_order():
    rows = projmat.permutation_table()
    assert [r.word for r in rows] == ['A', 'BA', 'ABA', 'BABA', 'ABABA', 'BABABA']
    assert rows[-1].permutation.is_identity
    assert str(rows[0].permutation) == '(1;2;3) -> (2;1;3)'


def test_apply():
    assert projmat.apply(A, (1, 1)) == (2, 1)
    assert projmat.apply(Z, (1, 1)) == (1, -1)


def test_matrix_json_large_entries():
    m = projmat.power(projmat.mul(A, B), 60)
    js = projmat.matrix_json(m)
    assert isinstance(js['a'], str)
    assert int(js['a']) == m.a
    assert js['det'] == 1


positive_words = st.lists(st.sampled_from(['A', 'B']), max_size=10).map(lambda names: ['A', 'B'] + names)
hyperbolic = positive_words.map(lambda names: projmat.product(projmat.generator(n) for n in names))


@given(matrices)
def test_cayley_hamilton(m):
    a, b, c, d = m
    t = a + d
    square = (a * a + b * c, a * b + b * d, c * a + d * c, c * b + d * d)
    assert tuple(s - t * x for s, x in zip(square, (a, b, c, d))) == (-m.det, 0, 0, -m.det)


@given(matrices, matrices)
def test_trace_is_conjugation_invariant(m, p):
    conjugate = projmat.product([p, m, projmat.inverse(p)])
    assert projmat.trace_abs(conjugate) == projmat.trace_abs(m)


@given(hyperbolic)
def test_eigenvalue_satisfies_trace(m):
    lam = projmat.leading_eigenvalue(m)
    assert lam + 1 / lam == pytest.approx(projmat.trace_abs(m), rel=1e-12)


def test_b3a2_eigenvalue():
    m = projmat.mul(projmat.power(B, 3), projmat.power(A, 2))
    assert projmat.leading_eigenvalue(m) == pytest.approx(4 + math.sqrt(15), rel=1e-12)
    assert projmat.entropy_lower_bound(m) == pytest.approx(2.0634370689, rel=1e-9)


def test_huge_trace_eigenvalue():
    golden = (3 + math.sqrt(5)) / 2
    m = projmat.power(projmat.mul(A, B), 400)
    assert projmat.trace_abs(m).bit_length() > 512
    assert projmat.leading_eigenvalue(m) == pytest.approx(golden ** 400, rel=1e-9)
    assert projmat.leading_eigenvalue(projmat.power(projmat.mul(A, B), 2000)) == float('inf')

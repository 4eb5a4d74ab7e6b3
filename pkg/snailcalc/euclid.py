"""
Euclidean algorithm variants and the decomposition of coprime pairs.

The division used here keeps remainders in ``(0, q]`` instead of ``[0, q)``:
``q_i = a_i q_{i+1} + q_{i+2}`` with ``0 < q_{i+2} <= q_{i+1}``, stopping when the last two
rests are equal, at the gcd. An exact multiple ``q_0 = k q_1`` therefore gives ``a_0 = k - 1``.

Usage examples
--------------

.. code-block:: python
   :caption: Rests, coefficients and orders.

    >>> from snailcalc import euclid
    >>> t = euclid.euclid_trace(78, 21)
    >>> t.coefficients, t.orders, t.d
    ((3, 1, 2, 1), (1, 1, 4, 5, 14, 19), 3)
    >>> euclid.period_identity(t)
    (33, True)

.. code-block:: python
   :caption: Decompose a coprime pair as a word acting on (1, 1).

    >>> str(euclid.decompose_to_word(7, 26))
    'B^3 A B^2 A'
"""
import logging
import math
from collections import namedtuple

from marshmallow import Schema, fields

from . import projmat
from ._util import SafeInteger
from .errors import InvalidParameters, NotCoprime, NotPositive
from .wordcalc import Word, phi

logger = logging.getLogger(__name__)


class EuclidTrace(namedtuple('EuclidTrace', ['rests', 'coefficients', 'orders', 'd'])):
    """
    Record of a run of the Euclidean algorithm.

    :ivar tuple[int] rests: ``q_0 ... q_{K+2}``. The last two are both the gcd.
    :ivar tuple[int] coefficients: ``a_0 ... a_K``. Empty when ``q_0 = q_1``.
    :ivar tuple[int] orders: ``u_0 ... u_{K+2}`` with ``u_0 = u_1 = 1``.
    :ivar int d: The gcd.
    """
    __slots__ = ()

    @property
    def padded_coefficients(self):
        """
        Coefficients padded with a trailing 0 to an even length of at least 2.
        """
        padded = list(self.coefficients)
        if len(padded) % 2 or not padded:
            padded.append(0)
        if len(padded) % 2:
            padded.append(0)
        return tuple(padded)


def _require_positive(*values):
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidParameters('expected positive integers, got {}'.format(values))


def euclid_trace(q0, q1):
    """
    :rtype: EuclidTrace
    :raises InvalidParameters: Unless both arguments are positive integers.
    """
    _require_positive(q0, q1)
    rests = [q0, q1]
    coefficients = []
    while rests[-2] != rests[-1]:
        q, divisor = rests[-2], rests[-1]
        a = (q - 1) // divisor
        coefficients.append(a)
        rests.append(q - a * divisor)
        logger.debug('%s = %s x %s + %s', q, a, divisor, rests[-1])
    orders = [1, 1]
    for a in coefficients:
        orders.append(a * orders[-1] + orders[-2])
    d = rests[-1]
    assert d == math.gcd(q0, q1)
    return EuclidTrace(tuple(rests), tuple(coefficients), tuple(orders), d)


def period_identity(t):
    """
    Period ``(q_0 + q_1) / d`` of the rotation by ``q_0`` modulo ``q_0 + q_1``, and whether it
    equals the sum of the last two orders.

    :rtype: tuple[int, bool]
    """
    total = t.rests[0] + t.rests[1]
    return total // t.d, (t.orders[-1] + t.orders[-2]) * t.d == total


def rotation_period(q0, q1):
    """
    Period of ``x -> x + q0 (mod q0 + q1)`` from 0, by iterating the rotation.
    """
    _require_positive(q0, q1)
    modulus = q0 + q1
    x, count = q0 % modulus, 1
    while x:
        x = (x + q0) % modulus
        count += 1
    return count


class CharacteristicSequence(namedtuple('CharacteristicSequence', ['alpha', 'beta'])):
    """
    Exponents of ``(n, p) = B^beta_N A^alpha_N ... B^beta_1 A^alpha_1 (1, 1)``.

    :ivar tuple[int] alpha: ``alpha_1 ... alpha_N``. Only ``alpha_1`` may be 0.
    :ivar tuple[int] beta: ``beta_1 ... beta_N``. Only ``beta_N`` may be 0.
    """
    __slots__ = ()

    @property
    def N(self):
        return len(self.alpha)


def _require_coprime(n, p):
    _require_positive(n, p)
    if math.gcd(n, p) != 1:
        raise NotCoprime('gcd({}, {}) = {}'.format(n, p, math.gcd(n, p)))


def characteristic_sequences(n, p):
    """
    :rtype: CharacteristicSequence
    :raises NotCoprime: If ``gcd(n, p) > 1``.
    :raises InvalidParameters: Unless both arguments are positive integers.
    """
    _require_coprime(n, p)
    runs = []
    while (n, p) != (1, 1):
        if p > n:
            k = (p - 1) // n
            p -= k * n
            runs.append(('B', k))
        else:
            k = (n - 1) // p
            n -= k * p
            runs.append(('A', k))
    exponents = [k for _, k in runs]
    if not runs or runs[0][0] == 'A':
        exponents.insert(0, 0)
    if len(exponents) % 2:
        exponents.append(0)
    # exponents = [beta_N, alpha_N, ..., beta_1, alpha_1]
    beta = tuple(reversed(exponents[0::2]))
    alpha = tuple(reversed(exponents[1::2]))
    return CharacteristicSequence(alpha, beta)


def decompose_to_word(n, p):
    """
    The positive word ``B^beta_N A^alpha_N ... B^beta_1 A^alpha_1`` sending ``(1, 1)`` to ``(n, p)``.

    :rtype: snailcalc.wordcalc.Word
    :raises NotCoprime: If ``gcd(n, p) > 1``.
    """
    seq = characteristic_sequences(n, p)
    pairs = []
    for i in reversed(range(seq.N)):
        pairs.extend([('B', seq.beta[i]), ('A', seq.alpha[i])])
    return Word.of(pairs)


def index_correspondence(n, p):
    """
    Whether the padded coefficients of ``euclid_trace(p, n)`` read ``beta_N, alpha_N, ..., beta_1, alpha_1``.
    """
    seq = characteristic_sequences(n, p)
    expected = []
    for i in reversed(range(seq.N)):
        expected.extend([seq.beta[i], seq.alpha[i]])
    return euclid_trace(p, n).padded_coefficients == tuple(expected)


def unfold(n, p):
    """
    Parameters visited from ``(1, 1)`` to ``(n, p)``, applying the letters of
    :func:`decompose_to_word` one at a time from the right.

    :rtype: list[tuple[int, int]]
    """
    path = [(1, 1)]
    for gen, exp in reversed(decompose_to_word(n, p).powers):
        m = projmat.generator(gen)
        for _ in range(exp):
            path.append(projmat.apply(m, path[-1]))
    return path


def factor_positive_matrix(m):
    """
    Factor a matrix with nonnegative entries and determinant 1 into positive powers of ``A`` and ``B``.

    Whichever row dominates the other is reduced by it, which peels an ``A`` (top row) or ``B``
    (bottom row) off the left.

    :rtype: snailcalc.wordcalc.Word
    :raises NotPositive: If no representative of ``m`` has nonnegative entries and determinant 1.
    """
    a, b, c, d = m
    if m.det != 1 or min(a, b, c, d) < 0:
        raise NotPositive('{} is not a positive matrix'.format(m))
    pairs = []
    while (a, b, c, d) != (1, 0, 0, 1):
        if a >= c and b >= d:
            k = min(x // y for x, y in ((a, c), (b, d)) if y)
            a, b = a - k * c, b - k * d
            pairs.append(('A', k))
        elif c >= a and d >= b:
            k = min(x // y for x, y in ((c, a), (d, b)) if y)
            c, d = c - k * a, d - k * b
            pairs.append(('B', k))
        else:
            raise NotPositive('{} is not a positive matrix'.format(m))
    w = Word.of(pairs)
    assert phi(w) == m
    return w


class EuclidTraceSchema(Schema):
    rests = fields.List(SafeInteger())
    coefficients = fields.List(SafeInteger())
    orders = fields.List(SafeInteger())
    d = SafeInteger()


class CharacteristicSequenceSchema(Schema):
    alpha = fields.List(SafeInteger())
    beta = fields.List(SafeInteger())

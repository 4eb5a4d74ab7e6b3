"""
Exact projective 2x2 integer matrices.

A mapping class of the plane with three marked points ``p1 < p2 < p3`` on a horizontal axis
is represented by its turbulence matrix: an integer matrix of determinant +1 or -1,
identified with its negation.
Entries are Python integers, so traces that grow exponentially with word length stay exact.

Usage examples
--------------

.. code-block:: python
   :caption: Multiply generators and read off the trace.

    >>> from snailcalc import projmat
    >>> B, A = projmat.generator('B'), projmat.generator('A')
    >>> m = projmat.mul(projmat.power(B, 3), projmat.power(A, 2))
    >>> m
    ProjectiveMatrix(a=1, b=2, c=3, d=7)
    >>> projmat.trace_abs(m)
    8
    >>> round(projmat.leading_eigenvalue(m), 6)
    7.872983

.. code-block:: python
   :caption: Permutation of the marked points.

    >>> projmat.induced_permutation(projmat.reduce_mod2(A))
    MarkedPermutation(images=(2, 1, 3))
"""
import logging
import math
from collections import namedtuple

from marshmallow import Schema, fields

from ._util import SafeInteger, safe_int
from .errors import DeterminantInvalid, NotHyperbolic

logger = logging.getLogger(__name__)

#: Above this trace ``ln(lambda)`` equals ``ln(trace)`` to float precision.
_FLOAT_SAFE_TRACE = 2 ** 500


class ProjectiveMatrix(namedtuple('ProjectiveMatrix', ['a', 'b', 'c', 'd'])):
    """
    An integer matrix ``[[a, b], [c, d]]`` of determinant +1 or -1, up to sign.

    Construction stores the sign-normalized representative:
    the trace is positive, or the trace is 0 and the first nonzero of ``(a, b, c)`` is positive.
    Two instances are therefore equal exactly when they are equal projectively.

    :ivar int a: Top left entry.
    :ivar int b: Top right entry.
    :ivar int c: Bottom left entry.
    :ivar int d: Bottom right entry.
    :raises DeterminantInvalid: If the determinant is not +1 or -1.
    """
    __slots__ = ()

    def __new__(cls, a, b, c, d):
        a, b, c, d = int(a), int(b), int(c), int(d)
        det = a * d - b * c
        if det not in (1, -1):
            raise DeterminantInvalid('[[{}, {}], [{}, {}]] has determinant {}'.format(a, b, c, d, det))
        trace = a + d
        if trace < 0 or (trace == 0 and _first_nonzero(a, b, c) < 0):
            a, b, c, d = -a, -b, -c, -d
        return super(ProjectiveMatrix, cls).__new__(cls, a, b, c, d)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    @property
    def orientation_preserving(self):
        return self.det == 1

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self):
        return '[[{}, {}], [{}, {}]]'.format(self.a, self.b, self.c, self.d)


def _first_nonzero(*values):
    for v in values:
        if v:
            return v
    return 0


def make(a, b, c, d):
    """
    :rtype: ProjectiveMatrix
    :raises DeterminantInvalid: If ``ad - bc`` is not +1 or -1.
    """
    return ProjectiveMatrix(a, b, c, d)


IDENTITY = ProjectiveMatrix(1, 0, 0, 1)

_GENERATORS = {
    'A': ProjectiveMatrix(1, 1, 0, 1),
    'B': ProjectiveMatrix(1, 0, 1, 1),
    'Z': ProjectiveMatrix(0, 1, -1, 0),
    'Y': ProjectiveMatrix(-1, 0, 0, 1),
}


def mul(m1, m2):
    """
    Exact product ``m1 . m2``.

    :rtype: ProjectiveMatrix
    """
    return ProjectiveMatrix(
        m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d)


def inverse(m):
    """
    Inverse through the adjugate, divided by the determinant.

    :rtype: ProjectiveMatrix
    """
    det = m.det
    return ProjectiveMatrix(m.d * det, -m.b * det, -m.c * det, m.a * det)


def power(m, k):
    """
    ``m`` to the integer power ``k``, by repeated squaring.
    """
    if k < 0:
        m, k = inverse(m), -k
    result = IDENTITY
    while k:
        if k & 1:
            result = mul(result, m)
        m = mul(m, m)
        k >>= 1
    return result


def product(matrices):
    result = IDENTITY
    for m in matrices:
        result = mul(result, m)
    return result


def generator(name):
    """
    The matrix of a named generator.

    ``A`` and ``B`` move the middle point over its left and right neighbour,
    ``Z`` is the half turn of the whole axis, ``Y`` the reflection across the horizontal axis,
    and ``T = Y.Z`` the reflection across the vertical line through the middle point.

    :param name: One of ``A``, ``B``, ``Z``, ``Y``, ``T``.
    :rtype: ProjectiveMatrix
    """
    if name == 'T':
        return mul(_GENERATORS['Y'], _GENERATORS['Z'])
    try:
        return _GENERATORS[name]
    except KeyError:
        raise ValueError('Unknown generator {!r}'.format(name))


def apply(m, vector):
    """
    Matrix-vector product on a pair ``(n, p)``, with no sign normalization.
    """
    n, p = vector
    return m.a * n + m.b * p, m.c * n + m.d * p


def trace_abs(m):
    return abs(m.a + m.d)


def nielsen_lower_bound(m):
    """
    Lower bound on the number of Nielsen classes of fixed points: the absolute trace.
    """
    return trace_abs(m)


def leading_eigenvalue(m):
    """
    The eigenvalue ``(Tr + sqrt(Tr^2 - 4)) / 2`` of a hyperbolic orientation preserving class.

    Computed as ``h + sqrt(h - 1) * sqrt(h + 1)`` with ``h = Tr / 2``, so no square is formed.
    Traces beyond the float range give ``inf``.

    :rtype: float
    :raises NotHyperbolic: If ``|trace| < 3`` or the determinant is -1.
    """
    t = trace_abs(m)
    if t < 3 or m.det != 1:
        raise NotHyperbolic('trace {} and determinant {}'.format(t, m.det))
    try:
        h = t / 2.0
    except OverflowError:
        return float('inf')
    return h + math.sqrt(h - 1) * math.sqrt(h + 1)


def entropy_lower_bound(m):
    """
    ``ln`` of :func:`leading_eigenvalue`, a lower bound on topological entropy.

    :raises NotHyperbolic: As :func:`leading_eigenvalue`.
    """
    t = trace_abs(m)
    if t > _FLOAT_SAFE_TRACE and m.det == 1:
        # ln(lambda) = ln(t) - O(1/t^2)
        return math.log(t)
    return math.log(leading_eigenvalue(m))


class Mod2Matrix(namedtuple('Mod2Matrix', ['a', 'b', 'c', 'd'])):
    """
    Reduction of a turbulence matrix modulo 2. Entries are 0 or 1.
    """
    __slots__ = ()

    def __str__(self):
        return '[[{}, {}], [{}, {}]] mod 2'.format(self.a, self.b, self.c, self.d)


MOD2_IDENTITY = Mod2Matrix(1, 0, 0, 1)


def reduce_mod2(m):
    """
    :rtype: Mod2Matrix
    """
    return Mod2Matrix(m.a % 2, m.b % 2, m.c % 2, m.d % 2)


def mul_mod2(m1, m2):
    return Mod2Matrix(
        (m1.a * m2.a + m1.b * m2.c) % 2, (m1.a * m2.b + m1.b * m2.d) % 2,
        (m1.c * m2.a + m1.d * m2.c) % 2, (m1.c * m2.b + m1.d * m2.d) % 2)


def mod2_equal(m1, m2):
    return reduce_mod2(m1) == reduce_mod2(m2)


class MarkedPermutation(namedtuple('MarkedPermutation', ['images'])):
    """
    A permutation of the marked points.

    :ivar tuple[int] images: ``images[i - 1]`` is the index of the image of ``p_i``.
    """
    __slots__ = ()

    def __str__(self):
        return '(1;2;3) -> ({})'.format(';'.join(str(i) for i in self.images))

    @property
    def is_identity(self):
        return self.images == (1, 2, 3)


#: Nonzero vectors of the mod 2 plane attached to p1, p2, p3.
_MARKED_VECTORS = ((1, 0), (1, 1), (0, 1))


def induced_permutation(m2):
    """
    Permutation of ``{p1, p2, p3}`` induced by a mod 2 matrix.

    Each marked point is sent to the point whose vector is the row vector ``v . m2``.

    :rtype: MarkedPermutation
    """
    images = []
    for x, y in _MARKED_VECTORS:
        image = ((x * m2.a + y * m2.c) % 2, (x * m2.b + y * m2.d) % 2)
        images.append(_MARKED_VECTORS.index(image) + 1)
    return MarkedPermutation(tuple(images))


class PermutationRow(namedtuple('PermutationRow', ['word', 'permutation', 'short_word', 'z_form'])):
    """
    One row of the table of induced permutations.

    :ivar word: Alternating word in ``A`` and ``B``.
    :ivar MarkedPermutation permutation: Its induced permutation.
    :ivar short_word: A shorter alternating word with the same reduction mod 2.
    :ivar z_form: A word in ``A`` and ``Z`` with the same reduction mod 2.
    """


_TABLE = [
    ('A', 'BABAB', 'A'),
    ('BA', 'ABAB', 'AZ'),
    ('ABA', 'BAB', 'Z'),
    ('BABA', 'AB', 'ZA'),
    ('ABABA', 'B', 'ZAZ'),
    ('BABABA', 'Id', 'Id'),
]


def _letters_matrix(text):
    if text == 'Id':
        return IDENTITY
    return product(generator(letter) for letter in text)


def permutation_table():
    """
    The six classes of induced permutations, obtained by alternately applying ``A`` and ``B``.

    The three word columns of a row agree modulo 2, not as matrices.

    :rtype: list[PermutationRow]
    """
    rows = []
    for word, short_word, z_form in _TABLE:
        m = _letters_matrix(word)
        assert mod2_equal(m, _letters_matrix(short_word)) and mod2_equal(m, _letters_matrix(z_form))
        rows.append(PermutationRow(word, induced_permutation(reduce_mod2(m)), short_word, z_form))
    return rows


class ProjectiveMatrixSchema(Schema):
    a = SafeInteger(required=True)
    b = SafeInteger(required=True)
    c = SafeInteger(required=True)
    d = SafeInteger(required=True)
    det = fields.Integer(dump_only=True)
    trace_abs = fields.Method('get_trace_abs', dump_only=True)

    def get_trace_abs(self, m):
        return safe_int(trace_abs(m))


def matrix_json(m):
    return ProjectiveMatrixSchema().dump(m)

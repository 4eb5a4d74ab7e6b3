"""
Words in the generators of the mapping class group, and their normal forms.

A word is a product of powers of ``A`` and ``B`` (the moves of the middle marked point over
its left and right neighbour), the half turn ``Z`` and the reflection ``Y``.
``T`` is accepted on input and expands to ``Y Z``.
Words are composed left to right, matching matrix multiplication through :func:`phi`.

Every word has exactly one canonical form ``Z^e . core . Z^e' . Y^s`` in which ``core`` is a
product of positive powers of ``A`` and ``B``. :func:`canonicalize` reaches it by sliding
``Y`` and ``Z`` to the right with the zip relations (``ZA = B^-1 Z`` and friends) and removing
mixed-sign digrams such as ``A^-1 B = Z A``.

Usage examples
--------------

.. code-block:: python
   :caption: Compose two classes and read back the canonical form.

    >>> from snailcalc import wordcalc
    >>> w = wordcalc.parse_word('B A^2 Z B A^3 Z')
    >>> c = wordcalc.canonicalize(w)
    >>> wordcalc.format_form(c)
    'B^2 A^2 Z'

.. code-block:: python
   :caption: Classify by trace.

    >>> cls = wordcalc.classify(wordcalc.parse_word('A^3 B^3 A B^4 A^3 B^2 A'))
    >>> cls.kind, cls.nielsen_bound
    ('Turbulent', 662)
    >>> wordcalc.format_word(wordcalc.conjugacy_reduce(wordcalc.parse_word('B^-1 A^3 B^3 A B^4 A^3 B^2 A')))
    'A B'

.. code-block:: python
   :caption: Linking numbers of a pure braid-like class.

    >>> wordcalc.linking_numbers(wordcalc.parse_word('B A B A B A^2 B A B^5 A B^3 A^2'))
    (-2, 2)
"""
import logging
import math
import re
from collections import deque, namedtuple
from fractions import Fraction

from marshmallow import Schema, fields

from . import projmat
from ._util import DEFAULT_SETTINGS, safe_int
from .errors import (InvalidParameters, NotPurePermutationTrivial,
                     OrientationReversing, RewriteFuelExceeded, WordSyntaxError)

logger = logging.getLogger(__name__)

#: Generators that are involutions, always carried with exponent 1.
INVOLUTIONS = ('Z', 'Y')


class Power(namedtuple('Power', ['gen', 'exp'])):
    """
    A generator raised to a nonzero integer power.

    :ivar gen: One of ``A``, ``B``, ``Z``, ``Y``.
    :ivar int exp: Exponent. Always 1 for ``Z`` and ``Y``.
    """
    __slots__ = ()

    def __str__(self):
        if self.exp == 1:
            return self.gen
        return '{}^{}'.format(self.gen, self.exp)


def _push(stack, gen, exp):
    """
    Append ``gen^exp`` to a list of powers, merging or cancelling with its last entry.
    """
    if gen in INVOLUTIONS:
        exp %= 2
    if not exp:
        return
    if stack and stack[-1].gen == gen:
        exp += stack.pop().exp
        if gen in INVOLUTIONS:
            exp %= 2
        if exp:
            stack.append(Power(gen, exp))
    else:
        stack.append(Power(gen, exp))


def free_reduce(pairs):
    stack = []
    for gen, exp in pairs:
        _push(stack, gen, exp)
    return tuple(stack)


class Word(namedtuple('Word', ['powers'])):
    """
    A freely reduced word: adjacent powers have distinct generators and no exponent is 0.

    Build one with :meth:`of`, which reduces its input.

    :ivar tuple[Power] powers: The powers, in composition order.
    """
    __slots__ = ()

    @classmethod
    def of(cls, pairs=()):
        return cls(free_reduce(pairs))

    @property
    def letter_count(self):
        return sum(abs(p.exp) for p in self.powers)

    @property
    def is_empty(self):
        return not self.powers

    def letters(self):
        """
        The word spelled one letter at a time, negative powers as lower case.
        """
        out = []
        for gen, exp in self.powers:
            out.extend([gen if exp > 0 else gen.lower()] * abs(exp))
        return out

    def __str__(self):
        return format_word(self)


IDENTITY_WORD = Word(())

_TOKEN = re.compile(r'Id|[ABZYT]')
_EXPONENT = re.compile(r'\^(-?)(\d+)')


def _byte_offset(text, index):
    return len(text[:index].encode('utf-8'))


def parse_word(text):
    """
    Parse the word grammar::

        word  := item*
        item  := gen power? | "Id"
        gen   := "A" | "B" | "Z" | "Y" | "T"
        power := "^" ["-"] digits

    Items are separated by whitespace or ``*``, or simply juxtaposed.

    :rtype: Word
    :raises WordSyntaxError: On any other character, with its byte offset.
    """
    pairs = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace() or ch == '*':
            i += 1
            continue
        token = _TOKEN.match(text, i)
        if not token:
            raise WordSyntaxError('unexpected {!r}'.format(ch), _byte_offset(text, i))
        i = token.end()
        if token.group() == 'Id':
            continue
        exp = 1
        if i < n and text[i] == '^':
            power = _EXPONENT.match(text, i)
            if not power:
                raise WordSyntaxError('malformed exponent', _byte_offset(text, i + 1))
            exp = int(power.group(2)) * (-1 if power.group(1) else 1)
            i = power.end()
        gen = token.group()
        if gen == 'T':
            if exp % 2:
                pairs.extend([('Y', 1), ('Z', 1)])
        else:
            pairs.append((gen, exp))
    return Word.of(pairs)


def format_word(w):
    if w.is_empty:
        return 'Id'
    return ' '.join(str(p) for p in w.powers)


def word_inverse(w):
    return Word.of((gen, -exp) for gen, exp in reversed(w.powers))


def word_concat(*words):
    return Word.of(p for w in words for p in w.powers)


def phi(w):
    """
    The turbulence matrix of a word: the product of its generator matrices in word order.

    :rtype: snailcalc.projmat.ProjectiveMatrix
    """
    return projmat.product(projmat.power(projmat.generator(gen), exp) for gen, exp in w.powers)


# Zip relations, as (left side, right side) word texts.
_ZIP_RELATIONS = [
    ('A T', 'T B'), ('A Y', 'Y A^-1'), ('A Z', 'Z B^-1'),
    ('T A', 'B T'), ('Y A', 'A^-1 Y'), ('Z A', 'B^-1 Z'),
    ('B T', 'T A'), ('B Y', 'Y B^-1'), ('B Z', 'Z A^-1'),
    ('T B', 'A T'), ('Y B', 'B^-1 Y'), ('Z B', 'A^-1 Z'),
    ('Z Y', 'Y Z'), ('Z^2', 'Id'), ('Y^2', 'Id'), ('T^2', 'Id'),
]

# Moving an involution one step right: flag . gen^k = gen'^(sign k) . flag
_MOVES = {
    ('Y', 'A'): ('A', -1),
    ('Y', 'B'): ('B', -1),
    ('Y', 'Z'): ('Z', 1),
    ('Z', 'A'): ('B', -1),
    ('Z', 'B'): ('A', -1),
}

# Mixed-sign digrams and their replacements, each introducing one Z.
_DIGRAMS = {
    ('A', -1, 'B', 1): (('Z', 1), ('A', 1)),
    ('A', 1, 'B', -1): (('B', 1), ('Z', 1)),
    ('B', -1, 'A', 1): (('Z', 1), ('B', 1)),
    ('B', 1, 'A', -1): (('A', 1), ('Z', 1)),
}


def zip_table():
    """
    The zip relations used by :func:`canonicalize`, as pairs of words.

    :rtype: list[tuple[Word, Word]]
    """
    return [(parse_word(lhs), parse_word(rhs)) for lhs, rhs in _ZIP_RELATIONS]


def _check_relations():
    for lhs, rhs in zip_table():
        assert phi(lhs) == phi(rhs), 'zip relation {} = {} fails'.format(lhs, rhs)
    for (flag, gen), (image, sign) in _MOVES.items():
        assert phi(Word.of([(flag, 1), (gen, 1)])) == phi(Word.of([(image, sign), (flag, 1)]))
    for (g1, s1, g2, s2), rhs in _DIGRAMS.items():
        assert phi(Word.of([(g1, s1), (g2, s2)])) == phi(Word.of(rhs))


_check_relations()


class CanonicalForm(namedtuple('CanonicalForm', ['pre_z', 'core', 'post_z', 'sigma'])):
    """
    The normal form ``Z^pre_z . core . Z^post_z . Y^sigma``.

    :ivar int pre_z: 0 or 1.
    :ivar tuple[Power] core: Alternating positive powers of ``A`` and ``B``.
    :ivar int post_z: 0 or 1. Always 0 when the core is empty.
    :ivar int sigma: 1 when the class reverses orientation.
    """
    __slots__ = ()

    def __str__(self):
        return format_form(self)


IDENTITY_FORM = CanonicalForm(0, (), 0, 0)


class _Fuel(object):
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self, what):
        self.used += 1
        if self.used > self.limit:
            raise RewriteFuelExceeded('gave up after {} steps at {}'.format(self.limit, what))


def _zip_right(powers, flag, fuel):
    """
    Slide every occurrence of ``flag`` to the right end. Returns the remaining powers and
    the parity of ``flag`` occurrences.
    """
    stack = []
    parity = 0
    for gen, exp in powers:
        if gen == flag:
            fuel.spend('zip {}'.format(flag))
            parity ^= 1
        elif parity and (flag, gen) in _MOVES:
            image, sign = _MOVES[(flag, gen)]
            _push(stack, image, sign * exp)
        else:
            _push(stack, gen, exp)
    return stack, parity


def _sign(x):
    return 1 if x > 0 else -1


def _first_sign_change(powers):
    for i in range(len(powers) - 1):
        if _sign(powers[i].exp) != _sign(powers[i + 1].exp):
            return i
    return None


def _eliminate_digram(powers, i):
    (g1, e1), (g2, e2) = powers[i], powers[i + 1]
    s1, s2 = _sign(e1), _sign(e2)
    rewritten = list(powers[:i])
    rewritten.append(Power(g1, e1 - s1))
    rewritten.extend(Power(*p) for p in _DIGRAMS[(g1, s1, g2, s2)])
    rewritten.append(Power(g2, e2 - s2))
    rewritten.extend(powers[i + 2:])
    return [p for p in rewritten if p.exp]


def canonicalize(w, fuel_factor=None):
    """
    The canonical form of a word.

    The rewriting runs in phases: ``Y`` is zipped to the right end, then ``Z``; then each
    leftmost mixed-sign digram is replaced through ``A^-1 B = Z A`` (and its three siblings)
    and the new ``Z`` zipped right; finally an all-negative core is made positive by inserting
    ``Z Z`` on the left and zipping one ``Z`` through.

    :param fuel_factor: Step budget per letter. Defaults to ``DEFAULT_SETTINGS.fuel_factor``; the
        command line passes its ``SNAILCALC_FUEL_FACTOR`` setting.
    :rtype: CanonicalForm
    :raises RewriteFuelExceeded: If the step budget ``fuel_factor * (letters + 4)`` runs out.
    """
    if fuel_factor is None:
        fuel_factor = DEFAULT_SETTINGS.fuel_factor
    fuel = _Fuel(fuel_factor * (w.letter_count + 4))

    powers, sigma = _zip_right(w.powers, 'Y', fuel)
    powers, post_z = _zip_right(powers, 'Z', fuel)
    logger.debug('zipped %s to %s Z^%s Y^%s', w, powers, post_z, sigma)

    i = _first_sign_change(powers)
    while i is not None:
        fuel.spend('digram {}{}'.format(powers[i], powers[i + 1]))
        powers, parity = _zip_right(_eliminate_digram(powers, i), 'Z', fuel)
        post_z ^= parity
        i = _first_sign_change(powers)

    pre_z = 0
    if powers and powers[0].exp < 0:
        fuel.spend('sign flip')
        powers, _ = _zip_right([Power('Z', 1)] + powers, 'Z', fuel)
        pre_z, post_z = 1, post_z ^ 1

    if not powers:
        pre_z, post_z = pre_z ^ post_z, 0
    result = CanonicalForm(pre_z, tuple(powers), post_z, sigma)
    logger.debug('canonical form of %s is %s after %s steps', w, result, fuel.used)
    return result


def render_form(c):
    """
    The word spelled by a canonical form.

    :rtype: Word
    """
    pairs = [('Z', 1)] * c.pre_z + list(c.core) + [('Z', 1)] * c.post_z + [('Y', 1)] * c.sigma
    return Word.of(pairs)


def format_form(c):
    return format_word(render_form(c))


def compose(c1, c2, fuel_factor=None):
    """
    Canonical form of ``c1`` followed by ``c2`` in word order, so ``phi`` of the result is
    ``phi(c1) . phi(c2)``.

    :param fuel_factor: As for :func:`canonicalize`.
    """
    return canonicalize(word_concat(render_form(c1), render_form(c2)), fuel_factor=fuel_factor)


def invert(c, fuel_factor=None):
    return canonicalize(word_inverse(render_form(c)), fuel_factor=fuel_factor)


class FiniteOrder2(namedtuple('FiniteOrder2', [])):
    """Trace 0: the class squares to the identity."""
    __slots__ = ()
    kind = 'FiniteOrder2'


class FiniteOrder3(namedtuple('FiniteOrder3', [])):
    """Trace 1: the class has order 3."""
    __slots__ = ()
    kind = 'FiniteOrder3'


class Parabolic(namedtuple('Parabolic', ['letter', 'power'])):
    """
    Trace 2: conjugate to a power of ``A`` or ``B``.

    :ivar letter: ``A`` or ``B``, or None for the identity.
    :ivar int power: The exponent, 0 for the identity.
    """
    __slots__ = ()
    kind = 'Parabolic'


class Turbulent(namedtuple('Turbulent', ['conjugacy_representative', 'lambda_', 'entropy', 'nielsen_bound'])):
    """
    Trace at least 3: conjugate to a positive word using both ``A`` and ``B``.

    :ivar Word conjugacy_representative: Output of :func:`conjugacy_reduce`.
    :ivar float lambda_: Leading eigenvalue of the turbulence matrix.
    :ivar float entropy: ``ln(lambda_)``, a lower bound on topological entropy.
    :ivar int nielsen_bound: ``|trace|``, a lower bound on the number of fixed point classes.
    """
    __slots__ = ()
    kind = 'Turbulent'


class ReversingHyperbolic(namedtuple('ReversingHyperbolic', ['conjugacy_representative', 'nielsen_bound'])):
    """
    Determinant -1 and trace at least 1: an orientation reversing class with two real
    eigenvalues ``(Tr +- sqrt(Tr^2 + 4)) / 2``, of infinite order.

    :ivar Word conjugacy_representative: Output of :func:`conjugacy_reduce`, ending in ``Y``.
    :ivar int nielsen_bound: ``|trace|``.
    """
    __slots__ = ()
    kind = 'ReversingHyperbolic'


def _least_rotation(seq):
    """
    Start index of the lexicographically least rotation of ``seq``, in linear time.
    """
    n = len(seq)
    i, j, k = 0, 1, 0
    while i < n and j < n and k < n:
        a, b = seq[(i + k) % n], seq[(j + k) % n]
        if a == b:
            k += 1
            continue
        if a > b:
            i += k + 1
        else:
            j += k + 1
        if i == j:
            j += 1
        k = 0
    return min(i, j) if n else 0


def _swap(gen):
    return 'B' if gen == 'A' else 'A'


def _cyclic_runs(runs):
    """
    Runs of a cyclic word, merged where neighbours share a letter, rotated to start on an
    ``A`` run.
    """
    merged = []
    for gen, exp in runs:
        if merged and merged[-1][0] == gen:
            merged[-1][1] += exp
        else:
            merged.append([gen, exp])
    if len(merged) > 1 and merged[0][0] == merged[-1][0]:
        merged[0][1] += merged.pop()[1]
    if merged and merged[0][0] != 'A':
        merged = merged[1:] + merged[:1]
    return merged


def _least_cyclic_word(runs):
    """
    Least rotation, letter by letter with ``A < B``, of a cyclic word of positive runs.

    A least rotation starts at the beginning of an ``A`` run, so rotations compare as the
    sequences of ``(-a, b)`` keys of their ``A^a B^b`` blocks.
    """
    runs = _cyclic_runs(runs)
    if len(runs) < 2:
        return [tuple(r) for r in runs]
    keys = [(-runs[i][1], runs[i + 1][1]) for i in range(0, len(runs), 2)]
    start = 2 * _least_rotation(keys)
    return [tuple(r) for r in runs[start:] + runs[:start]]


def _truncate(runs, length):
    out = []
    for gen, exp in runs:
        if length <= 0:
            break
        out.append((gen, min(exp, length)))
        length -= exp
    return out


def _peel(core):
    """
    Peel ``core . Z`` from both ends. Returns the remaining runs and the leftover ``Z``
    exponent.
    """
    runs = deque([gen, exp] for gen, exp in core)
    total = sum(exp for _, exp in runs)
    while total >= 2:
        first, last = runs[0], runs[-1]
        if first[0] == last[0]:
            # A w A Z ~ w B and B w B Z ~ w A
            gen = first[0]
            first[1] -= 1
            last[1] -= 1
            runs = [r for r in runs if r[1] > 0]
            if runs and runs[-1][0] == _swap(gen):
                runs[-1][1] += 1
            else:
                runs.append([_swap(gen), 1])
            return runs, 0
        # A w B Z ~ w Z, many letters at a time
        k = min(first[1], last[1])
        first[1] -= k
        last[1] -= k
        total -= 2 * k
        if not first[1]:
            runs.popleft()
        if not last[1]:
            runs.pop()
    return list(runs), 1


def conjugacy_reduce(w):
    """
    A representative of the conjugacy class of a word.

    The canonical form is conjugated by ``Z`` into ``core . Z^e . Y^s``.

    For orientation preserving words, while ``e = 1`` and the core has two letters or more,
    the end letters are peeled: ``A w A Z`` is conjugate to ``w B``, ``B w B Z`` to ``w A``,
    and ``A w B Z``, ``B w A Z`` to ``w Z``. Positive results are rotated to their
    lexicographically least rotation with ``A < B``.

    For orientation reversing words, ``core . Z Y`` is conjugate to the core rotated by one
    letter with that letter swapped between ``A`` and ``B``; the least such twisted rotation
    is kept. ``core . Y`` is returned as is.

    Work is linear in the number of powers of the canonical form, not in its exponents.

    :rtype: Word
    """
    c = canonicalize(w)
    e = c.pre_z ^ c.post_z
    if c.sigma:
        runs = list(c.core)
        if e and runs:
            length = sum(exp for _, exp in runs)
            doubled = runs + [(_swap(gen), exp) for gen, exp in runs]
            runs = _truncate(_least_cyclic_word(doubled), length)
        return Word.of(runs + [('Z', 1)] * e + [('Y', 1)])
    runs = list(c.core)
    if e:
        runs, e = _peel(runs)
    if not e:
        runs = _least_cyclic_word(runs)
    return Word.of([tuple(r) for r in runs] + [('Z', 1)] * e)


def render_core_letters(core):
    return [gen for gen, exp in core for _ in range(exp)]


def classify(w):
    """
    Trace classification of a word.

    Orientation reversing classes of trace 0 square to the identity and are
    :class:`FiniteOrder2`; the others are :class:`ReversingHyperbolic`.

    :rtype: FiniteOrder2 or FiniteOrder3 or Parabolic or Turbulent or ReversingHyperbolic
    """
    m = phi(w)
    t = projmat.trace_abs(m)
    if t == 0:
        return FiniteOrder2()
    if not m.orientation_preserving:
        return ReversingHyperbolic(conjugacy_reduce(w), t)
    if t == 1:
        return FiniteOrder3()
    rep = conjugacy_reduce(w)
    if t == 2:
        if rep.is_empty:
            return Parabolic(None, 0)
        return Parabolic(rep.powers[0].gen, rep.powers[0].exp)
    return Turbulent(rep, projmat.leading_eigenvalue(m), projmat.entropy_lower_bound(m), t)


def trace_class_json(cls):
    js = {'class': cls.kind}
    if isinstance(cls, Parabolic):
        js.update(letter=cls.letter, power=cls.power)
    elif isinstance(cls, Turbulent):
        js.update(representative=format_word(cls.conjugacy_representative), entropy=cls.entropy,
                  nielsen_bound=safe_int(cls.nielsen_bound))
        js['lambda'] = cls.lambda_ if math.isfinite(cls.lambda_) else None
    elif isinstance(cls, ReversingHyperbolic):
        js.update(representative=format_word(cls.conjugacy_representative),
                  nielsen_bound=safe_int(cls.nielsen_bound))
    return js


LEFT, RIGHT = 'Left', 'Right'
_DISPLACEMENTS = {LEFT: 'A', 'L': 'A', RIGHT: 'B', 'R': 'B'}


def turbulence_from_displacements(moves, orientation_preserving=True):
    """
    Turbulence matrix of a sequence of displacements of the middle point.

    Each move multiplies on the left: ``A`` for a move to the left, ``B`` to the right.
    The product starts from the identity, or from ``Y`` for an orientation reversing map.

    :param moves: Sequence of ``'Left'``/``'Right'`` (or ``'L'``/``'R'``).
    :rtype: snailcalc.projmat.ProjectiveMatrix
    """
    moves = list(moves)
    if not moves and orientation_preserving:
        raise InvalidParameters('an orientation preserving displacement needs at least one move')
    m = projmat.IDENTITY if orientation_preserving else projmat.generator('Y')
    for move in moves:
        try:
            letter = _DISPLACEMENTS[move]
        except KeyError:
            raise InvalidParameters('unknown move {!r}'.format(move))
        m = projmat.mul(projmat.generator(letter), m)
    return m


class CirculationCode(namedtuple('CirculationCode', ['pre_z', 'turns', 'post_z'])):
    """
    Route of the middle point on the circulation graph.

    :ivar int pre_z: 1 for a leading ``Z`` flag.
    :ivar tuple turns: Sequence of ``l`` and ``r``.
    :ivar int post_z: 1 for a trailing ``Z`` flag. Always 0 without turns.
    """
    __slots__ = ()

    def __str__(self):
        return format_code(self)


_TURN_TO_GEN = {'l': 'A', 'r': 'B'}
_GEN_TO_TURN = {'A': 'l', 'B': 'r'}


def parse_code(text):
    """
    Parse an optional ``Z``, then ``l``/``r`` tokens, then an optional ``Z``.

    :rtype: CirculationCode
    :raises WordSyntaxError: On anything else.
    """
    tokens = [(m.start(), m.group()) for m in re.finditer(r'\S+', text)]
    pre_z = post_z = 0
    if tokens and tokens[0][1] == 'Z':
        pre_z = 1
        tokens = tokens[1:]
    if tokens and tokens[-1][1] == 'Z':
        post_z = 1
        tokens = tokens[:-1]
    turns = []
    for start, token in tokens:
        if token not in _TURN_TO_GEN:
            raise WordSyntaxError('unexpected code token {!r}'.format(token), _byte_offset(text, start))
        turns.append(token)
    if not turns:
        pre_z, post_z = pre_z ^ post_z, 0
    return CirculationCode(pre_z, tuple(turns), post_z)


def format_code(code):
    parts = ['Z'] * code.pre_z + list(code.turns) + ['Z'] * code.post_z
    return ' '.join(parts)


def code_to_word(code):
    """
    ``l`` reads as ``A``, ``r`` as ``B``; the flags as ``Z``.

    :rtype: Word
    """
    pairs = [('Z', 1)] * code.pre_z + [(_TURN_TO_GEN[t], 1) for t in code.turns] + [('Z', 1)] * code.post_z
    return Word.of(pairs)


def word_to_code(w):
    """
    :rtype: CirculationCode
    :raises OrientationReversing: If the canonical form of ``w`` contains ``Y``.
    """
    c = canonicalize(w)
    if c.sigma:
        raise OrientationReversing('{} has no circulation code'.format(w))
    turns = tuple(_GEN_TO_TURN[letter] for letter in render_core_letters(c.core))
    return CirculationCode(c.pre_z, turns, c.post_z)


def mod2_class(w):
    return projmat.induced_permutation(projmat.reduce_mod2(phi(w)))


def free_decomposition(w):
    """
    Factor a class fixing every marked point as a word in ``A^2`` and ``B^2``.

    The factors are found by a Euclidean descent on the first column of the matrix:
    left division by ``A^2k`` when ``|a| > |c|``, by ``B^2k`` otherwise, until ``c = 0``.

    :rtype: Word
    :raises NotPurePermutationTrivial: If the class permutes the marked points.
    :raises OrientationReversing: If the class reverses orientation.
    """
    m = phi(w)
    if projmat.reduce_mod2(m) != projmat.MOD2_IDENTITY:
        raise NotPurePermutationTrivial('{} induces {}'.format(w, mod2_class(w)))
    if not m.orientation_preserving:
        raise OrientationReversing('{} has determinant -1'.format(w))
    a, b, c, d = m
    pairs = []
    while c:
        if abs(a) > abs(c):
            k = round(Fraction(a, 2 * c))
            a, b = a - 2 * k * c, b - 2 * k * d
            pairs.append(('A', 2 * k))
        else:
            k = round(Fraction(c, 2 * a))
            c, d = c - 2 * k * a, d - 2 * k * b
            pairs.append(('B', 2 * k))
        logger.debug('free decomposition step: %s, remaining %s', pairs[-1], (a, b, c, d))
    pairs.append(('A', b * a))
    return Word.of(pairs)


def linking_numbers(w):
    """
    Linking numbers of the middle point with ``p1`` and ``p3``: the sums of the ``A`` and of
    the ``B`` exponents in :func:`free_decomposition`.

    :rtype: tuple[int, int]
    """
    decomposition = free_decomposition(w)
    n1 = sum(exp for gen, exp in decomposition.powers if gen == 'A')
    n2 = sum(exp for gen, exp in decomposition.powers if gen == 'B')
    return n1, n2


class CanonicalFormSchema(Schema):
    pre_z = fields.Integer(required=True)
    core = fields.Function(lambda c: format_word(Word(c.core)) if c.core else '')
    post_z = fields.Integer(required=True)
    sigma = fields.Integer(required=True)
    word = fields.Function(lambda c: format_form(c))

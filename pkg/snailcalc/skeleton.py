"""
Spinning skeletons: normal forms of curves drawn relative to marked points on an axis.

A curve is recorded as a :class:`CrossingSequence`: it starts at a marked point and is a chain
of half circles, each standing on the axis above (side +1) or below (side -1) it.
The marked points cut the axis into gaps.
Reduction removes every half circle that can be pushed across the axis without passing over a
marked point, until each remaining half circle separates the marked points:

* a point where the curve touches the axis and returns to the same side disappears;
* two consecutive crossings in the same gap cancel, merging the half circles around them;
* a first (or last) crossing in a gap next to the starting (or final) marked point slides away;
* a single half circle between neighbouring marked points is the segment, put on side +1.

Landings on marked points in mid-curve pin the curve; each stretch between them reduces alone.
Afterwards the crossings in each gap are put in the order that lets the half circles on either
side nest without crossing, as read from the reduced curve itself, and spread evenly.

Usage examples
--------------

.. code-block:: python
   :caption: Remove a back-and-forth excursion.

    >>> from fractions import Fraction as F
    >>> from snailcalc import skeleton
    >>> cs = skeleton.CrossingSequence([0, 1, 2], 0, [(1, F(5, 2)), (-1, F(11, 4)), (1, 1)])
    >>> skeleton.is_reduced(cs)
    False
    >>> skeleton.reduce(cs).excursions
    (Excursion(side=1, landing=Fraction(1, 1)),)
    >>> skeleton.recognize(skeleton.reduce(cs))
    Segment(gap=1)
"""
import bisect
import functools
import logging
from collections import namedtuple
from fractions import Fraction

from marshmallow import Schema, fields, post_load, validate

from ._util import Rational
from .errors import InvalidCrossingSequence, NotReduced

logger = logging.getLogger(__name__)


class Excursion(namedtuple('Excursion', ['side', 'landing'])):
    """
    One half circle of a curve.

    :ivar int side: +1 above the axis, -1 below.
    :ivar Fraction landing: Where the half circle comes back to the axis.
    """
    __slots__ = ()


class CrossingSequence(namedtuple('CrossingSequence', ['marked', 'start', 'excursions'])):
    """
    A curve relative to marked points on the axis.

    :ivar tuple[Fraction] marked: Marked points, strictly increasing. At least two.
    :ivar Fraction start: First point of the curve. A marked point.
    :ivar tuple[Excursion] excursions: Half circles in order. The last lands on a marked point.
    :raises InvalidCrossingSequence: If any of the above fails, or if the curve meets a point of
        the axis twice.
    """
    __slots__ = ()

    def __new__(cls, marked, start, excursions):
        try:
            marked = tuple(Fraction(x) for x in marked)
            start = Fraction(start)
            excursions = tuple(Excursion(int(side), Fraction(landing)) for side, landing in excursions)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise InvalidCrossingSequence(str(e))
        if len(marked) < 2 or any(a >= b for a, b in zip(marked, marked[1:])):
            raise InvalidCrossingSequence('marked points must be strictly increasing, at least two')
        if start not in marked:
            raise InvalidCrossingSequence('start {} is not a marked point'.format(start))
        if not excursions:
            raise InvalidCrossingSequence('no excursions')
        if any(e.side not in (1, -1) for e in excursions):
            raise InvalidCrossingSequence('sides must be +1 or -1')
        if excursions[-1].landing not in marked:
            raise InvalidCrossingSequence('final landing {} is not a marked point'.format(excursions[-1].landing))
        points = [start] + [e.landing for e in excursions]
        if len(set(points)) != len(points):
            raise InvalidCrossingSequence('the curve meets some point of the axis twice')
        return super(CrossingSequence, cls).__new__(cls, marked, start, excursions)

    @property
    def points(self):
        return [self.start] + [e.landing for e in self.excursions]

    @property
    def end(self):
        return self.excursions[-1].landing

    def arcs(self):
        """
        ``(left end, right end, side)`` of every half circle.
        """
        points = self.points
        return [(min(a, b), max(a, b), e.side) for a, b, e in zip(points, points[1:], self.excursions)]


def _gap(marked, x):
    """
    Index of the gap containing ``x``: the number of marked points below it.
    """
    return bisect.bisect_left(marked, x)


def stretches(cs):
    """
    Split a curve at its landings on marked points.

    :rtype: list[CrossingSequence]
    """
    out, start, current = [], cs.start, []
    for e in cs.excursions:
        current.append(e)
        if e.landing in cs.marked:
            out.append(CrossingSequence(cs.marked, start, current))
            start, current = e.landing, []
    return out


def _join(marked, parts):
    start = parts[0][0][0]
    excursions = []
    for points, sides in parts:
        excursions.extend(zip(sides, points[1:]))
    return CrossingSequence(marked, start, excursions)


def _spread(marked, by_gap):
    """
    Evenly spaced positions for the points of each gap, listed left to right.
    Points beyond the outermost marked points are spaced by 1.
    """
    position = {}
    for g, xs in by_gap.items():
        r = len(xs)
        for k, x in enumerate(xs, 1):
            if g == 0:
                position[x] = marked[0] - (r - k + 1)
            elif g == len(marked):
                position[x] = marked[-1] + k
            else:
                position[x] = marked[g - 1] + (marked[g] - marked[g - 1]) * Fraction(k, r + 1)
    return position


def _moved(cs, position):
    return CrossingSequence(
        cs.marked, cs.start, [(e.side, position.get(e.landing, e.landing)) for e in cs.excursions])


def normalize(cs):
    """
    Spread the crossing points evenly within each gap, keeping their order.
    Points beyond the outermost marked points are spaced by 1.

    :rtype: CrossingSequence
    """
    marked = cs.marked
    by_gap = {}
    for x in cs.points:
        if x not in marked:
            by_gap.setdefault(_gap(marked, x), []).append(x)
    for xs in by_gap.values():
        xs.sort()
    return _moved(cs, _spread(marked, by_gap))


def _strand_codes(marked, points):
    # Gap g is 2g, marked point k is 2k + 1, so codes follow the axis.
    return [2 * marked.index(x) + 1 if x in marked else 2 * _gap(marked, x) for x in points]


def _compare_strands(codes, sides, i, j):
    """
    Order of crossings ``i`` and ``j`` of one gap in a reduced curve, read from the curve alone.

    Both strands are followed in step along half circles on the same side until they land in
    different places. Half circles on one side do not cross, so strands that leave a gap
    towards the same side are nested: each step that lands both in one gap reverses the order.
    """
    di = 1
    dj = 1 if sides[j] == sides[i] else -1
    flips = 0
    while True:
        gap = codes[i]
        i, j = i + di, j + dj
        ci, cj = codes[i], codes[j]
        if ci == cj and not ci % 2:
            flips ^= 1
            continue
        if ci == cj:
            return 0
        if (ci < gap) == (cj < gap):
            before = ci > cj
        else:
            before = ci < cj
        return -1 if before != bool(flips) else 1


def _arrange(cs):
    """
    Place the crossings of a reduced curve so that half circles on each side nest, or, for a
    curve that cannot be drawn without self crossings, in a fixed order decided by its gaps
    and sides alone.
    """
    marked = cs.marked
    points = cs.points
    sides = [e.side for e in cs.excursions]
    codes = _strand_codes(marked, points)
    by_gap = {}
    for i in range(1, len(points) - 1):
        if points[i] not in marked:
            by_gap.setdefault(codes[i] // 2, []).append(i)
    order = functools.cmp_to_key(lambda i, j: _compare_strands(codes, sides, i, j))
    arranged = {}
    for g, indices in by_gap.items():
        arranged[g] = [points[i] for i in sorted(indices, key=order)]
    return _moved(cs, _spread(marked, arranged))


def _redexes(marked, points, sides):
    m = len(sides)
    gaps = [_gap(marked, x) for x in points]
    found = []
    for i in range(1, m):
        if sides[i - 1] == sides[i]:
            found.append(('touch', i))
    for i in range(1, m - 1):
        if gaps[i] == gaps[i + 1] and sides[i - 1] == sides[i + 1] == -sides[i]:
            found.append(('cancel', i))
    first_mark = marked.index(points[0])
    last_mark = marked.index(points[-1])
    if m >= 2 and gaps[1] in (first_mark, first_mark + 1):
        found.append(('first', 1))
    if m >= 2 and gaps[m - 1] in (last_mark, last_mark + 1):
        found.append(('last', m - 1))
    if m == 1 and abs(first_mark - last_mark) == 1 and sides[0] != 1:
        found.append(('segment', 0))
    return found


def _apply(points, sides, redex):
    kind, i = redex
    if kind == 'touch':
        del points[i]
        del sides[i]
    elif kind == 'cancel':
        del points[i:i + 2]
        del sides[i:i + 2]
    elif kind == 'first':
        del points[1]
        del sides[0]
    elif kind == 'last':
        del points[i]
        del sides[i]
    else:
        sides[0] = 1


def reduce(cs, rng=None):
    """
    The spinning skeleton of a curve.

    :param rng: A :class:`random.Random` to pick each reduction step at random.
        By default the leftmost applicable step is taken; the result is the same either way.
    :rtype: CrossingSequence
    """
    parts = []
    for stretch in stretches(cs):
        points = stretch.points
        sides = [e.side for e in stretch.excursions]
        while True:
            found = _redexes(cs.marked, points, sides)
            if not found:
                break
            redex = rng.choice(found) if rng else found[0]
            logger.debug('reduce %s at %s', redex, points)
            _apply(points, sides, redex)
        parts.append((points, sides))
    return _arrange(_join(cs.marked, parts))


def is_reduced(cs):
    return reduce(cs) == normalize(cs)


def gap_parities(cs):
    """
    For each gap, the parity of the number of half circles spanning it.
    Reduction leaves these unchanged.

    :rtype: tuple[int]
    """
    marked = cs.marked
    coords = sorted(set(cs.points) | set(marked))
    parities = []
    for g in range(len(marked) + 1):
        if g == 0:
            t = coords[0] - 1
        elif g == len(marked):
            t = coords[-1] + 1
        else:
            inside = [x for x in coords if marked[g - 1] <= x <= marked[g]]
            t = (inside[0] + inside[1]) / 2
        parities.append(sum(1 for lo, hi, _ in cs.arcs() if lo < t < hi) % 2)
    return tuple(parities)


def insert_trivial(cs, rng):
    """
    Insert a random excursion pair (or touch point) that reduction removes again.

    :rtype: CrossingSequence
    """
    marked = cs.marked
    points = cs.points
    coords = sorted(set(points) | set(marked))
    excursions = list(cs.excursions)

    def beside(x, direction):
        k = coords.index(x)
        neighbour = coords[k + direction] if 0 <= k + direction < len(coords) else x + direction
        return x + (neighbour - x) / 3, x + (neighbour - x) * 2 / 3

    interior = [i for i, e in enumerate(excursions[:-1]) if e.landing not in marked]
    kind = rng.choice(['zigzag', 'touch', 'start'] if interior else ['touch', 'start'])
    if kind == 'zigzag':
        i = rng.choice(interior)
        side, y = excursions[i]
        near, far = beside(y, rng.choice([-1, 1]))
        excursions[i + 1:i + 1] = [Excursion(-side, far), Excursion(side, near)]
        # The curve now continues from ``near``.
    elif kind == 'touch':
        i = rng.choice(range(len(excursions)))
        side, y = excursions[i]
        origin = points[i]
        t, _ = beside(origin, 1 if y > origin else -1)
        excursions[i:i] = [Excursion(side, t)]
    else:
        side = excursions[0].side
        u, _ = beside(cs.start, rng.choice([-1, 1]))
        excursions.insert(0, Excursion(-side, u))
    return CrossingSequence(marked, cs.start, excursions)


class Segment(namedtuple('Segment', ['gap'])):
    """
    The curve is the segment between neighbouring marked points.

    :ivar int gap: 1 for ``[p1, p2]``, 2 for ``[p2, p3]``, and so on.
    """
    __slots__ = ()
    kind = 'Segment'


class SimpleSnail(namedtuple('SimpleSnail', ['n', 'p', 'emerging_side'])):
    """
    The curve is a topological snail ``SN(n; p)``.

    :ivar int n: Least number of crossings with the bisector of ``[p1, p2]``.
    :ivar int p: Least number of crossings with the bisector of ``[p2, p3]``.
    :ivar int emerging_side: Side of the outermost half circle.
    """
    __slots__ = ()
    kind = 'SimpleSnail'


class Stretch(namedtuple('Stretch', ['start', 'end', 'gaps', 'sides'])):
    """
    :ivar start: Starting marked point.
    :ivar end: Final marked point.
    :ivar tuple[int] gaps: Gap of each crossing, in order. Gap 0 is left of every marked point.
    :ivar tuple[int] sides: Sides of the half circles, alternating.
    """
    __slots__ = ()


class General(namedtuple('General', ['stretches'])):
    """
    Any other skeleton, described stretch by stretch.

    :ivar tuple[Stretch] stretches: One per piece between landings on marked points.
    """
    __slots__ = ()
    kind = 'General'


class SnailPropsReport(namedtuple('SnailPropsReport', ['ok', 'violations'])):
    """
    :ivar bool ok: True when there are no violations.
    :ivar tuple[str] violations: Human readable descriptions.
    """
    __slots__ = ()


def _extremal_arc(cs):
    points = cs.points
    lo, hi = min(points), max(points)
    for left, right, side in cs.arcs():
        if (left, right) == (lo, hi):
            return side
    return None


def validate_snail_props(cs):
    """
    Check the shape constraints of a snail on three marked points:

    * one half circle joins the leftmost and rightmost points of the curve;
    * every half circle on the other side contains exactly one of ``p1`` and ``p3``;
    * every half circle on the same side contains ``p2``.

    A curve made of one half circle is only checked for the first property.

    :rtype: SnailPropsReport
    """
    violations = []
    if len(cs.marked) != 3:
        violations.append('expected 3 marked points, got {}'.format(len(cs.marked)))
        return SnailPropsReport(False, tuple(violations))
    if not is_reduced(cs):
        violations.append('curve is not reduced')
    p1, p2, p3 = cs.marked
    side = _extremal_arc(cs)
    if side is None:
        violations.append('no half circle joins the extreme points of the curve')
    elif len(cs.excursions) > 1:
        for k, (lo, hi, s) in enumerate(cs.arcs()):
            if s == side and not lo < p2 < hi:
                violations.append('half circle {} on the emerging side does not contain p2'.format(k))
            elif s != side and (lo < p1 < hi) == (lo < p3 < hi):
                violations.append('half circle {} on the sustaining side does not separate p1 xor p3'.format(k))
    return SnailPropsReport(not violations, tuple(violations))


def _bisector_gap(bisector):
    gaps = {'D1': 1, 'D2': 2, 1: 1, 2: 2}
    try:
        return gaps[bisector]
    except KeyError:
        raise ValueError('Unknown bisector {!r}'.format(bisector))


def min_intersections(cs, bisector):
    """
    Least number of half circles crossed by a vertical line through the given gap.

    :param bisector: ``'D1'`` (or 1) for the gap ``(p1, p2)``, ``'D2'`` (or 2) for ``(p2, p3)``.
    :rtype: int
    :raises NotReduced: If the curve is not reduced.
    """
    if not is_reduced(cs):
        raise NotReduced('minimal intersections need a reduced curve')
    g = _bisector_gap(bisector)
    lo, hi = cs.marked[g - 1], cs.marked[g]
    coords = sorted({x for x in cs.points if lo < x < hi} | {lo, hi})
    arcs = cs.arcs()
    return min(
        sum(1 for left, right, _ in arcs if left < t < right)
        for t in ((a + b) / 2 for a, b in zip(coords, coords[1:])))


def recognize(cs):
    """
    :rtype: Segment or SimpleSnail or General
    :raises NotReduced: If the curve is not reduced.
    """
    if not is_reduced(cs):
        raise NotReduced('only reduced curves can be recognized')
    marked = cs.marked
    parts = stretches(cs)
    if len(parts) == 1 and len(cs.excursions) == 1:
        i, j = sorted((marked.index(cs.start), marked.index(cs.end)))
        if j - i == 1:
            return Segment(j)
    if len(marked) == 3 and len(parts) == 1 and validate_snail_props(cs).ok:
        return SimpleSnail(min_intersections(cs, 1), min_intersections(cs, 2), _extremal_arc(cs))
    return General(tuple(
        Stretch(part.start, part.end,
                tuple(_gap(marked, e.landing) for e in part.excursions[:-1]),
                tuple(e.side for e in part.excursions))
        for part in parts))


class ExcursionSchema(Schema):
    side = fields.Integer(required=True, validate=validate.OneOf([1, -1]))
    landing = Rational(required=True)


class CrossingSequenceSchema(Schema):
    marked = fields.List(Rational(), required=True, data_key='X')
    start = Rational(required=True)
    excursions = fields.Nested(ExcursionSchema, many=True, required=True)

    @post_load
    def make_obj(self, js, **kwargs):
        return CrossingSequence(js['marked'], js['start'], [(e['side'], e['landing']) for e in js['excursions']])


def skeleton_class_json(cls):
    js = {'class': cls.kind}
    if isinstance(cls, Segment):
        js['gap'] = cls.gap
    elif isinstance(cls, SimpleSnail):
        js.update(n=cls.n, p=cls.p, emerging_side=cls.emerging_side)
    else:
        js['stretches'] = [{
            'start': str(s.start), 'end': str(s.end), 'gaps': list(s.gaps), 'sides': list(s.sides),
        } for s in cls.stretches]
    return js

"""
Topological snails: explicit half-circle models of the curves ``SN(n; p)``.

The marked points sit at ``z1 = -n/2``, ``z2 = (p - n)/2`` and ``z3 = p/2`` on the axis.
The snail is the union of three families of nested half circles:

* left sustaining arcs centered at ``z1``, below the axis;
* right sustaining arcs centered at ``z3``, below the axis;
* emerging arcs centered at ``z2``, above the axis.

Radius-0 members of a family are kept as markers of the curve's endpoints.
For coprime ``(n, p)`` the union is a single simple arc with ``n + p`` points on the axis;
otherwise it falls apart into several components.

A coprime snail is the union of a green sub-snail ``SN(g1; g2)`` and a red sub-snail
``SN(r1; r2)`` read from the columns of the turbulence matrix of its decomposition.
Walking from the green end, the first ``g1 + g2`` axis points are green and the rest red.

Usage examples
--------------

.. code-block:: python
   :caption: Build a snail and split its colours.

    >>> from snailcalc import snailgeom
    >>> s = snailgeom.build_snail(3, 4)
    >>> sorted({(str(a.center), str(a.radius)) for a in s.arcs if a.side == 1})
    [('1/2', '0'), ('1/2', '1'), ('1/2', '2'), ('1/2', '3')]
    >>> snailgeom.split_colors(8, 13)
    ColorSplit(green=(5, 8), red=(3, 5))
    >>> snailgeom.components(snailgeom.build_snail(2, 2))
    (False, 1)
"""
import logging
import math
from collections import namedtuple
from fractions import Fraction

from marshmallow import Schema, fields

from . import projmat
from ._util import DEFAULT_SETTINGS, Rational
from .errors import InvalidParameters, NotCoprime
from .euclid import decompose_to_word
from .skeleton import CrossingSequence
from .svg import SVG
from .wordcalc import phi

logger = logging.getLogger(__name__)

GREEN, RED = 'green', 'red'
UP, DOWN = 1, -1


class HalfCircle(namedtuple('HalfCircle', ['center', 'radius', 'side', 'color', 'split'])):
    """
    A half circle standing on the axis.

    :ivar Fraction center: Center on the axis.
    :ivar Fraction radius: Radius. 0 for an endpoint marker.
    :ivar int side: +1 above the axis, -1 below.
    :ivar color: ``'green'`` or ``'red'``; None for snails without a colour split.
        For the arc joining the two colours, the colour of its left half.
    :ivar bool split: True for the one arc joining the green and red parts.
    """
    __slots__ = ()

    @property
    def ends(self):
        return self.center - self.radius, self.center + self.radius

    @property
    def degenerate(self):
        return self.radius == 0


class Snail(namedtuple('Snail', [
        'n', 'p', 'marked', 'arcs', 'segment', 'green_end', 'red_end',
        'reflected', 'emerging_left_to_right'])):
    """
    The half-circle model of ``SN(n; p)``.

    :ivar int n: First parameter, nonnegative.
    :ivar int p: Second parameter, nonnegative.
    :ivar tuple[Fraction] marked: ``(z1, z2, z3)``.
    :ivar tuple[HalfCircle] arcs: Left sustaining, right sustaining, then emerging arcs,
        each family by increasing radius.
    :ivar segment: For ``SN(1; 0)`` and ``SN(0; 1)``, the pair of marked points joined by the
        curve, which then has no arcs. Otherwise None.
    :ivar green_end: Endpoint of the green part, or None when not coprime.
    :ivar red_end: Endpoint of the red part, or None when not coprime.
    :ivar bool reflected: True when built from parameters of opposite signs; arcs then lie on
        the opposite sides.
    :ivar emerging_left_to_right: Whether the walk from the green end crosses the outermost
        emerging arc from left to right. None when not coprime.
    """
    __slots__ = ()


class ColorSplit(namedtuple('ColorSplit', ['green', 'red'])):
    """
    :ivar tuple[int, int] green: ``(g1, g2)``, parameters of the green sub-snail.
    :ivar tuple[int, int] red: ``(r1, r2)``, parameters of the red sub-snail.
    """
    __slots__ = ()


def _family(center, count_param, side):
    # radii E(m/2) - m/2 + 1/2 + i for 0 <= i <= E((m-1)/2)
    base = Fraction(count_param // 2) - Fraction(count_param, 2) + Fraction(1, 2)
    return [(center, base + i, side) for i in range((count_param - 1) // 2 + 1)] if count_param else []


def _marked_points(n, p):
    return Fraction(-n, 2), Fraction(p - n, 2), Fraction(p, 2)


def snail_endpoints(n, p):
    """
    The two marked points a snail with at least one odd parameter ends on:
    ``(z1, z3)`` when both are odd, ``(z1, z2)`` for odd ``n`` and even ``p``,
    ``(z2, z3)`` for even ``n`` and odd ``p``.

    :raises NotCoprime: If both parameters are even.
    """
    labels = _end_labels(n, p)
    z = _marked_points(abs(n), abs(p))
    return tuple(z[i] for i in labels)


def _end_labels(n, p):
    if n % 2 and p % 2:
        return 0, 2
    if n % 2:
        return 0, 1
    if p % 2:
        return 1, 2
    raise NotCoprime('SN({}; {}) has no endpoints'.format(n, p))


def split_colors(n, p):
    """
    The green and red sub-snails: columns of the matrix of :func:`snailcalc.euclid.decompose_to_word`.

    :rtype: ColorSplit
    :raises NotCoprime: If ``gcd(n, p) > 1``.
    """
    m = phi(decompose_to_word(n, p))
    return ColorSplit(green=(m.a, m.c), red=(m.b, m.d))


def act(w, n, p):
    """
    Parameters of the image of ``SN(n; p)`` under the class of ``w``, with ``(n, p)`` identified
    with ``(-n, -p)`` and the first nonzero coordinate made nonnegative.

    :raises InvalidParameters: For ``(0, 0)``.
    """
    if (n, p) == (0, 0):
        raise InvalidParameters('SN(0; 0) is not a curve')
    n2, p2 = projmat.apply(phi(w), (n, p))
    if n2 < 0 or (n2 == 0 and p2 < 0):
        n2, p2 = -n2, -p2
    return n2, p2


def _walk(arcs, start):
    """
    Points and arcs met walking the curve from ``start``.
    """
    by_point = {}
    for arc in arcs:
        if not arc.degenerate:
            for x in arc.ends:
                by_point.setdefault(x, []).append(arc)
    points, path = [start], []
    current, previous = start, None
    while True:
        options = [a for a in by_point.get(current, []) if a is not previous]
        if not options:
            break
        arc = options[0]
        lo, hi = arc.ends
        current = hi if current == lo else lo
        previous = arc
        path.append(arc)
        points.append(current)
        if current == start:
            break
    return points, path


def _colour_arcs(arcs, n, p):
    split = split_colors(n, p)
    labels = _end_labels(n, p)
    z = _marked_points(n, p)
    green_label = (set(_end_labels(*split.green)) - set(_end_labels(*split.red))).pop()
    green_end = z[green_label]
    red_end = z[[i for i in labels if i != green_label][0]]
    points, path = _walk(arcs, green_end)
    green_count = sum(split.green)
    point_colour = {x: (GREEN if k < green_count else RED) for k, x in enumerate(points)}

    colours = {}
    for arc in path:
        lo, hi = arc.ends
        colours[arc] = (point_colour[lo], point_colour[lo] != point_colour[hi])
    coloured = []
    for arc in arcs:
        if arc.degenerate:
            coloured.append(arc._replace(color=point_colour[arc.center]))
        else:
            colour, is_split = colours[arc]
            coloured.append(arc._replace(color=colour, split=is_split))

    outer = max((a for a in arcs if a.side == UP), key=lambda a: a.radius)
    k = path.index(outer)
    left_to_right = points[k] < points[k + 1]
    logger.debug('SN(%s; %s): green end %s, red end %s, split %s', n, p, green_end, red_end, split)
    return coloured, green_end, red_end, left_to_right


def build_snail(n, p):
    """
    :rtype: Snail
    :raises InvalidParameters: For ``(0, 0)``, or a zero parameter beside anything but 1.
    """
    if (n, p) == (0, 0):
        raise InvalidParameters('SN(0; 0) is not a curve')
    reflected = n * p < 0
    n, p = abs(n), abs(p)
    marked = _marked_points(n, p)
    z1, z2, z3 = marked

    if n == 0 or p == 0:
        if n + p != 1:
            raise InvalidParameters('SN({}; {}) is not a curve'.format(n, p))
        if n == 0:
            # SN(0; 1) joins p2 to p3; place the points as for SN(1; 1).
            marked = _marked_points(1, 1)
            segment = marked[1], marked[2]
        else:
            marked = _marked_points(1, 1)
            segment = marked[0], marked[1]
        return Snail(n, p, marked, (), segment, segment[0], segment[1], reflected, None)

    raw = _family(z1, n, DOWN) + _family(z3, p, DOWN) + _family(z2, n + p, UP)
    arcs = [HalfCircle(center, radius, side, None, False) for center, radius, side in raw]

    green_end = red_end = left_to_right = None
    if math.gcd(n, p) == 1:
        arcs, green_end, red_end, left_to_right = _colour_arcs(arcs, n, p)
    if reflected:
        arcs = [a._replace(side=-a.side) for a in arcs]
    return Snail(n, p, marked, tuple(arcs), None, green_end, red_end, reflected, left_to_right)


def components(s):
    """
    Connected components of a snail, by union-find over arc endpoints.

    ``connected`` is True when the snail is a single arc: one component with two ends.
    A single closed curve, as for ``SN(2; 2)``, is not connected in this sense.

    :rtype: tuple[bool, int]
    """
    if s.segment:
        return True, 1
    parent = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    degree = {}
    for arc in s.arcs:
        if arc.degenerate:
            find(arc.center)
            continue
        lo, hi = arc.ends
        parent[find(lo)] = find(hi)
        for x in (lo, hi):
            degree[x] = degree.get(x, 0) + 1
    roots = {find(x) for x in list(parent)}
    has_ends = any(d == 1 for d in degree.values())
    return len(roots) == 1 and has_ends, len(roots)


class AxisPoint(namedtuple('AxisPoint', ['x', 'color', 'direction'])):
    """
    A point where a coloured snail meets the axis.

    :ivar Fraction x: Coordinate.
    :ivar color: ``'green'`` or ``'red'``.
    :ivar int direction: +1 where the walk from the green end moves upward through the point.
    """
    __slots__ = ()


def axis_points(s):
    """
    Axis points of a coprime snail, in walking order from the green end.

    :rtype: list[AxisPoint]
    :raises NotCoprime: If the snail is not a single arc.
    """
    if s.green_end is None:
        raise NotCoprime('SN({}; {}) is not a simple arc'.format(s.n, s.p))
    if s.segment:
        return [AxisPoint(s.segment[0], GREEN, UP), AxisPoint(s.segment[1], RED, DOWN)]
    points, path = _walk(s.arcs, s.green_end)
    green_count = sum(split_colors(s.n, s.p).green)
    out = []
    for k, x in enumerate(points):
        # Leaving side at x, or the opposite of the arrival side at the last point.
        side = path[k].side if k < len(path) else -path[k - 1].side
        out.append(AxisPoint(x, GREEN if k < green_count else RED, side))
    return out


def crossing_sequence(s):
    """
    The crossing sequence of a coprime snail, walking from its green end.

    :rtype: snailcalc.skeleton.CrossingSequence
    :raises NotCoprime: If the snail is not a single arc.
    """
    if s.green_end is None:
        raise NotCoprime('SN({}; {}) is not a simple arc'.format(s.n, s.p))
    if s.segment:
        return CrossingSequence(s.marked, s.segment[0], ((UP, s.segment[1]),))
    points, path = _walk(s.arcs, s.green_end)
    excursions = tuple((arc.side, x) for arc, x in zip(path, points[1:]))
    return CrossingSequence(s.marked, s.green_end, excursions)


class HalfCircleSchema(Schema):
    center = Rational(required=True)
    radius = Rational(required=True)
    side = fields.Integer(required=True)
    color = fields.String(allow_none=True)
    split = fields.Boolean()


class SnailSchema(Schema):
    n = fields.Integer(required=True)
    p = fields.Integer(required=True)
    marked = fields.List(Rational())
    arcs = fields.Nested(HalfCircleSchema, many=True)
    segment = fields.List(Rational(), allow_none=True)
    green_end = Rational(allow_none=True)
    red_end = Rational(allow_none=True)
    reflected = fields.Boolean()
    emerging_left_to_right = fields.Boolean(allow_none=True)


def snail_json(s):
    return SnailSchema().dump(s)


def render_svg(s, scale=None, margin=None):
    """
    SVG drawing of a snail: the axis, arcs stroked by colour class (split arcs as two quarter
    arcs), marked points, and endpoint markers.

    :param scale: User units per axis unit. Defaults to ``DEFAULT_SETTINGS.svg_scale``; the command
        line passes its ``SNAILCALC_SVG_SCALE`` setting.
    :param margin: Border in axis units. Defaults to ``DEFAULT_SETTINGS.svg_margin``, or
        ``SNAILCALC_SVG_MARGIN`` on the command line.
    :rtype: str
    """
    canvas = SVG(DEFAULT_SETTINGS.svg_scale if scale is None else scale,
                 DEFAULT_SETTINGS.svg_margin if margin is None else margin)
    xs = list(s.marked)
    for arc in s.arcs:
        xs.extend(arc.ends)
    canvas.line(min(xs) - Fraction(1, 2), 0, max(xs) + Fraction(1, 2), 0, 'axis')

    if s.segment:
        canvas.line(s.segment[0], 0, s.segment[1], 0, GREEN)

    for arc in s.arcs:
        if arc.degenerate:
            continue
        lo, hi = arc.ends
        upward = arc.side == UP
        canvas.require(arc.center, arc.radius * arc.side)
        colour = arc.color or 'arc'
        if arc.split:
            other = RED if colour == GREEN else GREEN
            apex = arc.radius * arc.side
            canvas.arc(lo, 0, arc.center, apex, arc.radius, upward, colour)
            canvas.arc(arc.center, apex, hi, 0, arc.radius, upward, other)
        else:
            canvas.arc(lo, 0, hi, 0, arc.radius, upward, colour)

    for z in s.marked:
        canvas.dot(z, 0, 4, 'marked')
    for arc in s.arcs:
        if arc.degenerate:
            canvas.dot(arc.center, 0, 2.5, '{} endpoint'.format(arc.color or 'arc'))
    return canvas.render()

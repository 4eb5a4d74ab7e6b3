"""
Arrow distributions of snails and the inner two-coloured tree.

Where a snail meets the axis it carries a vertical arrow: green or red, up (``+``) or down (``-``).
Read from left to right, with a bar at the origin, these arrows form an :class:`ArrowWord`.
``SN(1; 1)`` reads ``G+ | R-``. Applying a letter of a positive word rewrites every arrow at once:

========  ==========================
letter    substitutions
========  ==========================
``B``     ``R- -> R+ G-``, ``R+ -> G+ R-``
``A``     ``G- -> G+ R-``, ``G+ -> R+ G-``
========  ==========================

Counting the letters of each colour on each side gives back the turbulence matrix
``[[L_g, L_r], [R_g, R_r]]`` of the word.

Usage examples
--------------

.. code-block:: python
   :caption: Arrow word and counts of ``B^3 A^2``.

    >>> from snailcalc import arrowtree, wordcalc
    >>> aw = arrowtree.arrow_word(wordcalc.parse_word('B^3 A^2'))
    >>> arrowtree.format_arrow_word(aw)
    'R+G+R- | R+G+R-R+R+G-R-R+G-R-'
    >>> arrowtree.letter_counts(aw)
    (1, 2, 3, 7)
"""
import logging
from collections import namedtuple

from marshmallow import Schema, fields, post_load, validate

from ._util import DEFAULT_SETTINGS
from .errors import InvalidParameters, NotPositiveCore
from .svg import SVG

logger = logging.getLogger(__name__)

ARROWS = ('G+', 'G-', 'R+', 'R-')
LEFT, RIGHT = 'left', 'right'

_RULES = {
    'B': {'R-': ('R+', 'G-'), 'R+': ('G+', 'R-')},
    'A': {'G-': ('G+', 'R-'), 'G+': ('R+', 'G-')},
}
_LINE_COLOURS = {'A': 'red', 'B': 'green'}
_ANSI = {'G': '\x1b[32m', 'R': '\x1b[31m'}
_ANSI_RESET = '\x1b[0m'


class ArrowWord(namedtuple('ArrowWord', ['left', 'right'])):
    """
    :ivar tuple[str] left: Arrows left of the origin, from left to right.
    :ivar tuple[str] right: Arrows right of the origin.
    """
    __slots__ = ()

    def __new__(cls, left, right):
        left, right = tuple(left), tuple(right)
        for arrow in left + right:
            if arrow not in ARROWS:
                raise InvalidParameters('unknown arrow {!r}'.format(arrow))
        return super(ArrowWord, cls).__new__(cls, left, right)

    def __str__(self):
        return format_arrow_word(self)


INITIAL = ArrowWord(('G+',), ('R-',))


def _rule(letter):
    try:
        return _RULES[letter]
    except KeyError:
        raise InvalidParameters('only A and B rewrite arrows, got {!r}'.format(letter))


def substitute(aw, letter):
    """
    Rewrite every arrow of ``aw`` matching a rule of ``letter``.

    :rtype: ArrowWord
    """
    rules = _rule(letter)

    def side(arrows):
        out = []
        for arrow in arrows:
            out.extend(rules.get(arrow, (arrow,)))
        return out
    return ArrowWord(side(aw.left), side(aw.right))


def _positive_letters(w):
    for gen, exp in w.powers:
        if gen not in _RULES or exp < 1:
            raise NotPositiveCore('{} is not a product of positive powers of A and B'.format(w))
    return [gen for gen, exp in w.powers for _ in range(exp)]


def arrow_word(w):
    """
    Apply the letters of ``w`` to the initial arrows, in reading order.

    :param snailcalc.wordcalc.Word w: A product of positive powers of ``A`` and ``B``.
    :rtype: ArrowWord
    :raises NotPositiveCore: For any other word.
    """
    aw = INITIAL
    for letter in _positive_letters(w):
        aw = substitute(aw, letter)
    return aw


def letter_counts(aw):
    """
    ``(L_g, L_r, R_g, R_r)``: green and red arrows on the left, then on the right.
    """
    def count(arrows, colour):
        return sum(1 for a in arrows if a[0] == colour)
    return count(aw.left, 'G'), count(aw.left, 'R'), count(aw.right, 'G'), count(aw.right, 'R')


def format_arrow_word(aw, ansi=False):
    """
    ``G+G- | R-`` style text. With ``ansi``, arrows are coloured with terminal escapes.
    """
    def side(arrows):
        if not ansi:
            return ''.join(arrows)
        return ''.join('{}{}{}'.format(_ANSI[a[0]], a, _ANSI_RESET) for a in arrows)
    return '{} | {}'.format(side(aw.left), side(aw.right))


class BranchPoint(namedtuple('BranchPoint', ['branch', 'color', 'level'])):
    """
    Where a branch of the inner tree is born.

    :ivar branch: ``'left'`` or ``'right'``.
    :ivar color: Colour of the line it arises on; level 0 for the two roots, coloured as their branch.
    :ivar int level: 1 for the first line, from the bottom.
    """
    __slots__ = ()


class _Branch(object):

    def __init__(self, arrow, level, parent):
        self.arrow = arrow
        self.level = level
        self.parent = parent


class InnerTree(namedtuple('InnerTree', ['lines', 'branch_points', 'leaves', 'edges'])):
    """
    The inner two-coloured tree of a positive word.

    :ivar tuple[str] lines: Colour of each horizontal line from the bottom: green for ``B``, red for ``A``.
    :ivar tuple[BranchPoint] branch_points: One per branch.
    :ivar ArrowWord leaves: Arrows at the ends of the branches; equal to :func:`arrow_word`.
    :ivar tuple edges: ``(leaf index, parent leaf index or None, birth level)`` per branch, where
        leaf indices count from the left across both sides.
    """
    __slots__ = ()


def build_tree(w):
    """
    :rtype: InnerTree
    :raises NotPositiveCore: If ``w`` is not a product of positive powers of ``A`` and ``B``.
    """
    letters = _positive_letters(w)
    sides = {LEFT: [_Branch('G+', 0, None)], RIGHT: [_Branch('R-', 0, None)]}
    born = {LEFT: list(sides[LEFT]), RIGHT: list(sides[RIGHT])}
    for level, letter in enumerate(letters, 1):
        rules = _RULES[letter]
        for name in (LEFT, RIGHT):
            grown = []
            for branch in sides[name]:
                if branch.arrow not in rules:
                    grown.append(branch)
                    continue
                for arrow in rules[branch.arrow]:
                    if arrow[0] == branch.arrow[0]:
                        # The branch itself, turned around.
                        branch.arrow = arrow
                        grown.append(branch)
                    else:
                        child = _Branch(arrow, level, branch)
                        born[name].append(child)
                        grown.append(child)
            sides[name] = grown
        logger.debug('level %s (%s): %s | %s', level, letter,
                     [b.arrow for b in sides[LEFT]], [b.arrow for b in sides[RIGHT]])

    order = sides[LEFT] + sides[RIGHT]
    index = {id(b): i for i, b in enumerate(order)}
    colour_of = {'G': 'green', 'R': 'red'}
    points, edges = [], []
    for name in (LEFT, RIGHT):
        for b in born[name]:
            colour = colour_of[b.arrow[0]] if b.level == 0 else _LINE_COLOURS[letters[b.level - 1]]
            points.append(BranchPoint(name, colour, b.level))
            edges.append((index[id(b)], index[id(b.parent)] if b.parent else None, b.level))
    leaves = ArrowWord([b.arrow for b in sides[LEFT]], [b.arrow for b in sides[RIGHT]])
    return InnerTree(tuple(_LINE_COLOURS[x] for x in letters), tuple(points), leaves, tuple(edges))


def branch_counts(tree):
    """
    ``(L_g, L_r, R_g, R_r)`` counted on branch points.
    """
    def count(branch, colour):
        return sum(1 for p in tree.branch_points if p.branch == branch and p.color == colour)
    return count(LEFT, 'green'), count(LEFT, 'red'), count(RIGHT, 'green'), count(RIGHT, 'red')


def render_tree_svg(tree, scale=None, margin=None):
    """
    SVG drawing of an inner tree: lines from the bottom up, branches as vertical strokes, branch
    points as dots and the leaf arrows on top.

    :rtype: str
    """
    canvas = SVG(DEFAULT_SETTINGS.svg_scale if scale is None else scale,
                 DEFAULT_SETTINGS.svg_margin if margin is None else margin)
    n_left = len(tree.leaves.left)
    arrows = tree.leaves.left + tree.leaves.right

    def x_of(i):
        # Leaves sit at unit spacing with one empty slot at the origin.
        return i - n_left + (1 if i >= n_left else 0)

    top = len(tree.lines) + 1
    lo, hi = x_of(0) - 1, x_of(len(arrows) - 1) + 1
    for level, colour in enumerate(tree.lines, 1):
        canvas.line(lo, level, hi, level, colour)
    canvas.line(x_of(0), 0, x_of(len(arrows) - 1), 0, 'axis')
    for (i, parent, level), point in zip(tree.edges, tree.branch_points):
        colour = 'green' if arrows[i][0] == 'G' else 'red'
        canvas.line(x_of(i), level, x_of(i), top, colour)
        if parent is not None:
            canvas.line(x_of(parent), level, x_of(i), level, colour)
        canvas.dot(x_of(i), level, 3, point.color)
    for i, arrow in enumerate(arrows):
        canvas.text(x_of(i), top + 0.5, arrow, 'green' if arrow[0] == 'G' else 'red')
    return canvas.render()


class ArrowWordSchema(Schema):
    left = fields.List(fields.String(validate=validate.OneOf(ARROWS)), required=True)
    right = fields.List(fields.String(validate=validate.OneOf(ARROWS)), required=True)

    @post_load
    def make_obj(self, js, **kwargs):
        return ArrowWord(js['left'], js['right'])


def arrow_word_json(aw):
    js = ArrowWordSchema().dump(aw)
    js['counts'] = list(letter_counts(aw))
    return js

import itertools
import math

import pytest

from snailcalc import arrowtree, euclid, snailgeom
from snailcalc.arrowtree import ArrowWord
from snailcalc.errors import ErrorCodes as EC
from snailcalc.errors import InvalidParameters, NotPositiveCore
from snailcalc.wordcalc import Word, parse_word, phi


def positive_words(max_length):
    for length in range(max_length + 1):
        for letters in itertools.product('AB', repeat=length):
            yield Word.of((x, 1) for x in letters)


@pytest.mark.parametrize('letter,expected', [
    ['B', ArrowWord(['G+'], ['R+', 'G-'])],
    ['A', ArrowWord(['R+', 'G-'], ['R-'])],
])
def test_substitute_initial(letter, expected):
    assert arrowtree.substitute(arrowtree.INITIAL, letter) == expected


def test_substitute_unknown_letter():
    with pytest.raises(InvalidParameters):
        arrowtree.substitute(arrowtree.INITIAL, 'Z')


def test_invalid_arrow():
    with pytest.raises(InvalidParameters) as info:
        ArrowWord(['G+'], ['X-'])
    assert info.value.code == EC.invalid_parameters.code


def test_b3a2():
    aw = arrowtree.arrow_word(parse_word('B^3 A^2'))
    assert aw.left == ('R+', 'G+', 'R-')
    assert aw.right == ('R+', 'G+', 'R-', 'R+', 'R+', 'G-', 'R-', 'R+', 'G-', 'R-')
    assert arrowtree.letter_counts(aw) == (1, 2, 3, 7)
    assert str(aw) == 'R+G+R- | R+G+R-R+R+G-R-R+G-R-'


def test_identity_is_initial():
    aw = arrowtree.arrow_word(parse_word('Id'))
    assert aw == arrowtree.INITIAL
    assert arrowtree.letter_counts(aw) == (1, 0, 0, 1)


def test_counts_match_matrix():
    for w in positive_words(10):
        assert arrowtree.letter_counts(arrowtree.arrow_word(w)) == tuple(phi(w))


def test_counts_telescope():
    for w in positive_words(6):
        aw = arrowtree.arrow_word(w)
        for letter in 'AB':
            longer = Word.of(tuple(w.powers) + ((letter, 1),))
            assert arrowtree.substitute(aw, letter) == arrowtree.arrow_word(longer)


@pytest.mark.parametrize('text', [
    'A^-1',
    'Z A',
    'A B^-2',
    'Y',
])
def test_not_positive(text):
    with pytest.raises(NotPositiveCore) as info:
        arrowtree.arrow_word(parse_word(text))
    assert info.value.code == EC.not_positive_core.code
    with pytest.raises(NotPositiveCore):
        arrowtree.build_tree(parse_word(text))


@pytest.mark.parametrize('text', ['Id', 'A', 'B', 'B^3 A^2', 'A B A B^2', 'B^2 A^3 B'])
def test_tree_leaves_and_branches(text):
    w = parse_word(text)
    tree = arrowtree.build_tree(w)
    aw = arrowtree.arrow_word(w)
    assert tree.leaves == aw
    assert arrowtree.branch_counts(tree) == arrowtree.letter_counts(aw)
    assert len(tree.branch_points) == len(aw.left) + len(aw.right)
    assert len(tree.lines) == w.letter_count


def test_tree_lines_and_roots():
    tree = arrowtree.build_tree(parse_word('B A'))
    assert tree.lines == ('green', 'red')
    roots = [p for p in tree.branch_points if p.level == 0]
    assert roots == [arrowtree.BranchPoint('left', 'green', 0), arrowtree.BranchPoint('right', 'red', 0)]
    assert sum(1 for _, parent, _ in tree.edges if parent is None) == 2


@pytest.mark.parametrize('n,p', [(n, p) for n in range(1, 31) for p in range(1, 31) if math.gcd(n, p) == 1])
def test_matches_snail_axis(n, p):
    aw = arrowtree.arrow_word(euclid.decompose_to_word(n, p))
    points = sorted(snailgeom.axis_points(snailgeom.build_snail(n, p)))
    letters = [('G' if pt.color == 'green' else 'R') + ('+' if pt.direction == 1 else '-') for pt in points]
    assert len(aw.left) == n
    assert letters == list(aw.left + aw.right)


def test_format_ansi():
    text = arrowtree.format_arrow_word(arrowtree.INITIAL, ansi=True)
    assert text == '\x1b[32mG+\x1b[0m | \x1b[31mR-\x1b[0m'


def test_render_tree():
    tree = arrowtree.build_tree(parse_word('B^3 A^2'))
    svg = arrowtree.render_tree_svg(tree, scale=30)
    assert svg.startswith('<?xml')
    assert svg.count('<text ') == 13
    assert svg.count('<circle ') == 13
    assert arrowtree.render_tree_svg(tree, scale=30) == svg


def test_arrow_word_json():
    js = arrowtree.arrow_word_json(arrowtree.arrow_word(parse_word('A')))
    assert js == {'left': ['R+', 'G-'], 'right': ['R-'], 'counts': [1, 1, 0, 1]}
    assert arrowtree.ArrowWordSchema().load({'left': js['left'], 'right': js['right']}) == ArrowWord(['R+', 'G-'], ['R-'])

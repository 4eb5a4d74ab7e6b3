import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from snailcalc import euclid, skeleton, snailgeom
from snailcalc.errors import ErrorCodes as EC
from snailcalc.errors import InvalidParameters, NotCoprime
from snailcalc.wordcalc import Word, word_concat

COPRIME_30 = [(n, p) for n in range(1, 31) for p in range(1, 31) if math.gcd(n, p) == 1]

words = st.lists(st.sampled_from(['A', 'a', 'B', 'b', 'Z']), max_size=8).map(
    lambda ls: Word.of((x.upper(), -1 if x.islower() else 1) for x in ls))
vectors = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda v: v != (0, 0))


def radii(s, center, side):
    return sorted(a.radius for a in s.arcs if a.center == center and a.side == side)


def test_snail_1_1():
    s = snailgeom.build_snail(1, 1)
    assert s.marked == (F(-1, 2), F(0), F(1, 2))
    emerging = [a for a in s.arcs if a.side == 1]
    assert [(a.center, a.radius) for a in emerging] == [(0, F(1, 2))]
    assert sorted(a.center for a in s.arcs if a.degenerate) == [F(-1, 2), F(1, 2)]


def test_snail_3_4():
    s = snailgeom.build_snail(3, 4)
    z1, z2, z3 = s.marked
    assert radii(s, z1, -1) == [0, 1]
    assert radii(s, z3, -1) == [F(1, 2), F(3, 2)]
    assert radii(s, z2, 1) == [0, 1, 2, 3]


def test_segment_models():
    s = snailgeom.build_snail(0, 1)
    assert s.segment == (F(0), F(1, 2))
    assert s.arcs == ()
    assert snailgeom.components(s) == (True, 1)
    assert snailgeom.build_snail(1, 0).segment == (F(-1, 2), F(0))


@pytest.mark.parametrize('n,p', [
    [0, 0],
    [0, 2],
    [3, 0],
])
def test_invalid_parameters(n, p):
    with pytest.raises(InvalidParameters) as info:
        snailgeom.build_snail(n, p)
    assert info.value.code == EC.invalid_parameters.code


def test_reflection():
    s = snailgeom.build_snail(-3, 4)
    assert s.reflected
    assert all(a.side == -b.side for a, b in zip(s.arcs, snailgeom.build_snail(3, 4).arcs))


@pytest.mark.parametrize('n,p,green,red', [
    [8, 13, (5, 8), (3, 5)],
    [1, 1, (1, 0), (0, 1)],
    [3, 10, (1, 3), (2, 7)],
])
def test_split_colors(n, p, green, red):
    assert snailgeom.split_colors(n, p) == snailgeom.ColorSplit(green, red)


@pytest.mark.parametrize('n,p', [(n, p) for n in range(1, 101, 7) for p in range(1, 101, 3) if math.gcd(n, p) == 1])
def test_split_colors_bezout(n, p):
    (g1, g2), (r1, r2) = snailgeom.split_colors(n, p)
    assert (g1 + r1, g2 + r2) == (n, p)
    assert g1 * p - g2 * n == 1
    assert r2 * n - r1 * p == 1


def test_split_colors_not_coprime():
    with pytest.raises(NotCoprime) as info:
        snailgeom.split_colors(4, 6)
    assert info.value.code == EC.not_coprime.code


@pytest.mark.parametrize('word,v,expected', [
    [Word.of([('A', 1)]), (1, 1), (2, 1)],
    [Word.of([('Z', 1)]), (1, 1), (1, -1)],
    [Word.of(), (3, 4), (3, 4)],
    [Word.of([('Z', 1)]), (-1, 1), (1, 1)],
])
def test_act(word, v, expected):
    assert snailgeom.act(word, *v) == expected


@given(words, words, vectors)
def test_act_is_an_action(w1, w2, v):
    assert snailgeom.act(word_concat(w1, w2), *v) == snailgeom.act(w1, *snailgeom.act(w2, *v))


@pytest.mark.parametrize('n,p', COPRIME_30[::11])
def test_decomposition_acts_on_1_1(n, p):
    assert snailgeom.act(euclid.decompose_to_word(n, p), 1, 1) == (n, p)


@pytest.mark.parametrize('n,p,connected', [
    [3, 4, True],
    [2, 2, False],
    [6, 9, False],
    [1, 1, True],
    [4, 6, False],
])
def test_components(n, p, connected):
    ok, count = snailgeom.components(snailgeom.build_snail(n, p))
    assert ok == connected
    assert count >= 1


def test_components_count_6_9():
    # An arc through p2 and p3 and a closed curve around it.
    assert snailgeom.components(snailgeom.build_snail(6, 9)) == (False, 2)


@pytest.mark.parametrize('n,p,ends', [
    [3, 4, (F(-3, 2), F(1, 2))],
    [3, 5, (F(-3, 2), F(5, 2))],
    [2, 3, (F(1, 2), F(3, 2))],
])
def test_snail_endpoints(n, p, ends):
    assert snailgeom.snail_endpoints(n, p) == ends


@pytest.mark.parametrize('n,p', COPRIME_30)
def test_crossing_sequence_shape(n, p):
    s = snailgeom.build_snail(n, p)
    cs = snailgeom.crossing_sequence(s)
    assert len(cs.points) == n + p
    assert {cs.start, cs.end} == set(snailgeom.snail_endpoints(n, p))
    assert cs.start == s.green_end
    sides = [e.side for e in cs.excursions]
    assert all(a == -b for a, b in zip(sides, sides[1:]))


def test_crossing_sequence_1_1():
    cs = snailgeom.crossing_sequence(snailgeom.build_snail(1, 1))
    assert cs.start == F(-1, 2)
    assert cs.excursions == ((1, F(1, 2)),)


def test_crossing_sequence_not_coprime():
    with pytest.raises(NotCoprime):
        snailgeom.crossing_sequence(snailgeom.build_snail(2, 4))


def test_crossing_sequence_is_reduced():
    cs = snailgeom.crossing_sequence(snailgeom.build_snail(3, 4))
    assert skeleton.reduce(cs) == skeleton.normalize(cs)


def test_axis_points_colours():
    points = snailgeom.axis_points(snailgeom.build_snail(3, 10))
    assert len(points) == 13
    assert [p.color for p in points].count('green') == 1 + 3


def test_render_1_1():
    svg = snailgeom.render_svg(snailgeom.build_snail(1, 1))
    assert svg.startswith('<?xml')
    # The only arc joins the two colours: two quarter arcs.
    assert svg.count('<path ') == 2
    assert svg.count('endpoint') == 2
    assert svg.count('class="marked"') == 3


def test_render_8_13():
    svg = snailgeom.render_svg(snailgeom.build_snail(8, 13))
    assert svg.count('<path ') == 21
    assert 'class="green"' in svg and 'class="red"' in svg


def test_render_scale():
    svg = snailgeom.render_svg(snailgeom.build_snail(3, 4), scale=20)
    for r in ('20.000000', '40.000000', '60.000000'):
        assert 'A {0} {0} '.format(r) in svg


def test_render_is_deterministic():
    s = snailgeom.build_snail(5, 7)
    assert snailgeom.render_svg(s) == snailgeom.render_svg(snailgeom.build_snail(5, 7))


def test_snail_json():
    js = snailgeom.snail_json(snailgeom.build_snail(1, 1))
    assert js['marked'] == ['-1/2', '0', '1/2']
    assert {'center': '0', 'radius': '1/2', 'side': 1, 'color': 'green', 'split': True} in js['arcs']

import itertools
import random

import pytest

from orbistruct.cycles import parse_cycles, parse_element, parse_expression, parse_generators, parse_product, render
from orbistruct.errors import CycleParseError
from orbistruct.perm import Permutation


def test_identity_with_degree():
    assert parse_cycles("()", 5) == Permutation.identity(5)


def test_three_cycle():
    assert parse_cycles("(1 2 3)", 5).images == (2, 3, 1, 4, 5)


def test_a4_generator():
    x = parse_cycles("(1 2)(3 4)")
    assert x.degree == 4
    assert x.images == (2, 1, 4, 3)


def test_commas_and_spaces():
    assert parse_cycles("(1, 2,3)( 4 5 )") == parse_cycles("(1 2 3)(4 5)")


@pytest.mark.parametrize(
    "text, position",
    [
        ("(1 2)(2 3)", 6),
        ("(1 2 1)", 5),
        ("(1 x)", 3),
        ("(1 2", 4),
        ("1 2", 0),
        ("(1)", 2),
        ("((1 2))", 1),
        ("(1 2,)", 5),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(CycleParseError) as info:
        parse_cycles(text)
    assert info.value.position == position


def test_point_beyond_explicit_degree():
    with pytest.raises(CycleParseError):
        parse_cycles("(1 6)", 5)


def test_non_disjoint_needs_product():
    with pytest.raises(CycleParseError):
        parse_cycles("(1 2)(2 3)")
    # rightmost factor first: 1->1->2, 2->3->3, 3->2->1
    assert parse_product(["(1 2)", "(2 3)"]) == parse_cycles("(1 2 3)")
    assert parse_element("(1 2)*(2 3)") == parse_cycles("(1 2 3)")


def test_generator_lists_share_degree():
    gens = parse_generators("(1 2 3);(4 5)")
    assert [g.degree for g in gens] == [5, 5]


def test_expression_fields():
    e = parse_expression("(3 4)(1 2 5)")
    assert e.cycles == ((3, 4), (1, 2, 5))
    assert e.implied_degree == 5


def test_render_is_canonical():
    assert render(parse_cycles("(2 3 1)(5 4)")) == "(1 2 3)(4 5)"
    assert render(Permutation.identity(3)) == "()"


def test_round_trip_exhaustive_small_degrees():
    count = 0
    for n in range(1, 8):
        for imgs in itertools.permutations(range(1, n + 1)):
            x = Permutation(imgs)
            assert parse_cycles(render(x), n) == x
            count += 1
    assert count == sum(__import__("math").factorial(n) for n in range(1, 8))


def test_round_trip_random_larger_degrees():
    rng = random.Random(20240611)
    for _ in range(1000):
        n = rng.randint(8, 30)
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        x = Permutation(imgs)
        assert parse_cycles(render(x), n) == x
        text = render(x)
        assert render(parse_cycles(text, n)) == text

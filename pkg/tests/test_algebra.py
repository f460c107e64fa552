import random
from fractions import Fraction

import pytest

from orbistruct.algebra import (
    AlgebraVector,
    SubalgebraSpan,
    Symbol,
    add,
    conjugation_act,
    is_action_effective,
    scale,
    subspace_fixer,
    subspace_stabilizer,
)
from orbistruct.groups import all_subgroups, centralizer, from_elements, normalizer


def random_vector(rng, g, density=0.5):
    return AlgebraVector(
        g, {x: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for x in g if rng.random() < density}
    )


def test_add_scale_cancel(a3):
    e, c, c2 = a3.elements[0], a3.elements[1], a3.elements[2]
    u = AlgebraVector(a3, {e: 1, c: 2})
    v = AlgebraVector(a3, {c: -2, c2: Fraction(1, 2)})
    w = add(u, v)
    assert w.support == {e, c2}
    assert w.coefficient(c2) == Fraction(1, 2)
    assert scale(0, u) == AlgebraVector.zero(a3)
    assert 3 * u == AlgebraVector(a3, {e: 3, c: 6})


def test_basis_product_and_unit(a4):
    x, y = a4.elements[3], a4.elements[7]
    one = AlgebraVector.basis(a4, a4.identity)
    bx, by = AlgebraVector.basis(a4, x), AlgebraVector.basis(a4, y)
    assert bx * by == AlgebraVector.basis(a4, x * y)
    assert one * bx == bx == bx * one


def test_z3_product(p, a3):
    # (1 + g)(1 + g^2) = 1 + g^2 + g + g^3 = 2*1 + g + g^2
    e, g = a3.identity, p("(1 2 3)")
    g2 = g * g
    lhs = AlgebraVector(a3, {e: 1, g: 1}) * AlgebraVector(a3, {e: 1, g2: 1})
    assert lhs == AlgebraVector(a3, {e: 2, g: 1, g2: 1})


def test_conjugation_swaps_and_moves(p, a5, a3):
    g, g2 = p("(1 2 3)"), p("(1 3 2)")
    y = AlgebraVector(a5, {a5.identity: 1, g: 5, g2: 7})
    alpha = p("(1 2)(4 5)")     # normalizes <(1 2 3)> but inverts it
    moved = conjugation_act(alpha, y)
    assert moved == AlgebraVector(a5, {a5.identity: 1, g: 7, g2: 5})
    beta = p("(1 2 3 4 5)")
    span = SubalgebraSpan(a5, a3)
    assert span.contains(y)
    assert not span.contains(conjugation_act(beta, y))


def test_action_rejects_foreign_element(p, a4):
    with pytest.raises(ValueError):
        conjugation_act(p("(1 5)"), AlgebraVector.zero(a4))


def test_symbols_only_act(a3):
    y = AlgebraVector.generic(a3, a3.elements)
    assert not y.is_numeric()
    assert all(isinstance(c, Symbol) for c in y.coefficients.values())
    with pytest.raises(TypeError):
        y + y
    z = conjugation_act(a3.elements[1], y)
    assert z == y  # A3 is abelian


def test_action_axioms_and_linearity(a5):
    rng = random.Random(31)
    elems = a5.elements
    for _ in range(1000):
        d1, d2 = rng.choice(elems), rng.choice(elems)
        a, b = random_vector(rng, a5, 0.1), random_vector(rng, a5, 0.1)
        k = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert conjugation_act(a5.identity, a) == a
        assert conjugation_act(d1 * d2, a) == conjugation_act(d1, conjugation_act(d2, a))
        assert conjugation_act(d1, a + k * b) == conjugation_act(d1, a) + k * conjugation_act(d1, b)
        assert len(conjugation_act(d1, a).support) == len(a.support)
        # conjugation is an algebra automorphism
        assert conjugation_act(d1, a * b) == conjugation_act(d1, a) * conjugation_act(d1, b)


@pytest.mark.parametrize("fixture", ["s4", "a4"])
def test_multiplication_associative_and_distributive(fixture, request):
    g = request.getfixturevalue(fixture)
    rng = random.Random(5)
    for _ in range(40):
        a, b, c = (random_vector(rng, g) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_stabilizer_and_fixer_examples(a5, a3, s3_in_a5):
    span = SubalgebraSpan(a5, a3)
    assert subspace_stabilizer(a5, span) == s3_in_a5
    assert subspace_fixer(a5, span) == a3


def test_stabilizer_fixer_match_normalizer_centralizer(s4, a5):
    for g in (s4, a5):
        for h in all_subgroups(g):
            span = SubalgebraSpan(g, h)
            assert subspace_stabilizer(g, span) == normalizer(g, h)
            assert subspace_fixer(g, span) == centralizer(g, h)


def brute_center(g):
    return from_elements(g.degree, [z for z in g if all(z * x == x * z for x in g)])


def test_effectiveness(a5, a3, group):
    s3 = group("(1 2 3);(1 2)", 3)
    assert is_action_effective(a5)
    assert not is_action_effective(a3)
    assert is_action_effective(s3)
    assert brute_center(s3).order == 1 and brute_center(a3).order == 3


def test_coefficients_must_be_exact(a3, p):
    with pytest.raises(TypeError):
        AlgebraVector(a3, {a3.identity: 0.5})
    with pytest.raises(ValueError):
        AlgebraVector(a3, {p("(1 2)"): 1})

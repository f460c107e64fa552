import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbistruct.errors import DegreeMismatchError
from orbistruct.perm import Permutation, compose, identity, inverse


def perms(max_degree=9):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Permutation)
    )


def test_compose_cycle_squared(p):
    assert compose(p("(1 2 3)"), p("(1 2 3)")) == p("(1 3 2)")


def test_compose_identity(p):
    x = p("(1 4)(2 5 3)")
    assert compose(x, identity(5)) == x
    assert compose(identity(5), x) == x


def test_compose_double_transpositions(p):
    # images of (1 2)(3 4): [2,1,4,3]; of (1 3)(2 4): [3,4,1,2]
    # p(q(i)) for i=1..4: p(3)=4, p(4)=3, p(1)=2, p(2)=1 -> [4,3,2,1] = (1 4)(2 3)
    result = compose(p("(1 2)(3 4)", 4), p("(1 3)(2 4)", 4))
    assert result.images == (4, 3, 2, 1)
    assert result == p("(1 4)(2 3)", 4)


def test_compose_degree_mismatch(p):
    with pytest.raises(DegreeMismatchError):
        compose(p("(1 2)", 2), p("(1 2)", 3))


def test_images_are_one_based():
    x = Permutation([2, 3, 1, 4, 5])
    assert x(1) == 2 and x(3) == 1 and x(5) == 5
    assert x.images == (2, 3, 1, 4, 5)
    assert str(x) == "(1 2 3)"


@pytest.mark.parametrize("bad", [[1, 1, 2], [0, 1, 2], [2, 3, 4], []])
def test_rejects_non_permutations(bad):
    with pytest.raises(ValueError):
        Permutation(bad)


def test_order_and_sign(p):
    assert p("(1 2 3)(4 5)").order() == 6
    assert p("(1 2)").sign() == -1
    assert p("(1 2 3)").sign() == 1
    assert identity(5).order() == 1


def test_ordering_is_lexicographic_on_images():
    all_s3 = sorted(Permutation(x) for x in itertools.permutations([1, 2, 3]))
    assert [q.images for q in all_s3] == sorted(itertools.permutations([1, 2, 3]))
    assert all_s3[0].is_identity()


@settings(max_examples=300)
@given(perms())
def test_inverse_law(x):
    assert compose(x, inverse(x)) == identity(x.degree)
    assert compose(inverse(x), x) == identity(x.degree)


@settings(max_examples=300)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(*[st.permutations(range(1, n + 1))] * 3)))
def test_associative(triple):
    a, b, c = (Permutation(t) for t in triple)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=200)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(*[st.permutations(range(1, n + 1))] * 2)))
def test_conjugate_matches_definition(pair):
    x, by = (Permutation(t) for t in pair)
    assert x.conjugate(by) == by * x * by.inverse()

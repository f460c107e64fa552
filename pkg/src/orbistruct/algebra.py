"""The group algebra of a permutation group and its conjugation action.

Vectors are sparse maps from group elements to coefficients.  Numeric
coefficients are exact ``Fraction`` values; ``Symbol`` coefficients stand for
pairwise-distinct generic reals and support only the action, not arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

from .errors import ConsistencyError, NotSubgroupError
from .groups import PermGroup, center, from_elements, is_subgroup
from .perm import Permutation


@dataclass(frozen=True, order=True)
class Symbol:
    """A formal coefficient; distinct names denote distinct generic values."""

    name: str

    def __str__(self) -> str:
        return self.name


Coefficient = Union[Fraction, Symbol]


def _coerce(value) -> Coefficient:
    if isinstance(value, Symbol):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"coefficients must be rational or Symbol, got {type(value).__name__}")


class AlgebraVector:
    """An element ``sum c_g g`` of the group algebra of ``group``."""

    __slots__ = ("group", "_coeffs", "_hash")

    def __init__(self, group: PermGroup, coefficients: Mapping[Permutation, object] | None = None):
        coeffs: dict[Permutation, Coefficient] = {}
        for key, value in (coefficients or {}).items():
            if key not in group:
                raise ValueError(f"{key} is not an element of the group")
            c = _coerce(value)
            if isinstance(c, Fraction) and c == 0:
                continue
            coeffs[key] = c
        self.group = group
        self._coeffs = coeffs
        self._hash = hash((group, frozenset(coeffs.items())))

    @classmethod
    def basis(cls, group: PermGroup, element: Permutation) -> AlgebraVector:
        return cls(group, {element: 1})

    @classmethod
    def zero(cls, group: PermGroup) -> AlgebraVector:
        return cls(group)

    @classmethod
    def generic(cls, group: PermGroup, support: Iterable[Permutation], prefix: str = "c") -> AlgebraVector:
        """A vector with one distinct formal coefficient per support element."""
        return cls(group, {s: Symbol(f"{prefix}[{s}]") for s in support})

    @property
    def coefficients(self) -> dict[Permutation, Coefficient]:
        return dict(self._coeffs)

    @property
    def support(self) -> frozenset[Permutation]:
        return frozenset(self._coeffs)

    def coefficient(self, element: Permutation) -> Coefficient:
        return self._coeffs.get(element, Fraction(0))

    def is_numeric(self) -> bool:
        return not any(isinstance(c, Symbol) for c in self._coeffs.values())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraVector):
            return NotImplemented
        return self.group == other.group and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return self._hash

    def __add__(self, other: AlgebraVector) -> AlgebraVector:
        return add(self, other)

    def __mul__(self, other: AlgebraVector) -> AlgebraVector:
        return algebra_multiply(self, other)

    def __rmul__(self, k) -> AlgebraVector:
        return scale(k, self)

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = [f"{c}*{g}" for g, c in sorted(self._coeffs.items())]
        return " + ".join(terms)


def _same_group(a: AlgebraVector, b: AlgebraVector) -> None:
    if a.group != b.group:
        raise ValueError("vectors belong to different group algebras")


def _numeric(a: AlgebraVector) -> None:
    if not a.is_numeric():
        raise TypeError("arithmetic is only defined for rational coefficients")


def add(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    _same_group(a, b)
    _numeric(a)
    _numeric(b)
    out = dict(a._coeffs)
    for g, c in b._coeffs.items():
        out[g] = out.get(g, Fraction(0)) + c
    return AlgebraVector(a.group, out)


def scale(k, a: AlgebraVector) -> AlgebraVector:
    _numeric(a)
    k = Fraction(k)
    return AlgebraVector(a.group, {g: k * c for g, c in a._coeffs.items()})


def algebra_multiply(a: AlgebraVector, b: AlgebraVector) -> AlgebraVector:
    """Convolution: the coefficient of ``v`` is the sum of ``c_g d_h`` over ``g h = v``."""
    _same_group(a, b)
    _numeric(a)
    _numeric(b)
    out: dict[Permutation, Fraction] = {}
    for g, c in a._coeffs.items():
        for h, d in b._coeffs.items():
            v = g * h
            out[v] = out.get(v, Fraction(0)) + c * d
    return AlgebraVector(a.group, out)


def conjugation_act(d: Permutation, a: AlgebraVector) -> AlgebraVector:
    """Left action ``d . sum c_g g = sum c_g (d g d^-1)``."""
    if d not in a.group:
        raise ValueError(f"{d} is not an element of the group")
    return AlgebraVector(a.group, {g.conjugate(d): c for g, c in a._coeffs.items()})


def orbit(acting: Iterable[Permutation], a: AlgebraVector) -> frozenset[AlgebraVector]:
    """``{d . a : d in acting}`` as a set of vectors."""
    return frozenset(conjugation_act(d, a) for d in acting)


@dataclass(frozen=True)
class SubalgebraSpan:
    """The span of a subgroup ``basis`` inside the group algebra of ``ambient``."""

    ambient: PermGroup
    basis: PermGroup

    def __post_init__(self):
        if not is_subgroup(self.basis, self.ambient):
            raise NotSubgroupError("span basis must be a subgroup of the ambient group")

    def contains(self, a: AlgebraVector) -> bool:
        return a.support <= self.basis.members

    @property
    def dimension(self) -> int:
        return self.basis.order


def _check_span(g: PermGroup, v: SubalgebraSpan) -> None:
    if not is_subgroup(v.basis, g):
        raise NotSubgroupError("span basis is not a subgroup of the acting group")


def subspace_stabilizer(g: PermGroup, v: SubalgebraSpan) -> PermGroup:
    """Elements of ``g`` mapping the span into itself, read off the basis vectors."""
    _check_span(g, v)
    basis = [AlgebraVector.basis(v.ambient, x) for x in v.basis.elements]
    keep = [d for d in g.elements if all(v.contains(conjugation_act(d, e)) for e in basis)]
    return from_elements(g.degree, keep)


def subspace_fixer(g: PermGroup, v: SubalgebraSpan) -> PermGroup:
    """Elements of ``g`` fixing every vector of the span."""
    _check_span(g, v)
    basis = [AlgebraVector.basis(v.ambient, x) for x in v.basis.elements]
    keep = [d for d in g.elements if all(conjugation_act(d, e) == e for e in basis)]
    return from_elements(g.degree, keep)


def is_action_effective(g: PermGroup) -> bool:
    """True iff only the identity acts trivially on the whole group algebra."""
    kernel = subspace_fixer(g, SubalgebraSpan(g, g))
    effective = kernel.order == 1
    if effective != (center(g).order == 1):
        raise ConsistencyError("kernel of the conjugation action differs from the center")
    return effective

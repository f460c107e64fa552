"""Cycle notation: parsing and rendering.

Grammar (whitespace between tokens is free)::

    expr  := "()" | cycle*
    cycle := "(" INT (SEP INT)+ ")"      SEP := spaces and/or one comma

Cycles within one expression must be disjoint, so the order in which they
are written never matters.  Products of overlapping cycles go through
``parse_product``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import CycleParseError
from .perm import Permutation, compose

_TOKEN = re.compile(r"\s*(?:(?P<open>\()|(?P<close>\))|(?P<int>\d+)|(?P<comma>,)|(?P<bad>\S))")


@dataclass(frozen=True)
class CycleExpression:
    source: str
    cycles: tuple[tuple[int, ...], ...]

    @property
    def implied_degree(self) -> int:
        return max((max(c) for c in self.cycles), default=1)

    def to_permutation(self, degree: int | None = None) -> Permutation:
        n = self.implied_degree if degree is None else degree
        if n < self.implied_degree:
            raise CycleParseError(f"point {self.implied_degree} exceeds degree {n}", self.source)
        return Permutation.from_cycles(self.cycles, n)


def parse_expression(text: str) -> CycleExpression:
    cycles: list[tuple[int, ...]] = []
    seen: dict[int, int] = {}
    current: list[int] | None = None
    expect_int = False  # set after a comma
    pos = 0
    empty_seen = False
    stripped_end = len(text.rstrip())
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches non-space
            raise CycleParseError("unexpected input", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        if kind == "bad":
            raise CycleParseError(f"unexpected character {m.group('bad')!r}", text, start)
        if kind == "open":
            if current is not None:
                raise CycleParseError("nested '('", text, start)
            if empty_seen:
                raise CycleParseError("'()' must stand alone", text, start)
            current = []
        elif kind == "close":
            if current is None:
                raise CycleParseError("unmatched ')'", text, start)
            if expect_int:
                raise CycleParseError("expected a point after ','", text, start)
            if not current:
                if cycles:
                    raise CycleParseError("'()' must stand alone", text, start)
                empty_seen = True
            elif len(current) == 1:
                raise CycleParseError("a cycle needs at least two points", text, start)
            else:
                cycles.append(tuple(current))
            current = None
        elif kind == "int":
            if current is None:
                raise CycleParseError("point outside a cycle", text, start)
            value = int(m.group("int"))
            if value < 1:
                raise CycleParseError("points are numbered from 1", text, start)
            if value in seen:
                raise CycleParseError(f"point {value} repeated", text, start)
            seen[value] = start
            current.append(value)
            expect_int = False
        elif kind == "comma":
            if current is None or not current or expect_int:
                raise CycleParseError("misplaced ','", text, start)
            expect_int = True
        pos = m.end()
        if empty_seen and cycles:
            raise CycleParseError("'()' must stand alone", text, start)
    if current is not None:
        raise CycleParseError("unterminated cycle", text, len(text))
    if not cycles and not empty_seen:
        raise CycleParseError("empty expression (write '()' for the identity)", text, 0)
    return CycleExpression(text, tuple(cycles))


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse disjoint cycle notation into a permutation of ``{1..degree}``.

    ``degree`` defaults to the largest point mentioned.
    """
    return parse_expression(text).to_permutation(degree)


def parse_product(texts: Sequence[str], degree: int | None = None) -> Permutation:
    """Compose several expressions, leftmost outermost: ``p1 * p2 * ... * pk``.

    The rightmost factor is applied first.
    """
    if not texts:
        raise CycleParseError("empty product", "")
    exprs = [parse_expression(t) for t in texts]
    n = max(e.implied_degree for e in exprs) if degree is None else degree
    result = Permutation.identity(n)
    for e in exprs:
        result = compose(result, e.to_permutation(n))
    return result


def parse_element(text: str, degree: int | None = None) -> Permutation:
    """Like ``parse_cycles`` but also accepts ``*``-separated products."""
    parts = [t for t in text.split("*")]
    if len(parts) == 1:
        return parse_cycles(text, degree)
    return parse_product(parts, degree)


def parse_generators(text: str, degree: int | None = None) -> list[Permutation]:
    """Parse ``gen1;gen2;...`` into permutations sharing one degree."""
    parts = [t.strip() for t in text.split(";") if t.strip()]
    if not parts:
        raise CycleParseError("no generators given", text)
    if degree is None:
        degree = max(
            max(parse_expression(s).implied_degree for s in p.split("*")) for p in parts
        )
    return [parse_element(p, degree) for p in parts]


def render(p: Permutation) -> str:
    """Canonical cycle notation: each cycle starts at its least point, cycles sorted."""
    return str(p)

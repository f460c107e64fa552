"""Finite permutation groups with fully enumerated element sets.

Groups here are small (the interesting ones have order at most 120), so
every group carries its complete, canonically sorted element tuple and all
algorithms are plain enumeration.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable, Iterator, Sequence

from . import config
from .errors import (
    ConsistencyError,
    DegreeMismatchError,
    NotNormalError,
    NotSubgroupError,
    ResourceLimitError,
)
from .perm import Permutation

log = logging.getLogger(__name__)


class PermGroup:
    """A finite permutation group.

    Two groups compare equal iff they have the same degree and the same
    element set; generators are bookkeeping only.  ``elements`` is sorted
    lexicographically by image array, so the identity always comes first.
    """

    __slots__ = ("degree", "generators", "elements", "_members", "_hash")

    def __init__(self, degree: int, generators: Sequence[Permutation], elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(sorted(set(generators)))
        self.elements = tuple(sorted(elements))
        self._members = frozenset(self.elements)
        self._hash = hash((degree, self._members))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    def __contains__(self, p: object) -> bool:
        return p in self._members

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermGroup):
            return NotImplemented
        return self.degree == other.degree and self._members == other._members

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"<PermGroup order={self.order} degree={self.degree} gens=[{gens}]>"

    def __reduce__(self):
        return (PermGroup, (self.degree, self.generators, self.elements))

    @property
    def members(self) -> frozenset[Permutation]:
        return self._members

    def sort_key(self) -> tuple:
        """Deterministic ordering key: by order, then element list."""
        return (self.order, tuple(p._img for p in self.elements))

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for i, a in enumerate(gens) for b in gens[i + 1:])

    def conjugate(self, by: Permutation) -> PermGroup:
        """The subgroup ``by * self * by^-1``."""
        return PermGroup(
            self.degree,
            [g.conjugate(by) for g in self.generators],
            [e.conjugate(by) for e in self.elements],
        )

    def intersection(self, other: PermGroup) -> PermGroup:
        _check_degrees(self, other)
        return from_elements(self.degree, [e for e in self.elements if e in other._members])

    def is_normal_in(self, ambient: PermGroup) -> bool:
        return all(h.conjugate(g) in self._members for g in ambient.generators for h in self.generators)

    def extend(self, degree: int) -> PermGroup:
        """The same abstract group acting on ``{1..degree}`` (extra points fixed)."""
        if degree == self.degree:
            return self
        return PermGroup(
            degree,
            [g.extend(degree) for g in self.generators],
            [e.extend(degree) for e in self.elements],
        )


def _check_degrees(a: PermGroup, b: PermGroup) -> None:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"groups act on different degrees ({a.degree} vs {b.degree})")


def closure(
    generators: Iterable[Permutation],
    degree: int | None = None,
    cap: int | None = None,
) -> PermGroup:
    """Smallest group containing ``generators`` (breadth-first enumeration).

    ``degree`` is required only when ``generators`` is empty.  Raises
    ``ResourceLimitError`` as soon as the enumeration passes ``cap``.
    """
    gens = list(generators)
    if degree is None:
        if not gens:
            degree = 1
        else:
            degree = gens[0].degree
    for g in gens:
        if g.degree != degree:
            raise DegreeMismatchError(f"generator {g} has degree {g.degree}, expected {degree}")
    limit = config.order_cap(config.CLOSURE_CAP) if cap is None else cap
    gens = [g for g in set(gens) if not g.is_identity()]
    ident = Permutation.identity(degree)
    seen = {ident}
    queue = deque([ident])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = g * x
            if y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    raise ResourceLimitError("group closure", len(seen), limit)
                queue.append(y)
    return PermGroup(degree, gens, seen)


def from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """Wrap an element set already known to be a group; picks small generators."""
    elems = sorted(set(elements))
    if not elems:
        raise ValueError("a group needs at least the identity")
    members = set(elems)
    gens: list[Permutation] = []
    covered = {elems[0]}
    # Large-order elements first keeps generating sets short.
    for e in sorted(elems, key=lambda p: (-p.order(), p)):
        if e in covered:
            continue
        gens.append(e)
        try:
            covered = set(closure(gens, degree, cap=len(members)).elements)
        except ResourceLimitError:
            raise ConsistencyError("element set is not closed under multiplication") from None
        if len(covered) == len(members):
            break
    if covered != members:
        raise ConsistencyError("element set is not closed under multiplication")
    return PermGroup(degree, gens, elems)


def trivial_group(degree: int) -> PermGroup:
    return PermGroup(degree, [], [Permutation.identity(degree)])


def is_subgroup(h: PermGroup, g: PermGroup) -> bool:
    """True iff every element of ``h`` lies in ``g``."""
    if h.degree != g.degree:
        log.warning("is_subgroup: degree mismatch (%d vs %d)", h.degree, g.degree)
        return False
    if g.order % h.order:
        return False
    return h.members <= g.members


def _require_subgroup(h: PermGroup, g: PermGroup, what: str) -> None:
    if not is_subgroup(h, g):
        bad = next((x for x in h.generators if x not in g), None)
        detail = f" ({bad} is not in the ambient group)" if bad is not None else ""
        raise NotSubgroupError(f"{what}: argument is not a subgroup{detail}")


def normalizer(g: PermGroup, h: PermGroup) -> PermGroup:
    """``N_g(h) = {x in g : x h x^-1 = h}``."""
    _require_subgroup(h, g, "normalizer")
    hm = h.members
    elems = [x for x in g.elements if all(y.conjugate(x) in hm for y in h.generators)]
    return from_elements(g.degree, elems)


def centralizer(g: PermGroup, h: PermGroup) -> PermGroup:
    """``C_g(h)``: elements of ``g`` commuting with all of ``h``."""
    _require_subgroup(h, g, "centralizer")
    elems = [x for x in g.elements if all(x * y == y * x for y in h.generators)]
    return from_elements(g.degree, elems)


def center(g: PermGroup) -> PermGroup:
    return centralizer(g, g)


def subgroup_conjugacy_class(g: PermGroup, h: PermGroup) -> list[PermGroup]:
    """All distinct conjugates ``x h x^-1`` (``x`` in ``g``), sorted deterministically."""
    _require_subgroup(h, g, "subgroup_conjugacy_class")
    found: dict[frozenset, PermGroup] = {}
    for x in g.elements:
        c = h.conjugate(x)
        found.setdefault(c.members, c)
    out = sorted(found.values(), key=PermGroup.sort_key)
    index = g.order // normalizer(g, h).order
    if len(out) != index:
        raise ConsistencyError(f"orbit-stabilizer violated: {len(out)} conjugates, index {index}")
    return out


def product_set(a: PermGroup, b: PermGroup) -> set[Permutation]:
    _check_degrees(a, b)
    return {x * y for x in a.elements for y in b.elements}


class QuotientGroup:
    """The group of cosets ``ambient / kernel`` of a normal subgroup.

    Cosets are indexed ``0..order-1`` in the order of their canonical
    (smallest) representatives, so index 0 is the identity coset.
    """

    __slots__ = ("ambient", "kernel", "representatives", "cosets", "table", "_index", "_perm")

    def __init__(self, ambient: PermGroup, kernel: PermGroup):
        if not is_subgroup(kernel, ambient):
            raise NotSubgroupError("quotient: kernel is not a subgroup of the ambient group")
        for g in ambient.generators:
            for n in kernel.generators:
                c = n.conjugate(g)
                if c not in kernel:
                    raise NotNormalError(
                        f"quotient: kernel is not normal; {g} conjugates {n} to {c} outside the kernel"
                    )
        self.ambient = ambient
        self.kernel = kernel
        index: dict[Permutation, int] = {}
        blocks: list[tuple[Permutation, ...]] = []
        for x in ambient.elements:
            if x in index:
                continue
            block = tuple(sorted(x * n for n in kernel.elements))
            for y in block:
                index[y] = len(blocks)
            blocks.append(block)
        self.cosets = tuple(blocks)
        self.representatives = tuple(b[0] for b in blocks)
        self._index = index
        self.table = tuple(
            tuple(index[r * s] for s in self.representatives) for r in self.representatives
        )
        perms = [Permutation._raw(row) for row in self.table]
        gens = [perms[index[g]] for g in ambient.generators]
        self._perm = PermGroup(len(blocks), gens, perms)

    @property
    def order(self) -> int:
        return len(self.cosets)

    def coset_index(self, x: Permutation) -> int:
        return self._index[x]

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(len(t)) for j in range(i))

    def regular_element(self, i: int) -> Permutation:
        """Left multiplication by coset ``i`` as a permutation of coset indices."""
        return Permutation._raw(self.table[i])

    def as_perm_group(self) -> PermGroup:
        """Faithful left-regular representation on the cosets (degree = order)."""
        return self._perm

    def image(self, sub: PermGroup) -> PermGroup:
        """Image of a subgroup of ``ambient`` inside ``as_perm_group()``."""
        idx = sorted({self._index[x] for x in sub.elements})
        return from_elements(self.order, [self.regular_element(i) for i in idx])

    def __repr__(self) -> str:
        return f"<QuotientGroup order={self.order} ({self.ambient.order}/{self.kernel.order})>"


def quotient(h: PermGroup, n: PermGroup) -> QuotientGroup:
    return QuotientGroup(h, n)


def join(a: PermGroup, extra: Iterable[Permutation], cap: int | None = None) -> PermGroup:
    return closure(list(a.generators) + list(extra), a.degree, cap=cap)


def cyclic_subgroups(g: PermGroup) -> list[PermGroup]:
    found: dict[frozenset, PermGroup] = {}
    for x in g.elements:
        c = closure([x], g.degree)
        found.setdefault(c.members, c)
    return sorted(found.values(), key=PermGroup.sort_key)


def all_subgroups(g: PermGroup, cap: int | None = None) -> list[PermGroup]:
    """Every subgroup of ``g`` exactly once, sorted by (order, elements).

    Starts from the cyclic subgroups and keeps joining known subgroups with
    cyclic ones until nothing new appears.  Any subgroup is the join of the
    cyclic subgroups of its elements, so the fixpoint is complete.
    """
    limit = config.order_cap(config.SUBGROUP_CAP) if cap is None else cap
    if g.order > limit:
        raise ResourceLimitError("all_subgroups", g.order, limit)
    cyclic = cyclic_subgroups(g)
    known: dict[frozenset, PermGroup] = {c.members: c for c in cyclic}
    frontier = list(known.values())
    while frontier:
        new: list[PermGroup] = []
        for h in frontier:
            for c in cyclic:
                x = c.generators[0] if c.generators else None
                if x is None or x in h:
                    continue
                j = join(h, [x], cap=g.order)
                if j.members not in known:
                    known[j.members] = j
                    new.append(j)
        frontier = new
    return sorted(known.values(), key=PermGroup.sort_key)

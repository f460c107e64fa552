"""Isomorphism testing and naming for small groups.

``is_isomorphic`` filters on cheap invariants first and then searches for
generator images by backtracking; every candidate map is checked to be a
bijective homomorphism before it is accepted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Union

from . import config
from .errors import ResourceLimitError
from .groups import PermGroup, QuotientGroup, all_subgroups, closure
from .perm import Permutation

GroupLike = Union[PermGroup, QuotientGroup]

# subgroup-order multisets are only computed below this order
_SUBGROUP_FINGERPRINT_LIMIT = 24


def as_perm_group(g: GroupLike) -> PermGroup:
    if isinstance(g, QuotientGroup):
        return g.as_perm_group()
    return g


@dataclass(frozen=True)
class IsoFingerprint:
    order: int
    abelian: bool
    element_orders: tuple[tuple[int, int], ...]
    subgroup_orders: tuple[int, ...] | None = None


def fingerprint(g: GroupLike) -> IsoFingerprint:
    g = as_perm_group(g)
    hist = Counter(x.order() for x in g.elements)
    subs = None
    if g.order <= _SUBGROUP_FINGERPRINT_LIMIT:
        subs = tuple(sorted(h.order for h in all_subgroups(g, cap=g.order)))
    return IsoFingerprint(g.order, g.is_abelian(), tuple(sorted(hist.items())), subs)


def _irredundant_generators(g: PermGroup) -> list[Permutation]:
    """A generating set where no generator lies in the span of the earlier ones."""
    gens: list[Permutation] = []
    span = {g.identity}
    for x in sorted(g.elements, key=lambda p: (-p.order(), p)):
        if x in span:
            continue
        gens.append(x)
        span = set(closure(gens, g.degree, cap=g.order).elements)
        if len(span) == g.order:
            break
    return gens


def _extend_to_map(
    g: PermGroup, gens: list[Permutation], images: list[Permutation]
) -> dict[Permutation, Permutation] | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism of ``g``; None if inconsistent."""
    ident_h = images[0] * images[0].inverse() if images else None
    if ident_h is None:
        return None
    phi = {g.identity: ident_h}
    queue = [g.identity]
    for x in queue:
        fx = phi[x]
        for s, t in zip(gens, images):
            y = s * x
            fy = t * fx
            known = phi.get(y)
            if known is None:
                phi[y] = fy
                queue.append(y)
            elif known != fy:
                return None
    return phi


def find_isomorphism(g: GroupLike, h: GroupLike) -> dict[Permutation, Permutation] | None:
    """An explicit isomorphism ``g -> h`` as an element map, or None."""
    g, h = as_perm_group(g), as_perm_group(h)
    if g.order != h.order:
        return None
    cap = config.order_cap(config.ISOMORPHISM_CAP)
    if g.order > cap:
        raise ResourceLimitError("is_isomorphic", g.order, cap)
    if g.order == 1:
        return {g.identity: h.identity}
    if fingerprint(g) != fingerprint(h):
        return None

    gens = _irredundant_generators(g)
    by_order: dict[int, list[Permutation]] = {}
    for y in h.elements:
        by_order.setdefault(y.order(), []).append(y)
    candidates = [by_order.get(s.order(), []) for s in gens]
    # orders of pairwise products are preserved by any isomorphism
    pair_orders = {(i, j): (gens[i] * gens[j]).order() for i in range(len(gens)) for j in range(i)}

    chosen: list[Permutation] = []

    def search(k: int) -> dict[Permutation, Permutation] | None:
        if k == len(gens):
            phi = _extend_to_map(g, gens, chosen)
            if phi is not None and len(set(phi.values())) == g.order:
                return phi
            return None
        span = set(closure(chosen, h.degree, cap=h.order).elements)
        for y in candidates[k]:
            if y in span:
                continue
            if any((y * chosen[j]).order() != pair_orders[(k, j)] for j in range(k)):
                continue
            chosen.append(y)
            found = search(k + 1)
            if found is not None:
                return found
            chosen.pop()
        return None

    return search(0)


def is_isomorphic(g: GroupLike, h: GroupLike) -> bool:
    return find_isomorphism(g, h) is not None


def is_isomorphism(phi: dict[Permutation, Permutation], g: PermGroup, h: PermGroup) -> bool:
    """Brute-force verification that ``phi`` is a bijective homomorphism."""
    if set(phi) != g.members or set(phi.values()) != h.members:
        return False
    return all(phi[a * b] == phi[a] * phi[b] for a in g.elements for b in g.elements)


# name, degree, generators as disjoint cycles
_REFERENCE_TABLE: tuple[tuple[str, int, tuple[tuple[tuple[int, ...], ...], ...]], ...] = (
    ("1", 1, ()),
    ("Z2", 2, (((1, 2),),)),
    ("Z3", 3, (((1, 2, 3),),)),
    ("Z4", 4, (((1, 2, 3, 4),),)),
    ("V4", 4, (((1, 2), (3, 4)), ((1, 3), (2, 4)))),
    ("Z5", 5, (((1, 2, 3, 4, 5),),)),
    ("Z6", 6, (((1, 2, 3, 4, 5, 6),),)),
    ("S3", 3, (((1, 2, 3),), ((1, 2),))),
    ("Z7", 7, (((1, 2, 3, 4, 5, 6, 7),),)),
    ("Z8", 8, (((1, 2, 3, 4, 5, 6, 7, 8),),)),
    ("Z4xZ2", 6, (((1, 2, 3, 4),), ((5, 6),))),
    ("Z2^3", 6, (((1, 2),), ((3, 4),), ((5, 6),))),
    ("D4", 4, (((1, 2, 3, 4),), ((1, 3),))),
    ("Q8", 8, (((1, 2, 3, 4), (5, 6, 7, 8)), ((1, 5, 3, 7), (2, 8, 4, 6)))),
    ("Z9", 9, (((1, 2, 3, 4, 5, 6, 7, 8, 9),),)),
    ("Z3xZ3", 6, (((1, 2, 3),), ((4, 5, 6),))),
    ("Z10", 7, (((1, 2, 3, 4, 5),), ((6, 7),))),
    ("D5", 5, (((1, 2, 3, 4, 5),), ((2, 5), (3, 4)))),
    ("Z12", 7, (((1, 2, 3, 4),), ((5, 6, 7),))),
    ("Z6xZ2", 7, (((1, 2, 3),), ((4, 5),), ((6, 7),))),
    ("A4", 4, (((1, 2, 3),), ((1, 2), (3, 4)))),
    ("D6", 6, (((1, 2, 3, 4, 5, 6),), ((2, 6), (3, 5)))),
    ("Dic3", 7, (((1, 2, 3),), ((2, 3), (4, 5, 6, 7)))),
    ("S4", 4, (((1, 2, 3, 4),), ((1, 2),))),
    ("F20", 5, (((1, 2, 3, 4, 5),), ((2, 3, 5, 4),))),
    ("Z7:Z3", 7, (((1, 2, 3, 4, 5, 6, 7),), ((2, 3, 5), (4, 7, 6)))),
    ("A5", 5, (((1, 2, 3, 4, 5),), ((1, 2, 3),))),
    ("S5", 5, (((1, 2, 3, 4, 5),), ((1, 2),))),
)


def _build_references() -> tuple[tuple[str, PermGroup, IsoFingerprint], ...]:
    out = []
    for name, degree, gens in _REFERENCE_TABLE:
        perms = [Permutation.from_cycles(c, degree) for c in gens]
        g = closure(perms, degree)
        out.append((name, g, fingerprint(g)))
    return tuple(out)


# built once at import; read-only afterwards
_REFERENCES = _build_references()


def reference_groups() -> tuple[tuple[str, PermGroup], ...]:
    return tuple((name, g) for name, g, _ in _REFERENCES)


def named_iso_class(g: GroupLike) -> str:
    """Short label such as ``"Z2"``, ``"S3"``, ``"A4"``; ``"1"`` for the trivial group.

    Groups matching no reference (or too large to test) get
    ``"order-N-unrecognized"``.
    """
    g = as_perm_group(g)
    if g.order == 1:
        return "1"
    if g.order <= config.order_cap(config.ISOMORPHISM_CAP):
        fp = fingerprint(g)
        for name, ref, ref_fp in _REFERENCES:
            if ref_fp == fp and is_isomorphic(g, ref):
                return name
    return f"order-{g.order}-unrecognized"

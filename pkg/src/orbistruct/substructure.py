"""Suborbifold structures of single-chart group-algebra orbifolds.

A chain ``delta <= b <= gamma`` gives nested charts
``R[delta] ⊂ R[b] ⊂ R[gamma]`` with ``gamma`` acting by conjugation.  All
structures are evaluated at the origin of the chart.

Saturation is decided on supports instead of on the (uncountable) vector
space.  Conjugation permutes basis elements, so whether ``x . y`` lies in
``R[h]`` depends only on ``supp(y)``.  If ``y`` has pairwise distinct
coefficients then ``x . y = l . y`` forces ``x s x^-1 = l s l^-1`` for every
``s`` in the support, and that exact matching implies matching for any
repeated-coefficient vector with the same support.  So ``(Λ, h)`` is
saturated in ``g`` iff for every support ``S ⊆ h`` and every ``x`` in ``g``
with ``x S x^-1 ⊆ h`` some ``l`` in ``Λ`` agrees with ``x`` by conjugation on
all of ``S``.  Enlarging ``S`` only makes this harder, so for fixed ``x`` it
suffices to test the largest admissible support
``D_x = {s in h : x s x^-1 in h}``; the exhaustive variant over all ``2^|h|``
supports is kept for cross-checking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .algebra import AlgebraVector, SubalgebraSpan, conjugation_act, orbit, subspace_stabilizer
from .errors import ChainError, ConsistencyError, NotSubgroupError, ResourceLimitError
from .groups import (
    PermGroup,
    QuotientGroup,
    all_subgroups,
    center,
    centralizer,
    from_elements,
    is_subgroup,
    normalizer,
    trivial_group,
)
from .iso import is_isomorphic, named_iso_class
from .perm import Permutation

# 2^20 supports per element is the most the exhaustive saturation check will try
EXHAUSTIVE_SUPPORT_LIMIT = 20


@dataclass(frozen=True)
class SubgroupChain:
    gamma: PermGroup
    b: PermGroup
    delta: PermGroup

    def __post_init__(self):
        if not (self.gamma.degree == self.b.degree == self.delta.degree):
            raise ChainError("chain groups must act on the same degree")
        if not is_subgroup(self.b, self.gamma):
            bad = next((x for x in self.b.generators if x not in self.gamma), None)
            raise ChainError(f"B is not a subgroup of Gamma (generator {bad} lies outside Gamma)")
        if not is_subgroup(self.delta, self.b):
            bad = next((x for x in self.delta.generators if x not in self.b), None)
            raise ChainError(f"Delta is not a subgroup of B (generator {bad} lies outside B)")

    @property
    def delta_nontrivial(self) -> bool:
        return self.delta.order > 1

    @property
    def delta_proper(self) -> bool:
        return self.delta.order < self.b.order

    @property
    def b_proper(self) -> bool:
        return self.b.order < self.gamma.order

    @property
    def is_proper(self) -> bool:
        """``{e} ⊊ Δ ⊊ B ⊊ Γ``."""
        return self.delta_nontrivial and self.delta_proper and self.b_proper

    def conjugate(self, by: Permutation) -> SubgroupChain:
        return SubgroupChain(self.gamma, self.b.conjugate(by), self.delta.conjugate(by))


def _require_lambda(g: PermGroup, h: PermGroup, lam: PermGroup) -> None:
    if not is_subgroup(h, g):
        raise NotSubgroupError("the spanning subgroup is not a subgroup of the acting group")
    if not is_subgroup(lam, g):
        raise NotSubgroupError("Λ is not a subgroup of the acting group")
    hm = h.members
    for x in lam.elements:
        for s in h.generators:
            if s.conjugate(x) not in hm:
                raise NotSubgroupError(
                    f"Λ does not stabilize the span: {x} conjugates {s} to {s.conjugate(x)}"
                )


def canonical_lambda(g: PermGroup, h: PermGroup) -> PermGroup:
    """The full stabilizer of ``R[h]`` in ``g``; checked against the normalizer."""
    stab = subspace_stabilizer(g, SubalgebraSpan(g, h))
    if stab != normalizer(g, h):
        raise ConsistencyError("stabilizer of the span differs from the normalizer")
    return stab


@dataclass(frozen=True)
class SuborbifoldModel:
    ambient: PermGroup
    span: SubalgebraSpan
    lam: PermGroup
    omega: PermGroup
    isotropy: QuotientGroup


def suborbifold(g: PermGroup, h: PermGroup, lam: PermGroup) -> SuborbifoldModel:
    _require_lambda(g, h, lam)
    omega = lam.intersection(centralizer(g, h))
    return SuborbifoldModel(g, SubalgebraSpan(g, h), lam, omega, QuotientGroup(lam, omega))


def intrinsic_isotropy(g: PermGroup, h: PermGroup, lam: PermGroup) -> QuotientGroup:
    """``Λ / Ω`` with ``Ω`` the part of ``Λ`` fixing ``R[h]`` pointwise."""
    return suborbifold(g, h, lam).isotropy


def gamma_Q_P_direct(chain: SubgroupChain) -> QuotientGroup:
    """Isotropy of ``R[Δ]`` as a canonical suborbifold of ``R[B] / Γ_P``.

    ``Γ_P = N(B)/C(B)`` is built as an explicit coset group; each coset acts
    on ``R[Δ]`` through any of its members.  The stabilizer and pointwise
    fixer of ``R[Δ]`` are read off inside ``Γ_P`` and the quotient is taken in
    the regular representation of ``Γ_P``.
    """
    g, b, d = chain.gamma, chain.b, chain.delta
    gp = QuotientGroup(normalizer(g, b), centralizer(g, b))
    w = SubalgebraSpan(g, d)
    basis = [AlgebraVector.basis(g, x) for x in d.elements]

    stab_idx, fix_idx = [], []
    for i, coset in enumerate(gp.cosets):
        results = set()
        for x in coset:
            images = [conjugation_act(x, e) for e in basis]
            results.add((all(w.contains(v) for v in images), images == basis))
        if len(results) != 1:
            raise ConsistencyError("action of Γ_P on R[Δ] depends on the coset representative")
        stabilizes, fixes = results.pop()
        if stabilizes:
            stab_idx.append(i)
        if fixes:
            fix_idx.append(i)

    stab = from_elements(gp.order, [gp.regular_element(i) for i in stab_idx])
    fix = from_elements(gp.order, [gp.regular_element(i) for i in fix_idx])
    return QuotientGroup(stab, fix)


def gamma_Q_P_formula(chain: SubgroupChain) -> QuotientGroup:
    """``[(N(Δ) ∩ N(B)) · C(Δ)] / C(Δ)`` computed from normalizers and centralizers."""
    g, b, d = chain.gamma, chain.b, chain.delta
    n_d = normalizer(g, d)
    c_d = centralizer(g, d)
    inter = n_d.intersection(normalizer(g, b))
    prod = {x * y for x in inter.elements for y in c_d.elements}
    closed = all(x * y in prod for x in prod for y in inter.generators + c_d.generators)
    if not closed or g.order % len(prod):
        raise ConsistencyError("(N(Δ) ∩ N(B))·C(Δ) is not a subgroup")
    return QuotientGroup(from_elements(g.degree, prod), c_d)


class SplitResult(NamedTuple):
    split: bool
    complement: PermGroup | None


def find_complement(lam: PermGroup, omega: PermGroup) -> PermGroup | None:
    """A subgroup ``H <= Λ`` with ``H ∩ Ω = {e}`` and ``|H| = |Λ/Ω|``, if one exists."""
    if omega.order == 1:
        return lam
    if omega.order == lam.order:
        return trivial_group(lam.degree)
    want = lam.order // omega.order
    om = omega.members
    for h in all_subgroups(lam):
        if h.order == want and not any(x in om for x in h.elements[1:]):
            return h
    return None


@dataclass(frozen=True)
class ExactSequence:
    """``1 -> Ω -> Λ -> Λ/Ω -> 1`` with its splitting data."""

    omega: PermGroup
    lam: PermGroup
    quotient: QuotientGroup
    split: bool
    complement: PermGroup | None


def exact_sequence(lam: PermGroup, omega: PermGroup) -> ExactSequence:
    q = QuotientGroup(lam, omega)
    if q.order * omega.order != lam.order:
        raise ConsistencyError("|Λ| != |Ω|·|Λ/Ω|")
    h = find_complement(lam, omega)
    return ExactSequence(omega, lam, q, h is not None, h)


def is_split(seq: ExactSequence) -> SplitResult:
    h = find_complement(seq.lam, seq.omega)
    return SplitResult(h is not None, h)


class SaturationResult(NamedTuple):
    saturated: bool
    witness: tuple[Permutation, tuple[Permutation, ...]] | None  # (γ, S)


def _violations(g: PermGroup, h: PermGroup, lam: PermGroup):
    """Per violating γ: (γ, D_γ, [D_γ minus agreement set of each λ])."""
    hm = h.members
    out = []
    for x in g.elements:
        target = {}
        for s in h.elements:
            t = s.conjugate(x)
            if t in hm:
                target[s] = t
        misses = []
        for l in lam.elements:
            miss = frozenset(s for s, t in target.items() if s.conjugate(l) != t)
            if not miss:
                break
            misses.append(miss)
        else:
            out.append((x, tuple(sorted(target)), misses))
    return out


def _minimal_hitting_witness(violations) -> tuple[Permutation, tuple[Permutation, ...]]:
    for k in itertools.count(1):
        best = None
        for x, dom, misses in violations:
            if k > len(dom):
                continue
            for combo in itertools.combinations(dom, k):
                cs = set(combo)
                if all(cs & m for m in misses):
                    key = (combo, x)
                    if best is None or key < best:
                        best = key
                    break
        if best is not None:
            return best[1], best[0]
    raise AssertionError("unreachable")


def _exhaustive(g: PermGroup, h: PermGroup, lam: PermGroup) -> SaturationResult:
    n = h.order
    if n > EXHAUSTIVE_SUPPORT_LIMIT:
        raise ResourceLimitError("exhaustive saturation supports (|h|)", n, EXHAUSTIVE_SUPPORT_LIMIT)
    elems = h.elements
    pos = {s: i for i, s in enumerate(elems)}
    hm = h.members
    best = None
    for x in g.elements:
        dmask = 0
        conj = {}
        for s in elems:
            t = s.conjugate(x)
            if t in hm:
                dmask |= 1 << pos[s]
                conj[s] = t
        amasks = []
        for l in lam.elements:
            a = 0
            for s, t in conj.items():
                if s.conjugate(l) == t:
                    a |= 1 << pos[s]
            amasks.append(a)
        for mask in range(1 << n):
            if mask & ~dmask:
                continue
            if any(mask & ~a == 0 for a in amasks):
                continue
            support = tuple(elems[i] for i in range(n) if mask >> i & 1)
            key = (len(support), support, x)
            if best is None or key < best:
                best = key
    if best is None:
        return SaturationResult(True, None)
    return SaturationResult(False, (best[2], best[1]))


def is_saturated(g: PermGroup, h: PermGroup, lam: PermGroup, exhaustive: bool = False) -> SaturationResult:
    """Decide saturation of ``(Λ, R[h])`` inside ``R[g] / g``.

    On failure the witness ``(γ, S)`` is the lexicographically least by
    ``(|S|, S, γ)``: a generic vector supported on ``S`` has a ``γ``-image in
    ``R[h]`` that no element of ``Λ`` reproduces.
    """
    _require_lambda(g, h, lam)
    if exhaustive:
        return _exhaustive(g, h, lam)
    bad = _violations(g, h, lam)
    if not bad:
        return SaturationResult(True, None)
    return SaturationResult(False, _minimal_hitting_witness(bad))


def saturation_counterexample(
    g: PermGroup, h: PermGroup, lam: PermGroup, y: AlgebraVector
) -> AlgebraVector | None:
    """Check the saturation condition literally at one point ``y`` of ``R[h]``.

    Returns an element of ``(g·y) ∩ R[h]`` missing from ``Λ·y``, or None.
    """
    span = SubalgebraSpan(g, h)
    if not span.contains(y):
        raise ValueError("the test point must lie in the span")
    inside = {v for v in orbit(g.elements, y) if span.contains(v)}
    extra = inside - orbit(lam.elements, y)
    return min(extra, key=lambda v: sorted(v.support)) if extra else None


def verify_saturation_witness(
    g: PermGroup, h: PermGroup, lam: PermGroup, gamma: Permutation, support
) -> bool:
    """Replay a witness on a generic symbolic vector supported on ``support``."""
    y = AlgebraVector.generic(g, support)
    moved = conjugation_act(gamma, y)
    if not SubalgebraSpan(g, h).contains(moved):
        return False
    return moved not in orbit(lam.elements, y)


def is_full(g: PermGroup, lam: PermGroup) -> bool:
    return lam == g


@dataclass
class StructureSummary:
    """One suborbifold structure: Λ, Ω, the intrinsic isotropy and its flags."""

    label: str
    lam: PermGroup
    omega: PermGroup
    isotropy: QuotientGroup
    isotropy_label: str
    canonical: bool  # Λ·C(h) = N(h): same action on the chart as the full stabilizer
    lambda_is_stabilizer: bool  # Λ = N(h) as groups
    full: bool
    saturated: bool
    saturation_witness: tuple[Permutation, tuple[Permutation, ...]] | None
    split: bool
    complement: PermGroup | None


def acts_canonically(g: PermGroup, h: PermGroup, lam: PermGroup) -> bool:
    """True iff ``Λ`` induces the same transformations of ``R[h]`` as ``N(h)``.

    Elements of ``C(h)`` act trivially on ``R[h]``, so this is ``Λ·C(h) = N(h)``.
    """
    n_h = normalizer(g, h)
    c_h = centralizer(g, h)
    return len({x * y for x in lam.elements for y in c_h.elements}) == n_h.order


def _summarize(name: str, g: PermGroup, h: PermGroup, lam: PermGroup) -> StructureSummary:
    model = suborbifold(g, h, lam)
    seq = exact_sequence(model.lam, model.omega)
    sat = is_saturated(g, h, lam)
    return StructureSummary(
        label=name,
        lam=lam,
        omega=model.omega,
        isotropy=model.isotropy,
        isotropy_label=named_iso_class(model.isotropy),
        canonical=acts_canonically(g, h, lam),
        lambda_is_stabilizer=lam == normalizer(g, h),
        full=is_full(g, lam),
        saturated=sat.saturated,
        saturation_witness=sat.witness,
        split=seq.split,
        complement=seq.complement,
    )


@dataclass
class InheritanceReport:
    chain: SubgroupChain
    centerless: bool
    p_in_o: StructureSummary
    q_in_o: StructureSummary
    q_in_p: StructureSummary
    q_p_in_o: StructureSummary
    gamma_Q_P_route1: QuotientGroup
    gamma_Q_P_route2: QuotientGroup
    route1_label: str
    route2_label: str
    routes_agree: bool
    canonical_compatible: bool
    q_equal_as_subquotients: bool
    custom_q: StructureSummary | None = None
    warnings: list[str] = field(default_factory=list)

    @property
    def gamma_P_O(self) -> QuotientGroup:
        return self.p_in_o.isotropy

    @property
    def gamma_Q_O(self) -> QuotientGroup:
        return self.q_in_o.isotropy

    @property
    def P_saturated_in_O(self) -> bool:
        return self.p_in_o.saturated

    @property
    def P_split_in_O(self) -> bool:
        return self.p_in_o.split

    @property
    def Q_split_in_O(self) -> bool:
        return self.q_in_o.split


def analyze_chain(
    chain: SubgroupChain,
    require_centerless: bool = True,
    custom_lambda: PermGroup | None = None,
) -> InheritanceReport:
    """Classify every inherited structure of the chain ``Q ⊂ P ⊂ O``.

    * ``p_in_o``: ``R[B]`` in ``O`` with Λ = N(B).
    * ``q_in_o``: ``R[Δ]`` in ``O`` with Λ = N(Δ).
    * ``q_in_p``: ``R[Δ]`` in ``P`` with Λ = Stab of ``R[Δ]`` in ``Γ_P``,
      evaluated in the regular representation of ``Γ_P``.
    * ``q_p_in_o``: ``R[Δ]`` in ``O`` with Λ = N(Δ) ∩ N(B), the structure of
      ``Q^P`` realized directly inside ``O``.
    * ``custom_q``: ``R[Δ]`` in ``O`` with a caller-supplied Λ.
    """
    g, b, d = chain.gamma, chain.b, chain.delta
    warnings: list[str] = []
    centerless = center(g).order == 1
    if not centerless:
        if require_centerless:
            raise ChainError("Γ has a nontrivial center, so its conjugation action is not effective")
        warnings.append("Γ has a nontrivial center; the conjugation action is not effective")
    if not chain.is_proper:
        warnings.append("chain is not proper ({e} ⊊ Δ ⊊ B ⊊ Γ fails)")

    n_b = canonical_lambda(g, b)
    n_d = canonical_lambda(g, d)
    p_in_o = _summarize("P in O", g, b, n_b)
    q_in_o = _summarize("Q^O in O", g, d, n_d)

    route1 = gamma_Q_P_direct(chain)
    route2 = gamma_Q_P_formula(chain)

    q_in_p = _q_in_p_summary(chain, n_b, route1)

    lam_qp = n_d.intersection(n_b)
    q_p_in_o = _summarize("Q^P in O", g, d, lam_qp)

    custom = None
    if custom_lambda is not None:
        custom = _summarize("Q in O (custom Λ)", g, d, custom_lambda)

    return InheritanceReport(
        chain=chain,
        centerless=centerless,
        p_in_o=p_in_o,
        q_in_o=q_in_o,
        q_in_p=q_in_p,
        q_p_in_o=q_p_in_o,
        gamma_Q_P_route1=route1,
        gamma_Q_P_route2=route2,
        route1_label=named_iso_class(route1),
        route2_label=named_iso_class(route2),
        routes_agree=is_isomorphic(route1, route2),
        canonical_compatible=is_isomorphic(q_in_o.isotropy, route1),
        q_equal_as_subquotients=route2.ambient == q_in_o.isotropy.ambient,
        custom_q=custom,
        warnings=warnings,
    )


def _q_in_p_summary(chain: SubgroupChain, n_b: PermGroup, route1: QuotientGroup) -> StructureSummary:
    """Q^P as a canonical suborbifold of P.

    Λ and Ω are the stabilizer and pointwise fixer of ``R[Δ]`` inside the
    regular representation of ``Γ_P`` (as built by ``gamma_Q_P_direct``).
    ``Γ_P`` acts on ``R[B]`` through ``N(B)``, so its orbits on ``R[Δ]`` are
    ``N(B)``-orbits and saturation is tested with ``N(B)`` acting and
    ``N(Δ) ∩ N(B)`` as Λ; a witness γ is an element of ``N(B)``.
    """
    d = chain.delta
    lam, omega = route1.ambient, route1.kernel
    seq = exact_sequence(lam, omega)
    sat = is_saturated(n_b, d, normalizer(n_b, d))
    gp_order = n_b.order // centralizer(chain.gamma, chain.b).order
    return StructureSummary(
        label="Q^P in P",
        lam=lam,
        omega=omega,
        isotropy=route1,
        isotropy_label=named_iso_class(route1),
        canonical=True,
        lambda_is_stabilizer=True,
        full=lam.order == gp_order,
        saturated=sat.saturated,
        saturation_witness=sat.witness,
        split=seq.split,
        complement=seq.complement,
    )

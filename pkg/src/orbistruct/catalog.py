"""Named small groups and exhaustive sweeps over their subgroup chains."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import config
from .cycles import parse_generators
from .errors import OrbistructError, ResourceLimitError
from .groups import PermGroup, all_subgroups, center, closure, normalizer
from .substructure import InheritanceReport, SubgroupChain, analyze_chain

log = logging.getLogger(__name__)


class CatalogError(OrbistructError, ValueError):
    pass


@dataclass(frozen=True)
class GroupCatalogEntry:
    name: str
    degree: int
    generators: tuple[str, ...]
    expected_order: int

    def build(self, degree: int | None = None) -> PermGroup:
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise CatalogError(f"{self.name} needs degree >= {self.degree}, got {n}")
        gens = parse_generators(";".join(self.generators), self.degree) if self.generators else []
        return closure(gens, self.degree).extend(n)


def parse_manifest(text: str) -> dict[str, GroupCatalogEntry]:
    """Parse ``name degree gen1;gen2;...`` lines and validate each entry's order."""
    entries: dict[str, GroupCatalogEntry] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split(None, 2)
        if len(parts) != 3:
            raise CatalogError(f"line {lineno}: expected 'name degree generators'")
        name, degree_s, gens_s = parts
        try:
            degree = int(degree_s)
        except ValueError:
            raise CatalogError(f"line {lineno}: degree {degree_s!r} is not an integer") from None
        if name in entries:
            raise CatalogError(f"line {lineno}: duplicate entry {name!r}")
        gens = tuple(g.strip() for g in gens_s.split(";") if g.strip() and g.strip() != "()")
        try:
            perms = parse_generators(";".join(gens), degree) if gens else []
        except ValueError as exc:
            raise CatalogError(f"line {lineno}: {exc}") from None
        order = closure(perms, degree).order
        entries[name] = GroupCatalogEntry(name, degree, gens, order)
    return entries


def load_manifest(path: str | Path) -> dict[str, GroupCatalogEntry]:
    return parse_manifest(Path(path).read_text())


def _builtin_text() -> str:
    return resources.files("orbistruct").joinpath("data/catalog.txt").read_text()


# the shipped manifest, parsed and validated at import
BUILTIN_CATALOG: dict[str, GroupCatalogEntry] = parse_manifest(_builtin_text())


def get_entry(name: str) -> GroupCatalogEntry:
    try:
        return BUILTIN_CATALOG[name]
    except KeyError:
        raise CatalogError(f"unknown catalog group {name!r}; try 'catalog list'") from None


def get_group(name: str, degree: int | None = None) -> PermGroup:
    return get_entry(name).build(degree)


@dataclass(frozen=True)
class ChainClass:
    """A chain representative and the size of its simultaneous-conjugacy class."""

    chain: SubgroupChain
    class_size: int


def _subgroup_classes(g: PermGroup, subs: list[PermGroup]) -> list[list[PermGroup]]:
    seen: set[frozenset] = set()
    classes = []
    for h in subs:
        if h.members in seen:
            continue
        cls: dict[frozenset, PermGroup] = {}
        for x in g.elements:
            c = h.conjugate(x)
            cls.setdefault(c.members, c)
        seen.update(cls)
        classes.append(sorted(cls.values(), key=PermGroup.sort_key))
    return classes


def enumerate_chains(g: PermGroup) -> list[ChainClass]:
    """Proper chains ``{e} ⊊ Δ ⊊ B ⊊ g`` up to simultaneous conjugation.

    Pairs ``(Δ, B)`` up to ``g``-conjugacy correspond to ``B`` up to
    conjugacy together with ``Δ`` up to ``N_g(B)``-conjugacy.  Each
    representative is the least member of its class.
    """
    limit = config.order_cap(config.CHAIN_CAP)
    if g.order > limit:
        raise ResourceLimitError("enumerate_chains", g.order, limit)
    subs = all_subgroups(g)
    out: list[ChainClass] = []
    for b_class in _subgroup_classes(g, subs):
        b = b_class[0]
        if b.order == g.order or b.order == 1:
            continue
        n_b = normalizer(g, b)
        inner = [d for d in subs if 1 < d.order < b.order and d.members <= b.members]
        for d_class in _subgroup_classes(n_b, inner):
            d = d_class[0]
            out.append(ChainClass(SubgroupChain(g, b, d), len(b_class) * len(d_class)))
    return out


@dataclass
class SweepResult:
    group_name: str
    group: PermGroup
    entries: list[tuple[ChainClass, InheritanceReport]]
    warnings: list[str] = field(default_factory=list)

    @property
    def reports(self) -> list[InheritanceReport]:
        return [r for _, r in self.entries]

    def summary(self) -> dict[str, int]:
        reps = self.reports
        return {
            "total_chains": len(reps),
            "incompatible": sum(not r.canonical_compatible for r in reps),
            "non_saturated": sum(not r.p_in_o.saturated for r in reps),
            "non_split": sum(not r.p_in_o.split for r in reps),
            "q_non_saturated": sum(not r.q_in_o.saturated for r in reps),
            "q_non_split": sum(not r.q_in_o.split for r in reps),
            "route_mismatches": sum(not r.routes_agree for r in reps),
        }


def _analyze(chain: SubgroupChain) -> InheritanceReport:
    return analyze_chain(chain, require_centerless=False)


def sweep(g: PermGroup, name: str = "", workers: int | None = None) -> SweepResult:
    """Analyze every chain class of ``g``; results keep the enumeration order.

    With ``workers > 1`` analyses run in a process pool.
    """
    warnings = []
    if center(g).order > 1:
        warnings.append("group has a nontrivial center; the conjugation action is not effective")
    classes = enumerate_chains(g)
    chains = [c.chain for c in classes]
    if workers and workers > 1 and len(chains) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_analyze, chains))
    else:
        reports = [_analyze(c) for c in chains]
    return SweepResult(name, g, list(zip(classes, reports)), warnings)

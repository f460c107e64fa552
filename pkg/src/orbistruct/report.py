"""JSON and text rendering of analyses and sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any

from .groups import PermGroup, QuotientGroup
from .iso import named_iso_class
from .substructure import InheritanceReport, StructureSummary

SCHEMA_VERSION = "1.0"


def group_dict(g: PermGroup, label: bool = False) -> dict[str, Any]:
    out: dict[str, Any] = {
        "order": g.order,
        "degree": g.degree,
        "generators": [str(x) for x in g.generators],
    }
    if label:
        out["label"] = named_iso_class(g)
    return out


def quotient_dict(q: QuotientGroup, label: str | None = None) -> dict[str, Any]:
    return {
        "label": label if label is not None else named_iso_class(q),
        "order": q.order,
        "abelian": q.is_abelian(),
        "numerator_order": q.ambient.order,
        "kernel_order": q.kernel.order,
    }


def structure_dict(s: StructureSummary) -> dict[str, Any]:
    witness = None
    if s.saturation_witness is not None:
        gamma, support = s.saturation_witness
        witness = {"gamma": str(gamma), "support": [str(x) for x in support]}
    return {
        "label": s.label,
        "lambda": group_dict(s.lam),
        "omega": group_dict(s.omega),
        "isotropy": quotient_dict(s.isotropy, s.isotropy_label),
        "canonical": s.canonical,
        "lambda_is_stabilizer": s.lambda_is_stabilizer,
        "full": s.full,
        "saturated": s.saturated,
        "saturation_witness": witness,
        "split": s.split,
        "complement": group_dict(s.complement) if s.complement is not None else None,
    }


def report_dict(r: InheritanceReport) -> dict[str, Any]:
    c = r.chain
    structures = {
        "P_in_O": structure_dict(r.p_in_o),
        "Q_O_in_O": structure_dict(r.q_in_o),
        "Q_P_in_P": structure_dict(r.q_in_p),
        "Q_P_in_O": structure_dict(r.q_p_in_o),
    }
    if r.custom_q is not None:
        structures["Q_custom_in_O"] = structure_dict(r.custom_q)
    return {
        "chain": {
            "degree": c.gamma.degree,
            "gamma": group_dict(c.gamma, label=True),
            "b": group_dict(c.b, label=True),
            "delta": group_dict(c.delta, label=True),
            "proper": c.is_proper,
            "centerless": r.centerless,
        },
        "gamma_P_O": quotient_dict(r.p_in_o.isotropy, r.p_in_o.isotropy_label),
        "gamma_Q_O": quotient_dict(r.q_in_o.isotropy, r.q_in_o.isotropy_label),
        "gamma_Q_P": {
            "route1": quotient_dict(r.gamma_Q_P_route1, r.route1_label),
            "route2": quotient_dict(r.gamma_Q_P_route2, r.route2_label),
            "routes_agree": r.routes_agree,
        },
        "canonical_compatible": r.canonical_compatible,
        "q_equal_as_subquotients": r.q_equal_as_subquotients,
        "flags": {
            "P_saturated_in_O": r.p_in_o.saturated,
            "P_split_in_O": r.p_in_o.split,
            "P_full_in_O": r.p_in_o.full,
            "Q_saturated_in_O": r.q_in_o.saturated,
            "Q_split_in_O": r.q_in_o.split,
            "Q_full_in_O": r.q_in_o.full,
            "Q_saturated_in_P": r.q_in_p.saturated,
            "Q_split_in_P": r.q_in_p.split,
            "Q_full_in_P": r.q_in_p.full,
        },
        "structures": structures,
        "warnings": list(r.warnings),
    }


def sweep_dict(result, only_incompatible: bool = False, only_unsaturated: bool = False) -> dict[str, Any]:
    chains = []
    for cc, rep in result.entries:
        if only_incompatible and rep.canonical_compatible:
            continue
        if only_unsaturated and rep.p_in_o.saturated:
            continue
        chains.append({"class_size": cc.class_size, "report": report_dict(rep)})
    filters = [n for n, on in (("only-incompatible", only_incompatible), ("only-unsaturated", only_unsaturated)) if on]
    return {
        "group": {"name": result.group_name, **group_dict(result.group, label=True)},
        "summary": result.summary(),
        "filters": filters,
        "chains": chains,
        "warnings": list(result.warnings),
    }


@dataclass
class ReportDocument:
    kind: str  # "analysis", "sweep" or "catalog"
    command: dict[str, Any]
    payload: dict[str, Any]
    warnings: list[str] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": self.schema_version,
            "kind": self.kind,
            "command": self.command,
            "payload": self.payload,
            "warnings": self.warnings,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> ReportDocument:
        if "schema_version" not in data:
            raise ValueError("report document lacks schema_version")
        return cls(
            kind=data["kind"],
            command=data["command"],
            payload=data["payload"],
            warnings=list(data.get("warnings", [])),
            schema_version=data["schema_version"],
        )

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))


def load_schema() -> dict[str, Any]:
    return json.loads(resources.files("orbistruct").joinpath("data/report.schema.json").read_text())


def validate_document(data: dict[str, Any]) -> None:
    """Raise ``jsonschema.ValidationError`` if ``data`` violates the shipped schema."""
    import jsonschema

    jsonschema.validate(data, load_schema())


# ---- text ----------------------------------------------------------------


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _structure_text(s: dict[str, Any]) -> list[str]:
    lines = [
        f"  {s['label']}: isotropy {s['isotropy']['label']} (order {s['isotropy']['order']}), "
        f"|Λ|={s['lambda']['order']} |Ω|={s['omega']['order']}",
        f"    canonical={_yn(s['canonical'])} full={_yn(s['full'])} "
        f"saturated={_yn(s['saturated'])} split={_yn(s['split'])}",
    ]
    w = s["saturation_witness"]
    if w is not None:
        lines.append(f"    saturation witness: γ={w['gamma']} on support {{{', '.join(w['support'])}}}")
    return lines


def report_text(d: dict[str, Any]) -> str:
    c = d["chain"]
    lines = [
        f"Γ = {c['gamma']['label']} (order {c['gamma']['order']}), "
        f"B = {c['b']['label']} (order {c['b']['order']}), "
        f"Δ = {c['delta']['label']} (order {c['delta']['order']})"
        + ("" if c["proper"] else "   [non-proper chain]"),
        f"Γ_P^O = N(B)/C(B) ≅ {d['gamma_P_O']['label']}",
        f"Γ_Q^O = N(Δ)/C(Δ) ≅ {d['gamma_Q_O']['label']}",
        f"Γ_Q^P ≅ {d['gamma_Q_P']['route1']['label']} (direct) / "
        f"{d['gamma_Q_P']['route2']['label']} (formula), routes agree: {_yn(d['gamma_Q_P']['routes_agree'])}",
        f"canonical substructures compatible: {_yn(d['canonical_compatible'])}",
        "structures:",
    ]
    for s in d["structures"].values():
        lines.extend(_structure_text(s))
    for w in d["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"


def sweep_text(d: dict[str, Any]) -> str:
    g = d["group"]
    s = d["summary"]
    lines = [
        f"sweep of {g['name'] or g['label']} (order {g['order']}): {s['total_chains']} chain classes, "
        f"{s['incompatible']} incompatible, {s['non_saturated']} with P unsaturated, "
        f"{s['non_split']} with P non-split",
    ]
    if d["filters"]:
        lines.append(f"filters: {', '.join(d['filters'])}")
    for i, entry in enumerate(d["chains"], 1):
        lines.append(f"--- chain {i} (class size {entry['class_size']})")
        lines.append(report_text(entry["report"]).rstrip("\n"))
    for w in d["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines) + "\n"

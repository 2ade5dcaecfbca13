"""JSON documents for single-group analyses and JSON-lines census output."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Iterable

from .harness import Analysis

SCHEMA_VERSION = 1


@dataclass
class AnalysisDocument:
    label: str
    order: int
    subgroup_counts: dict[int, int]
    alpha_p: dict[int, int]
    alpha: int
    degree_sequence: list[int]
    vertex_orders: list[int]
    vertex_degrees: list[list[int]]
    edges: list[list[int]]
    regular: bool
    predicted: bool
    witness: list[int] | None
    claims: dict[str, dict]
    schema: int = SCHEMA_VERSION

    @classmethod
    def from_analysis(cls, a: Analysis) -> AnalysisDocument:
        counts: dict[int, int] = {}
        for h in a.subgroups:
            counts[h.order] = counts.get(h.order, 0) + 1
        lat = a.lattice
        return cls(
            label=a.group.label,
            order=a.group.order,
            subgroup_counts=counts,
            alpha_p=dict(a.report.alpha_p),
            alpha=a.report.alpha,
            degree_sequence=list(a.report.degree_sequence),
            vertex_orders=[h.order for h in lat.vertices],
            vertex_degrees=[[d1, d2, d1 + d2] for d1, d2 in zip(lat.deg1, lat.deg2)],
            edges=[[i, j] for i, j in lat.covers],
            regular=a.observed,
            predicted=a.predicted,
            witness=list(a.report.witness) if a.report.witness else None,
            claims={k: v.to_dict() for k, v in a.claims.claims.items()},
        )

    def to_dict(self) -> dict:
        out = asdict(self)
        out["subgroup_counts"] = {str(k): v for k, v in self.subgroup_counts.items()}
        out["alpha_p"] = {str(k): v for k, v in self.alpha_p.items()}
        return out

    @classmethod
    def from_dict(cls, data: dict) -> AnalysisDocument:
        """Inverse of :meth:`to_dict`; keys this version does not know are ignored."""
        known = {f.name for f in fields(cls)}
        kw = {k: v for k, v in data.items() if k in known}
        kw["subgroup_counts"] = {int(k): v for k, v in kw["subgroup_counts"].items()}
        kw["alpha_p"] = {int(k): v for k, v in kw["alpha_p"].items()}
        return cls(**kw)


def dumps(obj: dict, indent: int | None = 2) -> str:
    if indent is None:
        return json.dumps(obj, sort_keys=True, separators=(",", ":"))
    return json.dumps(obj, sort_keys=True, indent=indent) + "\n"


def write_json(doc: AnalysisDocument, path: str | Path) -> None:
    Path(path).write_text(dumps(doc.to_dict()))


def read_json(path: str | Path) -> AnalysisDocument:
    return AnalysisDocument.from_dict(json.loads(Path(path).read_text()))


def write_jsonl(records: Iterable[dict], path: str | Path) -> int:
    n = 0
    with open(path, "w") as fh:
        for rec in records:
            fh.write(dumps(rec, indent=None) + "\n")
            n += 1
    return n

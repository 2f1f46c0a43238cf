"""Per-declaration outcome records and their two renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

OK, ERROR, EXPECTED = "ok", "error", "expected-error"


@dataclass
class Record:
    decl: str
    kind: str
    status: str
    detail: dict = field(default_factory=dict)
    cert_dim: Optional[int] = None

    @property
    def succeeded(self) -> bool:
        return self.status in (OK, EXPECTED)

    def to_json(self) -> dict:
        d = {"decl": self.decl, "kind": self.kind, "status": self.status, "detail": self.detail}
        if self.cert_dim is not None:
            d["cert_dim"] = self.cert_dim
        return d


@dataclass
class Report:
    file: str
    records: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.succeeded for r in self.records)

    def add(self, rec: Record):
        self.records.append(rec)

    def to_json(self) -> dict:
        return {"file": self.file, "ok": self.ok, "records": [r.to_json() for r in self.records]}


def render_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], ensure_ascii=False, indent=2) + "\n"


def _detail_line(detail: dict) -> str:
    parts = []
    for k, v in detail.items():
        if k == "span":
            continue
        if isinstance(v, (dict, list)):
            v = json.dumps(v, ensure_ascii=False)
        parts.append(f"{k}={v}")
    return ", ".join(parts)


def render_text(reports) -> str:
    lines = []
    for rep in reports:
        lines.append(f"== {rep.file}")
        for r in rep.records:
            span = r.detail.get("span", "")
            cert = f" [certified to d={r.cert_dim}]" if r.cert_dim is not None else ""
            lines.append(f"{span:>8}  {r.status:<14} {r.decl}{cert}")
            info = _detail_line(r.detail)
            if info:
                lines.append(f"{'':>10}{info}")
        verdict = "all declarations succeeded" if rep.ok else "some declarations failed"
        lines.append(f"-- {verdict}")
    return "\n".join(lines) + "\n"

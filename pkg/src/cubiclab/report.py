"""Verification reports: assembly, JSON and markdown rendering."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from . import __version__
from .cohom import LedgerReport
from .suites import SuiteResult


@dataclass(frozen=True)
class LedgerSection:
    path: str
    report: LedgerReport

    @property
    def ok(self) -> bool:
        return self.report.all_proven


@dataclass(frozen=True)
class Report:
    ledgers: Tuple[LedgerSection, ...]
    suites: Tuple[SuiteResult, ...]
    config: dict = field(default_factory=dict)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(l.ok for l in self.ledgers) and all(s.ok for s in self.suites)

    def failures(self) -> List[str]:
        out = []
        for sec in self.ledgers:
            for r in sec.report.results:
                if not r.proven:
                    out.append(f"{sec.path}: {r.id} {_verdict_name(r)}")
        for s in self.suites:
            out.extend(f"suite {s.name}: {c.name}" for c in s.checks if not c.ok)
        return out

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "toolkit": "cubiclab",
            "version": __version__,
            "ok": self.ok,
            "config": self.config,
            "ledgers": [{"path": sec.path, "ok": sec.ok, "counts": sec.report.counts(),
                         "claims": [r.to_json(timing) for r in sec.report.results]}
                        for sec in self.ledgers],
            "suites": [s.to_json(timing) for s in self.suites],
        }
        if timing:
            out["seconds"] = round(self.seconds, 6)
        return out


def _verdict_name(r) -> str:
    return "Error" if r.error is not None else type(r.verdict).__name__


def _witness_text(r) -> str:
    if r.error is not None:
        return r.error
    w = getattr(r.verdict, "witness", None)
    if w is None:
        return ""
    params = ", ".join(f"{k}={v}" for k, v in w.params)
    exact = "exact" if w.exact else "graded bound"
    return (f"{params + '; ' if params else ''}piece {list(w.weight)}, H^{w.degree} "
            f"dim {w.dimension} (total {w.total}, {exact})")


def _md_escape(text: str) -> str:
    return str(text).replace("|", "\\|")


def render_json(report: Report, timing: bool = True) -> str:
    return json.dumps(report.to_json(timing), indent=2, sort_keys=True) + "\n"


def render_markdown(report: Report, timing: bool = True) -> str:
    lines = [f"# cubiclab verification report (v{__version__})", "",
             f"Overall: **{'PASS' if report.ok else 'FAIL'}**", ""]
    for sec in report.ledgers:
        counts = sec.report.counts()
        lines += [f"## Ledger `{sec.path}`", "",
                  ", ".join(f"{k}: {v}" for k, v in counts.items()), ""]
        if not sec.report.results:
            lines += ["(no claims)", ""]
            continue
        lines += ["| claim | locator | space | bundle | params | degrees | expect | verdict | witness |",
                  "|---|---|---|---|---|---|---|---|---|"]
        for r in sec.report.results:
            mark = "Proven ✓" if r.proven else _verdict_name(r)
            cells = [r.id, r.ref, r.space, r.bundle, r.params or "-", r.degrees, r.expect, mark,
                     _witness_text(r)]
            lines.append("| " + " | ".join(_md_escape(c) for c in cells) + " |")
        lines.append("")
    for s in report.suites:
        lines += [f"## Suite `{s.name}`: {'PASS' if s.ok else 'FAIL'}", "",
                  "| check | value | expected | source | ok |", "|---|---|---|---|---|"]
        for c in s.checks:
            exp = "-" if c.expected is None else json.dumps(c.expected)
            lines.append(f"| {_md_escape(c.name)} | {_md_escape(json.dumps(c.got))} | "
                         f"{_md_escape(exp)} | {c.source} | {'yes' if c.ok else 'NO'} |")
        lines.append("")
    if timing:
        lines += [f"Total time: {report.seconds:.3f} s", ""]
    return "\n".join(lines)


def emit_report(report: Report, fmt: str, path: Optional[Path] = None, timing: bool = True) -> str:
    if fmt == "json":
        text = render_json(report, timing)
    elif fmt in ("md", "markdown"):
        text = render_markdown(report, timing)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if path is not None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    return text

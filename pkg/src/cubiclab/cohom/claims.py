"""Vanishing claims and the line-based ledger format.

One claim per line::

    claim <id> | space=<id> | bundle=<expr> | params=<...> | degrees=<...> | expect=<...> | ref="<locator>"

Blank lines and lines starting with ``#`` are ignored.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from ..bbw import ALL, Interval, Space
from ..bundles import BundleExpr, check_symbols, free_params, parse_bundle

Domain = Tuple[Interval, ...]


class LedgerError(ValueError):
    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        where = f"{path or '<ledger>'}:{line}: " if line is not None else ""
        super().__init__(where + message)
        self.path = path
        self.line = line


@dataclass(frozen=True)
class DegreeSpec:
    """``all``, an explicit set (``in``) or a complement (``not``)."""

    kind: str
    values: FrozenSet[int] = frozenset()

    def resolve(self, top: int) -> FrozenSet[int]:
        full = range(0, top + 1)
        if self.kind == "all":
            return frozenset(full)
        if self.kind == "in":
            return frozenset(i for i in self.values if 0 <= i <= top)
        return frozenset(i for i in full if i not in self.values)

    def __str__(self) -> str:
        if self.kind == "all":
            return "all"
        body = ",".join(str(v) for v in sorted(self.values))
        return f"not{{{body}}}" if self.kind == "not" else f"{{{body}}}"


@dataclass(frozen=True)
class Vanish:
    def __str__(self) -> str:
        return "vanish"


@dataclass(frozen=True)
class Dimension:
    d: int

    def __str__(self) -> str:
        return f"dim:{self.d}"


Expectation = Union[Vanish, Dimension]


@dataclass(frozen=True)
class VanishClaim:
    id: str
    space: Space
    expr: BundleExpr
    param_domains: Dict[str, Domain] = field(default_factory=dict, hash=False)
    degrees: DegreeSpec = DegreeSpec("all")
    expect: Expectation = Vanish()
    ref: str = ""

    def __post_init__(self):
        missing = free_params(self.expr) - set(self.param_domains)
        if missing:
            raise ValueError(f"claim {self.id}: parameters without a domain: {sorted(missing)}")
        for name, dom in self.param_domains.items():
            if not dom or all(iv.is_empty() for iv in dom):
                raise ValueError(f"claim {self.id}: parameter {name} has an empty domain")

    def params_text(self) -> str:
        return ", ".join(f"{k} {format_domain(v)}" for k, v in sorted(self.param_domains.items()))


def format_domain(dom: Domain) -> str:
    """Render a domain in the ledger's own syntax."""
    if len(dom) == 2 and dom[0].lo is None and dom[1].hi is None and dom[1].lo == dom[0].hi + 2:
        return f"!= {dom[0].hi + 1}"
    if len(dom) != 1:
        raise ValueError("domain has no single-item ledger form")
    iv = dom[0]
    if iv.lo is None and iv.hi is None:
        return "all"
    if iv.lo is None:
        return f"<= {iv.hi}"
    if iv.hi is None:
        return f">= {iv.lo}"
    if iv.lo == iv.hi:
        return f"= {iv.lo}"
    return f"in [{iv.lo},{iv.hi}]"


# -- parsing -------------------------------------------------------------------------

_INT = r"-?\d+"


def _split_top(text: str) -> List[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "[({":
            depth += 1
        elif ch in "])}":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [s.strip() for s in out if s.strip()]


def _intersect_domains(a: Domain, b: Domain) -> Domain:
    out = []
    for x in a:
        for y in b:
            z = x.intersect(y)
            if not z.is_empty():
                out.append(z)
    return tuple(out)


def parse_domain(spec: str) -> Domain:
    s = re.sub(r"\s+", "", spec)
    if s.startswith("in") and not s.startswith("in["):
        s = s[2:]
    if s.startswith("in["):
        s = s[2:]
    m = re.fullmatch(rf"\[({_INT}),({_INT})\]", s)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ValueError(f"empty interval {spec!r}")
        return (Interval(lo, hi),)
    if s == "all":
        return (ALL,)
    m = re.fullmatch(rf"\(?(<=|>=|!=|=)({_INT})\)?", s)
    if m:
        op, k = m.group(1), int(m.group(2))
        if op == "<=":
            return (Interval(None, k),)
        if op == ">=":
            return (Interval(k, None),)
        if op == "=":
            return (Interval(k, k),)
        return (Interval(None, k - 1), Interval(k + 1, None))
    raise ValueError(f"cannot parse parameter domain {spec!r}")


def parse_params(text: str) -> Dict[str, Domain]:
    text = text.strip()
    out: Dict[str, Domain] = {}
    if text in ("", "none", "-"):
        return out
    for item in _split_top(text):
        m = re.fullmatch(r"([a-z][A-Za-z0-9_]*)\s*(.*)", item)
        if not m:
            raise ValueError(f"cannot parse parameter {item!r}")
        name, dom = m.group(1), parse_domain(m.group(2))
        out[name] = _intersect_domains(out[name], dom) if name in out else dom
        if not out[name]:
            raise ValueError(f"parameter {name} has an empty domain")
    return out


def parse_degrees(text: str) -> DegreeSpec:
    s = re.sub(r"\s+", "", text)
    if s == "all":
        return DegreeSpec("all")
    kind = "in"
    if s.startswith("not"):
        kind, s = "not", s[3:]
    s = s.strip("{}")
    if not s:
        return DegreeSpec(kind, frozenset())
    try:
        values = frozenset(int(v) for v in s.split(","))
    except ValueError:
        raise ValueError(f"cannot parse degrees {text!r}") from None
    return DegreeSpec(kind, values)


def parse_expect(text: str) -> Expectation:
    s = text.strip()
    if s == "vanish":
        return Vanish()
    m = re.fullmatch(r"dim:\s*(\d+)", s)
    if m:
        return Dimension(int(m.group(1)))
    raise ValueError(f"cannot parse expectation {text!r}")


_FIELD_SPLIT = re.compile(r"\s*\|\s*(?=[a-z]+\s*=)")


def parse_claim(line: str) -> VanishClaim:
    line = line.strip()
    if not line.startswith("claim "):
        raise ValueError("line must start with 'claim'")
    head, *rest = _FIELD_SPLIT.split(line[len("claim "):])
    cid = head.strip()
    if not cid or " " in cid:
        raise ValueError(f"bad claim id {cid!r}")
    fields: Dict[str, str] = {}
    for part in rest:
        key, _, value = part.partition("=")
        key = key.strip()
        if key in fields:
            raise ValueError(f"duplicate field {key!r}")
        fields[key] = value.strip()
    unknown = set(fields) - {"space", "bundle", "params", "degrees", "expect", "ref"}
    if unknown:
        raise ValueError(f"unknown field(s) {sorted(unknown)}")
    for key in ("space", "bundle"):
        if key not in fields:
            raise ValueError(f"missing field {key!r}")
    space = Space.parse(fields["space"])
    expr = parse_bundle(fields["bundle"])
    check_symbols(expr, space)
    ref = fields.get("ref", "")
    if len(ref) >= 2 and ref[0] == ref[-1] == '"':
        ref = ref[1:-1]
    return VanishClaim(
        id=cid,
        space=space,
        expr=expr,
        param_domains=parse_params(fields.get("params", "")),
        degrees=parse_degrees(fields.get("degrees", "all")),
        expect=parse_expect(fields.get("expect", "vanish")),
        ref=ref,
    )


def parse_ledger(text: str, path: Optional[str] = None) -> List[VanishClaim]:
    claims: List[VanishClaim] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            claim = parse_claim(line)
        except ValueError as exc:
            raise LedgerError(str(exc), path, lineno) from exc
        if claim.id in seen:
            raise LedgerError(f"duplicate claim id {claim.id!r}", path, lineno)
        seen.add(claim.id)
        claims.append(claim)
    return claims


def load_ledger(path: Union[str, Path]) -> List[VanishClaim]:
    path = Path(path)
    return parse_ledger(path.read_text(encoding="utf-8"), str(path))


def format_claim(claim: VanishClaim) -> str:
    params = claim.params_text() or "none"
    return (f"claim {claim.id} | space={claim.space.ident} | bundle={claim.expr} | "
            f"params={params} | degrees={claim.degrees} | expect={claim.expect} | ref=\"{claim.ref}\"")

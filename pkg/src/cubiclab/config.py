"""``key = value`` run configuration.

Blank lines and ``#`` comments are ignored; list values are comma separated.
Relative paths are resolved against the directory of the config file.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Dict, List, Optional, Tuple

SUITES = ("koszul", "chow", "lattice", "monodromy")
FORMATS = ("json", "md")


class ConfigError(ValueError):
    def __init__(self, message: str, path: Optional[str] = None, line: Optional[int] = None):
        where = f"{path or '<config>'}:{line}: " if line is not None else ""
        super().__init__(where + message)


@dataclass(frozen=True)
class RunConfig:
    ledgers: Tuple[str, ...] = ()
    output_dir: str = "."
    report: Optional[str] = None
    format: str = "json"
    jobs: int = 1
    seed: int = 0
    cache: bool = False
    cache_path: str = ".cubiclab-cache.jsonl"
    external_exclusions: bool = True
    discriminant_exclusions: bool = True
    suites: Tuple[str, ...] = SUITES
    monodromy_points: int = 8
    monodromy_trials: int = 1000
    timing: bool = True

    def __post_init__(self):
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown report format {self.format!r}")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigError(f"unknown suite(s) {bad}")
        if self.monodromy_points < 1 or self.monodromy_trials < 0:
            raise ConfigError("monodromy points must be >= 1 and trials >= 0")

    def with_overrides(self, **kw) -> "RunConfig":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})

    def report_path(self) -> Optional[Path]:
        if self.report is None:
            return None
        p = Path(self.report)
        return p if p.is_absolute() else Path(self.output_dir) / p


_BOOL = {"true": True, "yes": True, "on": True, "1": True,
         "false": False, "no": False, "off": False, "0": False}


def _bool(value: str) -> bool:
    try:
        return _BOOL[value.lower()]
    except KeyError:
        raise ValueError(f"expected a boolean, got {value!r}") from None


def _list(value: str) -> Tuple[str, ...]:
    return tuple(v.strip() for v in value.split(",") if v.strip())


_FIELDS = {
    "ledgers": _list, "output_dir": str, "report": str, "format": str, "jobs": int, "seed": int,
    "cache": _bool, "cache_path": str, "external_exclusions": _bool,
    "discriminant_exclusions": _bool, "suites": _list, "monodromy_points": int,
    "monodromy_trials": int, "timing": _bool,
}
_PATHS = ("output_dir", "cache_path")


def parse_config(text: str, base: Optional[Path] = None, path: Optional[str] = None) -> RunConfig:
    values: Dict[str, object] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ConfigError(f"expected 'key = value', got {raw.strip()!r}", path, lineno)
        if key not in _FIELDS:
            raise ConfigError(f"unknown key {key!r}", path, lineno)
        if key in values:
            raise ConfigError(f"duplicate key {key!r}", path, lineno)
        try:
            values[key] = _FIELDS[key](value)
        except ValueError as exc:
            raise ConfigError(f"{key}: {exc}", path, lineno) from None
    if base is not None:
        for key in _PATHS:
            if key in values and not Path(values[key]).is_absolute():
                values[key] = str(base / values[key])
        if "ledgers" in values:
            values["ledgers"] = tuple(_resolve_relative(l, base) for l in values["ledgers"])
    return RunConfig(**values)


def _resolve_relative(item: str, base: Path) -> str:
    p = Path(item)
    if p.is_absolute() or is_builtin_name(item):
        return item
    return str(base / p)


def load_config(path) -> RunConfig:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc.strerror}") from None
    return parse_config(text, p.parent, str(p))


def data_dir() -> Path:
    return Path(str(resources.files("cubiclab") / "data"))


_LEDGER_DIRS = ("ledgers", "fixtures")


def builtin_ledgers() -> List[str]:
    return sorted({p.stem for d in _LEDGER_DIRS for p in (data_dir() / d).glob("*.ledger")})


def is_builtin_name(item: str) -> bool:
    return "/" not in item and not item.endswith(".ledger") and item in builtin_ledgers()


def resolve_ledger(item: str) -> Path:
    """A ledger path, or the name of a ledger shipped with the package."""
    if is_builtin_name(item):
        for d in _LEDGER_DIRS:
            p = data_dir() / d / f"{item}.ledger"
            if p.exists():
                return p
    return Path(item)


def default_config() -> RunConfig:
    return load_config(data_dir() / "default.cfg")

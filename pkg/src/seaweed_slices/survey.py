"""Exhaustive (S, T) surveys and report serialization.

JSON field names of :class:`SurveyRecord` are a compatibility contract:

    type_spec, S, T, dim_q, gamma_size, gamma0_size, gamma_rank,
    qualifies, verification, seed, version

``S`` and ``T`` are 1-based simple-root index lists (Bourbaki numbering).
``verification`` is null unless the survey ran with verification on, in
which case it holds the tri-state flags of the slice pipeline.
"""
from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import asdict, dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from . import __version__
from .chevalley import chevalley_for
from .roots import TypeSpec
from .seaweed import build_seaweed, gamma_data, hypothesis_check
from .slice import check_theorem36

CLASSES = ("all", "borel", "minimal-parabolic", "parabolic")
DEFAULT_MAX_RANK = 6

VERIFICATION_FIELDS = (
    "status",
    "attempts",
    "stabilizer_dim_at_fa",
    "r_equals_stabilizer",
    "c2_samples",
    "c2_all_zero_intersection",
    "r_kills_slice",
    "index_estimate",
    "dim_W",
    "dim_count_ok",
    "eq3_ok",
)


class SurveyError(ValueError):
    pass


@dataclass(frozen=True)
class SurveyRecord:
    type_spec: str
    S: tuple[int, ...]
    T: tuple[int, ...]
    dim_q: int
    gamma_size: int
    gamma0_size: int
    gamma_rank: int
    qualifies: bool
    verification: tuple[tuple[str, object], ...] | None
    seed: int
    version: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["S"], d["T"] = list(self.S), list(self.T)
        d["verification"] = None if self.verification is None else dict(self.verification)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SurveyRecord":
        v = d["verification"]
        return cls(
            type_spec=d["type_spec"],
            S=tuple(d["S"]),
            T=tuple(d["T"]),
            dim_q=d["dim_q"],
            gamma_size=d["gamma_size"],
            gamma0_size=d["gamma0_size"],
            gamma_rank=d["gamma_rank"],
            qualifies=d["qualifies"],
            verification=None if v is None else tuple((k, v[k]) for k in VERIFICATION_FIELDS),
            seed=d["seed"],
            version=d["version"],
        )

    def flat(self) -> dict:
        d = self.to_dict()
        v = d.pop("verification") or {}
        d["S"] = " ".join(map(str, self.S))
        d["T"] = " ".join(map(str, self.T))
        for k in VERIFICATION_FIELDS:
            d[f"verification.{k}"] = v.get(k, "")
        return d


def all_subsets(n: int) -> list[tuple[int, ...]]:
    return [c for k in range(n + 1) for c in combinations(range(n), k)]


def pairs_for(rank: int, cls: str) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    full = tuple(range(rank))
    if cls == "all":
        subs = all_subsets(rank)
        return [(S, T) for S in subs for T in subs]
    if cls == "borel":
        return [((), full), (full, ())]
    if cls == "minimal-parabolic":
        return [((i,), full) for i in range(rank)]
    if cls == "parabolic":
        return [(S, full) for S in all_subsets(rank)]
    raise SurveyError(f"unknown class filter {cls!r}; expected one of {', '.join(CLASSES)}")


def survey(
    spec: TypeSpec | str,
    cls: str = "all",
    verify: bool = False,
    seed: int = 0,
    max_rank: int = DEFAULT_MAX_RANK,
    samples: int = 20,
    max_retries: int = 5,
) -> list[SurveyRecord]:
    if isinstance(spec, str):
        spec = TypeSpec.parse(spec)
    if spec.rank > max_rank:
        raise SurveyError(f"rank {spec.rank} exceeds the survey bound {max_rank}; raise it explicitly to proceed")
    cb = chevalley_for(str(spec))
    records = []
    for S, T in pairs_for(spec.rank, cls):
        sw = build_seaweed(cb, S, T)
        gd = gamma_data(sw)
        qualifies = hypothesis_check(sw, gd).qualifies
        verification = None
        if verify:
            rep = check_theorem36(sw, max_retries=max_retries, seed=seed, samples=samples).to_dict()
            verification = tuple((k, rep[k]) for k in VERIFICATION_FIELDS)
        records.append(
            SurveyRecord(
                type_spec=str(spec),
                S=tuple(a + 1 for a in S),
                T=tuple(a + 1 for a in T),
                dim_q=sw.dim,
                gamma_size=len(gd.gamma),
                gamma0_size=len(gd.gamma0),
                gamma_rank=gd.gamma_rank,
                qualifies=qualifies,
                verification=verification,
                seed=seed,
                version=__version__,
            )
        )
    return records


def _as_dicts(records: Iterable) -> list[dict]:
    return [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in records]


def _flat_rows(records: Sequence) -> list[dict]:
    return [r.flat() if isinstance(r, SurveyRecord) else {k: _cell(v) for k, v in dict(r).items()} for r in records]


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return " ".join(_cell(x) for x in v)
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render(records: Sequence, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(_as_dicts(records), indent=2, ensure_ascii=False) + "\n"
    rows = _flat_rows(records)
    if fmt == "csv":
        if not rows:
            return ""
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: _cell(v) for k, v in row.items()})
        return buf.getvalue()
    if fmt == "table":
        return format_table(rows)
    raise ValueError(f"unknown format {fmt!r}")


def format_table(rows: Sequence[dict]) -> str:
    if not rows:
        return "(no rows)\n"
    # unverified surveys would otherwise print a block of blank columns
    cols = [c for c in rows[0] if not c.startswith("verification.") or any(_cell(r.get(c)) for r in rows)]
    cells = [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    line = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    out = [line(cols), line(["-" * w for w in widths])]
    out += [line(row) for row in cells]
    return "\n".join(out) + "\n"


def emit_report(records: Sequence, fmt: str = "json", path: str | Path | None = None) -> None:
    text = render(records, fmt)
    if path is None or str(path) == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise SurveyError(f"cannot write report to {path}: {exc}") from exc

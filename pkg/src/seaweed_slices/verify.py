"""Exhaustive runs of the cascade checks over small simple types."""
from __future__ import annotations

from .cascade import FAILS, HOLDS, NOT_APPLICABLE, check_cascade_properties, counterexample_witness, lemma22a_check, lemma22b_check
from .roots import build_root_system
from .survey import all_subsets

SIMPLE_TYPES_RANK5 = (
    "A1", "A2", "A3", "A4", "A5",
    "B2", "B3", "B4", "B5",
    "C3", "C4", "C5",
    "D4", "D5",
    "F4", "G2",
)
PAIRING_SUITE_TYPES = tuple(t for t in SIMPLE_TYPES_RANK5 if int(t[1:]) <= 4) + ("A5",)


def _suite_row(check: str, type_spec: str, verdicts) -> dict:
    cases = applicable = 0
    witness = None
    for args, v in verdicts:
        cases += 1
        if v.status != NOT_APPLICABLE:
            applicable += 1
        if v.status == FAILS and witness is None:
            witness = {"args": [[a + 1 for a in x] for x in args], "witness": v.witness}
    return {
        "check": check,
        "type_spec": type_spec,
        "cases": cases,
        "applicable": applicable,
        "status": FAILS if witness else HOLDS,
        "witness": witness,
    }


def run_lemma_suite(types=None) -> list[dict]:
    """One summary row per (check, type), plus the A5 counterexample."""
    rows = []
    for t in types or SIMPLE_TYPES_RANK5:
        rs = build_root_system(t)
        subs = all_subsets(rs.rank)
        rows.append(_suite_row("cascade-properties", t, (((S,), check_cascade_properties(rs, S)) for S in subs)))
        if types is not None or t in PAIRING_SUITE_TYPES:
            rows.append(_suite_row("eps-sums-not-roots", t, (((S, T), lemma22a_check(rs, S, T)) for S in subs for T in subs)))
        rows.append(_suite_row("eps-kernel-trivial", t, (((S, T), lemma22b_check(rs, S, T)) for S in subs for T in subs)))
    a5 = build_root_system("A5")
    cx = counterexample_witness(a5)
    reproduced = cx.status == HOLDS and cx.detail["condition_i"] and not cx.detail["condition_ii"]
    rows.append(
        {
            "check": "counterexample-A5",
            "type_spec": "A5",
            "cases": 1,
            "applicable": 1,
            "status": HOLDS if reproduced else FAILS,
            "witness": {"h": list(cx.witness), "eps_rank": cx.detail["eps_rank"], "pairings": [int(p) for p in cx.detail["pairings"]]},
        }
    )
    return rows

"""Command line front end.

    seaweed-slices cascade --type A5 --subset all
    seaweed-slices seaweed --type A5 --s 1 --t all
    seaweed-slices slice --type A3 --s none --t all --format json
    seaweed-slices survey --type A5 --class minimal-parabolic --verify
    seaweed-slices verify-lemmas

Subsets are comma-separated 1-based simple-root indices (Bourbaki
numbering, see ``seaweed_slices.roots``), or ``all`` / ``none``.

Exit codes: 0 all verdicts hold or are not applicable, 1 a verdict failed,
2 usage error, 3 inconclusive (retries exhausted).
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .cascade import FAILS, INCONCLUSIVE, _jsonable, cascade, check_cascade_properties
from .chevalley import chevalley_for
from .roots import TypeSpec, TypeSpecError, build_root_system
from .seaweed import build_seaweed, check_structure_identities, gamma_data, hypothesis_check
from .linalg import rank
from .slice import build_slice, check_lemma33, check_lemma34, check_theorem36, coadjoint_matrix
from .survey import CLASSES, DEFAULT_MAX_RANK, SurveyError, emit_report, survey
from .verify import run_lemma_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_subset(text: str, rank: int) -> tuple[int, ...]:
    t = text.strip().lower()
    if t == "all":
        return tuple(range(rank))
    if t in ("none", ""):
        return ()
    try:
        idx = sorted({int(p) for p in t.split(",") if p.strip()})
    except ValueError:
        raise UsageError(f"bad subset {text!r}") from None
    if any(not 1 <= i <= rank for i in idx):
        raise UsageError(f"subset {text!r} out of range 1..{rank}")
    return tuple(i - 1 for i in idx)


def _one_based(s) -> list[int]:
    return [a + 1 for a in s]


def _status_code(statuses) -> int:
    statuses = list(statuses)
    if FAILS in statuses:
        return EXIT_FAIL
    if INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _emit(args, rows, document=None) -> None:
    if args.format == "json":
        emit_report([document] if document is not None else rows, "json", args.out)
    else:
        emit_report(rows, args.format, args.out)


def cmd_cascade(args) -> int:
    rs = build_root_system(TypeSpec.parse(args.type))
    subset = parse_subset(args.subset, rs.rank)
    elems = cascade(rs, subset)
    verdict = check_cascade_properties(rs, subset)
    rows = [{"K": _one_based(e.K), "eps": list(e.eps), "bullet": _one_based(e.bullet)} for e in elems]
    doc = {"type_spec": str(rs.type_spec), "subset": _one_based(subset), "cascade": rows, "properties": verdict.to_dict()}
    _emit(args, rows, doc)
    return _status_code([verdict.status])


def _seaweed_doc(sw, gd) -> dict:
    hyp = hypothesis_check(sw, gd)
    return {
        "type_spec": str(sw.rs.type_spec),
        "S": _one_based(sw.S),
        "T": _one_based(sw.T),
        "dim_q": sw.dim,
        "delta": [list(r) for r in sw.delta],
        "gamma": [list(r) for r in gd.gamma],
        "gamma0": [list(r) for r in gd.gamma0],
        "gamma1": [list(r) for r in gd.gamma1],
        "gamma_rank": gd.gamma_rank,
        "m_roots": [list(r) for r in gd.m_roots],
        "n_roots": [list(r) for r in gd.n_roots],
        "dim_t": gd.t_dim,
        "gamma0_empty": hyp.gamma0_empty,
        "independent": hyp.independent,
        "qualifies": hyp.qualifies,
    }


def cmd_seaweed(args) -> int:
    cb = chevalley_for(str(TypeSpec.parse(args.type)))
    l = cb.rs.rank
    sw = build_seaweed(cb, parse_subset(args.s, l), parse_subset(args.t, l))
    gd = gamma_data(sw)
    ident = check_structure_identities(sw, gd)
    doc = _seaweed_doc(sw, gd)
    doc["structure_identities"] = ident.to_dict()
    row = {k: doc[k] for k in ("type_spec", "S", "T", "dim_q", "gamma", "gamma0", "gamma1", "gamma_rank", "dim_t", "qualifies")}
    row["structure_identities"] = ident.status
    _emit(args, [row], doc)
    return _status_code([ident.status])


def cmd_slice(args) -> int:
    cb = chevalley_for(str(TypeSpec.parse(args.type)))
    l = cb.rs.rank
    sw = build_seaweed(cb, parse_subset(args.s, l), parse_subset(args.t, l))
    gd = gamma_data(sw)
    sd = build_slice(sw, args.a, seed=args.seed, bound=args.bound, gd=gd)
    meet = check_lemma33(sd, samples=args.samples, seed=args.seed, bound=args.bound)
    r_check = check_lemma34(sd, samples=args.samples, seed=args.seed, bound=args.bound)
    report = check_theorem36(sw, max_retries=args.max_retries, seed=args.seed, samples=args.samples, bound=args.bound)
    stab_dim = sw.dim - rank(coadjoint_matrix(sw, sd.f_a))
    doc = _seaweed_doc(sw, gd)
    doc.update(
        {
            "a": {str(list(g)): _jsonable(c) for g, c in sd.a.items()},
            "f_a": {sw.label(k): _jsonable(sd.f_a.coeffs[k]) for k in sd.f_a.support()},
            "dim_W": sd.dim_W,
            "dim_r": len(sd.r_basis),
            "stabilizer_dim_at_fa": stab_dim,
            "complement": meet.to_dict(),
            "r_kills_slice": r_check.to_dict(),
            "report": report.to_dict(),
        }
    )
    row = {
        "type_spec": doc["type_spec"],
        "S": doc["S"],
        "T": doc["T"],
        "dim_q": sw.dim,
        "qualifies": doc["qualifies"],
        "dim_W": sd.dim_W,
        "stabilizer_dim_at_fa": stab_dim,
        "complement": meet.status,
        "r_kills_slice": r_check.status,
        "report": report.status,
        "index_estimate": report.index_estimate,
    }
    _emit(args, [row], doc)
    return _status_code([meet.status, r_check.status, report.status])


def cmd_survey(args) -> int:
    max_rank = args.max_rank if args.max_rank is not None else DEFAULT_MAX_RANK
    if args.allow_large:
        max_rank = 10**6
    records = survey(
        args.type,
        cls=args.cls,
        verify=args.verify,
        seed=args.seed,
        max_rank=max_rank,
        samples=args.samples,
        max_retries=args.max_retries,
    )
    emit_report(records, args.format, args.out)
    statuses = [dict(r.verification)["status"] for r in records if r.verification]
    return _status_code(statuses)


def cmd_verify_lemmas(args) -> int:
    types = [t.strip() for t in args.types.split(",")] if args.types else None
    rows = run_lemma_suite(types=types)
    _emit(args, rows)
    return _status_code(r["status"] for r in rows)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "table"), default="table")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output path (default stdout)")

    p = argparse.ArgumentParser(prog="seaweed-slices", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("cascade", parents=[common], help="Kostant cascade K(S)")
    c.add_argument("--type", required=True)
    c.add_argument("--subset", default="all")
    c.set_defaults(func=cmd_cascade)

    s = sub.add_parser("seaweed", parents=[common], help="q_{S,T} and its Gamma data")
    s.add_argument("--type", required=True)
    s.add_argument("--s", default="none")
    s.add_argument("--t", default="all")
    s.set_defaults(func=cmd_seaweed)

    sl = sub.add_parser("slice", parents=[common], help="candidate slice V_a and its checks")
    sl.add_argument("--type", required=True)
    sl.add_argument("--s", default="none")
    sl.add_argument("--t", default="all")
    sl.add_argument("--a", choices=("ones", "random"), default="ones")
    sl.add_argument("--samples", type=int, default=20)
    sl.add_argument("--bound", type=int, default=10)
    sl.add_argument("--max-retries", type=int, default=5)
    sl.set_defaults(func=cmd_slice)

    sv = sub.add_parser("survey", parents=[common], help="enumerate (S, T) pairs")
    sv.add_argument("--type", required=True)
    sv.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    sv.add_argument("--verify", action="store_true")
    sv.add_argument("--samples", type=int, default=20)
    sv.add_argument("--max-retries", type=int, default=5)
    sv.add_argument("--max-rank", type=int, default=None)
    sv.add_argument("--allow-large", action="store_true", help="disable the rank guard")
    sv.set_defaults(func=cmd_survey)

    v = sub.add_parser("verify-lemmas", parents=[common], help="two-cascade lemma suites and the A5 counterexample")
    v.add_argument("--types", default=None, help="comma-separated simple types (default: all of rank <= 5)")
    v.set_defaults(func=cmd_verify_lemmas)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TypeSpecError, SurveyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

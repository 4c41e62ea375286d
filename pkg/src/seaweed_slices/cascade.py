"""Kostant's cascade of pairwise strongly orthogonal roots, and the checks
built on it (properties P1-P3, the two-cascade lemma, and the A5
counterexample showing the independence hypothesis cannot be dropped).

``eps(h_alpha) = 0`` is always tested as ``(eps, alpha) = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import Matrix, rank, rank_of_rows
from .roots import Root, RootSystem, add, connected_components, highest_root, is_type_a, sub

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not-applicable"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: object = None
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """True unless the verdict is a failure or inconclusive."""
        return self.status in (HOLDS, NOT_APPLICABLE)

    def to_dict(self) -> dict:
        return {"status": self.status, "witness": _jsonable(self.witness), "detail": _jsonable(self.detail)}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, frozenset, set)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_jsonable(v) for v in items]
    return x


@dataclass(frozen=True)
class CascadeElement:
    K: tuple[int, ...]
    eps: Root
    bullet: tuple[int, ...]


def cascade(rs: RootSystem, subset: Iterable[int]) -> list[CascadeElement]:
    """K(S), component-major and depth-first within each component."""
    out: list[CascadeElement] = []
    for comp in connected_components(rs, subset):
        eps = highest_root(rs, comp)
        bullet = tuple(a for a in comp if rs.inner(eps, rs.simple_roots[a]) != 0)
        out.append(CascadeElement(comp, eps, bullet))
        rest = [a for a in comp if a not in bullet]
        out.extend(cascade(rs, rest))
    return out


def eps_list(rs: RootSystem, subset: Iterable[int]) -> list[Root]:
    return [e.eps for e in cascade(rs, subset)]


def type_a_closed_form(component: Sequence[int], rank: int) -> list[Root]:
    """eps_i = beta_i + ... + beta_{l+1-i}, i = 1..ceil(l/2), for a type-A
    chain ``component`` listed in diagram order."""
    l = len(component)
    out = []
    for i in range((l + 1) // 2):
        v = [0] * rank
        for b in component[i : l - i]:
            v[b] = 1
        out.append(tuple(v))
    return out


def check_cascade_properties(rs: RootSystem, subset: Iterable[int]) -> Verdict:
    elems = cascade(rs, subset)
    keys = {e.K for e in elems}
    for e in elems:
        if e.eps != highest_root(rs, e.K):
            return Verdict(FAILS, e.K, {"property": "eps is highest root"})
        want = 2 if is_type_a(rs, e.K) and len(e.K) >= 2 else 1
        if len(e.bullet) != want:
            return Verdict(FAILS, e.K, {"property": "P2", "bullet": e.bullet})
        if want == 2 and set(e.bullet) != _endpoints(rs, e.K):
            return Verdict(FAILS, e.K, {"property": "P2 endpoints", "bullet": e.bullet})
        for comp in connected_components(rs, [a for a in e.K if a not in e.bullet]):
            if comp not in keys:
                return Verdict(FAILS, e.K, {"property": "P3", "component": comp})
    for i, e in enumerate(elems):
        for f in elems[i + 1 :]:
            k, l = set(e.K), set(f.K)
            if not (k <= l or l <= k or not (k & l)):
                return Verdict(FAILS, (e.K, f.K), {"property": "P1 nesting"})
            if rs.inner(e.eps, f.eps) != 0:
                return Verdict(FAILS, (e.K, f.K), {"property": "orthogonality"})
            if rs.is_root(add(e.eps, f.eps)) or rs.is_root(sub(e.eps, f.eps)):
                return Verdict(FAILS, (e.K, f.K), {"property": "strong orthogonality"})
            if set(e.bullet) & set(f.bullet):
                return Verdict(FAILS, (e.K, f.K), {"property": "P3 disjoint bullets"})
    return Verdict(HOLDS, detail={"size": len(elems)})


def _endpoints(rs: RootSystem, K: Sequence[int]) -> set[int]:
    if len(K) == 1:
        return set(K)
    return {a for a in K if sum(1 for b in K if b in rs.neighbours[a]) == 1}


def lemma22a_check(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> Verdict:
    """eps_K +- eps_L is never a root for K in K(S) ∩ K(T), L in K(S) ∪ K(T)."""
    cs, ct = cascade(rs, S), cascade(rs, T)
    common = {e.K for e in cs} & {e.K for e in ct}
    union = {e.K: e.eps for e in cs + ct}
    checked = 0
    for K in sorted(common):
        for L, eps_l in sorted(union.items()):
            eps_k = union[K]
            if K == L:
                continue
            checked += 1
            if rs.is_root(add(eps_k, eps_l)) or rs.is_root(sub(eps_k, eps_l)):
                return Verdict(FAILS, (K, L))
    return Verdict(HOLDS, detail={"pairs": checked})


def eps_kernel_conditions(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> tuple[bool, bool, list[Root]]:
    """(condition i, condition ii, eps vectors of K(S) ∪ K(T))."""
    S, T = set(S), set(T)
    cs, ct = cascade(rs, S), cascade(rs, T)
    disjoint = not ({e.K for e in cs} & {e.K for e in ct})
    cond_i = bool(S & T) and disjoint
    eps = [e.eps for e in cs] + [e.eps for e in ct if e.K not in {c.K for c in cs}]
    cond_ii = rank_of_rows(eps) == len(eps) if eps else True
    return cond_i, cond_ii, eps


def lemma22b_check(rs: RootSystem, S: Iterable[int], T: Iterable[int]) -> Verdict:
    """Trivial kernel of h -> (eps_E(h))_E on span{h_alpha : alpha in S ∩ T}.

    Evaluated through M[E][alpha] = (eps_E, alpha); since h_alpha is a
    nonzero multiple of the coroot of alpha, rank of M is unaffected.
    """
    S, T = set(S), set(T)
    cond_i, cond_ii, eps = eps_kernel_conditions(rs, S, T)
    if not cond_i or not cond_ii:
        return Verdict(NOT_APPLICABLE, detail={"condition_i": cond_i, "condition_ii": cond_ii})
    common = sorted(S & T)
    m = Matrix.from_rows([[rs.inner(e, rs.simple_roots[a]) for a in common] for e in eps], cols=len(common))
    r = rank(m)
    if r == len(common):
        return Verdict(HOLDS, detail={"rank": r})
    return Verdict(FAILS, witness=common, detail={"rank": r})


A5_WITNESS = (1, -1, 0, 1, -1)


def counterexample_witness(rs: RootSystem, vector: Sequence[int] = A5_WITNESS) -> Verdict:
    """Pairings (eps_E, sum lambda_i alpha_i) for E in K(Pi) ∪ K(Pi minus alpha_3) in A5.

    Holds when every pairing vanishes; ``detail`` carries the pairings and
    the two lemma conditions.
    """
    if str(rs.type_spec) != "A5":
        raise ValueError(f"counterexample lives in A5, got {rs.type_spec}")
    S = range(5)
    T = [0, 1, 3, 4]
    cond_i, cond_ii, eps = eps_kernel_conditions(rs, S, T)
    pairings = [rs.inner(e, vector) for e in eps]
    detail = {
        "condition_i": cond_i,
        "condition_ii": cond_ii,
        "eps": eps,
        "eps_rank": rank_of_rows(eps),
        "pairings": pairings,
    }
    if all(p == 0 for p in pairings):
        return Verdict(HOLDS, witness=tuple(vector), detail=detail)
    return Verdict(FAILS, witness=tuple(vector), detail=detail)

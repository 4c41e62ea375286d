"""Candidate affine slices V_a = f_a + W_a for the coadjoint action of q_{S,T}.

For gamma in Gamma_1 the base point carries a_gamma on X_gamma^*; for a
pair +-alpha (alpha in Gamma_0) it carries a_alpha on X_{-alpha}^* and
a_{-alpha} on X_alpha^*, which is phi_{Z_alpha} up to one common nonzero
constant. W_a = h_Gamma^perp + m_0^*, r_a = t + span{Z_alpha}.

All verifications are exact rank/kernel statements. Random points are drawn
with ``random.Random(seed)`` and integer coefficients in [-bound, bound].
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .cascade import FAILS, HOLDS, INCONCLUSIVE, NOT_APPLICABLE, Verdict, _jsonable
from .linalg import Matrix, Vector, intersect_subspaces, kernel_basis, rank
from .roots import Root, neg
from .seaweed import GammaData, Seaweed, torus_coroot_check, gamma_data, hypothesis_check

DEFAULT_BOUND = 10
DEFAULT_SAMPLES = 20


@dataclass(frozen=True)
class LinearForm:
    coeffs: Vector

    @classmethod
    def zero(cls, dim: int) -> "LinearForm":
        return cls((Fraction(0),) * dim)

    def __add__(self, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scaled(self, c) -> "LinearForm":
        return LinearForm(tuple(c * a for a in self.coeffs))

    def support(self) -> list[int]:
        return [k for k, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True)
class SliceData:
    sw: Seaweed
    gd: GammaData
    a: dict[Root, Fraction]
    f_a: LinearForm
    W_basis: tuple[LinearForm, ...]
    r_basis: tuple[Vector, ...]

    @property
    def dim_W(self) -> int:
        return len(self.W_basis)


def coadjoint_matrix(sw: Seaweed, f: LinearForm | Sequence) -> Matrix:
    """Column x is the dual-basis vector of e_x . f, i.e. entry (y, x) = f([e_y, e_x])."""
    coeffs = f.coeffs if isinstance(f, LinearForm) else tuple(f)
    if len(coeffs) != sw.dim:
        raise ValueError("form does not match the seaweed dimension")
    n = sw.dim
    rows = []
    for y in range(n):
        row = []
        for x in range(n):
            s = Fraction(0)
            for k, c in sw.structure[y][x]:
                if coeffs[k]:
                    s += coeffs[k] * c
            row.append(s)
        rows.append(tuple(row))
    return Matrix(n, n, tuple(rows))


def act(sw: Seaweed, x: Sequence, f: LinearForm) -> LinearForm:
    """x . f for an element x of q given in q coordinates."""
    return LinearForm(coadjoint_matrix(sw, f).apply(x))


def _resolve_coefficients(gd: GammaData, a, seed: int, bound: int) -> dict[Root, Fraction]:
    if a is None or a == "ones":
        return {g: Fraction(1) for g in gd.gamma}
    if a == "random":
        rng = random.Random(seed)
        return {g: Fraction(_nonzero(rng, bound)) for g in gd.gamma}
    coeffs = {tuple(k): Fraction(v) for k, v in dict(a).items()}
    missing = [g for g in gd.gamma if g not in coeffs]
    if missing:
        raise ValueError(f"no coefficient for {missing[0]}")
    if any(coeffs[g] == 0 for g in gd.gamma):
        raise ValueError("coefficients of a must be nonzero")
    return {g: coeffs[g] for g in gd.gamma}


def _nonzero(rng: random.Random, bound: int) -> int:
    while True:
        v = rng.randint(-bound, bound)
        if v:
            return v


def build_slice(
    sw: Seaweed,
    a: str | Mapping[Root, object] | None = "ones",
    seed: int = 0,
    bound: int = DEFAULT_BOUND,
    gd: GammaData | None = None,
) -> SliceData:
    gd = gd or gamma_data(sw)
    coeffs = _resolve_coefficients(gd, a, seed, bound)
    n, l = sw.dim, sw.rank
    idx = sw.root_index

    f = [Fraction(0)] * n
    for g in gd.gamma1:
        f[idx[g]] += coeffs[g]
    m0 = []
    for alpha in gd.gamma0:
        fa = [Fraction(0)] * n
        fa[idx[neg(alpha)]] = coeffs[alpha]
        fa[idx[alpha]] = coeffs[neg(alpha)]
        m0.append(LinearForm(tuple(fa)))
        f = [x + y for x, y in zip(f, fa)]

    W = [LinearForm(tuple(lam) + (Fraction(0),) * (n - l)) for lam in gd.hgamma_perp_basis] + m0

    r = [tuple(h) + (Fraction(0),) * (n - l) for h in gd.t_basis]
    for alpha in gd.gamma0:
        z = [Fraction(0)] * n
        z[idx[alpha]] = coeffs[alpha]
        z[idx[neg(alpha)]] = coeffs[neg(alpha)]
        r.append(tuple(z))
    return SliceData(sw, gd, coeffs, LinearForm(tuple(f)), tuple(W), tuple(r))


def stabilizer(sw: Seaweed, f: LinearForm) -> list[Vector]:
    return kernel_basis(coadjoint_matrix(sw, f))


def sample_point(sd: SliceData, rng: random.Random, bound: int = DEFAULT_BOUND) -> LinearForm:
    f = sd.f_a
    for w in sd.W_basis:
        c = rng.randint(-bound, bound)
        if c:
            f = f + w.scaled(c)
    return f


def _points(sd: SliceData, samples: int, seed: int, bound: int) -> list[LinearForm]:
    rng = random.Random(seed)
    return [sd.f_a] + [sample_point(sd, rng, bound) for _ in range(samples)]


def check_lemma33(sd: SliceData, samples: int = DEFAULT_SAMPLES, seed: int = 0, bound: int = DEFAULT_BOUND) -> Verdict:
    """q.f ∩ W_a = {0} at f_a and at ``samples`` random points of V_a."""
    W = [w.coeffs for w in sd.W_basis]
    pts = _points(sd, samples, seed, bound)
    for f in pts:
        image = [c for c in coadjoint_matrix(sd.sw, f).columns() if any(c)]
        meet = intersect_subspaces(image, W) if image and W else []
        if meet:
            return Verdict(FAILS, witness=f.coeffs, detail={"intersection": meet[0]})
    return Verdict(HOLDS, detail={"points": len(pts)})


def check_lemma34(sd: SliceData, samples: int = DEFAULT_SAMPLES, seed: int = 0, bound: int = DEFAULT_BOUND) -> Verdict:
    """r_a kills W_a, and r_a lies in the stabilizer of f_a and of sampled f in V_a."""
    sw = sd.sw
    for w in sd.W_basis:
        m = coadjoint_matrix(sw, w)
        for r in sd.r_basis:
            if any(m.apply(r)):
                return Verdict(FAILS, witness={"r": r, "w": w.coeffs}, detail={"claim": "r_a.W_a = 0"})
    for f in _points(sd, samples, seed, bound):
        m = coadjoint_matrix(sw, f)
        for r in sd.r_basis:
            if any(m.apply(r)):
                return Verdict(FAILS, witness={"r": r, "f": f.coeffs}, detail={"claim": "r_a in q^f"})
    return Verdict(HOLDS)


def random_form(dim: int, rng: random.Random, bound: int) -> LinearForm:
    return LinearForm(tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim)))


def index(sw: Seaweed, trials: int = DEFAULT_SAMPLES, seed: int = 0, bound: int = DEFAULT_BOUND) -> int:
    """min over random f of dim q^f; an upper bound on ind q, equal to it
    unless every sample hits the proper Zariski-closed non-regular set."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    best = sw.dim
    for _ in range(trials):
        f = random_form(sw.dim, rng, bound)
        best = min(best, sw.dim - rank(coadjoint_matrix(sw, f)))
    return best


@dataclass
class VerificationReport:
    status: str
    qualifies: bool
    a_used: dict | None = None
    attempts: int = 0
    stabilizer_dim_at_fa: int | None = None
    r_equals_stabilizer: str = NOT_APPLICABLE
    c2_samples: int = 0
    c2_all_zero_intersection: str = NOT_APPLICABLE
    r_kills_slice: str = NOT_APPLICABLE
    index_estimate: int | None = None
    dim_W: int | None = None
    dim_count_ok: str = NOT_APPLICABLE
    eq3_ok: str = NOT_APPLICABLE
    witness: object = None

    FLAGS = ("r_equals_stabilizer", "c2_all_zero_intersection", "r_kills_slice", "dim_count_ok", "eq3_ok")

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "qualifies": self.qualifies,
            "a_used": self.a_used,
            "attempts": self.attempts,
            "stabilizer_dim_at_fa": self.stabilizer_dim_at_fa,
            "r_equals_stabilizer": self.r_equals_stabilizer,
            "c2_samples": self.c2_samples,
            "c2_all_zero_intersection": self.c2_all_zero_intersection,
            "r_kills_slice": self.r_kills_slice,
            "index_estimate": self.index_estimate,
            "dim_W": self.dim_W,
            "dim_count_ok": self.dim_count_ok,
            "eq3_ok": self.eq3_ok,
            "witness": _jsonable(self.witness),
        }


def _stabilizer_is_r(sd: SliceData) -> tuple[bool, int]:
    m = coadjoint_matrix(sd.sw, sd.f_a)
    stab_dim = sd.sw.dim - rank(m)
    contained = all(not any(m.apply(r)) for r in sd.r_basis)
    return contained and stab_dim == len(sd.r_basis), stab_dim


def _flag(ok: bool) -> str:
    return HOLDS if ok else FAILS


def check_theorem36(
    sw: Seaweed,
    max_retries: int = 5,
    seed: int = 0,
    samples: int = DEFAULT_SAMPLES,
    bound: int = DEFAULT_BOUND,
    index_trials: int = DEFAULT_SAMPLES,
) -> VerificationReport:
    gd = gamma_data(sw)
    if not hypothesis_check(sw, gd).qualifies:
        return VerificationReport(status=NOT_APPLICABLE, qualifies=False)

    rng = random.Random(seed)
    sd, stab_dim, good = None, None, False
    attempts = 0
    for attempt in range(max_retries + 1):
        attempts = attempt + 1
        if attempt == 0:
            sd = build_slice(sw, "ones", gd=gd)
        else:
            sd = build_slice(sw, {g: _nonzero(rng, bound) for g in gd.gamma}, gd=gd)
        good, stab_dim = _stabilizer_is_r(sd)
        if good:
            break
    a_used = {str(list(g)): _jsonable(c) for g, c in sd.a.items()}
    if not good:
        return VerificationReport(
            status=INCONCLUSIVE,
            qualifies=True,
            a_used=a_used,
            attempts=attempts,
            stabilizer_dim_at_fa=stab_dim,
            r_equals_stabilizer=INCONCLUSIVE,
        )

    c2 = check_lemma33(sd, samples=samples, seed=seed, bound=bound)
    r_check = check_lemma34(sd, samples=samples, seed=seed, bound=bound)
    orbit_rank = sw.dim - stab_dim
    dim_ok = sw.dim == orbit_rank + sd.dim_W
    torus = torus_coroot_check(sw, gd)
    idx = index(sw, trials=index_trials, seed=seed, bound=bound)
    flags = [c2.status, r_check.status, _flag(dim_ok), torus.status]
    status = FAILS if FAILS in flags else HOLDS
    witness = next((v.witness for v in (c2, r_check, torus) if v.status == FAILS), None)
    return VerificationReport(
        status=status,
        qualifies=True,
        a_used=a_used,
        attempts=attempts,
        stabilizer_dim_at_fa=stab_dim,
        r_equals_stabilizer=HOLDS,
        c2_samples=samples,
        c2_all_zero_intersection=c2.status,
        r_kills_slice=r_check.status,
        index_estimate=idx,
        dim_W=sd.dim_W,
        dim_count_ok=_flag(dim_ok),
        eq3_ok=torus.status,
        witness=witness,
    )

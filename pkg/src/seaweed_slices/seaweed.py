"""Seaweed (biparabolic) subalgebras q_{S,T} = h + g^{R_+^S ∪ R_-^T}.

Basis of q: H_1..H_l, then X_a for a in Delta_{S,T} in root order. Linear
forms on q are coefficient vectors over the dual of that basis; the
Killing identification is never used, since phi_{X_-a} is a nonzero
multiple of the dual vector X_a^* and every construction downstream is
stable under such rescaling.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .cascade import FAILS, HOLDS, NOT_APPLICABLE, Verdict, cascade
from .chevalley import ChevalleyBasis
from .linalg import Matrix, Vector, in_span, intersect_subspaces, kernel_basis, rank_of_rows
from .roots import Root, RootSystem, is_positive, neg


@dataclass(frozen=True)
class Seaweed:
    cb: ChevalleyBasis
    S: tuple[int, ...]
    T: tuple[int, ...]
    delta: tuple[Root, ...]
    g_index: tuple[int, ...]  # q basis position -> g basis index

    @property
    def rs(self) -> RootSystem:
        return self.cb.rs

    @property
    def rank(self) -> int:
        return self.rs.rank

    @property
    def dim(self) -> int:
        return len(self.g_index)

    @cached_property
    def q_index(self) -> dict[int, int]:
        return {g: q for q, g in enumerate(self.g_index)}

    @cached_property
    def root_index(self) -> dict[Root, int]:
        """Root -> position of X_root in the q basis."""
        l = self.rank
        return {r: l + k for k, r in enumerate(self.delta)}

    def label(self, k: int) -> str:
        return self.cb.label(self.g_index[k])

    def root_of(self, k: int) -> Root | None:
        return self.cb.root_of(self.g_index[k])

    @cached_property
    def structure(self) -> tuple[tuple[tuple[tuple[int, int], ...], ...], ...]:
        """[e_a, e_b] in q coordinates, sparse."""
        qi = self.q_index
        rows = []
        for ga in self.g_index:
            row = []
            for gb in self.g_index:
                row.append(tuple((qi[k], c) for k, c in self.cb.table[ga][gb]))
            rows.append(tuple(row))
        return tuple(rows)

    @cached_property
    def coadjoint_table(self) -> tuple[dict[int, dict[int, int]], ...]:
        """table[x][k][y] = e_k-coefficient of [e_y, e_x]."""
        out = [dict() for _ in range(self.dim)]
        for y, row in enumerate(self.structure):
            for x, entry in enumerate(row):
                for k, c in entry:
                    out[x].setdefault(k, {})[y] = c
        return tuple(out)

    def bracket_basis(self, a: int, b: int) -> tuple[tuple[int, int], ...]:
        return self.structure[a][b]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        out = [Fraction(0)] * self.dim
        xs = [(i, c) for i, c in enumerate(x) if c]
        ys = [(j, c) for j, c in enumerate(y) if c]
        for i, a in xs:
            for j, b in ys:
                for k, c in self.structure[i][j]:
                    out[k] += a * b * c
        return tuple(out)


def build_seaweed(cb: ChevalleyBasis, S: Iterable[int], T: Iterable[int]) -> Seaweed:
    rs = cb.rs
    S, T = tuple(sorted(set(S))), tuple(sorted(set(T)))
    if any(not 0 <= a < rs.rank for a in S + T):
        raise ValueError("subset index out of range")
    pos_s = set(rs.positive_in(S))
    neg_t = {neg(r) for r in rs.positive_in(T)}
    delta = tuple(r for r in rs.all_roots if r in pos_s or r in neg_t)
    g_index = tuple(range(rs.rank)) + tuple(cb.x_index(r) for r in delta)
    members = set(g_index)
    for ga in g_index:
        for gb in g_index:
            for k, _ in cb.table[ga][gb]:
                if k not in members:
                    raise AssertionError(f"q_{{S,T}} not closed: [{cb.label(ga)}, {cb.label(gb)}]")
    return Seaweed(cb, S, T, delta, g_index)


@dataclass(frozen=True)
class GammaData:
    gamma: tuple[Root, ...]
    gamma0: tuple[Root, ...]
    gamma1: tuple[Root, ...]
    m_roots: tuple[Root, ...]
    n_roots: tuple[Root, ...]
    t_basis: tuple[Vector, ...]  # over H_1..H_l
    hgamma_perp_basis: tuple[Vector, ...]  # values lambda(H_i)
    hgamma_rows: tuple[Vector, ...]  # gamma as forms on h, (<gamma, alpha_i^vee>)_i
    gamma_rank: int

    @property
    def t_dim(self) -> int:
        return len(self.t_basis)


def _form_on_h(rs: RootSystem, root: Sequence[int]) -> Vector:
    return tuple(rs.pairing(root, i) for i in range(rs.rank))


def gamma_data(sw: Seaweed) -> GammaData:
    rs = sw.rs
    l = rs.rank
    gamma = tuple(e.eps for e in cascade(rs, sw.S)) + tuple(neg(e.eps) for e in cascade(rs, sw.T))
    gset = set(gamma)
    gamma0 = tuple(dict.fromkeys(g for g in gamma if is_positive(g) and neg(g) in gset))
    excluded = set(gamma0) | {neg(g) for g in gamma0}
    gamma1 = tuple(g for g in gamma if g not in excluded)
    grank = rank_of_rows(gamma) if gamma else 0
    m_roots, n_roots = [], []
    for a in sw.delta:
        (m_roots if gamma and rank_of_rows(gamma + (a,)) == grank else n_roots).append(a)
    hrows = tuple(_form_on_h(rs, g) for g in gamma)
    if gamma:
        t_basis = kernel_basis(Matrix.from_rows(hrows, cols=l))
        perp = kernel_basis(Matrix.from_rows([rs.coroot(g) for g in gamma], cols=l))
    else:
        eye = [tuple(Fraction(int(i == j)) for j in range(l)) for i in range(l)]
        t_basis, perp = eye, eye
    return GammaData(
        gamma=gamma,
        gamma0=gamma0,
        gamma1=gamma1,
        m_roots=tuple(m_roots),
        n_roots=tuple(n_roots),
        t_basis=tuple(t_basis),
        hgamma_perp_basis=tuple(perp),
        hgamma_rows=hrows,
        gamma_rank=grank,
    )


@dataclass(frozen=True)
class HypothesisStatus:
    gamma0_empty: bool
    independent: bool

    @property
    def qualifies(self) -> bool:
        return self.gamma0_empty and self.independent


def hypothesis_check(sw: Seaweed, gd: GammaData | None = None) -> HypothesisStatus:
    gd = gd or gamma_data(sw)
    return HypothesisStatus(not gd.gamma0, gd.gamma_rank == len(gd.gamma))


def coadjoint_on_dual(sw: Seaweed, x: int, k: int) -> dict[int, int]:
    """e_x . e_k^* as a sparse dual-basis vector: Y-coefficient is the
    e_k-coefficient of [Y, e_x]."""
    return sw.coadjoint_table[x].get(k, {})


def _h_part(sparse: dict[int, int], l: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(sparse.get(i, 0)) for i in range(l))


def check_structure_identities(sw: Seaweed, gd: GammaData | None = None) -> Verdict:
    """Bracket inclusions for h + m + n, their coadjoint counterparts on the
    dual basis, m.h_Gamma^perp = 0 and h^* = h_Gamma^* + h_Gamma^perp."""
    gd = gd or gamma_data(sw)
    rs = sw.rs
    l = rs.rank
    H = set(range(l))
    M = {sw.root_index[a] for a in gd.m_roots}
    Nn = {sw.root_index[a] for a in gd.n_roots}
    coroots = [rs.coroot(g) for g in gd.gamma]
    hgamma = list(gd.hgamma_rows)

    def within(sparse, allowed, h_span=None):
        if any(k not in allowed for k in sparse):
            return False
        if h_span is not None:
            hp = _h_part(sparse, l)
            if any(hp) and not in_span(hp, h_span):
                return False
        return True

    def fail(name, a, b):
        return Verdict(FAILS, (sw.label(a), sw.label(b)), {"identity": name})

    br = sw.structure
    for a in sorted(H):
        for b in sorted(M):
            if not within(dict(br[a][b]), M):
                return fail("[h,m] in m", a, b)
    for a in sorted(H | M):
        for b in sorted(Nn):
            if not within(dict(br[a][b]), Nn):
                return fail("[h+m,n] in n", a, b)
    for a in sorted(M):
        for b in sorted(M):
            if not within(dict(br[a][b]), M | H, coroots):
                return fail("[m,m] in m + span h_gamma", a, b)

    rules = [
        ("h.h* = 0", H, H, set()),
        ("h.m* in m*", H, M, M),
        ("h.n* in n*", H, Nn, Nn),
        ("m.h* in m*", M, H, M),
        ("m.m* in m* + h_Gamma*", M, M, None),
        ("m.n* in n*", M, Nn, Nn),
        ("n.h* in n*", Nn, H, Nn),
        ("n.m* in n*", Nn, M, Nn),
    ]
    for name, acting, forms, target in rules:
        for x in sorted(acting):
            for k in sorted(forms):
                v = coadjoint_on_dual(sw, x, k)
                ok = within(v, M | H, hgamma) if target is None else within(v, target)
                if not ok:
                    return fail(name, x, k)

    for x in sorted(M):
        for lam in gd.hgamma_perp_basis:
            acc: dict[int, Fraction] = {}
            for i, c in enumerate(lam):
                if c:
                    for y, v in coadjoint_on_dual(sw, x, i).items():
                        acc[y] = acc.get(y, 0) + c * v
            if any(acc.values()):
                return Verdict(FAILS, (sw.label(x), tuple(lam)), {"identity": "m.h_Gamma^perp = 0"})

    hg = [r for r in hgamma]
    dim_hg = rank_of_rows(hg) if hg else 0
    perp = list(gd.hgamma_perp_basis)
    total = rank_of_rows(hg + perp) if hg + perp else 0
    if dim_hg + len(perp) != l or total != l:
        return Verdict(FAILS, None, {"identity": "h* = h_Gamma* + h_Gamma^perp", "dims": (dim_hg, len(perp), total)})
    return Verdict(HOLDS)


def torus_coroot_check(sw: Seaweed, gd: GammaData | None = None) -> Verdict:
    """t ∩ span{H_a : a in S ∩ T} = {0}; vacuous when S ∩ T is empty."""
    gd = gd or gamma_data(sw)
    common = sorted(set(sw.S) & set(sw.T))
    if not common:
        return Verdict(NOT_APPLICABLE, detail={"reason": "S ∩ T empty"})
    l = sw.rank
    coroot_dirs = [tuple(Fraction(int(i == a)) for i in range(l)) for a in common]
    meet = intersect_subspaces(list(gd.t_basis), coroot_dirs) if gd.t_basis else []
    if meet:
        return Verdict(FAILS, witness=meet[0])
    return Verdict(HOLDS)

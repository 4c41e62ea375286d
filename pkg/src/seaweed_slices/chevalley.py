"""Chevalley basis and integer structure constants.

Basis of g: H_1..H_l (simple coroots) followed by X_alpha for every root in
``rs.all_roots`` order. Normalization:

    [H_i, X_a]   = <a, alpha_i^vee> X_a
    [X_a, X_-a]  = H_a           (coroot of a, integer combination of H_i)
    [X_a, X_b]   = N(a, b) X_{a+b}

Signs come from extraspecial pairs: for each positive root xi of height >= 2
the pair (alpha_i, xi - alpha_i) with smallest simple index i gets
N = +(p + 1). Every other constant follows from the standard relations
between structure constants (antisymmetry, the three-root cyclic relation,
N(-a,-b) = -N(a,b) and the four-root relation).
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .roots import Root, RootSystem, add, build_root_system, is_positive, neg, sub

SparseVec = dict[int, int]


class ChevalleyConsistencyError(AssertionError):
    """Raised when the constructed algebra violates an identity it must satisfy."""


def _structure_constants(rs: RootSystem) -> dict[tuple[Root, Root], int]:
    posset = set(rs.positive_roots)
    sq = {r: rs.inner(r, r) for r in rs.all_roots}
    npos: dict[tuple[Root, Root], Fraction] = {}

    def n_const(x: Root, y: Root) -> Fraction:
        xp, yp = is_positive(x), is_positive(y)
        if xp and yp:
            return npos[(x, y)]
        if not xp and not yp:
            return -npos[(neg(x), neg(y))]
        if not xp:
            return -n_const(y, x)
        s = add(x, y)
        z = neg(s)
        if is_positive(s):
            # x + y + z = 0 with y, z negative: N(x,y)/(z,z) = N(y,z)/(x,x)
            return sq[z] / sq[x] * -npos[(neg(y), neg(z))]
        # z positive: N(x,y)/(z,z) = N(z,x)/(y,y)
        return sq[z] / sq[y] * npos[(z, x)]

    for xi in rs.positive_roots:
        if sum(xi) < 2:
            continue
        i = next(k for k in range(rs.rank) if sub(xi, rs.simple_roots[k]) in posset)
        alpha = rs.simple_roots[i]
        beta = sub(xi, alpha)
        p = 0
        while sub(beta, tuple((p + 1) * c for c in alpha)) in rs.root_set:
            p += 1
        n_ab = Fraction(p + 1)
        npos[(alpha, beta)] = n_ab
        npos[(beta, alpha)] = -n_ab
        for g in rs.positive_roots:
            d = sub(xi, g)
            if d not in posset or g in (alpha, beta) or (g, d) in npos:
                continue
            total = Fraction(0)
            bg = sub(beta, g)
            if bg in rs.root_set:
                total += n_const(beta, neg(g)) * n_const(alpha, neg(d)) / sq[bg]
            ag = sub(alpha, g)
            if ag in rs.root_set:
                total += n_const(neg(g), alpha) * n_const(beta, neg(d)) / sq[ag]
            val = sq[xi] / n_ab * total
            if val.denominator != 1 or val == 0:
                raise ChevalleyConsistencyError(f"non-integral N({g},{d}) = {val}")
            npos[(g, d)] = val
            npos[(d, g)] = -val

    table: dict[tuple[Root, Root], int] = {}
    for x in rs.all_roots:
        for y in rs.all_roots:
            s = add(x, y)
            if s in rs.root_set:
                v = n_const(x, y)
                if v.denominator != 1:
                    raise ChevalleyConsistencyError(f"non-integral N({x},{y})")
                table[(x, y)] = int(v)
    return table


@dataclass(frozen=True)
class LieElement:
    """Coefficient vector over a named basis (``space``)."""

    coeffs: tuple[Fraction, ...]
    space: str

    @classmethod
    def of(cls, coeffs: Sequence, space: str) -> "LieElement":
        return cls(tuple(Fraction(c) for c in coeffs), space)

    def __add__(self, other: "LieElement") -> "LieElement":
        _same_space(self, other)
        return LieElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.space)

    def __sub__(self, other: "LieElement") -> "LieElement":
        _same_space(self, other)
        return LieElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.space)

    def __rmul__(self, c) -> "LieElement":
        return LieElement(tuple(c * a for a in self.coeffs), self.space)

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def _same_space(x: LieElement, y: LieElement) -> None:
    if x.space != y.space or len(x.coeffs) != len(y.coeffs):
        raise ValueError(f"basis mismatch: {x.space} vs {y.space}")


@dataclass(frozen=True)
class ChevalleyBasis:
    rs: RootSystem
    N: dict[tuple[Root, Root], int] = field(repr=False)
    table: tuple[tuple[tuple[tuple[int, int], ...], ...], ...] = field(repr=False)

    @property
    def dim(self) -> int:
        return self.rs.rank + len(self.rs.all_roots)

    @property
    def space(self) -> str:
        return f"g[{self.rs.type_spec}]"

    def h_index(self, i: int) -> int:
        return i

    def x_index(self, root: Sequence[int]) -> int:
        return self.rs.rank + self.rs.index_of(root)

    def label(self, k: int) -> str:
        l = self.rs.rank
        if k < l:
            return f"H{k + 1}"
        return "X" + str(self.rs.all_roots[k - l])

    def root_of(self, k: int) -> Root | None:
        """Root of basis element k, or None for a Cartan element."""
        l = self.rs.rank
        return None if k < l else self.rs.all_roots[k - l]

    def bracket_basis(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        """[e_i, e_j] as sparse (index, integer coefficient) pairs."""
        return self.table[i][j]

    def element(self, sparse: dict[int, Fraction] | None = None) -> LieElement:
        v = [Fraction(0)] * self.dim
        for k, c in (sparse or {}).items():
            v[k] = Fraction(c)
        return LieElement(tuple(v), self.space)

    def basis_element(self, k: int) -> LieElement:
        return self.element({k: 1})

    def H(self, i: int) -> LieElement:
        return self.basis_element(i)

    def X(self, root: Sequence[int]) -> LieElement:
        return self.basis_element(self.x_index(root))


def _bracket_table(rs: RootSystem, N: dict) -> tuple:
    l = rs.rank
    roots = rs.all_roots
    dim = l + len(roots)
    rows = []
    for a in range(dim):
        row = []
        for b in range(dim):
            entry: list[tuple[int, int]] = []
            if a >= l or b >= l:
                if a < l:
                    r = roots[b - l]
                    c = rs.pairing(r, a)
                    if c:
                        entry = [(b, int(c))]
                elif b < l:
                    r = roots[a - l]
                    c = rs.pairing(r, b)
                    if c:
                        entry = [(a, -int(c))]
                else:
                    x, y = roots[a - l], roots[b - l]
                    s = add(x, y)
                    if not any(s):
                        entry = [(i, int(n)) for i, n in enumerate(rs.coroot(x)) if n]
                    elif s in rs.root_set:
                        entry = [(l + rs.index_of(s), N[(x, y)])]
            row.append(tuple(entry))
        rows.append(tuple(row))
    return tuple(rows)


def _sparse_bracket(cb: ChevalleyBasis, x: SparseVec, y: SparseVec) -> SparseVec:
    out: dict[int, int] = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in cb.table[i][j]:
                out[k] = out.get(k, 0) + a * b * c
    return {k: v for k, v in out.items() if v}


def jacobi_violations(cb: ChevalleyBasis, triples=None) -> list[tuple[int, int, int]]:
    """Basis triples (i, j, k) where the Jacobi sum is nonzero."""
    if triples is None:
        triples = combinations(range(cb.dim), 3)
    bad = []
    for i, j, k in triples:
        ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
        total: dict[int, int] = {}
        for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
            for key, v in _sparse_bracket(cb, a, _sparse_bracket(cb, b, c)).items():
                total[key] = total.get(key, 0) + v
        if any(total.values()):
            bad.append((i, j, k))
    return bad


def check_string_property(cb: ChevalleyBasis) -> list[tuple[Root, Root]]:
    """Pairs violating |N(a,b)| = p + 1 or antisymmetry."""
    rs = cb.rs
    bad = []
    for (a, b), n in cb.N.items():
        p = 0
        while sub(b, tuple((p + 1) * c for c in a)) in rs.root_set:
            p += 1
        if abs(n) != p + 1 or cb.N[(b, a)] != -n:
            bad.append((a, b))
    return bad


def build_chevalley(rs: RootSystem, verify: bool = True, samples: int = 20000, seed: int = 0) -> ChevalleyBasis:
    """Build the basis; with ``verify`` the Jacobi identity is checked on all
    basis triples at rank <= 4 and on ``samples`` random triples above."""
    N = _structure_constants(rs)
    cb = ChevalleyBasis(rs=rs, N=N, table=_bracket_table(rs, N))
    if verify:
        if rs.rank <= 4:
            triples = None
        else:
            rng = random.Random(seed)
            triples = [tuple(rng.sample(range(cb.dim), 3)) for _ in range(samples)]
        bad = jacobi_violations(cb, triples)
        if bad:
            raise ChevalleyConsistencyError(f"Jacobi identity fails on {bad[0]}")
        if check_string_property(cb):
            raise ChevalleyConsistencyError("structure constants violate |N| = p + 1")
    return cb


@lru_cache(maxsize=64)
def chevalley_for(type_spec: str, verify: bool = False) -> ChevalleyBasis:
    """Cached construction keyed by the type spec string."""
    return build_chevalley(build_root_system(type_spec), verify=verify)


def bracket(cb: ChevalleyBasis, x: LieElement, y: LieElement) -> LieElement:
    if x.space != cb.space or y.space != cb.space:
        raise ValueError(f"basis mismatch: expected elements of {cb.space}")
    out = [Fraction(0)] * cb.dim
    xs = [(i, a) for i, a in enumerate(x.coeffs) if a]
    ys = [(j, b) for j, b in enumerate(y.coeffs) if b]
    for i, a in xs:
        for j, b in ys:
            for k, c in cb.table[i][j]:
                out[k] += a * b * c
    return LieElement(tuple(out), cb.space)

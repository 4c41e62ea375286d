"""Root systems of semisimple Lie algebras, built from Cartan matrices.

Simple roots follow Bourbaki numbering. Within each simple factor the
invariant form is normalized so that long roots have squared length 2:

    B_l : alpha_l short          C_l : alpha_l long
    F4  : alpha_1, alpha_2 long  G2  : alpha_1 short, (alpha_1, alpha_1) = 2/3
    D_l : alpha_{l-1}, alpha_l both attached to alpha_{l-2}
    E_l : alpha_2 attached to alpha_4, chain 1-3-4-5-...-l

A ``TypeSpec`` string is a list of factors joined by ``x``, e.g. ``"A2xB3"``.
Simple roots of later factors are numbered after those of earlier ones.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .linalg import Matrix

Root = tuple[int, ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {"E": (6, 7, 8), "F": (4,), "G": (2,)}


class TypeSpecError(ValueError):
    pass


@dataclass(frozen=True)
class TypeSpec:
    factors: tuple[tuple[str, int], ...]

    @classmethod
    def parse(cls, text: str) -> "TypeSpec":
        parts = [p.strip() for p in text.strip().lower().split("x")]
        if not text.strip() or any(not p for p in parts):
            raise TypeSpecError(f"empty factor in type spec {text!r}")
        factors = []
        for p in parts:
            m = re.fullmatch(r"([a-g])\s*(\d+)", p)
            if not m:
                raise TypeSpecError(f"cannot parse factor {p!r}")
            factors.append((m.group(1).upper(), int(m.group(2))))
        return cls.of(factors)

    @classmethod
    def of(cls, factors: Iterable[tuple[str, int]]) -> "TypeSpec":
        out = []
        for letter, rank in factors:
            letter = letter.upper()
            if letter in _MIN_RANK:
                if rank < _MIN_RANK[letter]:
                    raise TypeSpecError(f"invalid rank {rank} for type {letter}")
                if letter == "C" and rank == 2:
                    letter = "B"
            elif letter in _EXCEPTIONAL:
                if rank not in _EXCEPTIONAL[letter]:
                    raise TypeSpecError(f"invalid rank {rank} for type {letter}")
            else:
                raise TypeSpecError(f"unknown type letter {letter!r}")
            out.append((letter, rank))
        if not out:
            raise TypeSpecError("type spec needs at least one factor")
        return cls(tuple(out))

    @property
    def rank(self) -> int:
        return sum(r for _, r in self.factors)

    def __str__(self) -> str:
        return "x".join(f"{l}{r}" for l, r in self.factors)


def cartan_matrix(letter: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix, A[i][j] = <alpha_j, alpha_i^vee>."""
    n = rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter in "ABCD":
        chain = n - 1 if letter != "D" else n - 2
        for i in range(chain):
            link(i, i + 1)
        if letter == "B":
            # alpha_n short
            link(n - 2, n - 1, aij=-1, aji=-2)
        elif letter == "C":
            link(n - 2, n - 1, aij=-2, aji=-1)
        elif letter == "D":
            link(n - 3, n - 1)
    elif letter == "E":
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F":
        link(0, 1)
        link(1, 2, aij=-1, aji=-2)
        link(2, 3)
    elif letter == "G":
        # alpha_1 short
        link(0, 1, aij=-3, aji=-1)
    return a


def _squared_lengths(letter: str, rank: int) -> list[Fraction]:
    two, one = Fraction(2), Fraction(1)
    if letter == "B":
        return [two] * (rank - 1) + [one]
    if letter == "C":
        return [one] * (rank - 1) + [two]
    if letter == "F":
        return [two, two, one, one]
    if letter == "G":
        return [Fraction(2, 3), two]
    return [two] * rank


def height(root: Sequence[int]) -> int:
    return sum(root)


def is_positive(root: Sequence[int]) -> bool:
    return sum(root) > 0


def neg(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


def add(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[int], y: Sequence[int]) -> Root:
    return tuple(a - b for a, b in zip(x, y))


def root_key(root: Sequence[int]) -> tuple:
    return (height(root), tuple(root))


@dataclass(frozen=True)
class RootSystem:
    type_spec: TypeSpec
    cartan: tuple[tuple[int, ...], ...]
    gram: Matrix
    simple_roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    all_roots: tuple[Root, ...]
    factor_of: tuple[int, ...]  # simple index -> factor index
    _index: dict = field(repr=False, compare=False, hash=False, default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.all_roots)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, j)
            for i in range(self.rank)
            for j in range(i + 1, self.rank)
            if self.cartan[i][j] != 0
        )

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        nb = [set() for _ in range(self.rank)]
        for i, j in self.adjacency:
            nb[i].add(j)
            nb[j].add(i)
        return tuple(frozenset(s) for s in nb)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self.root_set

    def index_of(self, root: Sequence[int]) -> int:
        return self._index[tuple(root)]

    def positive_in(self, subset: Iterable[int]) -> list[Root]:
        """R_+^S: positive roots supported on ``subset``."""
        s = set(subset)
        return [r for r in self.positive_roots if all(c == 0 or i in s for i, c in enumerate(r))]

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.gram.entries
        return sum(
            (Fraction(xi) * g[i][j] * y[j] for i, xi in enumerate(x) if xi for j in range(len(y)) if y[j]),
            Fraction(0),
        )

    def coroot(self, root: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients n_i with root^vee = sum n_i alpha_i^vee."""
        rr = self.inner(root, root)
        return tuple(Fraction(c) * self.gram.entries[i][i] / rr for i, c in enumerate(root))

    def pairing(self, root: Sequence, i: int) -> Fraction:
        """<root, alpha_i^vee> = 2 (root, alpha_i) / (alpha_i, alpha_i)."""
        ai = self.simple_roots[i]
        return 2 * self.inner(root, ai) / self.gram.entries[i][i]

    def reflect(self, v: Sequence, i: int) -> tuple[Fraction, ...]:
        p = self.pairing(v, i)
        return tuple(Fraction(c) - (p if k == i else 0) for k, c in enumerate(v))

    def connected_components(self, subset: Iterable[int]) -> list[tuple[int, ...]]:
        return connected_components(self, subset)

    def highest_root(self, subset: Iterable[int]) -> Root:
        return highest_root(self, subset)


def build_root_system(spec: TypeSpec | str) -> RootSystem:
    if isinstance(spec, str):
        spec = TypeSpec.parse(spec)
    n = spec.rank
    cartan = [[0] * n for _ in range(n)]
    lengths: list[Fraction] = []
    factor_of: list[int] = []
    off = 0
    for f, (letter, r) in enumerate(spec.factors):
        a = cartan_matrix(letter, r)
        for i in range(r):
            for j in range(r):
                cartan[off + i][off + j] = a[i][j]
        lengths += _squared_lengths(letter, r)
        factor_of += [f] * r
        off += r
    gram = Matrix.from_rows(
        [[cartan[i][j] * lengths[i] / 2 for j in range(n)] for i in range(n)], cols=n
    )
    simple = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    # Grow positive roots by height: beta + alpha_i is a root iff q > 0 where
    # p - q = <beta, alpha_i^vee> and p is the depth of the alpha_i-string below beta.
    positive = set(simple)
    layer = list(simple)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in positive:
                        p += 1
                    else:
                        break
                pair = sum(beta[j] * cartan[i][j] for j in range(n))
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    nxt.add(tuple(up))
        nxt -= positive
        positive |= nxt
        layer = sorted(nxt)
    pos = tuple(sorted(positive, key=root_key))
    allr = tuple(sorted(list(pos) + [neg(r) for r in pos], key=root_key))
    rs = RootSystem(
        type_spec=spec,
        cartan=tuple(tuple(r) for r in cartan),
        gram=gram,
        simple_roots=simple,
        positive_roots=pos,
        all_roots=allr,
        factor_of=tuple(factor_of),
    )
    rs._index.update({r: k for k, r in enumerate(allr)})
    return rs


def connected_components(rs: RootSystem, subset: Iterable[int]) -> list[tuple[int, ...]]:
    """Dynkin-graph components of ``subset``, ordered by smallest index."""
    remaining = set(subset)
    comps = []
    while remaining:
        start = min(remaining)
        stack, comp = [start], {start}
        while stack:
            v = stack.pop()
            for w in rs.neighbours[v]:
                if w in remaining and w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        comps.append(tuple(sorted(comp)))
    comps.sort()
    return comps


def is_connected(rs: RootSystem, subset: Iterable[int]) -> bool:
    return len(connected_components(rs, subset)) == 1


def highest_root(rs: RootSystem, subset: Iterable[int]) -> Root:
    s = set(subset)
    if not s:
        raise ValueError("highest root of an empty subset")
    if not is_connected(rs, s):
        raise ValueError(f"subset {sorted(s)} is not connected")
    cands = rs.positive_in(s)
    top = max(cands, key=height)
    # uniqueness: top dominates everything coefficientwise
    if any(any(c > t for c, t in zip(r, top)) for r in cands):
        raise AssertionError("no unique dominating root")
    return top


def is_type_a(rs: RootSystem, subset: Iterable[int]) -> bool:
    """Connected subset whose Dynkin diagram is a simply laced path."""
    s = sorted(set(subset))
    if not s or not is_connected(rs, s):
        return False
    for i in s:
        deg = 0
        for j in s:
            if i != j and rs.cartan[i][j] != 0:
                if rs.cartan[i][j] * rs.cartan[j][i] != 1:
                    return False
                deg += 1
        if deg > 2:
            return False
    return True

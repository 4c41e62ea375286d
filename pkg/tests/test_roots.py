from fractions import Fraction
from itertools import combinations

import pytest

from seaweed_slices.roots import (
    TypeSpec,
    TypeSpecError,
    build_root_system,
    connected_components,
    height,
    highest_root,
    is_type_a,
)

# classical |R_+|
POSITIVE_COUNT = {
    "A": lambda l: l * (l + 1) // 2,
    "B": lambda l: l * l,
    "C": lambda l: l * l,
    "D": lambda l: l * (l - 1),
}
EXCEPTIONAL_COUNT = {("E", 6): 36, ("E", 7): 63, ("E", 8): 120, ("F", 4): 24, ("G", 2): 6}

TYPES_UP_TO_6 = (
    [f"A{l}" for l in range(1, 7)]
    + [f"B{l}" for l in range(2, 7)]
    + [f"C{l}" for l in range(3, 7)]
    + ["D4", "D5", "D6", "E6", "F4", "G2"]
)


def expected_positive(spec: str) -> int:
    ts = TypeSpec.parse(spec)
    total = 0
    for letter, l in ts.factors:
        total += POSITIVE_COUNT[letter](l) if letter in POSITIVE_COUNT else EXCEPTIONAL_COUNT[(letter, l)]
    return total


@pytest.mark.parametrize("spec", TYPES_UP_TO_6 + ["E7", "E8", "A2xB3", "A1xA1xG2"])
def test_root_counts_and_sign_split(spec):
    rs = build_root_system(spec)
    n_pos = expected_positive(spec)
    assert len(rs.positive_roots) == n_pos
    assert len(rs.all_roots) == 2 * n_pos
    for r in rs.all_roots:
        assert all(c >= 0 for c in r) or all(c <= 0 for c in r)
        factors = {rs.factor_of[i] for i, c in enumerate(r) if c}
        assert len(factors) == 1


def test_a2_roots():
    rs = build_root_system("A2")
    assert len(rs.all_roots) == 6
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_g2_roots_by_hand():
    rs = build_root_system("G2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}
    assert rs.positive_roots[-1] == (3, 2)
    assert rs.inner((1, 0), (1, 0)) < rs.inner((0, 1), (0, 1))


def test_orthogonal_factors():
    rs = build_root_system("A1xA1")
    assert len(rs.all_roots) == 4
    assert rs.inner((1, 0), (0, 1)) == 0


def test_inner_examples():
    assert build_root_system("A2").inner((1, 0), (0, 1)) == -1
    g2 = build_root_system("G2")
    assert g2.inner((1, 0), (1, 0)) == Fraction(2, 3)
    assert g2.inner((1, 0), (0, 1)) == -1
    assert g2.inner((3, 2), (1, 0)) == 0


@pytest.mark.parametrize("spec", TYPES_UP_TO_6)
def test_long_roots_have_length_two_and_form_positive(spec):
    rs = build_root_system(spec)
    lengths = {rs.inner(r, r) for r in rs.all_roots}
    assert max(lengths) == 2
    assert all(x > 0 for x in lengths)
    g = rs.gram.entries
    assert all(g[i][j] == g[j][i] for i in range(rs.rank) for j in range(rs.rank))


@pytest.mark.parametrize("spec", ["A3", "B3", "C3", "D4", "G2", "F4", "A1xB2"])
def test_weyl_invariance_and_closure(spec):
    rs = build_root_system(spec)
    for i in range(rs.rank):
        images = {tuple(int(c) for c in rs.reflect(r, i)) for r in rs.all_roots}
        assert images == set(rs.all_roots)
        for x in rs.positive_roots:
            for y in rs.positive_roots:
                assert rs.inner(rs.reflect(x, i), rs.reflect(y, i)) == rs.inner(x, y)


@pytest.mark.parametrize("spec", ["A3", "B3", "C3", "G2", "F4"])
def test_root_closure_against_weyl_orbit(spec):
    # the root set is the Weyl orbit of the simple roots
    rs = build_root_system(spec)
    orbit = set(rs.simple_roots)
    frontier = list(orbit)
    while frontier:
        v = frontier.pop()
        for i in range(rs.rank):
            w = tuple(int(c) for c in rs.reflect(v, i))
            if w not in orbit:
                orbit.add(w)
                frontier.append(w)
    assert orbit == set(rs.all_roots)


def test_root_order_is_height_then_lex():
    rs = build_root_system("B3")
    keys = [(height(r), r) for r in rs.all_roots]
    assert keys == sorted(keys)


def test_connected_components_examples():
    a5 = build_root_system("A5")
    assert connected_components(a5, [0, 1, 3, 4]) == [(0, 1), (3, 4)]
    assert connected_components(a5, []) == []
    assert connected_components(build_root_system("A3"), [0, 2]) == [(0,), (2,)]
    d4 = build_root_system("D4")
    assert connected_components(d4, [0, 2, 3]) == [(0,), (2,), (3,)]
    assert connected_components(d4, [0, 1, 3]) == [(0, 1, 3)]


def test_highest_root_examples():
    assert highest_root(build_root_system("A5"), range(5)) == (1, 1, 1, 1, 1)
    assert highest_root(build_root_system("B2"), [0, 1]) == (1, 2)
    assert highest_root(build_root_system("F4"), [2]) == (0, 0, 1, 0)
    with pytest.raises(ValueError):
        highest_root(build_root_system("A3"), [0, 2])
    with pytest.raises(ValueError):
        highest_root(build_root_system("A3"), [])


@pytest.mark.parametrize("spec", ["A4", "B4", "C4", "D4", "F4", "G2"])
def test_highest_root_dominates_every_connected_subset(spec):
    rs = build_root_system(spec)
    for k in range(1, rs.rank + 1):
        for sub in combinations(range(rs.rank), k):
            if len(connected_components(rs, sub)) != 1:
                continue
            top = highest_root(rs, sub)
            others = rs.positive_in(sub)
            assert all(height(r) < height(top) for r in others if r != top)


def test_type_spec_parsing():
    assert str(TypeSpec.parse("a2xB3")) == "A2xB3"
    assert str(TypeSpec.parse("C2")) == "B2"
    assert TypeSpec.parse("e8").rank == 8
    for bad in ["A0", "B1", "C1", "D3", "E5", "F3", "G3", "H3", "", "A2x", "Ax2"]:
        with pytest.raises(TypeSpecError):
            TypeSpec.parse(bad)


def test_type_a_detection():
    assert is_type_a(build_root_system("A3"), [0, 1, 2])
    assert not is_type_a(build_root_system("B3"), [0, 1, 2])
    assert is_type_a(build_root_system("B3"), [0, 1])
    assert not is_type_a(build_root_system("D4"), [0, 1, 2, 3])
    assert is_type_a(build_root_system("D4"), [0, 1, 2])

import random
from fractions import Fraction

import pytest

from symdol import rootsys
from symdol.rootsys import (
    build_root_system,
    from_orthogonal,
    is_dominant,
    killing_dual_form,
    rho,
    simple_reflection,
    to_orthogonal,
)

from oracles import positive_roots_by_reflection

CLASSICAL_COUNTS = {
    "A": lambda k: k * (k + 1) // 2,
    "B": lambda k: k * k,
    "C": lambda k: k * k,
    "D": lambda k: k * (k - 1),
    "G": lambda k: 6,
}

ALL_SYSTEMS = (
    [("A", k) for k in range(1, 9)]
    + [("B", k) for k in range(2, 9)]
    + [("C", k) for k in range(2, 9)]
    + [("D", k) for k in range(3, 9)]
    + [("G", 2)]
)

SMALL_SYSTEMS = [("A", 1), ("A", 2), ("B", 2), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]


@pytest.mark.parametrize("family,rank", ALL_SYSTEMS)
def test_positive_root_count(family, rank):
    rs = build_root_system(family, rank)
    expected = CLASSICAL_COUNTS[family](rank)
    assert len(rs.positive_roots) == expected
    assert len(rs.positive_roots_fw) == expected


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_positive_roots_match_reflection_closure(family, rank):
    rs = build_root_system(family, rank)
    assert set(rs.positive_roots_fw) == positive_roots_by_reflection(rs)


def test_rank_one_has_single_root():
    rs = build_root_system("A", 1)
    assert len(rs.positive_roots_fw) == 1
    assert rs.positive_roots_fw[0] == (2,)


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_positive_roots_are_nonneg_simple_combinations(family, rank):
    rs = build_root_system(family, rank)
    for root in rs.positive_roots_fw:
        assert rootsys.is_nonneg_root_combination(rs, root)


@pytest.mark.parametrize(
    "family,rank,message",
    [
        ("E", 6, "supported families"),
        ("B", 1, "rank >= 2"),
        ("D", 2, "rank >= 3"),
        ("G", 3, "rank = 2"),
        ("A", 0, "rank >= 1"),
    ],
)
def test_invalid_pairs_rejected(family, rank, message):
    with pytest.raises(ValueError, match=message):
        build_root_system(family, rank)


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_rho_is_all_ones_and_half_root_sum(family, rank):
    rs = build_root_system(family, rank)
    r = rho(rs)
    assert r == (1,) * rank
    total = [0] * rank
    for root in rs.positive_roots_fw:
        total = [a + b for a, b in zip(total, root)]
    assert tuple(total) == tuple(2 * c for c in r)
    # and in orthogonal coordinates
    orth_total = to_orthogonal(rs, tuple(total))
    rho_orth = to_orthogonal(rs, r)
    assert tuple(x / 2 for x in orth_total) == rho_orth


def test_killing_form_normalization_rank_one():
    rs = build_root_system("A", 1)
    alpha = rs.positive_roots_fw[0]
    assert killing_dual_form(rs, alpha, alpha) == Fraction(1, 2)
    assert killing_dual_form(rs, rho(rs), rho(rs)) == Fraction(1, 8)


def test_killing_form_b3_against_orthogonal_oracle():
    # rho = (5/2, 3/2, 1/2) in the orthogonal model; plain norm 35/4,
    # scaled by 1/(2 * dual Coxeter) = 1/10
    rs = build_root_system("B", 3)
    assert to_orthogonal(rs, rho(rs)) == (Fraction(5, 2), Fraction(3, 2), Fraction(1, 2))
    assert rs.dual_coxeter == 5
    assert killing_dual_form(rs, rho(rs), rho(rs)) == Fraction(35, 4) / 10


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_cartan_matrix_recovered_from_form(family, rank):
    rs = build_root_system(family, rank)
    for i, ai in enumerate(rs.positive_roots_fw[:rank]):
        for j, aj in enumerate(rs.positive_roots_fw[:rank]):
            ratio = 2 * killing_dual_form(rs, ai, aj) / killing_dual_form(rs, aj, aj)
            assert ratio == rs.cartan_matrix[i][j]


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_form_symmetric_bilinear_positive_definite(family, rank):
    rs = build_root_system(family, rank)
    rng = random.Random(20240 + rank)
    for _ in range(12):
        x = tuple(rng.randint(-4, 4) for _ in range(rank))
        y = tuple(rng.randint(-4, 4) for _ in range(rank))
        z = tuple(rng.randint(-4, 4) for _ in range(rank))
        assert killing_dual_form(rs, x, y) == killing_dual_form(rs, y, x)
        xz = tuple(a + 3 * b for a, b in zip(x, z))
        assert killing_dual_form(rs, xz, y) == (
            killing_dual_form(rs, x, y) + 3 * killing_dual_form(rs, z, y)
        )
        if any(x):
            assert killing_dual_form(rs, x, x) > 0


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_form_weyl_invariant(family, rank):
    rs = build_root_system(family, rank)
    rng = random.Random(513 + rank)
    for _ in range(10):
        x = tuple(rng.randint(-5, 5) for _ in range(rank))
        y = tuple(rng.randint(-5, 5) for _ in range(rank))
        for i in range(1, rank + 1):
            assert killing_dual_form(
                rs, simple_reflection(rs, i, x), simple_reflection(rs, i, y)
            ) == killing_dual_form(rs, x, y)


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_simple_reflection_involution_and_rho_shift(family, rank):
    rs = build_root_system(family, rank)
    rng = random.Random(97 + rank)
    for i in range(1, rank + 1):
        x = tuple(rng.randint(-5, 5) for _ in range(rank))
        assert simple_reflection(rs, i, simple_reflection(rs, i, x)) == x
        # s_i(rho) = rho - alpha_i
        expected = tuple(
            a - b for a, b in zip(rho(rs), rs.positive_roots_fw[i - 1])
        )
        assert simple_reflection(rs, i, rho(rs)) == expected


def test_simple_reflection_examples():
    a1 = build_root_system("A", 1)
    for k in range(-3, 4):
        assert simple_reflection(a1, 1, (k,)) == (-k,)
    a2 = build_root_system("A", 2)
    assert simple_reflection(a2, 1, (1, 0)) == (-1, 1)


def test_simple_reflection_index_range():
    rs = build_root_system("A", 2)
    with pytest.raises(ValueError, match="out of range"):
        simple_reflection(rs, 0, (1, 0))
    with pytest.raises(ValueError, match="out of range"):
        simple_reflection(rs, 3, (1, 0))


def test_is_dominant():
    rs = build_root_system("A", 2)
    assert is_dominant(rs, (0, 0))
    assert is_dominant(rs, rho(rs))
    assert not is_dominant(rs, (-1, 1))


def test_form_dimension_mismatch_rejected():
    rs = build_root_system("B", 3)
    with pytest.raises(ValueError, match="length"):
        killing_dual_form(rs, (1, 0), (0, 0, 1))


@pytest.mark.parametrize("family,rank", SMALL_SYSTEMS)
def test_coordinate_round_trip(family, rank):
    rs = build_root_system(family, rank)
    rng = random.Random(7 + rank)
    for _ in range(8):
        w = tuple(rng.randint(-6, 6) for _ in range(rank))
        assert from_orthogonal(rs, to_orthogonal(rs, w)) == w


def test_g2_has_six_positive_roots_and_rho():
    rs = build_root_system("G", 2)
    assert len(rs.positive_roots_fw) == 6
    assert rho(rs) == (1, 1)

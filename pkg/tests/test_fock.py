import math
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
from numpy.polynomial import hermite as nph

from symdol import fock
from symdol.gaussian import gq


def close(a: float, b: float) -> bool:
    return math.isclose(a, b, rel_tol=1e-10, abs_tol=1e-10)


# ---------------------------------------------------------------------------
# levels and indices
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n,l,expected", [(2, 3, 4), (1, 0, 1), (5, 0, 1), (3, 2, 6)])
def test_dim_level(n, l, expected):
    assert fock.dim_level(n, l) == expected
    assert len(fock.level_indices(n, l)) == expected


def test_level_indices_sorted_and_complete():
    idx = fock.level_indices(3, 4)
    assert idx == sorted(idx)
    assert all(sum(b) == 4 and len(b) == 3 for b in idx)
    assert len(set(idx)) == len(idx)


# ---------------------------------------------------------------------------
# ladder operators
# ---------------------------------------------------------------------------

def test_sigma_raise_coefficient():
    v = fock.sigma_raise(1, fock.basis_vector(1, (0,)))
    assert v.terms == {(1,): gq(0, Fraction(-1, 2))}


def test_sigma_raise_linearity():
    two_h0_plus_h1 = fock.add(
        fock.scale(2, fock.basis_vector(1, (0,))), fock.basis_vector(1, (1,))
    )
    image = fock.sigma_raise(1, two_h0_plus_h1)
    assert image.terms == {(1,): gq(0, -1), (2,): gq(0, Fraction(-1, 2))}


def test_sigma_lower_coefficient_and_vacuum():
    v = fock.sigma_lower(1, fock.basis_vector(1, (1,)))
    assert v.terms == {(0,): gq(0, -1)}
    assert fock.sigma_lower(1, fock.basis_vector(1, (0,))).is_zero()
    assert fock.sigma_lower(2, fock.basis_vector(2, (3, 0))).is_zero()


@pytest.mark.parametrize("beta", [(0,), (4,), (2,)])
def test_number_operator(beta):
    b = fock.basis_vector(1, beta)
    num = fock.add(
        fock.sigma_raise(1, fock.sigma_lower(1, b)),
        fock.sigma_lower(1, fock.sigma_raise(1, b)),
    )
    assert num.terms == {beta: gq(Fraction(-(2 * beta[0] + 1), 2))}


def test_direction_index_validated():
    with pytest.raises(ValueError, match="out of range"):
        fock.sigma_raise(3, fock.basis_vector(2, (0, 0)))
    with pytest.raises(ValueError, match="out of range"):
        fock.sigma_lower(0, fock.basis_vector(2, (0, 0)))


# ---------------------------------------------------------------------------
# H_0
# ---------------------------------------------------------------------------

def test_h0_eigenvalues():
    v = fock.h0_apply(fock.basis_vector(1, (0,)))
    assert v.terms == {(0,): gq(Fraction(-1, 2))}
    v = fock.h0_apply(fock.basis_vector(3, (1, 0, 1)))
    assert v.terms == {(1, 0, 1): gq(Fraction(-7, 2))}


def test_h0_commutes_down_by_one_with_raising():
    for beta in [(0, 2), (1, 1)]:
        b = fock.basis_vector(2, beta)
        lhs = fock.h0_apply(fock.sigma_raise(1, b))
        eig = Fraction(-(2 * sum(beta) + 2), 2)
        rhs = fock.scale(eig - 1, fock.sigma_raise(1, b))
        assert lhs.terms == rhs.terms


def test_h0_matches_ladder_sum():
    # H_0 = sum_j (sigma(Z_j) sigma(Zbar_j) + sigma(Zbar_j) sigma(Z_j))
    for beta in [(0, 0, 0), (1, 2, 0), (3, 1, 2)]:
        b = fock.basis_vector(3, beta)
        total = fock.zero_vector(3)
        for j in range(1, 4):
            total = fock.add(total, fock.sigma_raise(j, fock.sigma_lower(j, b)))
            total = fock.add(total, fock.sigma_lower(j, fock.sigma_raise(j, b)))
        assert total.terms == fock.h0_apply(b).terms


def test_h0_ledger_dimension_and_eigenvalue():
    for n, l in product((1, 2, 3), range(0, 5)):
        assert fock.dim_level(n, l) == math.comb(n + l - 1, l)
        for beta in fock.level_indices(n, l):
            v = fock.h0_apply(fock.basis_vector(n, beta))
            assert v.terms[beta] == gq(Fraction(-(2 * l + n), 2))


# ---------------------------------------------------------------------------
# commutation relations
# ---------------------------------------------------------------------------

def _sigma_direction(n, d, v):
    """sigma of the d-th vector in the symplectic basis (a_1, b_1, ..., a_n, b_n)."""
    ca = [Fraction(0)] * n
    cb = [Fraction(0)] * n
    if d % 2 == 0:
        ca[d // 2] = Fraction(1)
    else:
        cb[d // 2] = Fraction(1)
    return fock.sigma_real(ca, cb, v)


def _omega0(n, d, e):
    """omega_0 on the symplectic basis: omega(a_i, b_i) = 1."""
    if d // 2 != e // 2:
        return 0
    if d % 2 == 0 and e % 2 == 1:
        return 1
    if d % 2 == 1 and e % 2 == 0:
        return -1
    return 0


@pytest.mark.parametrize("n,level", [(1, 0), (1, 3), (2, 2), (3, 1)])
def test_weyl_commutation_relations(n, level):
    for beta in fock.level_indices(n, level):
        b = fock.basis_vector(n, beta)
        for d in range(2 * n):
            for e in range(2 * n):
                lhs = fock.add(
                    _sigma_direction(n, d, _sigma_direction(n, e, b)),
                    fock.scale(-1, _sigma_direction(n, e, _sigma_direction(n, d, b))),
                )
                expected = fock.scale(gq(0, -_omega0(n, d, e)), b)
                assert lhs.terms == expected.terms, (n, level, d, e)


def test_z_zbar_commutator_is_half_identity():
    for beta in [(0, 2), (3, 1)]:
        b = fock.basis_vector(2, beta)
        for j in (1, 2):
            lhs = fock.add(
                fock.sigma_raise(j, fock.sigma_lower(j, b)),
                fock.scale(-1, fock.sigma_lower(j, fock.sigma_raise(j, b))),
            )
            assert lhs.terms == fock.scale(Fraction(1, 2), b).terms


# ---------------------------------------------------------------------------
# inner product and adjointness
# ---------------------------------------------------------------------------

def test_inner_product_values():
    h0 = fock.basis_vector(1, (0,))
    h3 = fock.basis_vector(1, (3,))
    assert fock.inner_product(h0, h0) == gq(Fraction(1, 2))
    assert fock.inner_product(h3, h3) == gq(24)   # 2^2 * 3!
    assert fock.inner_product(fock.basis_vector(1, (1,)), fock.basis_vector(1, (2,))) == gq(0)


def test_inner_product_sesquilinear():
    v = fock.basis_vector(1, (2,))
    w = fock.basis_vector(1, (2,))
    c = gq(Fraction(1, 3), Fraction(-2, 5))
    assert fock.inner_product(fock.scale(c, v), w) == c * fock.inner_product(v, w)
    assert fock.inner_product(v, fock.scale(c, w)) == c.conjugate() * fock.inner_product(v, w)


def test_raise_lower_adjoint_pair():
    # <sigma(Z_j) h_beta, h_{beta+e_j}> = -<h_beta, sigma(Zbar_j) h_{beta+e_j}>
    for n, beta, j in [(1, (2,), 1), (2, (1, 0), 2), (3, (0, 1, 2), 3)]:
        up = tuple(b + 1 if k == j - 1 else b for k, b in enumerate(beta))
        hb = fock.basis_vector(n, beta)
        hup = fock.basis_vector(n, up)
        lhs = fock.inner_product(fock.sigma_raise(j, hb), hup)
        rhs = -1 * fock.inner_product(hb, fock.sigma_lower(j, hup))
        assert lhs == rhs


def test_sigma_real_anti_self_adjoint():
    # exact anti-self-adjointness on a spread of vectors and directions
    cases = [
        (1, [Fraction(1)], [Fraction(0)]),
        (1, [Fraction(2, 3)], [Fraction(-1, 2)]),
        (2, [Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]),
        (2, [Fraction(1, 2), Fraction(3)], [Fraction(-2), Fraction(1, 5)]),
    ]
    for n, ca, cb in cases:
        for lv, lw in product(range(3), range(3)):
            for bv in fock.level_indices(n, lv):
                for bw in fock.level_indices(n, lw):
                    v = fock.basis_vector(n, bv)
                    w = fock.basis_vector(n, bw)
                    lhs = fock.inner_product(fock.sigma_real(ca, cb, v), w)
                    rhs = -1 * fock.inner_product(v, fock.sigma_real(ca, cb, w))
                    assert lhs == rhs


def test_sigma_z_matrix_adjoint_is_minus_sigma_zbar():
    # sigma(Z_j)^* = -sigma(Zbar_j) entrywise w.r.t. the weighted inner product
    n, j = 2, 1
    for l in range(0, 4):
        up = fock.operator_from_action(n, l, l + 1, lambda v: fock.sigma_raise(j, v))
        down = fock.operator_from_action(n, l + 1, l, lambda v: fock.sigma_lower(j, v))
        for tgt in fock.level_indices(n, l + 1):
            for src in fock.level_indices(n, l):
                lhs = up.matrix.get((tgt, src), gq(0)) * fock.basis_norm_sq(tgt)
                rhs = -(down.matrix.get((src, tgt), gq(0)).conjugate()) * fock.basis_norm_sq(src)
                assert lhs == rhs


# ---------------------------------------------------------------------------
# quadrature oracle
# ---------------------------------------------------------------------------

def test_quadrature_oracle_values():
    assert close(fock.hermite_quadrature_oracle(0, 0), math.sqrt(math.pi))
    assert close(fock.hermite_quadrature_oracle(1, 2), 0.0)
    assert close(fock.hermite_quadrature_oracle(3, 3), math.sqrt(math.pi) * 8 * 6)


def test_quadrature_oracle_range_checked():
    with pytest.raises(ValueError):
        fock.hermite_quadrature_oracle(13, 0)


@pytest.mark.parametrize("m", range(0, 9))
def test_inner_product_matches_quadrature(m):
    for mp in range(0, 9):
        exact = fock.inner_product(fock.basis_vector(1, (m,)), fock.basis_vector(1, (mp,)))
        assert exact.is_real()
        scaled = fock.hermite_quadrature_oracle(m, mp) / (2 * math.sqrt(math.pi))
        assert close(float(exact.re), scaled), (m, mp)


def _padded_sum(c1, c2):
    size = max(len(c1), len(c2))
    out = np.zeros(size)
    out[: len(c1)] += c1
    out[: len(c2)] += c2
    return out


@pytest.mark.parametrize("m", range(0, 12))
def test_hermite_recurrences_weakly(m):
    # (t - d/dt) h_m = -h_{m+1} and (t + d/dt) h_m = -2m h_{m-1},
    # tested via quadrature inner products against h_0 ... h_12
    cm = fock.hermite_coefficients(m)
    up = _padded_sum(2 * nph.hermmulx(cm), -nph.hermder(cm))  # (t - d/dt) h_m
    down = nph.hermder(cm)                                    # (t + d/dt) h_m
    up_expected = -fock.hermite_coefficients(m + 1)
    down_expected = (
        -2 * m * fock.hermite_coefficients(m - 1) if m >= 1 else np.zeros(1)
    )
    for k in range(0, 13):
        ck = fock.hermite_coefficients(k)
        assert close(
            fock._hermite_function_inner(up, ck),
            fock._hermite_function_inner(up_expected, ck),
        )
        assert close(
            fock._hermite_function_inner(down, ck),
            fock._hermite_function_inner(down_expected, ck),
        )


# ---------------------------------------------------------------------------
# symbol products
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("l", range(0, 9))
def test_symbol_product_unit_vector(l):
    op = fock.symbol_product(1, l, [1, 0])
    assert fock.as_scalar_identity(op) == gq(-(2 * l + 2))


def test_symbol_product_scales_with_metric():
    v = [Fraction(1, 2), Fraction(1, 3)]
    g = fock.metric_norm_sq(1, v)
    for l in (0, 2, 5):
        op = fock.symbol_product(1, l, v)
        assert fock.as_scalar_identity(op) == gq(-(2 * l + 2) * g)


@pytest.mark.parametrize("l", [0, 1, 4])
def test_symbol_product_reversed_order(l):
    # lowering first, then raising: -2l g(v,v), degenerate at the vacuum level
    v = [2, -1]
    g = fock.metric_norm_sq(1, v)
    down = fock.symbol_lower_operator(1, l, v)
    if l == 0:
        assert fock.as_scalar_identity(down) == gq(0)
        return
    up = fock.symbol_raise_operator(1, l - 1, v)
    rev = fock.compose(up, down)
    assert fock.as_scalar_identity(rev) == gq(-2 * l * g)


def test_symbol_product_rejects_zero_vector():
    with pytest.raises(ValueError, match="zero vector"):
        fock.symbol_product(1, 0, [0, 0])


def test_symbol_product_not_scalar_for_two_directions():
    op = fock.symbol_product(2, 1, [1, 0, 0, 1])
    assert fock.as_scalar_identity(op) is None


# ---------------------------------------------------------------------------
# operator materialization and export
# ---------------------------------------------------------------------------

def test_strict_mode_rejects_level_violation():
    with pytest.raises(ValueError, match="outside level"):
        fock.operator_from_action(1, 1, 1, lambda v: fock.sigma_raise(1, v))


def test_symbol_mode_truncates_silently():
    op = fock.operator_from_action(
        1, 1, 1, lambda v: fock.sigma_raise(1, v), mode="symbol"
    )
    assert op.matrix == {}


def test_json_triplets_golden():
    op = fock.symbol_product(2, 1, [1, 0, 0, 1])
    assert fock.to_json_triplets(op) == [
        [0, 0, "-6"],
        [0, 1, "-2i"],
        [1, 0, "2i"],
        [1, 1, "-6"],
    ]


def test_compose_shape_checked():
    up0 = fock.symbol_raise_operator(1, 0, [1, 0])
    up1 = fock.symbol_raise_operator(1, 1, [1, 0])
    with pytest.raises(ValueError, match="not composable"):
        fock.compose(up0, up1)


def test_h0_operator_level_preserving():
    op = fock.h0_operator(2, 3)
    assert op.source_level is None and op.target_level is None
    for l in range(0, 4):
        level_op = fock.restrict_to_level(op, l, l)
        assert fock.as_scalar_identity(level_op) == gq(Fraction(-(2 * l + 2), 2))


def test_h0_shifts_raising_operator_by_matrix_composition():
    # H_0 sigma(Z_1) = (eigenvalue - 1) sigma(Z_1) on each level, as matrices
    n, l = 2, 2
    up = fock.operator_from_action(n, l, l + 1, lambda v: fock.sigma_raise(1, v))
    h0_all = fock.h0_operator(n, l + 1)
    lhs = fock.compose(fock.restrict_to_level(h0_all, l + 1, l + 1), up)
    eig = Fraction(-(2 * l + n), 2)
    rhs = {key: gq(eig - 1) * c for key, c in up.matrix.items()}
    assert lhs.matrix == rhs


def test_json_triplets_for_level_preserving_operator():
    op = fock.h0_operator(1, 2)
    assert fock.to_json_triplets(op) == [
        [0, 0, "-1/2"],
        [1, 1, "-3/2"],
        [2, 2, "-5/2"],
    ]

"""Ladder matrices and the deformed-algebra relation residuals."""

import math

import numpy as np
import pytest

from qdeform import (
    DimensionTooSmallError,
    RealQ,
    RootOfUnity,
    abs_q_number,
    abs_qnumber_diag,
    build_adjoint_ladder,
    build_ladder,
    matrix_mismatch,
    number_operator,
    q_number_value,
    truncation_safe_dim,
    verify_relations,
)


def residual_by_name(param, dim):
    return {r.relation: r for r in verify_relations(param, dim)}


# --- construction ------------------------------------------------------------

def test_undeformed_ladder_at_q_one():
    raising, lowering = build_ladder(RealQ(1.0), 4)
    for n in range(3):
        assert raising[n + 1, n] == math.sqrt(n + 1)
        assert lowering[n, n + 1] == math.sqrt(n + 1)
    assert np.count_nonzero(raising) == 3
    assert np.count_nonzero(lowering) == 3


def test_order_two_root_ladder():
    raising, lowering = build_ladder(RootOfUnity(2, 1), 2)
    assert raising[1, 0] == 1.0
    assert lowering[0, 1] == 1.0
    # {2}_q = 0 at q = -1: the raising operator kills the top state
    top = np.zeros(2)
    top[1] = 1.0
    assert np.all(raising @ top == 0)


def test_real_half_ladder_entry():
    raising, _ = build_ladder(RealQ(0.5), 3)
    assert raising[2, 1] == math.sqrt(1.5)


def test_adjoints_are_conjugate_transposes():
    for param in (RealQ(0.5), RootOfUnity(6, 1), RootOfUnity(5, 2)):
        raising, lowering = build_ladder(param, 6)
        raising_dag, lowering_dag = build_adjoint_ladder(param, 6)
        assert np.array_equal(raising_dag, raising.conj().T)
        assert np.array_equal(lowering_dag, lowering.conj().T)


def test_real_q_lowering_adjoint_is_raising():
    for q in (0.3, 1.0, 2.5):
        raising, lowering = build_ladder(RealQ(q), 12)
        assert np.array_equal(lowering.conj().T, raising)


def test_root_adjoint_entry():
    _, lowering_dag = build_adjoint_ladder(RootOfUnity(6, 1), 3)
    expected = np.conj(np.sqrt(complex(q_number_value(2, RootOfUnity(6, 1)))))
    assert lowering_dag[2, 1] == expected


def test_bad_dimension_rejected():
    with pytest.raises(ValueError):
        build_ladder(RealQ(1.0), 0)
    with pytest.raises(DimensionTooSmallError):
        verify_relations(RealQ(1.0), 1)


# --- diagonal products ----------------------------------------------------------

@pytest.mark.parametrize(
    "param", [RealQ(0.5), RealQ(1.0), RealQ(2.5), RootOfUnity(6, 1), RootOfUnity(5, 2)]
)
def test_products_reproduce_qnumbers(param):
    dim = 8
    raising, lowering = build_ladder(param, dim)
    down_up = lowering @ raising
    up_down = raising @ lowering
    for n in range(dim - 1):
        expected_up = complex(q_number_value(n + 1, param))
        expected_down = complex(q_number_value(n, param))
        scale = max(1.0, abs(expected_up))
        assert abs(down_up[n, n] - expected_up) <= 1e-14 * scale
        assert abs(up_down[n, n] - expected_down) <= 1e-14 * scale


@pytest.mark.parametrize(
    "param", [RealQ(0.5), RealQ(2.5), RootOfUnity(6, 1), RootOfUnity(6, 2)]
)
def test_adjoint_products_give_moduli(param):
    dim = 8
    raising, lowering = build_ladder(param, dim)
    down_norm = lowering.conj().T @ lowering
    up_norm = raising.conj().T @ raising
    for n in range(dim - 1):
        target_down = abs_q_number(n, param)
        target_up = abs_q_number(n + 1, param)
        assert abs(down_norm[n, n] - target_down) <= 1e-12 * max(1.0, target_down)
        assert abs(up_norm[n, n] - target_up) <= 1e-12 * max(1.0, target_up)


def test_abs_qnumber_diag_values():
    assert np.array_equal(abs_qnumber_diag(RealQ(2.0), 3, 0), np.diag([0.0, 1.0, 3.0]))
    root = RootOfUnity(6, 1)
    expected = [0.0, 1.0, math.sqrt(3), 2.0, math.sqrt(3), 1.0]
    got = np.diag(abs_qnumber_diag(root, 6, 0))
    assert np.max(np.abs(got - expected)) < 1e-12
    assert abs_qnumber_diag(RealQ(0.3), 4, 1)[0, 0] == 1.0
    with pytest.raises(ValueError):
        abs_qnumber_diag(RealQ(1.0), 4, 2)


# --- safe subspace ----------------------------------------------------------------

def test_truncation_safe_dim():
    assert truncation_safe_dim(RealQ(0.5), 10) == 9
    assert truncation_safe_dim(RootOfUnity(6, 1), 6) == 6
    assert truncation_safe_dim(RootOfUnity(6, 1), 5) == 4
    assert truncation_safe_dim(RootOfUnity(6, 1), 12) == 12
    # {3}_q vanishes for the (6, 2) root, so dim 3 already closes
    assert truncation_safe_dim(RootOfUnity(6, 2), 3) == 3


# --- relation residuals -------------------------------------------------------------

def test_relations_close_on_roots():
    for m in range(2, 13):
        for j in range(1, m):
            by_name = residual_by_name(RootOfUnity(m, j), m)
            assert by_name["deformed_commutator"].checked_subspace == range(m)
            for name, record in by_name.items():
                assert record.max_abs_residual < 1e-12, (m, j, name)


def test_relations_real_q():
    for q in (0.3, 0.9, 1.0, 2.5):
        by_name = residual_by_name(RealQ(q), 50)
        assert by_name["deformed_commutator"].checked_subspace == range(49)
        assert "real_q_adjoint_commutator_down" in by_name
        assert "real_q_adjoint_commutator_up" in by_name
        assert "biedenharn_macfarlane_down" not in by_name
        for name, record in by_name.items():
            assert record.max_abs_residual < 1e-12, (q, name)


def test_biedenharn_macfarlane_only_for_fundamental():
    fundamental = residual_by_name(RootOfUnity(8, 1), 8)
    assert "biedenharn_macfarlane_down" in fundamental
    assert "biedenharn_macfarlane_up" in fundamental
    assert fundamental["biedenharn_macfarlane_down"].max_abs_residual < 1e-12
    other = residual_by_name(RootOfUnity(8, 3), 8)
    assert "biedenharn_macfarlane_down" not in other


def test_biedenharn_macfarlane_fails_beyond_one_period():
    # the relation belongs to the m-dimensional module; at dim = 2m the
    # verifier must report the failure instead of restricting the window
    by_name = residual_by_name(RootOfUnity(4, 1), 8)
    assert by_name["deformed_commutator"].max_abs_residual < 1e-12
    assert by_name["biedenharn_macfarlane_down"].max_abs_residual > 0.1


def test_number_commutators_structural():
    # structural identity of single-off-diagonal matrices; residual is pure
    # matmul rounding, (n+1)*r - n*r - r
    for param in (RealQ(0.5), RootOfUnity(6, 1)):
        by_name = residual_by_name(param, 6)
        assert by_name["number_commutator_up"].max_abs_residual < 1e-14
        assert by_name["number_commutator_down"].max_abs_residual < 1e-14


def test_number_operator_shape():
    assert np.array_equal(number_operator(3), np.diag([0.0, 1.0, 2.0]))


def test_matrix_mismatch_scaling():
    a = np.array([[1e19, 0.0], [0.0, 1.0]])
    b = a * (1 + 1e-16)
    assert matrix_mismatch(a, b) < 1e-12  # relative, not absolute
    assert matrix_mismatch(a, a) == 0.0

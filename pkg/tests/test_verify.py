import numpy as np
import pytest
from numpy.testing import assert_allclose

from convexotonic import (
    ConvexotonicMap,
    MapSign,
    MatrixTuple,
    TheoremData,
    algebra_closure,
    example_catalog,
    pencil_structure_constants,
    search_unimodular_twist,
    structure_constants,
    verify_ball_equality,
    verify_corollary,
    verify_properness,
    verify_theorem,
)
from convexotonic.sampling import random_unitary


def check_map(report):
    return {c.name: c for c in report.checks}


# --- theorem harness ----------------------------------------------------------

def test_theorem_identity_data(e_tuple):
    data = TheoremData(e_tuple, e_tuple, np.eye(2), np.eye(2))
    report = verify_theorem(data, samples=10, seed=1)
    assert report.passed
    xi = pencil_structure_constants(e_tuple, np.eye(2)).xi
    assert_allclose(xi.data, e_tuple.data, atol=1e-13)


@pytest.mark.parametrize("alpha", [1j, -1.0, np.exp(0.7j)])
def test_theorem_scaled_data(e_tuple, alpha):
    data = TheoremData(
        e_tuple,
        MatrixTuple(alpha * e_tuple.data),
        alpha * np.eye(2),
        np.eye(2),
    )
    report = verify_theorem(data, samples=10, seed=2)
    assert report.passed
    xi = pencil_structure_constants(e_tuple, alpha * np.eye(2)).xi
    assert_allclose(xi.data, alpha * e_tuple.data, atol=1e-13)


def test_theorem_swap_twist_fails(e_tuple):
    swap = np.array([[0, 1], [1, 0]], dtype=complex)
    report = verify_theorem(TheoremData(e_tuple, e_tuple, swap, np.eye(2)))
    assert not report.passed
    checks = check_map(report)
    assert not checks["twisted-product-constants"].passed
    assert "span" in checks["twisted-product-constants"].detail.lower()


def test_theorem_rejects_non_unitary(e_tuple):
    with pytest.raises(ValueError):
        TheoremData(e_tuple, e_tuple, 2 * np.eye(2), np.eye(2))


def test_theorem_conjugated_data(e_tuple):
    rng = np.random.default_rng(12)
    m = random_unitary(rng, 2)
    alpha = np.exp(0.3j)
    b = MatrixTuple(
        np.stack([m.conj().T @ (alpha * e_tuple[j]) @ m for j in range(2)])
    )
    report = verify_theorem(
        TheoremData(e_tuple, b, alpha * np.eye(2), m), samples=10, seed=3
    )
    assert report.passed
    # the conjugation identity forces equal pencil norms
    assert verify_ball_equality(e_tuple, b, samples=20, seed=13).passed


def test_twist_search_finds_grid_alpha(e_tuple):
    alpha = np.exp(2j * np.pi * 90 / 360)  # on the grid exactly
    found = search_unimodular_twist(e_tuple, MatrixTuple(alpha * e_tuple.data))
    assert found is not None
    assert abs(found[0] - alpha) < 1e-12
    assert found[1] < 1e-12


def test_twist_search_rejects_off_family(e_tuple, f_tuple):
    assert search_unimodular_twist(e_tuple, MatrixTuple(2.0 * e_tuple.data)) is None


# --- ball equality --------------------------------------------------------------

def test_ball_equality_cases(e_tuple):
    assert verify_ball_equality(e_tuple, e_tuple, samples=20, seed=1).passed
    scaled = MatrixTuple(1j * e_tuple.data)
    report = verify_ball_equality(e_tuple, scaled, samples=20, seed=2)
    assert report.passed
    assert report.checks[0].residual < 1e-12
    rng = np.random.default_rng(3)
    u = random_unitary(rng, 2)
    conjugated = MatrixTuple(np.stack([u.conj().T @ e_tuple[j] @ u for j in range(2)]))
    report = verify_ball_equality(e_tuple, conjugated, samples=20, seed=4)
    assert report.passed
    assert report.checks[0].residual < 1e-10


def test_ball_equality_detects_difference(e_tuple, f_tuple):
    report = verify_ball_equality(e_tuple, MatrixTuple(2 * e_tuple.data), samples=10, seed=5)
    assert not report.passed


# --- properness ------------------------------------------------------------------

def test_properness_unit_jordan(e_tuple):
    report = verify_properness(e_tuple, samples=25, seed=6)
    assert report.passed, [c for c in report.checks if not c.passed]


def test_properness_corner_pair(r2_tuple):
    report = verify_properness(r2_tuple, samples=25, seed=7)
    assert report.passed


def test_properness_nilpotent_pair(f_tuple):
    report = verify_properness(f_tuple, samples=25, seed=8)
    assert report.passed


# --- corollary --------------------------------------------------------------------

def test_corollary_single_shift(f_tuple):
    single = MatrixTuple.from_matrices([f_tuple[0]])
    report = verify_corollary(single, samples=25, seed=9)
    assert report.passed, [c for c in report.checks if not c.passed]
    checks = check_map(report)
    assert "appended 1" in checks["closure"].detail


def test_corollary_padded_map_closed_form(f_tuple):
    # with the closure of the single shift, the padded plus-sign map is
    # x -> (x, -x^2)
    closure = algebra_closure(MatrixTuple.from_matrices([f_tuple[0]]))
    xi = structure_constants(closure.extended).xi
    q = ConvexotonicMap(xi, MapSign.PLUS)
    x = np.array([[0.2, 0.1], [0.0, -0.3]], dtype=complex)
    padded = MatrixTuple.from_matrices([x, np.zeros((2, 2))])
    image = q(padded)
    assert_allclose(image[0], x, atol=1e-13)
    assert_allclose(image[1], -x @ x, atol=1e-13)


def test_corollary_scalar_projection():
    single = MatrixTuple.from_matrices([np.array([[1.0, 0.0], [0.0, 0.0]])])
    report = verify_corollary(single, samples=25, seed=10)
    assert report.passed
    checks = check_map(report)
    assert "appended 0" in checks["closure"].detail


def test_corollary_reduces_to_properness(e_tuple):
    report = verify_corollary(e_tuple, samples=25, seed=11)
    assert report.passed


# --- catalog -----------------------------------------------------------------------

def test_catalog_passes_and_warns():
    report = example_catalog(seed=42)
    assert report.passed, [c.name for c in report.checks if not c.passed]
    assert any("x1^2" in w for w in report.warnings)
    names = [c.name for c in report.checks]
    assert "type-i/candidate-map-transport" in names
    assert "type-ii/unbounded-witness" in names
    assert "mobius-conjugate/spot-value" in names


def test_catalog_deterministic():
    a = example_catalog(seed=7).to_dict()
    b = example_catalog(seed=7).to_dict()
    assert a == b

import numpy as np
import pytest

from fdsw.analysis import find_factor_roots
from fdsw.bloch import (
    BlochMatrices,
    DegenerateQuarticError,
    Stability,
    build_matrices,
    classify_band,
    classify_from_quartic,
    eigenbasis,
)
from fdsw.factors import Model, index

C_1_0 = 0.87269362089782969154
DC_1_0 = -0.19572723242223277472


def quartic_roots_in_X(bm):
    powers = np.array([(1j * bm.xi) ** n for n in range(5)])
    return np.roots((bm.quartic * powers)[::-1])


def test_eigenbasis_leading_terms():
    eb = eigenbasis(0.0, 0.0, 1.0, 0.0)
    np.testing.assert_allclose(eb.coeffs[0, 1], [C_1_0, 1.0], rtol=1e-13)  # cos z
    np.testing.assert_allclose(eb.coeffs[1, 2], [C_1_0, 1.0], rtol=1e-13)  # sin z
    np.testing.assert_allclose(eb.coeffs[2, 0], [2.0 * C_1_0, -1.0], rtol=1e-13)
    np.testing.assert_allclose(eb.coeffs[3, 0], [1.0, 2.0 * C_1_0], rtol=1e-13)


def test_eigenbasis_sideband_rotation():
    xi = 0.1
    eb = eigenbasis(xi, 0.0, 1.0, 0.0)
    scale = xi * DC_1_0 / (C_1_0**2 + 1.0)
    np.testing.assert_allclose(
        eb.coeffs[0, 2], 1j * scale * np.array([1.0, -C_1_0]), rtol=1e-12
    )
    np.testing.assert_allclose(
        eb.coeffs[1, 1], -1j * scale * np.array([1.0, -C_1_0]), rtol=1e-12
    )


def test_eigenbasis_amplitude_corrections():
    a = 0.01
    eb = eigenbasis(0.0, a, 1.0, 0.0)
    np.testing.assert_allclose(
        eb.coeffs[3, 1], [a / (2.0 * C_1_0), 0.0], rtol=1e-12
    )  # ~ (0.005729, 0)
    assert eb.coeffs[3, 1][0] == pytest.approx(0.00572938, rel=1e-5)
    np.testing.assert_allclose(eb.coeffs[2, 1], [a, 0.0], rtol=1e-13)


def test_pencil_vanishes_at_origin_of_parameters():
    bm = build_matrices(0.0, 0.0, 1.0, 0.0)
    assert np.abs(bm.Lmat).max() == 0.0
    np.testing.assert_allclose(bm.Imat, np.eye(4), atol=1e-15)
    np.testing.assert_allclose(bm.quartic, [0, 0, 0, 0, 1], atol=1e-15)


def test_quartic_leading_coefficient_is_det_I():
    bm = build_matrices(0.01, 0.01, 1.3, 0.4)
    assert bm.quartic[4] == pytest.approx(np.linalg.det(bm.Imat), rel=1e-12)


@pytest.mark.parametrize("kappa,bond", [(0.5, 0.0), (1.0, 0.0), (2.0, 1.0), (0.7, 0.2)])
def test_zero_amplitude_roots_are_real(kappa, bond):
    bm = build_matrices(0.01, 0.0, kappa, bond)
    roots = quartic_roots_in_X(bm)
    biggest = max(abs(r) for r in roots)
    assert max(abs(r.imag) for r in roots) < 1e-8 * (1.0 + biggest)
    assert classify_from_quartic(bm) is Stability.STABLE


def test_zero_amplitude_transport_pair():
    # two of the four roots sit at X = -kappa*c' (split at O(xi) by the
    # xi^2 dispersive rotation), the other two are the eigenvalues of the
    # symmetric 2x2 mean-mode block
    bm = build_matrices(0.01, 0.0, 1.0, 0.0)
    roots = sorted(quartic_roots_in_X(bm).real)
    near_transport = [r for r in roots if abs(r - (-DC_1_0)) < 5e-3]
    assert len(near_transport) == 2


def test_classification_matches_known_cases():
    assert classify_from_quartic(build_matrices(0.01, 0.01, 2.0, 0.0)) is Stability.UNSTABLE
    assert classify_from_quartic(build_matrices(0.01, 0.01, 0.5, 0.0)) is Stability.STABLE


def test_degenerate_quartic_raises():
    bm = BlochMatrices(
        xi=0.01,
        amplitude=0.0,
        kappa=1.0,
        bond=0.0,
        Lmat=np.zeros((4, 4), dtype=complex),
        Imat=np.zeros((4, 4), dtype=complex),
        quartic=np.zeros(5, dtype=complex),
    )
    with pytest.raises(DegenerateQuarticError):
        classify_from_quartic(bm)


def probe_grid_points():
    kappas = [0.3, 0.5, 0.8, 1.5, 2.0, 3.0]
    bonds = [0.0, 0.05, 0.2, 1.0, 5.0]
    from fdsw.factors import Branch, factor_i1, factor_i2, factor_i3, factor_i4

    for bond in bonds:
        roots = []
        for which in ("i1", "i2", "i3", "i4"):
            roots += find_factor_roots(Model.FDSW2, which, bond, 0.02, 10.0)
        for kappa in kappas:
            if any(abs(kappa - r) < 0.05 for r in roots):
                continue
            detune = min(
                abs(factor_i1(kappa, bond)),
                abs(factor_i2(kappa, bond, Branch.MINUS)),
                abs(factor_i3(kappa, bond, Branch.MINUS)),
                abs(factor_i4(Model.FDSW2, kappa, bond)),
            )
            if detune < 0.05:
                continue
            yield kappa, bond


def test_band_classification_matches_index_sign():
    for kappa, bond in probe_grid_points():
        expected = Stability.UNSTABLE if index(Model.FDSW2, kappa, bond).delta < 0 else Stability.STABLE
        assert classify_band(1e-2, 1e-2, kappa, bond) is expected, (kappa, bond)


def test_classification_stable_under_parameter_halving():
    for kappa, bond in probe_grid_points():
        full = classify_band(1e-2, 1e-2, kappa, bond)
        halved = classify_band(5e-3, 5e-3, kappa, bond)
        assert full is halved, (kappa, bond)

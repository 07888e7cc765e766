"""Tests for the truncated Fock-space oracle.

The heavy spec-level agreement runs (d = 25 and d = 40, ten pairs each)
live in the acceptance suite; here the operations are checked at small
truncations.
"""

import math

import numpy as np
import pytest

from gaussfisher import closed_form as cf
from gaussfisher import core, fock
from gaussfisher.errors import TruncationError, ValidationError
from gaussfisher.states import FamilyPoint


class TestThermalDm:
    def test_vacuum_projector(self):
        rho = fock.thermal_dm(0.0, 0.0, 6)
        expected = np.zeros((36, 36))
        expected[0, 0] = 1.0
        np.testing.assert_allclose(rho.matrix, expected)
        assert rho.trace_deficit == 0.0

    def test_single_mode_weights(self):
        rho = fock.thermal_dm(1.0, 0.0, 30)
        diag = np.diag(rho.matrix).real.reshape(30, 30)
        np.testing.assert_allclose(diag[:, 0], 0.5 ** (np.arange(30) + 1.0),
                                   rtol=1e-12)
        assert rho.trace_deficit < 1e-9

    def test_trace_monotone_in_truncation(self):
        deficits = [fock.thermal_dm(0.8, 0.5, d, max_deficit=1.0).trace_deficit
                    for d in (8, 16, 32)]
        assert deficits[0] > deficits[1] > deficits[2] >= 0.0

    def test_deficit_guard(self):
        with pytest.raises(TruncationError):
            fock.thermal_dm(5.0, 5.0, 3)


class TestBsUnitary:
    def test_identity_at_zero(self):
        np.testing.assert_allclose(fock.bs_unitary(0.0, 0.3, 8), np.eye(64))

    def test_unitary_on_retained_space(self):
        u = fock.bs_unitary(1.2, 0.5, 12)
        assert fock.unitarity_defect(u) < 1e-12

    def test_balanced_thermal_invariant(self):
        rho = fock.thermal_dm(0.4, 0.4, 15)
        u = fock.bs_unitary(1.1, 0.7, 15)
        conjugated = u @ rho.matrix @ u.conj().T
        assert np.abs(conjugated - rho.matrix).max() < 1e-12


class TestSqUnitary:
    def test_identity_at_zero(self):
        np.testing.assert_allclose(fock.sq_unitary(0.0, 0.3, 8), np.eye(64))

    def test_vacuum_gives_schmidt_weights(self):
        r, d = 0.6, 30
        u = fock.sq_unitary(r, 0.25, d)
        amplitudes = u[:, 0].reshape(d, d)
        weights = np.abs(np.diagonal(amplitudes)) ** 2
        t = math.tanh(r)
        expected = (1.0 - t * t) * t ** (2.0 * np.arange(d))
        np.testing.assert_allclose(weights, expected, atol=1e-12)
        # off the |n, n> diagonal everything vanishes
        off = np.abs(amplitudes) ** 2 - np.diag(weights)
        assert np.abs(off).max() < 1e-14

    def test_reduced_occupancy_matches_covariance(self):
        # mode-1 occupancy of a squeezed vacuum is sinh^2(r), the same
        # number the covariance-matrix construction produces
        r, d = 0.5, 30
        u = fock.sq_unitary(r, 0.0, d)
        weights = np.abs(np.diagonal(u[:, 0].reshape(d, d))) ** 2
        occupancy = float((np.arange(d) * weights).sum())
        cov = FamilyPoint.sts(0.0, 0.0, r, 0.0).to_state().cov
        assert occupancy == pytest.approx(cov[0, 0] - 0.5, abs=1e-10)
        assert occupancy == pytest.approx(math.sinh(r) ** 2, abs=1e-10)

    def test_defect_stays_small_as_d_grows(self):
        defects = [fock.unitarity_defect(fock.sq_unitary(0.5, 0.2, d))
                   for d in (10, 20, 30)]
        assert max(defects) < 1e-12


class TestUhlmannFidelity:
    def test_identical_inputs(self):
        rho = fock.family_dm(FamilyPoint.mts(0.3, 0.2, 1.0, 0.5), 15)
        assert fock.uhlmann_fidelity(rho, rho) == pytest.approx(
            1.0, abs=1e-8 + 2.0 * rho.trace_deficit)

    def test_pure_vs_mixed_is_expectation(self):
        d = 20
        u = fock.sq_unitary(0.4, 0.1, d)
        psi = u[:, 0]
        pure = fock.FockDensity(d=d, matrix=np.outer(psi, psi.conj()),
                                trace_deficit=0.0)
        mixed = fock.thermal_dm(0.3, 0.2, d)
        expectation = float((psi.conj() @ mixed.matrix @ psi).real)
        assert fock.uhlmann_fidelity(pure, mixed) == pytest.approx(
            expectation, rel=1e-8)

    def test_symmetric(self):
        a = fock.family_dm(FamilyPoint.mts(0.3, 0.1, 0.8, 0.2), 18)
        b = fock.family_dm(FamilyPoint.mts(0.2, 0.4, 1.4, -0.9), 18)
        assert fock.uhlmann_fidelity(a, b) == pytest.approx(
            fock.uhlmann_fidelity(b, a), rel=1e-10)

    def test_matches_closed_form_quickly(self):
        a = FamilyPoint.mts(0.35, 0.15, 1.3, 0.6)
        b = FamilyPoint.mts(0.2, 0.4, 0.7, -1.1)
        value = fock.uhlmann_fidelity(fock.family_dm(a, 20), fock.family_dm(b, 20))
        assert value == pytest.approx(cf.fidelity_special(a, b), abs=1e-6)

    def test_incompatible_truncations_rejected(self):
        with pytest.raises(ValidationError):
            fock.uhlmann_fidelity(fock.thermal_dm(0.1, 0.1, 10),
                                  fock.thermal_dm(0.1, 0.1, 12))


class TestOverlap:
    def test_matches_covariance_overlap(self):
        a = FamilyPoint.sts(0.2, 0.1, 0.3, 0.4)
        b = FamilyPoint.sts(0.15, 0.25, 0.2, -0.6)
        fock_value = fock.overlap_fock(fock.family_dm(a, 25), fock.family_dm(b, 25))
        general = core.fidelity_two_mode(a.to_state(), b.to_state()).overlap
        assert fock_value == pytest.approx(general, abs=1e-8)


class TestSpectralThermal:
    def test_equal_states(self):
        assert fock.spectral_fidelity_ts(0.4, 0.7, 0.4, 0.7, 200) == pytest.approx(
            1.0, abs=1e-10)

    def test_vacuum_vs_unit(self):
        assert fock.spectral_fidelity_ts(0.0, 0.0, 1.0, 1.0, 200) == pytest.approx(
            0.25, abs=1e-10)

    def test_monotone_in_terms(self):
        values = [fock.spectral_fidelity_ts(0.7, 0.3, 0.4, 0.9, n)
                  for n in (2, 4, 8, 16, 64)]
        assert all(b >= a for a, b in zip(values, values[1:]))
        assert values[-1] == pytest.approx(cf.fidelity_ts(0.7, 0.3, 0.4, 0.9),
                                           abs=1e-10)

    def test_matches_uhlmann_on_commuting_states(self):
        spectral = fock.spectral_fidelity_ts(0.7, 0.3, 0.4, 0.9, 30)
        uhlmann = fock.uhlmann_fidelity(fock.thermal_dm(0.7, 0.3, 30),
                                        fock.thermal_dm(0.4, 0.9, 30))
        assert spectral == pytest.approx(uhlmann, abs=1e-8)

"""Truncated Fock-space oracle for the family states.

Density matrices live on a d x d per-mode photon-number grid (total
dimension D = d^2). Device unitaries are dense matrix exponentials of the
truncated generators; the mode-mixing generator conserves total photon
number, so its truncation is exact on the retained total-number blocks,
while the squeeze generator leaks probability through the truncation
boundary. This module backs tests and the ``oracle`` CLI command only; the
closed-form library never calls into it.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import expm

from .errors import NumericalConsistencyError, TruncationError, ValidationError
from .states import MTS, STS, FamilyPoint, MtsParams, StsParams

DEFAULT_MAX_DEFICIT = 1e-6
DEFAULT_MAX_DEFECT = 1e-8
_EIG_CLAMP = 1e-8


@dataclass(frozen=True)
class FockDensity:
    """Hermitian D x D density matrix with its truncation bookkeeping.

    ``spectrum``/``basis`` optionally carry a known spectral resolution
    (matrix = basis diag(spectrum) basis^dag, basis None meaning the Fock
    basis itself); constructors that build states by unitary conjugation
    fill these in so fidelity evaluations can skip a re-diagonalization.
    """

    d: int
    matrix: np.ndarray
    trace_deficit: float
    spectrum: np.ndarray | None = None
    basis: np.ndarray | None = None


def thermal_weights(n: float, d: int) -> np.ndarray:
    """Geometric photon-number weights n^k / (n+1)^(k+1), k < d."""
    k = np.arange(d)
    if n == 0.0:
        w = np.zeros(d)
        w[0] = 1.0
        return w
    return np.exp(k * math.log(n) - (k + 1) * math.log(n + 1.0))


def thermal_dm(n1: float, n2: float, d: int,
               max_deficit: float = DEFAULT_MAX_DEFICIT) -> FockDensity:
    """Two-mode thermal state as a product of geometric mixtures."""
    if n1 < 0.0 or n2 < 0.0:
        raise ValidationError("mean photon numbers must be >= 0")
    if d < 2:
        raise ValidationError("per-mode truncation must be at least 2")
    w = np.kron(thermal_weights(n1, d), thermal_weights(n2, d))
    deficit = 1.0 - w.sum()
    if deficit > max_deficit:
        raise TruncationError(
            f"trace deficit {deficit:.3e} exceeds {max_deficit:.1e}; raise d"
        )
    return FockDensity(d=d, matrix=np.diag(w.astype(complex)),
                       trace_deficit=deficit, spectrum=w)


def _annihilator(d: int) -> np.ndarray:
    return np.diag(np.sqrt(np.arange(1.0, d)), 1).astype(complex)


def _mode_ops(d: int):
    a = _annihilator(d)
    eye = np.eye(d, dtype=complex)
    return np.kron(a, eye), np.kron(eye, a)


def unitarity_defect(u: np.ndarray) -> float:
    """Max-norm deviation of u^dag u from the identity."""
    dim = u.shape[0]
    return float(np.abs(u.conj().T @ u - np.eye(dim)).max())


def bs_unitary(theta: float, phi: float, d: int) -> np.ndarray:
    """Mode-mixing unitary on the truncated two-mode Fock space."""
    MtsParams(0.0, 0.0, theta, phi)  # range validation
    a1, a2 = _mode_ops(d)
    gen = (theta / 2.0) * (
        np.exp(1j * phi) * (a1 @ a2.conj().T)
        - np.exp(-1j * phi) * (a1.conj().T @ a2)
    )
    return expm(gen)


def sq_unitary(r: float, phi: float, d: int,
               max_defect: float = DEFAULT_MAX_DEFECT) -> np.ndarray:
    """Two-mode squeeze operator on the truncated space.

    The truncated generator is still anti-Hermitian, so the exponential is
    unitary to roundoff; the recorded defect is checked against
    ``max_defect`` anyway, since squeezing does not conserve photon number
    and the matrix only represents the true operator faithfully on states
    far from the truncation boundary.
    """
    StsParams(0.0, 0.0, r, phi)  # range validation
    a1, a2 = _mode_ops(d)
    gen = r * (
        np.exp(1j * phi) * (a1.conj().T @ a2.conj().T)
        - np.exp(-1j * phi) * (a1 @ a2)
    )
    u = expm(gen)
    defect = unitarity_defect(u)
    if defect > max_defect:
        raise TruncationError(
            f"unitarity defect {defect:.3e} exceeds {max_defect:.1e}; raise d"
        )
    return u


def family_dm(point: FamilyPoint, d: int,
              max_deficit: float = DEFAULT_MAX_DEFICIT) -> FockDensity:
    """Truncated density matrix of a family point."""
    p = point.params
    rho = thermal_dm(p.n1, p.n2, d, max_deficit=max_deficit)
    if point.tag == MTS:
        u = bs_unitary(p.theta, p.phi, d)
    elif point.tag == STS:
        u = sq_unitary(p.r, p.phi, d)
    else:
        return rho
    m = u @ rho.matrix @ u.conj().T
    m = 0.5 * (m + m.conj().T)
    # conjugation preserves the trace; the honest deficit is the thermal one
    deficit = max(1.0 - float(m.trace().real), rho.trace_deficit)
    return FockDensity(d=d, matrix=m, trace_deficit=deficit,
                       spectrum=rho.spectrum, basis=u)


def _clamped_eigh(matrix: np.ndarray):
    vals, vecs = np.linalg.eigh(matrix)
    if vals[0] < -_EIG_CLAMP:
        raise NumericalConsistencyError(
            f"density eigenvalue {vals[0]:.3e} below -{_EIG_CLAMP:.1e}"
        )
    # roundoff-level eigenvalues are exact zeros; keeping them would inject
    # sqrt(eps)-sized amplitudes into the spectral square root
    floor = matrix.shape[0] * np.finfo(float).eps * max(float(vals[-1]), 0.0)
    return np.where(vals < floor, 0.0, vals), vecs


def uhlmann_fidelity(rho_a: FockDensity, rho_b: FockDensity) -> float:
    """[Tr sqrt(sqrt(rho_b) rho_a sqrt(rho_b))]^2 via spectral square roots.

    Evaluated as the squared trace norm of sqrt(rho_a) sqrt(rho_b): the
    singular values of that product are the eigenvalue square roots of the
    sandwiched matrix, but carry no square-root amplification of
    eigenvalue roundoff near zero.
    """
    if rho_a.d != rho_b.d:
        raise ValidationError("density matrices have incompatible truncations")
    for rho in (rho_a, rho_b):
        if rho.trace_deficit > DEFAULT_MAX_DEFICIT:
            raise TruncationError(
                f"trace deficit {rho.trace_deficit:.3e} too large for the oracle"
            )

    if rho_a.spectrum is not None and rho_b.spectrum is not None:
        # trace norm is invariant under the outer unitaries:
        # || Ua sqrt(Wa) Ua^dag Ub sqrt(Wb) Ub^dag ||_1
        #   = || sqrt(Wa) (Ua^dag Ub) sqrt(Wb) ||_1
        if rho_a.basis is None and rho_b.basis is None:
            inner = None
        elif rho_a.basis is None:
            inner = rho_b.basis
        elif rho_b.basis is None:
            inner = rho_a.basis.conj().T
        else:
            inner = rho_a.basis.conj().T @ rho_b.basis
        sqrt_a = np.sqrt(rho_a.spectrum)
        sqrt_b = np.sqrt(rho_b.spectrum)
        if inner is None:
            return float(np.sum(sqrt_a * sqrt_b) ** 2)
        product = sqrt_a[:, None] * inner * sqrt_b[None, :]
    else:
        vals_a, vecs_a = _clamped_eigh(rho_a.matrix)
        vals_b, vecs_b = _clamped_eigh(rho_b.matrix)
        root_a = (vecs_a * np.sqrt(vals_a)) @ vecs_a.conj().T
        root_b = (vecs_b * np.sqrt(vals_b)) @ vecs_b.conj().T
        product = root_a @ root_b
    singular = np.linalg.svd(product, compute_uv=False)
    return float(singular.sum() ** 2)


def overlap_fock(rho_a: FockDensity, rho_b: FockDensity) -> float:
    """Tr(rho_a rho_b) on the truncated space."""
    if rho_a.d != rho_b.d:
        raise ValidationError("density matrices have incompatible truncations")
    return float(np.einsum("ij,ji->", rho_a.matrix, rho_b.matrix).real)


def spectral_fidelity_ts(n1a: float, n2a: float, n1b: float, n2b: float,
                         n_terms: int) -> float:
    """Thermal-pair fidelity from the commuting spectral resolutions.

    The affinity sum factorizes over modes; the result increases
    monotonically with ``n_terms`` toward the closed-form value.
    """
    if min(n1a, n2a, n1b, n2b) < 0.0:
        raise ValidationError("mean photon numbers must be >= 0")
    if n_terms < 1:
        raise ValidationError("n_terms must be at least 1")
    s1 = np.sqrt(thermal_weights(n1a, n_terms) * thermal_weights(n1b, n_terms)).sum()
    s2 = np.sqrt(thermal_weights(n2a, n_terms) * thermal_weights(n2b, n_terms)).sum()
    return float((s1 * s2) ** 2)

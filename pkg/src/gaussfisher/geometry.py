"""Quantum Fisher information and Bures metric on the family manifolds.

Both four-parameter families carry a diagonal QFI metric in their natural
charts, MTS: (n1, n2, theta, phi) and STS: (n1, n2, 2r, phi). The Bures
metric is one quarter of the QFI metric. A finite-difference metric
extracted from the fidelity provides an independent cross-check of the
closed forms.
"""

import math
from dataclasses import dataclass

import numpy as np

from .closed_form import fidelity_special
from .errors import ChartDomainError, NumericalConsistencyError, ValidationError
from .states import MTS, STS, TS, FamilyPoint, separability_threshold

MTS_COORDS = ("n1", "n2", "theta", "phi")
STS_COORDS = ("n1", "n2", "2r", "phi")

# numeric_metric refuses device directions closer to chart degeneracy than this
DEGENERACY_GUARD = 1e-3
FIRST_DERIVATIVE_TOL = 1e-6


def chart_coords(point: FamilyPoint) -> np.ndarray:
    """Natural chart coordinates of a family point (STS uses 2r, not r)."""
    p = point.params
    if point.tag == MTS:
        return np.array([p.n1, p.n2, p.theta, p.phi])
    if point.tag == STS:
        return np.array([p.n1, p.n2, 2.0 * p.r, p.phi])
    return np.array([p.n1, p.n2])


def point_from_chart(tag: str, coords) -> FamilyPoint:
    """Inverse of :func:`chart_coords`; phi is wrapped into (-pi, pi]."""
    coords = np.asarray(coords, dtype=float)
    if tag == TS:
        return FamilyPoint.ts(coords[0], coords[1])
    phi = math.remainder(coords[3], 2.0 * math.pi)
    if phi <= -math.pi:
        phi += 2.0 * math.pi
    if tag == MTS:
        return FamilyPoint.mts(coords[0], coords[1], coords[2], phi)
    return FamilyPoint.sts(coords[0], coords[1], coords[2] / 2.0, phi)


def coord_names(tag: str):
    if tag == MTS:
        return MTS_COORDS
    if tag == STS:
        return STS_COORDS
    return ("n1", "n2")


@dataclass(frozen=True)
class QfiDiagonal:
    """Chart tag plus the four diagonal QFI components."""

    chart: str
    h: dict

    def component(self, name: str) -> float:
        return self.h[name]


@dataclass(frozen=True)
class MetricMatrix:
    """Metric tensor over a declared chart, in Bures or QFI convention."""

    matrix: np.ndarray
    coords: tuple
    convention: str

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (len(self.coords),) * 2:
            raise ValidationError("metric shape does not match the chart")
        if np.abs(m - m.T).max() > 1e-9 * (1.0 + np.abs(m).max()):
            raise ValidationError("metric matrix must be symmetric")
        if self.convention not in ("bures", "qfi"):
            raise ValidationError(f"unknown metric convention {self.convention!r}")
        object.__setattr__(self, "matrix", 0.5 * (m + m.T))

    def as_qfi(self) -> "MetricMatrix":
        if self.convention == "qfi":
            return self
        return MetricMatrix(4.0 * self.matrix, self.coords, "qfi")

    def as_bures(self) -> "MetricMatrix":
        if self.convention == "bures":
            return self
        return MetricMatrix(0.25 * self.matrix, self.coords, "bures")


def _occupancy_component(n: float) -> float:
    return math.inf if n == 0.0 else 1.0 / (n * (n + 1.0))


def qfi_closed(point: FamilyPoint) -> QfiDiagonal:
    """Diagonal QFI components in the natural chart; phi-independent."""
    p = point.params
    if point.tag == MTS:
        denom = 2.0 * p.n1 * p.n2 + p.n1 + p.n2
        h_theta = 0.0 if denom == 0.0 else (p.n1 - p.n2) ** 2 / denom
        return QfiDiagonal(MTS, {
            "n1": _occupancy_component(p.n1),
            "n2": _occupancy_component(p.n2),
            "theta": h_theta,
            "phi": h_theta * math.sin(p.theta) ** 2,
        })
    if point.tag == STS:
        denom = 2.0 * p.n1 * p.n2 + p.n1 + p.n2 + 1.0
        h_tau = (p.n1 + p.n2 + 1.0) ** 2 / denom
        return QfiDiagonal(STS, {
            "n1": _occupancy_component(p.n1),
            "n2": _occupancy_component(p.n2),
            "2r": h_tau,
            "phi": h_tau * math.sinh(2.0 * p.r) ** 2,
        })
    raise ChartDomainError(
        "thermal points live on a two-dimensional chart; use ts_metric"
    )


def ts_metric(n1: float, n2: float) -> MetricMatrix:
    """Bures metric on the two-dimensional thermal manifold."""
    if n1 <= 0.0 or n2 <= 0.0:
        raise ChartDomainError("thermal metric diverges at zero occupancy")
    g = np.diag([0.25 / (n1 * (n1 + 1.0)), 0.25 / (n2 * (n2 + 1.0))])
    return MetricMatrix(g, ("n1", "n2"), "bures")


def warping_function(tag: str, n1: float, n2: float) -> float:
    """Warping factor f(n1, n2): half the square root of the device component."""
    if tag == MTS:
        denom = 2.0 * n1 * n2 + n1 + n2
        if denom == 0.0:
            raise ChartDomainError("warping undefined at the vacuum point")
        return 0.5 * math.sqrt((n1 - n2) ** 2 / denom)
    if tag == STS:
        denom = 2.0 * n1 * n2 + n1 + n2 + 1.0
        return 0.5 * math.sqrt((n1 + n2 + 1.0) ** 2 / denom)
    raise ValidationError(f"no warping function for family {tag!r}")


def _interior_guard(point: FamilyPoint, h: np.ndarray):
    p = point.params
    if min(p.n1, p.n2) - 2.0 * max(h[0], h[1]) <= 0.0:
        raise ChartDomainError("stencil leaves the occupancy domain n > 0")
    if point.tag == MTS:
        if abs(p.n1 - p.n2) < DEGENERACY_GUARD:
            raise ChartDomainError(
                "MTS device directions degenerate for n1 ~ n2; "
                "metric components vanish"
            )
        if not 2.0 * h[2] < p.theta < math.pi - 2.0 * h[2]:
            raise ChartDomainError("stencil leaves the theta domain (0, pi)")
    else:
        if 2.0 * p.r - 2.0 * h[2] <= 0.0:
            raise ChartDomainError("stencil leaves the squeeze domain r > 0")


def numeric_metric(point: FamilyPoint, step: float = 1e-3) -> MetricMatrix:
    """Bures metric from 5-point differentiation of sqrt(fidelity).

    Along a ray xi + t*w the square-rooted fidelity is 1 - (t^2/2) g(w, w)
    to second order; the quadratic form is read off with a fourth-order
    central stencil, and off-diagonal entries follow by polarization.
    The first-derivative stencil must vanish to within tolerance, otherwise
    a :class:`NumericalConsistencyError` is raised.
    """
    if point.tag == TS:
        raise ChartDomainError("numeric metric is defined on the 4d charts")
    if step <= 0.0:
        raise ValidationError("step must be positive")
    coords = chart_coords(point)
    h = step * np.maximum(1.0, np.abs(coords))
    _interior_guard(point, h)

    if abs(fidelity_special(point, point) - 1.0) > 1e-12:
        raise NumericalConsistencyError("fidelity at zero displacement is not 1")

    def quad_form(w: np.ndarray) -> float:
        f = [
            math.sqrt(fidelity_special(point, point_from_chart(point.tag, coords + t * w)))
            for t in (-2.0, -1.0, 1.0, 2.0)
        ]
        first = (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / 12.0
        if abs(first) > FIRST_DERIVATIVE_TOL:
            raise NumericalConsistencyError(
                f"first derivative of sqrt(F) not zero (residual {first:.3e})"
            )
        second = (-f[0] + 16.0 * f[1] - 30.0 + 16.0 * f[2] - f[3]) / 12.0
        return -second

    dim = 4
    g = np.zeros((dim, dim))
    basis = [h[a] * np.eye(dim)[a] for a in range(dim)]
    for a in range(dim):
        g[a, a] = quad_form(basis[a]) / h[a] ** 2
    for a in range(dim):
        for b in range(a + 1, dim):
            q_plus = quad_form(basis[a] + basis[b])
            q_minus = quad_form(basis[a] - basis[b])
            g[a, b] = g[b, a] = (q_plus - q_minus) / (4.0 * h[a] * h[b])
    return MetricMatrix(g, coord_names(point.tag), "bures")


def jeffreys_prior(point: FamilyPoint) -> float:
    """Square root of the QFI determinant in the natural chart.

    Vanishes at chart degeneracies (MTS with n1 = n2, or zero device
    parameter); diverges at zero occupancy, which raises.
    """
    p = point.params
    if min(p.n1, p.n2) == 0.0:
        raise ChartDomainError("Jeffreys prior diverges at zero occupancy")
    h = qfi_closed(point).h
    product = 1.0
    for value in h.values():
        product *= value
    return math.sqrt(product)


def jeffreys_prior_sts_closed(n1: float, n2: float, r: float) -> float:
    """STS Jeffreys prior in the two-variable form 4 sinh(2r)/sinh(4 r_s)."""
    r_s = separability_threshold(n1, n2)
    if r_s == 0.0:
        raise ChartDomainError("Jeffreys prior diverges at zero threshold")
    return 4.0 * math.sinh(2.0 * r) / math.sinh(4.0 * r_s)


def volume_element_density(point: FamilyPoint) -> float:
    """Bures volume-element density: sqrt(det g) = Jeffreys prior / 16."""
    return jeffreys_prior(point) / 16.0


def cramer_rao(h: QfiDiagonal, n_measurements: int) -> dict:
    """Variance lower bounds 1/(N * H_xi) per chart coordinate."""
    if int(n_measurements) != n_measurements or n_measurements < 1:
        raise ValidationError("number of measurements must be a positive integer")
    bounds = {}
    for name, value in h.h.items():
        if value <= 0.0:
            raise ChartDomainError(
                f"parameter {name!r} is unidentifiable: QFI component is zero"
            )
        bounds[name] = 1.0 / (n_measurements * value)
    return bounds


def ball_volume_expansion(n: int, eps: float, r_scalar: float) -> float:
    """Small-radius geodesic-ball volume, to the curvature correction term.

    V = V_n(1) eps^n - V_n(1)/(n+2) R eps^(n+2), with V_n(1) the Euclidean
    unit-ball volume pi^(n/2)/Gamma(n/2+1).
    """
    if int(n) != n or n < 1:
        raise ValidationError("dimension must be a positive integer")
    if eps <= 0.0:
        raise ValidationError("radius must be positive")
    unit = math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)
    return unit * eps**n - unit / (n + 2.0) * r_scalar * eps ** (n + 2)

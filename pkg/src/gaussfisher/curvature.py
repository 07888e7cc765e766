"""Scalar curvature of the Bures metric on the family manifolds.

Three independent routes are provided: a generic small-dimension Riemannian
pipeline (Christoffel -> Riemann -> Ricci -> scalar), rational closed forms
in the two thermal occupancies, and a warped-product expression that reuses
the device metric component and its logarithmic derivatives. The sign
convention is fixed so the unit round sphere has scalar curvature +2.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ChartDomainError, ValidationError
from .states import MTS, STS

# occupancy of the unique stationary point of the STS curvature surface
SADDLE_OCCUPANCY = math.sqrt(1.15) - 0.5

_COND_LIMIT = 1e10

# pipeline domain guards: chart degeneracies make the 4x4 metric singular
_GUARD_OCC = 1e-3
_GUARD_GAP = 1e-3
_GUARD_ANGLE = 0.05


@dataclass(frozen=True)
class MetricField:
    """A metric tensor field over a coordinate chart.

    ``metric`` maps a point to the (dim x dim) matrix; ``partials``, when
    given, maps a point to the (dim, dim, dim) array of coordinate
    derivatives with ``partials(x)[k] = d g / d x_k``. Without it, partial
    derivatives fall back to Richardson-extrapolated central differences.
    """

    coords: tuple
    metric: Callable[[np.ndarray], np.ndarray]
    partials: Optional[Callable[[np.ndarray], np.ndarray]] = None
    domain_guard: Optional[Callable[[np.ndarray], None]] = None

    @property
    def dim(self) -> int:
        return len(self.coords)

    def check_domain(self, point: np.ndarray):
        if self.domain_guard is not None:
            self.domain_guard(point)


@dataclass(frozen=True)
class CurvatureReport:
    point: tuple
    scalar_r: float
    method: str
    residuals: dict = field(default_factory=dict)


def _richardson_diff(f: Callable[[float], np.ndarray], h: float) -> np.ndarray:
    """One Richardson level on the symmetric difference of f around 0."""

    def central(step):
        return (np.asarray(f(step)) - np.asarray(f(-step))) / (2.0 * step)

    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def _numeric_partials(func, x: np.ndarray, step: float) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    sample = np.asarray(func(x))
    out = np.zeros((x.size,) + sample.shape)
    for k in range(x.size):
        e = np.zeros(x.size)
        e[k] = 1.0
        h = step * max(1.0, abs(x[k]))
        out[k] = _richardson_diff(lambda t: func(x + t * e), h)
    return out


def _metric_partials(fld: MetricField, x: np.ndarray, step: float) -> np.ndarray:
    if fld.partials is not None:
        return np.asarray(fld.partials(x), dtype=float)
    return _numeric_partials(fld.metric, x, step)


def christoffel(fld: MetricField, point, step: float = 1e-3) -> np.ndarray:
    """Christoffel symbols Gamma[i, j, k] of the Levi-Civita connection."""
    x = np.asarray(point, dtype=float)
    fld.check_domain(x)
    g = np.asarray(fld.metric(x), dtype=float)
    if np.linalg.cond(g) > _COND_LIMIT:
        raise ChartDomainError("metric is singular at this point")
    ginv = np.linalg.inv(g)
    dg = _metric_partials(fld, x, step)
    # T[l, j, k] = d_j g_lk + d_k g_lj - d_l g_jk
    t = np.transpose(dg, (1, 0, 2)) + np.transpose(dg, (1, 2, 0)) - dg
    return 0.5 * np.einsum("il,ljk->ijk", ginv, t)


def scalar_curvature_pipeline(fld: MetricField, point, step: float = 1e-3) -> CurvatureReport:
    """Scalar curvature by explicit tensor algebra.

    The Riemann tensor is assembled from the Christoffel symbols and their
    first derivatives (Richardson central differences of the Christoffel
    evaluator), then contracted twice. The recorded ``antisymmetry``
    residual is the largest violation of R^i_j(kl) = -R^i_j(lk).
    """
    x = np.asarray(point, dtype=float)
    fld.check_domain(x)
    g = np.asarray(fld.metric(x), dtype=float)
    if np.linalg.cond(g) > _COND_LIMIT:
        raise ChartDomainError("metric is singular at this point")
    ginv = np.linalg.inv(g)
    gamma = christoffel(fld, x, step)

    dim = fld.dim
    dgamma = np.zeros((dim, dim, dim, dim))
    for k in range(dim):
        e = np.zeros(dim)
        e[k] = 1.0
        h = step * max(1.0, abs(x[k]))
        dgamma[k] = _richardson_diff(lambda t: christoffel(fld, x + t * e, step), h)

    # R^i_jkl = d_k Gamma^i_lj - d_l Gamma^i_kj
    #           + Gamma^i_km Gamma^m_lj - Gamma^i_lm Gamma^m_kj
    riemann = (
        np.einsum("kilj->ijkl", dgamma)
        - np.einsum("likj->ijkl", dgamma)
        + np.einsum("ikm,mlj->ijkl", gamma, gamma)
        - np.einsum("ilm,mkj->ijkl", gamma, gamma)
    )
    antisym = float(np.abs(riemann + np.transpose(riemann, (0, 1, 3, 2))).max())
    ricci = np.einsum("ijil->jl", riemann)
    scalar = float(np.einsum("jl,jl->", ginv, ricci))
    return CurvatureReport(
        point=tuple(x),
        scalar_r=scalar,
        method="pipeline",
        residuals={"antisymmetry": antisym},
    )


def scalar_closed(family_tag: str, n1: float, n2: float) -> float:
    """Closed-form scalar curvature; depends only on the occupancies."""
    if n1 < 0.0 or n2 < 0.0:
        raise ValidationError("mean photon numbers must be >= 0")
    # factored so that swapping n1 and n2 gives bit-identical results
    occ = (n1 * (n1 + 1.0)) * (n2 * (n2 + 1.0))
    if family_tag == MTS:
        denom = 2.0 * (n1 * n2) + (n1 + n2)
        if denom == 0.0:
            return math.inf
        num = (n1 - n2) ** 2 - 24.0 * occ + 9.0 * denom
        return 2.0 * num / denom**2
    if family_tag == STS:
        denom = 2.0 * (n1 * n2) + (n1 + n2) + 1.0
        num = ((n1 + n2) + 1.0) ** 2 - 24.0 * occ - 9.0 * denom
        return 2.0 * num / denom**2
    raise ValidationError(f"no closed-form curvature for family {family_tag!r}")


def section_curve(family_tag: str, kind: str, s: float) -> float:
    """Named one-variable restrictions of the curvature surfaces.

    ``symmetric`` is the section along n1 = n2 = s; ``perpendicular`` the
    orthogonal section through the distinguished symmetric point
    (n1 + n2 = 1 for MTS, n1 + n2 = twice the saddle occupancy for STS);
    ``edge`` the physicality-edge section n2 = 0.
    """
    if family_tag == MTS:
        if kind == "symmetric":
            if s < 0.0:
                raise ValidationError("symmetric section needs s >= 0")
            return math.inf if s == 0.0 else 9.0 / (s * (s + 1.0)) - 12.0
        if kind == "perpendicular":
            if not 0.0 <= s <= 1.0:
                raise ValidationError("MTS perpendicular section domain is [0, 1]")
            alpha = s * (1.0 - s)
            return -4.0 * (12.0 * alpha**2 + 17.0 * alpha - 5.0) / (2.0 * alpha + 1.0) ** 2
        if kind == "edge":
            if s < 0.0:
                raise ValidationError("edge section needs s >= 0")
            return math.inf if s == 0.0 else 2.0 + 18.0 / s
    elif family_tag == STS:
        if kind == "symmetric":
            if s < 0.0:
                raise ValidationError("symmetric section needs s >= 0")
            beta = s * (s + 1.0)
            return -4.0 * (12.0 * beta**2 + 7.0 * beta + 4.0) / (2.0 * beta + 1.0) ** 2
        if kind == "perpendicular":
            ns = SADDLE_OCCUPANCY
            if not 0.0 <= s <= 2.0 * ns:
                raise ValidationError(
                    "STS perpendicular section domain is [0, 2 * saddle occupancy]"
                )
            w = s * (2.0 * ns - s) + ns
            const = 4.0 - 14.0 * ns * (ns + 1.0)
            return -4.0 * (12.0 * w**2 + 21.0 * w + const) / (2.0 * w + 1.0) ** 2
        if kind == "edge":
            if s < 0.0:
                raise ValidationError("edge section needs s >= 0")
            return 2.0 - 18.0 / (s + 1.0)
    else:
        raise ValidationError(f"no section curves for family {family_tag!r}")
    raise ValidationError(f"unknown section kind {kind!r}")


def scalar_warped(family_tag: str, n1: float, n2: float) -> float:
    """Scalar curvature through the warped-product relation.

    Combines the constant fiber curvature (+2 sphere for MTS, -2
    hyperboloid for STS) with first and second logarithmic derivatives of
    the device metric component in the occupancies; all derivatives are
    analytic rational functions.
    """
    if n1 < 0.0 or n2 < 0.0:
        raise ValidationError("mean photon numbers must be >= 0")
    if family_tag == MTS:
        if n1 == n2:
            raise ChartDomainError("warped route is undefined on the MTS diagonal")
        d = 2.0 * n1 * n2 + n1 + n2
        h_dev = (n1 - n2) ** 2 / d
        gap = n1 - n2
        l1 = 2.0 / gap - (2.0 * n2 + 1.0) / d
        l2 = -2.0 / gap - (2.0 * n1 + 1.0) / d
        l11 = -2.0 / gap**2 + (2.0 * n2 + 1.0) ** 2 / d**2
        l22 = -2.0 / gap**2 + (2.0 * n1 + 1.0) ** 2 / d**2
        fiber = 8.0 / h_dev
    elif family_tag == STS:
        d = 2.0 * n1 * n2 + n1 + n2 + 1.0
        s = n1 + n2 + 1.0
        h_dev = s**2 / d
        l1 = 2.0 / s - (2.0 * n2 + 1.0) / d
        l2 = 2.0 / s - (2.0 * n1 + 1.0) / d
        l11 = -2.0 / s**2 + (2.0 * n2 + 1.0) ** 2 / d**2
        l22 = -2.0 / s**2 + (2.0 * n1 + 1.0) ** 2 / d**2
        fiber = -8.0 / h_dev
    else:
        raise ValidationError(f"no warped route for family {family_tag!r}")
    return (
        fiber
        - 2.0 * n1 * (n1 + 1.0) * (4.0 * l11 + 3.0 * l1**2)
        - 2.0 * n2 * (n2 + 1.0) * (4.0 * l22 + 3.0 * l2**2)
        - 4.0 * (2.0 * n1 + 1.0) * l1
        - 4.0 * (2.0 * n2 + 1.0) * l2
    )


def laplace_beltrami(fld: MetricField, func, point, step: float = 1e-3) -> float:
    """Divergence of the gradient of a scalar function on the manifold.

    (1/sqrt(det g)) d_j [ sqrt(det g) g^jk d_k v ], with both derivative
    layers taken by Richardson central differences.
    """
    x = np.asarray(point, dtype=float)
    fld.check_domain(x)
    dim = fld.dim

    def flux(y: np.ndarray) -> np.ndarray:
        g = np.asarray(fld.metric(y), dtype=float)
        if np.linalg.cond(g) > _COND_LIMIT:
            raise ChartDomainError("metric is singular at this point")
        root = math.sqrt(np.linalg.det(g))
        grad = np.array([
            float(_richardson_diff(
                lambda t, k=k: func(y + t * np.eye(dim)[k]),
                step * max(1.0, abs(y[k])),
            ))
            for k in range(dim)
        ])
        return root * np.linalg.solve(g, grad)

    g0 = np.asarray(fld.metric(x), dtype=float)
    root0 = math.sqrt(np.linalg.det(g0))
    divergence = 0.0
    for j in range(dim):
        e = np.zeros(dim)
        e[j] = 1.0
        h = step * max(1.0, abs(x[j]))
        divergence += float(_richardson_diff(lambda t: flux(x + t * e)[j], h))
    return divergence / root0


# --- metric fields -------------------------------------------------------


def sphere_field() -> MetricField:
    """Round metric on the unit two-sphere, chart (theta, phi)."""

    def metric(x):
        return np.diag([1.0, math.sin(x[0]) ** 2])

    def partials(x):
        out = np.zeros((2, 2, 2))
        out[0, 1, 1] = math.sin(2.0 * x[0])
        return out

    def guard(x):
        if math.sin(x[0]) ** 2 < 1e-10:
            raise ChartDomainError("spherical chart degenerates at the poles")

    return MetricField(("theta", "phi"), metric, partials, guard)


def hyperboloid_field() -> MetricField:
    """Metric on the upper hyperboloid sheet, chart (tau, phi)."""

    def metric(x):
        return np.diag([1.0, math.sinh(x[0]) ** 2])

    def partials(x):
        out = np.zeros((2, 2, 2))
        out[0, 1, 1] = math.sinh(2.0 * x[0])
        return out

    def guard(x):
        if math.sinh(x[0]) ** 2 < 1e-10:
            raise ChartDomainError("hyperbolic chart degenerates at tau = 0")

    return MetricField(("tau", "phi"), metric, partials, guard)


def euclidean_field(dim: int = 2) -> MetricField:
    """Flat Euclidean metric in Cartesian coordinates."""
    names = tuple(f"x{i}" for i in range(dim))
    return MetricField(
        names,
        lambda x: np.eye(dim),
        lambda x: np.zeros((dim, dim, dim)),
    )


def _occupancy_metric_entry(n: float) -> float:
    return 0.25 / (n * (n + 1.0))


def _occupancy_metric_derivative(n: float) -> float:
    return -0.25 * (2.0 * n + 1.0) / (n * (n + 1.0)) ** 2


def thermal_field() -> MetricField:
    """Bures metric on the two-dimensional thermal manifold, chart (n1, n2)."""

    def metric(x):
        return np.diag([_occupancy_metric_entry(x[0]), _occupancy_metric_entry(x[1])])

    def partials(x):
        out = np.zeros((2, 2, 2))
        out[0, 0, 0] = _occupancy_metric_derivative(x[0])
        out[1, 1, 1] = _occupancy_metric_derivative(x[1])
        return out

    def guard(x):
        if x[0] <= 0.0 or x[1] <= 0.0:
            raise ChartDomainError("thermal metric diverges at zero occupancy")

    return MetricField(("n1", "n2"), metric, partials, guard)


def family_metric_field(family_tag: str) -> MetricField:
    """Bures metric field on a 4d family chart, with analytic partials.

    The domain guard enforces the pipeline working region: occupancies and
    their gap (MTS) away from chart degeneracies, device parameter away
    from the H_phi = 0 locus.
    """
    if family_tag == MTS:

        def device(x):
            n1, n2 = x[0], x[1]
            return (n1 - n2) ** 2 / (2.0 * n1 * n2 + n1 + n2)

        def device_grad(x):
            n1, n2 = x[0], x[1]
            d = 2.0 * n1 * n2 + n1 + n2
            gap = n1 - n2
            d1 = (2.0 * gap * d - gap**2 * (2.0 * n2 + 1.0)) / d**2
            d2 = (-2.0 * gap * d - gap**2 * (2.0 * n1 + 1.0)) / d**2
            return d1, d2

        def angle_factor(x):
            return math.sin(x[2]) ** 2

        def angle_factor_derivative(x):
            return math.sin(2.0 * x[2])

        def guard(x):
            if min(x[0], x[1]) < _GUARD_OCC:
                raise ChartDomainError("pipeline requires occupancies >= 1e-3")
            if abs(x[0] - x[1]) < _GUARD_GAP:
                raise ChartDomainError("pipeline requires |n1 - n2| >= 1e-3")
            if not _GUARD_ANGLE <= x[2] <= math.pi - _GUARD_ANGLE:
                raise ChartDomainError("pipeline requires theta inside (0, pi)")

        names = ("n1", "n2", "theta", "phi")
    elif family_tag == STS:

        def device(x):
            n1, n2 = x[0], x[1]
            return (n1 + n2 + 1.0) ** 2 / (2.0 * n1 * n2 + n1 + n2 + 1.0)

        def device_grad(x):
            n1, n2 = x[0], x[1]
            d = 2.0 * n1 * n2 + n1 + n2 + 1.0
            s = n1 + n2 + 1.0
            d1 = (2.0 * s * d - s**2 * (2.0 * n2 + 1.0)) / d**2
            d2 = (2.0 * s * d - s**2 * (2.0 * n1 + 1.0)) / d**2
            return d1, d2

        def angle_factor(x):
            return math.sinh(x[2]) ** 2

        def angle_factor_derivative(x):
            return math.sinh(2.0 * x[2])

        def guard(x):
            if min(x[0], x[1]) < _GUARD_OCC:
                raise ChartDomainError("pipeline requires occupancies >= 1e-3")
            if x[2] < _GUARD_ANGLE:
                raise ChartDomainError("pipeline requires 2r >= 0.05")

        names = ("n1", "n2", "2r", "phi")
    else:
        raise ValidationError(f"no 4d metric field for family {family_tag!r}")

    def metric(x):
        h_dev = device(x)
        return 0.25 * np.diag([
            4.0 * _occupancy_metric_entry(x[0]),
            4.0 * _occupancy_metric_entry(x[1]),
            h_dev,
            h_dev * angle_factor(x),
        ])

    def partials(x):
        h_dev = device(x)
        d1, d2 = device_grad(x)
        af = angle_factor(x)
        out = np.zeros((4, 4, 4))
        out[0, 0, 0] = _occupancy_metric_derivative(x[0])
        out[1, 1, 1] = _occupancy_metric_derivative(x[1])
        out[0, 2, 2] = 0.25 * d1
        out[1, 2, 2] = 0.25 * d2
        out[0, 3, 3] = 0.25 * d1 * af
        out[1, 3, 3] = 0.25 * d2 * af
        out[2, 3, 3] = 0.25 * h_dev * angle_factor_derivative(x)
        return out

    return MetricField(names, metric, partials, guard)

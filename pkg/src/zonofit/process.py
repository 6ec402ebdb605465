"""Second-order description of random symmetric convex sets via Feret processes.

The Feret diameters of a random symmetric convex body form a pi-periodic
random process H(theta).  For rotation-invariant (isotropic) bodies the
process is stationary, and for isotropic zonotopes on the regular direction
grid the first two moments of H determine the first two moments of the
central face-length vector through a circulant kernel matrix.  This module
implements both directions of that correspondence, the isotropization
averaging, and supporting diagnostics.
"""

import numpy as np

from .bodies import regular_subdivision
from .circulant import CirculantMatrix, feret_matrix
from .errors import ParameterError, SolverError, UnderdeterminedError
from .nnls import nnls as _nnls_solve

_PALINDROME_TOL = 1e-8
_PSD_REPAIR_FLOOR = -1e-8


def k_s(t):
    """Rotation-averaged product kernel of two unit segments at angular lag t.

    k_s(t) = (1/pi) * integral_0^pi |sin(t + z) sin(z)| dz, pi-periodic, even,
    with closed form (2 sin^3 t + cos t (pi - 2t + sin 2t)) / (2 pi) on [0, pi].
    """
    y = np.mod(np.asarray(t, dtype=float), np.pi)
    return (2.0 * np.sin(y) ** 3 + np.cos(y) * (np.pi - 2.0 * y + np.sin(2.0 * y))) / (
        2.0 * np.pi
    )


def k_matrix(n, t=0.0):
    """Circulant kernel matrix K(t) with entries k_s(t + theta_i - theta_j)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterError(f"need a positive integer n, got {n!r}")
    return CirculantMatrix(k_s(t + regular_subdivision(n)))


def _palindrome_index(n):
    """Index map d -> (n - d) mod n pairing each lag with its mirror."""
    return (-np.arange(n)) % n


class FeretProcessMoments:
    """First and second moments of a Feret process on the regular angle grid.

    Parameters
    ----------
    mean : (n,) array
        E[H(theta_i)].
    second : (n, n) array
        E[H(theta_i) H(theta_j)]; must be symmetric with nonnegative diagonal
        and satisfy the Cauchy-Schwarz inequality entrywise.
    stderr_mean, stderr_second : arrays or None
        Standard errors when the moments are Monte-Carlo estimates.
    stationary : bool
        Declares the underlying process stationary (isotropic body), in which
        case the mean is constant and `second` circulant up to noise.
    """

    def __init__(self, mean, second, stderr_mean=None, stderr_second=None,
                 stationary=False):
        mean = np.asarray(mean, dtype=float)
        second = np.asarray(second, dtype=float)
        n = len(mean)
        if mean.ndim != 1 or n == 0:
            raise ParameterError("mean must be a nonempty vector")
        if second.shape != (n, n):
            raise ParameterError(f"second must be {n}x{n}, got {second.shape}")
        scale = max(1.0, float(np.abs(second).max()))
        if np.abs(second - second.T).max() > 1e-9 * scale:
            raise ParameterError("second-moment matrix must be symmetric")
        second = 0.5 * (second + second.T)
        if second.diagonal().min() < -1e-9 * scale:
            raise ParameterError("second-moment diagonal must be nonnegative")
        d = np.maximum(second.diagonal(), 0.0)
        if np.any(second**2 > np.outer(d, d) + 1e-9 * scale**2):
            raise ParameterError("second moments violate the Cauchy-Schwarz bound")
        for name, arr in (("stderr_mean", stderr_mean), ("stderr_second", stderr_second)):
            if arr is not None:
                arr = np.asarray(arr, dtype=float)
                if arr.shape != (mean.shape if name == "stderr_mean" else second.shape):
                    raise ParameterError(f"{name} has wrong shape {arr.shape}")
                if arr.min() < 0:
                    raise ParameterError(f"{name} must be nonnegative")
        self.n = n
        self.theta = regular_subdivision(n)
        self.mean = mean
        self.second = second
        self.stderr_mean = None if stderr_mean is None else np.asarray(stderr_mean, float)
        self.stderr_second = None if stderr_second is None else np.asarray(stderr_second, float)
        self.stationary = bool(stationary)

    def __repr__(self):
        return (
            f"FeretProcessMoments(n={self.n}, stationary={self.stationary}, "
            f"estimated={self.stderr_mean is not None})"
        )


class CentralFaceMoments:
    """Moments of the central face-length vector of an isotropic regular zonotope.

    `mean_alpha` is the common face-length mean; `v_alpha[d]` is
    E[alpha_1 alpha_(1+d)], which by exchangeability under cyclic shifts is a
    palindrome: v[d] = v[n-d].  Circ(v_alpha) must be positive semidefinite;
    eigenvalues in (-1e-8, 0) are clamped to zero (`psd_repaired` records
    this), larger violations are rejected.  Note v_alpha[0] >= mean_alpha^2
    is deliberately not required: non-zonotopal inputs can produce a smaller
    second moment.
    """

    def __init__(self, n, mean_alpha, v_alpha, stderr_mean_alpha=None,
                 stderr_v_alpha=None):
        if not isinstance(n, (int, np.integer)) or n < 1:
            raise ParameterError(f"need a positive integer n, got {n!r}")
        v = np.asarray(v_alpha, dtype=float)
        if v.shape != (n,):
            raise ParameterError(f"v_alpha must have length {n}, got shape {v.shape}")
        mean_alpha = float(mean_alpha)
        if mean_alpha < -1e-9:
            raise ParameterError(f"mean_alpha must be nonnegative, got {mean_alpha}")
        scale = max(1.0, float(np.abs(v).max()))
        if np.abs(v - v[_palindrome_index(n)]).max() > _PALINDROME_TOL * scale:
            raise ParameterError("v_alpha is not a palindrome vector")
        lam = np.fft.fft(v).real
        if lam.min() < _PSD_REPAIR_FLOOR * scale:
            raise ParameterError(
                f"Circ(v_alpha) is not positive semidefinite (min eigenvalue "
                f"{lam.min():.3e})"
            )
        self.psd_repaired = bool(lam.min() < 0.0)
        if self.psd_repaired:
            v = np.fft.ifft(np.maximum(lam, 0.0)).real
        self.n = int(n)
        self.mean_alpha = max(mean_alpha, 0.0)
        self.v_alpha = v
        self.stderr_mean_alpha = None if stderr_mean_alpha is None else float(stderr_mean_alpha)
        self.stderr_v_alpha = (
            None if stderr_v_alpha is None else np.asarray(stderr_v_alpha, float)
        )

    def __repr__(self):
        return (
            f"CentralFaceMoments(n={self.n}, mean_alpha={self.mean_alpha:.6g}, "
            f"psd_repaired={self.psd_repaired})"
        )


class C0FaceMoments:
    """Moments of the random interpolating face vector alpha = F^-1 H on the grid."""

    def __init__(self, n, mean, second, cov, stderr_mean=None, stderr_second=None):
        mean = np.asarray(mean, dtype=float)
        second = np.asarray(second, dtype=float)
        cov = np.asarray(cov, dtype=float)
        if mean.shape != (n,) or second.shape != (n, n) or cov.shape != (n, n):
            raise ParameterError("inconsistent moment shapes")
        if mean.min() < -1e-9 * max(1.0, float(np.abs(mean).max())):
            raise ParameterError(f"face mean has negative component {mean.min():.3e}")
        scale = max(1.0, float(np.abs(second).max()))
        if np.abs(second - second.T).max() > 1e-9 * scale:
            raise ParameterError("second-moment matrix must be symmetric")
        if np.linalg.eigvalsh(0.5 * (second + second.T)).min() < -1e-8 * scale:
            raise ParameterError("second-moment matrix is not positive semidefinite")
        self.n = int(n)
        self.mean = mean
        self.second = second
        self.cov = cov
        self.stderr_mean = stderr_mean
        self.stderr_second = stderr_second

    def __repr__(self):
        return f"C0FaceMoments(n={self.n})"


def deterministic_process_moments(body, n):
    """Moments of the (degenerate) Feret process of a fixed body: zero variance."""
    h = np.asarray(body.feret(regular_subdivision(n)), dtype=float)
    return FeretProcessMoments(
        mean=h,
        second=np.outer(h, h),
        stderr_mean=np.zeros(n),
        stderr_second=np.zeros((n, n)),
        stationary=False,
    )


def _circulant_from_lags(lags):
    n = len(lags)
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return lags[idx]


def isotropize_moments(m, body=None, dense=1024):
    """Rotation-average process moments to their stationary counterpart.

    The isotropized process has mean (1/pi) integral of E[H] and second
    moments depending only on the angular lag.  With only the n grid values
    available the integrals use the periodic trapezoid rule on the n-grid,
    which is coarse for small n.  When the source is a deterministic analytic
    body, pass it as `body`: the integrals then use an auxiliary dense grid
    of at least `dense` points (rounded up to a multiple of n so lag shifts
    are exact), with error O(dense^-2) even for kinked H.

    Applying the map to already-stationary moments reproduces them.
    """
    n = m.n
    sym = _palindrome_index(n)
    if body is not None:
        grid_n = int(-(-dense // n) * n)
        g = regular_subdivision(grid_n)
        h = np.asarray(body.feret(g), dtype=float)
        mean_c = float(h.mean())
        step = grid_n // n
        lags = np.array([float(np.mean(h * np.roll(h, -d * step))) for d in range(n)])
        stderr_mean = np.zeros(n)
        stderr_second = np.zeros((n, n))
    else:
        mean_c = float(m.mean.mean())
        idx = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
        lags = np.array(
            [float(np.mean(m.second[np.arange(n), idx[d]])) for d in range(n)]
        )
        stderr_mean = None
        stderr_second = None
        if m.stderr_mean is not None:
            stderr_mean = np.full(n, float(m.stderr_mean.mean()))
        if m.stderr_second is not None:
            se_lags = np.array(
                [float(np.mean(m.stderr_second[np.arange(n), idx[d]])) for d in range(n)]
            )
            se_lags = 0.5 * (se_lags + se_lags[sym])
            stderr_second = _circulant_from_lags(se_lags)
    lags = 0.5 * (lags + lags[sym])
    return FeretProcessMoments(
        mean=np.full(n, mean_c),
        second=_circulant_from_lags(lags),
        stderr_mean=stderr_mean,
        stderr_second=stderr_second,
        stationary=True,
    )


def feret_second_lags(face_second, n):
    """Lag vector E[H(0) H(theta_d)] from an arbitrary face second-moment matrix.

    For an isotropic zonotope on the regular grid with face moments
    C[i, j] = E[alpha_i alpha_j] (not necessarily circulant),
    E[H(s) H(s + theta_d)] = sum_ij C[i, j] k_s(theta_d + theta_i - theta_j).
    Cyclically shifting the face distribution leaves the result unchanged.
    """
    C = np.asarray(face_second, dtype=float)
    if C.shape != (n, n):
        raise ParameterError(f"face second-moment matrix must be {n}x{n}")
    diag_sums = np.zeros(n)
    idx = (np.arange(n)[:, None] - np.arange(n)[None, :]) % n
    for d in range(n):
        diag_sums[d] = C[idx == d].sum()
    th = regular_subdivision(n)
    return np.array(
        [float(np.dot(diag_sums, k_s(th[d] + th))) for d in range(n)]
    )


def forward_zonotope_moments(c):
    """Feret-process moments of the isotropic zonotope with central moments `c`.

    mean = (2/pi) n E[alpha_1] at every angle and
    second = Circ(n K(0) v_alpha); the result is stationary by construction.
    """
    n = c.n
    mean = np.full(n, (2.0 / np.pi) * n * c.mean_alpha)
    lags = float(n) * k_matrix(n).matvec(c.v_alpha)
    sym = _palindrome_index(n)
    lags = 0.5 * (lags + lags[sym])
    return FeretProcessMoments(
        mean=mean, second=_circulant_from_lags(lags), stationary=True
    )


def expected_perimeter(c):
    """E[U] = 2 n E[alpha_1] for an isotropic regular zonotope."""
    return 2.0 * c.n * c.mean_alpha


def expected_area(c):
    """E[A] = (n/2) sum_d v_alpha[d] |sin(theta_d)| for an isotropic regular zonotope."""
    th = regular_subdivision(c.n)
    return 0.5 * c.n * float(np.dot(c.v_alpha, np.abs(np.sin(th))))


def _reduced_palindrome_basis(n):
    """Matrix P with V = P v_red expanding reduced lags to the full palindrome."""
    r = np.minimum(np.arange(n), n - np.arange(n))
    P = np.zeros((n, n // 2 + 1))
    P[np.arange(n), r] = 1.0
    return P


def central_from_feret(m, max_condition=1e12):
    """Recover central face moments from stationary Feret-process moments.

    Inverts mean = (2/pi) n E[alpha_1] and V[H] = n K(0) V[alpha], exploiting
    the palindrome symmetry of the lag vectors to solve a reduced system of
    size floor(n/2) + 1.  Standard errors, when present on `m`, propagate
    through the linear map by conservative absolute-value row sums.

    Raises
    ------
    ParameterError
        If `m` is not flagged stationary (isotropize first).
    SolverError
        If cond(K(0)) exceeds `max_condition`.
    """
    if not m.stationary:
        raise ParameterError(
            "central moments need stationary process moments; apply "
            "isotropize_moments first"
        )
    n = m.n
    K0 = k_matrix(n)
    cond = K0.condition_number()
    if cond > max_condition:
        raise SolverError(
            f"kernel matrix K(0) too ill-conditioned: cond = {cond:.3e} > "
            f"{max_condition:.0e}"
        )
    sym = _palindrome_index(n)
    mean_alpha = (np.pi / (2.0 * n)) * float(m.mean.mean())
    vh = m.second[0]
    vh_s = 0.5 * (vh + vh[sym])
    mh = n // 2
    P = _reduced_palindrome_basis(n)
    A = float(n) * (K0.dense() @ P)[: mh + 1, :]
    v = P @ np.linalg.solve(A, vh_s[: mh + 1])

    stderr_mean_alpha = None
    stderr_v = None
    if m.stderr_mean is not None:
        stderr_mean_alpha = (np.pi / (2.0 * n)) * float(m.stderr_mean.mean())
    if m.stderr_second is not None:
        sym_map = 0.5 * (np.eye(n) + np.eye(n)[sym])
        full_map = (1.0 / n) * np.linalg.inv(K0.dense()) @ sym_map
        stderr_v = np.abs(full_map) @ m.stderr_second[0]
    return CentralFaceMoments(n, mean_alpha, v, stderr_mean_alpha, stderr_v)


def central_nnls(observations, n, mean_alpha=0.0, kkt_tol=1e-11):
    """Central face second moments from noisy lag observations, by NNLS.

    `observations` is a sequence of (angle, value) pairs with angles in
    [0, pi/2] and values estimating E[H(0) H(angle)].  At least
    floor(n/2) + 1 distinct angles are required.  Interior angles are
    mirrored to pi - angle (the lag function is symmetric about pi/2), and
    the design matrix Q[i, j] = n k_s(z_i - theta_j) is solved for
    V >= 0 by active-set nonnegative least squares.

    The mirrored design makes the objective invariant under the palindrome
    involution, so the returned vector is symmetrized without changing the
    objective value.  `mean_alpha` passes through to the result (first
    moments are not identifiable from second-moment observations).
    """
    obs = [(float(a), float(v)) for a, v in observations]
    if not obs:
        raise UnderdeterminedError("no observations")
    angles = np.array([a for a, _ in obs])
    if angles.min() < -1e-12 or angles.max() > np.pi / 2 + 1e-12:
        raise ParameterError("observation angles must lie in [0, pi/2]")
    distinct = 1 + int(np.sum(np.diff(np.sort(angles)) > 1e-12))
    needed = n // 2 + 1
    if distinct < needed:
        raise UnderdeterminedError(
            f"need at least {needed} distinct observation angles for n={n}, "
            f"got {distinct}"
        )
    zs = [a for a, _ in obs]
    ys = [v for _, v in obs]
    for a, v in obs:
        if 1e-12 < a < np.pi / 2 - 1e-12:
            zs.append(np.pi - a)
            ys.append(v)
    zs = np.array(zs)
    ys = np.array(ys)
    th = regular_subdivision(n)
    Q = float(n) * k_s(zs[:, None] - th[None, :])
    V, _ = _nnls_solve(Q, ys, kkt_tol=kkt_tol)
    V = 0.5 * (V + V[_palindrome_index(n)])
    return CentralFaceMoments(n, mean_alpha, V)


def c0_random_moments(m, n):
    """Moments of the random interpolating face vector alpha = F^-1 H^(n).

    Since the interpolation map is linear and almost surely defined,
    E[alpha] = F^-1 E[H] and E[alpha alpha^T] = F^-1 E[H H^T] F^-1; the
    covariance follows.  Works for stationary and non-stationary inputs.
    """
    if n != m.n:
        raise ParameterError(f"moment grid has n={m.n}, requested n={n}")
    F = feret_matrix(n)
    lam = F.spectrum()
    mean = F.solve(m.mean)

    def solve_columns(B):
        return np.fft.ifft(np.fft.fft(B, axis=0) / lam[:, None], axis=0).real

    second = solve_columns(solve_columns(m.second).T).T
    second = 0.5 * (second + second.T)
    cov = second - np.outer(mean, mean)
    stderr_mean = None
    stderr_second = None
    if m.stderr_mean is not None:
        Finv_abs = np.abs(np.linalg.inv(F.dense()))
        stderr_mean = Finv_abs @ m.stderr_mean
        if m.stderr_second is not None:
            stderr_second = Finv_abs @ m.stderr_second @ Finv_abs.T
    return C0FaceMoments(n, mean, second, cov, stderr_mean, stderr_second)


def confidence_bound(epsilon, n, mean_diameter):
    """Markov bound a with P(d_H(X, X0) > a) <= epsilon for the grid interpolant."""
    if epsilon <= 0:
        raise ParameterError(f"epsilon must be positive, got {epsilon}")
    if mean_diameter < 0:
        raise ParameterError(f"mean diameter must be >= 0, got {mean_diameter}")
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise ParameterError(f"need an integer n >= 2, got {n!r}")
    return (6.0 + 2.0 * np.sqrt(2.0)) / epsilon * np.sin(np.pi / (2.0 * n)) * mean_diameter


class StationarityReport:
    """Deviation of moment data from exact stationarity, against 3-sigma thresholds."""

    def __init__(self, mean_deviation, mean_threshold, second_deviation,
                 second_threshold):
        self.mean_deviation = float(mean_deviation)
        self.mean_threshold = float(mean_threshold)
        self.second_deviation = float(second_deviation)
        self.second_threshold = float(second_threshold)

    @property
    def passed(self):
        return (self.mean_deviation <= self.mean_threshold
                and self.second_deviation <= self.second_threshold)

    def __repr__(self):
        return (
            f"StationarityReport(passed={self.passed}, "
            f"mean={self.mean_deviation:.3e}/{self.mean_threshold:.3e}, "
            f"second={self.second_deviation:.3e}/{self.second_threshold:.3e})"
        )


def stationarity_diagnostic(m):
    """Compare moment data against the stationary shape it should have.

    Measures the largest deviation of the mean vector from its average and of
    the second-moment matrix from its circulant projection, each against
    3 x the provided standard errors plus a roundoff allowance.  Data without
    standard errors is held to the roundoff allowance alone.
    """
    n = m.n
    atol_mean = 1e-9 * max(1.0, float(np.abs(m.mean).max()))
    atol_second = 1e-9 * max(1.0, float(np.abs(m.second).max()))
    mean_dev = float(np.abs(m.mean - m.mean.mean()).max())
    idx = (np.arange(n)[None, :] + np.arange(n)[:, None]) % n
    lags = np.array([float(np.mean(m.second[np.arange(n), idx[d]])) for d in range(n)])
    proj = _circulant_from_lags(0.5 * (lags + lags[_palindrome_index(n)]))
    second_dev = float(np.abs(m.second - proj).max())
    if m.stderr_mean is None:
        mean_thr = atol_mean
    else:
        mean_thr = 3.0 * float(m.stderr_mean.max()) + atol_mean
    if m.stderr_second is None:
        second_thr = atol_second
    else:
        second_thr = 3.0 * float(m.stderr_second.max()) + atol_second
    return StationarityReport(mean_dev, mean_thr, second_dev, second_thr)


class ExistenceReport:
    """Finiteness diagnostics for process moments of a random symmetric body."""

    def __init__(self, finite_mean, finite_second, perimeter_mean,
                 perimeter_second_moment_proxy):
        self.finite_mean = bool(finite_mean)
        self.finite_second = bool(finite_second)
        self.perimeter_mean = float(perimeter_mean)
        self.perimeter_second_moment_proxy = float(perimeter_second_moment_proxy)

    @property
    def passed(self):
        return bool(self.finite_mean and self.finite_second
                    and np.isfinite(self.perimeter_second_moment_proxy))

    def __repr__(self):
        return (
            f"ExistenceReport(passed={self.passed}, "
            f"E[U]~{self.perimeter_mean:.6g}, "
            f"E[U^2]~{self.perimeter_second_moment_proxy:.6g})"
        )


def existence_check(m):
    """Sanity-check that the moments describe a square-integrable perimeter.

    Uses Cauchy's formula on the grid: E[U] ~ (pi/n) sum E[H(theta_i)], and
    reports its square as the E[U^2]-scale proxy (exact for stationary
    moments of a deterministic-perimeter body).
    """
    finite_mean = bool(np.all(np.isfinite(m.mean)))
    finite_second = bool(np.all(np.isfinite(m.second)))
    eu = (np.pi / m.n) * float(m.mean.sum()) if finite_mean else np.nan
    return ExistenceReport(finite_mean, finite_second, eu, eu * eu)

"""Metric and integral functionals of symmetric convex bodies.

Suprema over angle are taken on a fixed 4096-point grid over [0, pi) followed
by golden-section refinement around the grid maximum; grid error before
refinement is bounded by the shapes' Lipschitz constants times the grid step.
"""

import numpy as np
from scipy.integrate import simpson

from .bodies import regular_subdivision
from .circulant import feret_matrix
from .errors import ParameterError
from .polygons import ConvexPolygon

SUP_GRID_SIZE = 4096
SUP_ANGLE_TOL = 1e-8
_SUP_GRID = regular_subdivision(SUP_GRID_SIZE)

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a, b, tol):
    """Maximum of f on [a, b] by golden-section search; returns (x, f(x)).

    Assumes f is unimodal on the bracket; on plateaus or multimodal brackets
    it still returns the best point it evaluated.
    """
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_v = (c, fc) if fc >= fd else (d, fd)
    while b - a > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
        x, v = (c, fc) if fc >= fd else (d, fd)
        if v > best_v:
            best_x, best_v = x, v
    return best_x, best_v


def sup_over_angles(f, grid_values=None, tol=SUP_ANGLE_TOL):
    """sup over [0, pi) of a pi-periodic scalar function.

    `f` maps a scalar angle to a float; `grid_values` may carry precomputed
    values of f on the module grid to avoid re-evaluation.  Returns
    (angle, value) of the refined maximum.
    """
    if grid_values is None:
        grid_values = np.asarray(f(_SUP_GRID))
    i = int(np.argmax(grid_values))
    step = np.pi / SUP_GRID_SIZE
    lo, hi = _SUP_GRID[i] - step, _SUP_GRID[i] + step
    x, v = golden_section_max(f, lo, hi, tol)
    if grid_values[i] >= v:
        return float(_SUP_GRID[i]), float(grid_values[i])
    return float(np.mod(x, np.pi)), float(v)


def hausdorff_distance(x, y):
    """Hausdorff distance between two symmetric bodies: (1/2) sup |H_x - H_y|.

    Either argument may also be a ConvexPolygon, compared through its width
    function.
    """
    gx = np.asarray(_feret_of(x, _SUP_GRID), dtype=float)
    gy = np.asarray(_feret_of(y, _SUP_GRID), dtype=float)

    def gap(t):
        return abs(float(_feret_of(x, t)) - float(_feret_of(y, t)))

    _, v = sup_over_angles(gap, grid_values=np.abs(gx - gy))
    return 0.5 * v


def diameter(x):
    """sup of H over angles (the usual set diameter for symmetric bodies)."""
    g = np.asarray(_feret_of(x, _SUP_GRID), dtype=float)

    def f(t):
        return float(_feret_of(x, t))

    _, v = sup_over_angles(f, grid_values=g)
    return v


def perimeter_cauchy(x, panels=None):
    """Perimeter via Cauchy's formula: integral of H over [0, pi].

    Composite Simpson with 2048 panels; 8192 when H has kinks (polygonal
    shapes), where the quadrature order degrades to roughly O(panels^-2)
    around each kink.
    """
    if panels is None:
        panels = 2048 if x.is_smooth else 8192
    if panels % 2 != 0 or panels < 2:
        raise ParameterError(f"panel count must be a positive even integer, got {panels}")
    t = np.linspace(0.0, np.pi, panels + 1)
    return float(simpson(np.asarray(x.feret(t), dtype=float), x=t))


def _feret_of(obj, theta):
    """Width evaluation shared by symmetric bodies and general convex polygons."""
    if isinstance(obj, ConvexPolygon):
        return obj.width(theta)
    return obj.feret(theta)


def mixed_area_with_zonotope(x, z):
    """Mixed area W(x, z) of a convex set x with a zonotope z.

    Equals (1/2) sum_i alpha_i H_x(theta_i + t); x may be any SymmetricConvexBody
    or a ConvexPolygon (symmetry of x is not required).
    """
    h = np.asarray(_feret_of(x, z.theta + z.t), dtype=float)
    return 0.5 * float(np.dot(z.alpha, h))


def mixed_area_limit(y, x, n):
    """Zonotopal approximation of the mixed area W(y, x) on an n-direction grid.

    Computes (1/2) H_y(N)^T F(N)^-1 H_x(N); converges to W(y, x) as n grows
    when x is symmetric.  y may be an arbitrary convex polygon.
    """
    th = regular_subdivision(n)
    hy = np.asarray(_feret_of(y, th), dtype=float)
    hx = np.asarray(_feret_of(x, th), dtype=float)
    alpha = feret_matrix(n).solve(hx)
    return 0.5 * float(np.dot(hy, alpha))


def steiner_mixed_area(px, py):
    """Mixed area of two convex polygons from the Steiner/area expansion:
    W = (A(px + py) - A(px) - A(py)) / 2, via the edge-merge Minkowski sum."""
    from .polygons import minkowski_sum_polygons

    s = minkowski_sum_polygons(px, py)
    return 0.5 * (s.area() - px.area() - py.area())

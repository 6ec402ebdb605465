import numpy as np
import pytest
from scipy import special

from zonofit import (
    ConvexPolygon,
    Disk,
    Ellipse,
    Segment,
    Zonotope,
    c0_approximate,
    diameter,
    hausdorff_distance,
    mixed_area_limit,
    mixed_area_with_zonotope,
    perimeter_cauchy,
    steiner_mixed_area,
)
from zonofit.metrics import golden_section_max, sup_over_angles


def test_golden_section_max():
    x, v = golden_section_max(lambda t: -(t - 0.3) ** 2, 0.0, 1.0, 1e-10)
    assert x == pytest.approx(0.3, abs=1e-8)
    assert v == pytest.approx(0.0, abs=1e-15)


def test_sup_over_angles_refines_past_the_grid():
    # peak deliberately placed off the 4096-point grid
    peak = 0.5000001
    f = lambda t: np.cos(4 * (t - peak))
    ang, v = sup_over_angles(f)
    assert v == pytest.approx(1.0, abs=1e-12)
    assert ang == pytest.approx(peak, abs=1e-6)


def test_hausdorff_identity_and_disks(unit_square):
    assert hausdorff_distance(unit_square, unit_square) == 0.0
    assert hausdorff_distance(Disk(1.0), Disk(2.0)) == pytest.approx(1.0, abs=1e-12)


def test_hausdorff_disk_vs_hexagon():
    hexagon = c0_approximate(Disk(1.0), 3)
    want = 2 / np.sqrt(3) - 1
    assert hausdorff_distance(Disk(1.0), hexagon) == pytest.approx(want, abs=1e-9)


def test_diameter():
    assert diameter(Ellipse(3, 1, 0.7)) == pytest.approx(6.0, abs=1e-9)
    assert diameter(Disk(1.0)) == pytest.approx(2.0, abs=1e-12)
    assert diameter(Segment(1.0, 0.2)) == pytest.approx(1.0, abs=1e-9)


def test_perimeter_cauchy(unit_square):
    assert perimeter_cauchy(Disk(1.0)) == pytest.approx(2 * np.pi, abs=1e-10)
    assert perimeter_cauchy(unit_square) == pytest.approx(4.0, abs=1e-9)
    # ellipse against the complete elliptic integral
    for a, b in [(3.0, 1.0), (2.0, 1.5), (1.0, 1.0)]:
        want = 4 * a * special.ellipe(1 - (b / a) ** 2)
        assert perimeter_cauchy(Ellipse(a, b)) == pytest.approx(want, abs=1e-9)


def test_mixed_area_with_zonotope(unit_square):
    seg = Zonotope([1.0], theta=[0.3])
    assert mixed_area_with_zonotope(Disk(1.0), seg) == pytest.approx(1.0, abs=1e-14)
    sq = Zonotope([1.0, 1.0])
    assert mixed_area_with_zonotope(unit_square, sq) == pytest.approx(1.0, abs=1e-12)
    zero = Zonotope([0.0], theta=[0.1])
    assert mixed_area_with_zonotope(unit_square, zero) == 0.0


def test_mixed_area_against_steiner_oracle():
    rng = np.random.default_rng(7)
    for _ in range(20):
        na, nb = rng.integers(2, 6), rng.integers(2, 6)
        za = Zonotope(rng.uniform(0.2, 2.0, na), theta=np.sort(rng.uniform(0, np.pi, na)))
        zb = Zonotope(rng.uniform(0.2, 2.0, nb), theta=np.sort(rng.uniform(0, np.pi, nb)))
        want = steiner_mixed_area(za.vertices(), zb.vertices())
        assert mixed_area_with_zonotope(za, zb) == pytest.approx(want, abs=1e-10)


def test_mixed_area_limit(unit_square):
    assert mixed_area_limit(unit_square, unit_square, 2) == pytest.approx(1.0, abs=1e-12)
    assert mixed_area_limit(Disk(1.0), Disk(1.0), 256) == pytest.approx(np.pi, abs=1e-3)
    squashed = Zonotope([0.0, 0.0])
    assert mixed_area_limit(unit_square, squashed, 2) == pytest.approx(0.0, abs=1e-14)


def test_width_dispatch_accepts_polygons(unit_square):
    # hausdorff between a body and the equivalent raw polygon is zero
    p = ConvexPolygon(unit_square.vertices)
    assert hausdorff_distance(unit_square, p) <= 1e-12

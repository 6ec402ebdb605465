import numpy as np
import pytest

from zonofit import (
    MinkowskiSum,
    ParameterError,
    Segment,
    Zonotope,
    point_in_zonotope,
    zonotope_area,
    zonotope_feret,
    zonotope_perimeter,
    zonotope_vertices,
)

HEX_ALPHA = [2 / np.sqrt(3)] * 3


def test_constructor_validation():
    with pytest.raises(ParameterError):
        Zonotope([1.0, -0.5])
    with pytest.raises(ParameterError):
        Zonotope([1.0, 1.0], theta=[0.5, 0.5])  # not strictly increasing
    with pytest.raises(ParameterError):
        Zonotope([1.0, 1.0], theta=[0.0, np.pi])  # out of [0, pi)
    with pytest.raises(ParameterError):
        Zonotope([1.0, 1.0, 1.0], theta=[0.0, 1.0])
    assert Zonotope([1.0, 1.0]).regular
    assert not Zonotope([1.0, 1.0], theta=[0.0, 1.0]).regular


def test_feret_known_values():
    sq = Zonotope([1.0, 1.0])
    assert sq.feret(np.pi / 4) == pytest.approx(np.sqrt(2), abs=1e-12)
    assert sq.feret(0.0) == pytest.approx(1.0, abs=1e-15)
    assert Zonotope([2.0], theta=[0.8]).feret(0.8) == pytest.approx(0.0, abs=1e-15)


def test_feret_matches_segment_sum_route():
    rng = np.random.default_rng(5)
    th = np.linspace(0, np.pi, 33)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        alpha = rng.uniform(0.0, 2.0, n)
        angles = np.sort(rng.uniform(0, np.pi, n))
        angles += np.linspace(0, 1e-6, n)  # keep strictly increasing
        z = Zonotope(alpha, theta=angles)
        segs = MinkowskiSum([Segment(a, t) for a, t in zip(alpha, angles)])
        assert np.allclose(z.feret(th), segs.feret(th), atol=1e-12)


def test_rotation_offset():
    z = Zonotope([1.0, 2.0, 0.5])
    zr = z.rotated(0.4)
    th = np.linspace(0, np.pi, 15)
    assert np.allclose(zr.feret(th), z.feret(th - 0.4), atol=1e-12)
    assert zr.t == pytest.approx(z.t + 0.4)


def test_perimeter():
    assert Zonotope([1.0, 1.0]).perimeter() == pytest.approx(4.0, abs=1e-15)
    hexagon = Zonotope(HEX_ALPHA)
    assert hexagon.perimeter() == pytest.approx(4 * np.sqrt(3), abs=1e-12)
    # Cauchy quadrature of its own width function agrees
    from zonofit import perimeter_cauchy
    assert perimeter_cauchy(hexagon) == pytest.approx(4 * np.sqrt(3), abs=1e-9)
    assert Zonotope([]).perimeter() == 0.0


def test_area():
    assert Zonotope([1.0, 1.0]).area() == pytest.approx(1.0, abs=1e-15)
    assert Zonotope(HEX_ALPHA).area() == pytest.approx(2 * np.sqrt(3), abs=1e-12)
    assert Zonotope([3.0], theta=[1.0]).area() == 0.0


def test_vertices_known_shapes():
    sq = Zonotope([1.0, 1.0]).vertices()
    got = sorted(map(tuple, np.round(sq.vertices, 12)))
    assert got == [(-0.5, -0.5), (-0.5, 0.5), (0.5, -0.5), (0.5, 0.5)]
    assert len(Zonotope(HEX_ALPHA).vertices().vertices) == 6
    seg = Zonotope([1.0, 0.0]).vertices()
    assert len(seg.vertices) == 2


def test_vertices_consistent_with_widths_and_area():
    rng = np.random.default_rng(6)
    for _ in range(10):
        n = int(rng.integers(1, 6))
        z = Zonotope(rng.uniform(0.1, 2.0, n),
                     theta=np.sort(rng.uniform(0, np.pi, n)) * 0.999,
                     t=rng.uniform(0, np.pi))
        poly = z.vertices()
        assert poly.area() == pytest.approx(z.area(), abs=1e-12)
        for th in np.linspace(0, np.pi, 9):
            assert poly.width(th) == pytest.approx(float(z.feret(th)), abs=1e-12)


def test_point_membership():
    z = Zonotope([1.0, 1.0], t=0.3)
    assert point_in_zonotope([0.0, 0.0], z)
    assert not point_in_zonotope([2.0, 2.0], z)
    v = z.vertices().vertices[0]
    assert point_in_zonotope(v, z)  # boundary point, inside up to tol


def test_function_forms():
    z = Zonotope([1.0, 2.0])
    assert zonotope_feret(z, 0.3) == pytest.approx(float(z.feret(0.3)))
    assert zonotope_perimeter(z) == z.perimeter()
    assert zonotope_area(z) == z.area()
    assert np.allclose(zonotope_vertices(z).vertices, z.vertices().vertices)

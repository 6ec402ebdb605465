"""JSON and CSV encodings for shapes, models, moments, and sample tables.

All writers are deterministic: dict keys are sorted, floats use Python's
shortest round-trip repr, and CSV files start with the version comment
line `# zonofit v1`.
"""

import csv
import io
import json

import numpy as np

from .bodies import (
    Disk,
    Ellipse,
    MinkowskiSum,
    Rotated,
    Scaled,
    Segment,
    SymmetricPolygon,
)
from .errors import ParameterError
from .process import C0FaceMoments, CentralFaceMoments, FeretProcessMoments
from .simulate import (
    DeterministicBody,
    Fixed,
    IsotropicEllipse,
    IsotropicRectangle,
    IsotropicZonotope,
    LogNormal,
    Mixture,
)
from .zonotopes import Zonotope

CSV_VERSION_LINE = "# zonofit v1"


def _plain(obj):
    """Recursively convert numpy scalars/arrays so json.dumps accepts them."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def dumps(obj):
    """Deterministic JSON text (sorted keys, trailing newline)."""
    return json.dumps(_plain(obj), sort_keys=True, indent=2) + "\n"


def write_json(path, obj):
    with open(path, "w") as f:
        f.write(dumps(obj))


def read_json(path):
    with open(path) as f:
        return json.load(f)


def shape_to_dict(body):
    """JSON-ready description of a symmetric convex body."""
    if isinstance(body, Disk):
        return {"kind": "disk", "r": body.r}
    if isinstance(body, Ellipse):
        return {"kind": "ellipse", "a": body.a, "b": body.b, "phi": body.phi}
    if isinstance(body, Segment):
        return {"kind": "segment", "length": body.length, "angle": body.angle}
    if isinstance(body, SymmetricPolygon):
        return {"kind": "polygon", "vertices": body.vertices.tolist()}
    if isinstance(body, Zonotope):
        d = {"kind": "zonotope", "alpha": body.alpha.tolist(), "t": body.t}
        if body.regular:
            d["regular_n"] = body.n
        else:
            d["theta"] = body.theta.tolist()
        return d
    if isinstance(body, Rotated):
        return {"kind": "rotated", "angle": body.angle, "body": shape_to_dict(body.body)}
    if isinstance(body, Scaled):
        return {"kind": "scaled", "factor": body.factor, "body": shape_to_dict(body.body)}
    if isinstance(body, MinkowskiSum):
        return {"kind": "minkowski_sum", "parts": [shape_to_dict(p) for p in body.parts]}
    raise ParameterError(f"cannot serialize shape of type {type(body).__name__}")


def _require(d, *keys):
    missing = [k for k in keys if k not in d]
    if missing:
        raise ParameterError(
            f"{d.get('kind', d.get('dist', 'object'))!r} description is missing "
            f"key(s): {', '.join(missing)}"
        )


def shape_from_dict(d):
    """Inverse of shape_to_dict."""
    if not isinstance(d, dict) or "kind" not in d:
        raise ParameterError("shape description must be an object with a 'kind' key")
    kind = d["kind"]
    if kind == "disk":
        _require(d, "r")
        return Disk(d["r"])
    if kind == "ellipse":
        _require(d, "a", "b")
        return Ellipse(d["a"], d["b"], d.get("phi", 0.0))
    if kind == "segment":
        _require(d, "length")
        return Segment(d["length"], d.get("angle", 0.0))
    if kind == "polygon":
        _require(d, "vertices")
        return SymmetricPolygon(d["vertices"])
    if kind == "zonotope":
        _require(d, "alpha")
        t = d.get("t", 0.0)
        if "theta" in d:
            return Zonotope(d["alpha"], theta=d["theta"], t=t)
        return Zonotope(d["alpha"], t=t)
    if kind == "rotated":
        _require(d, "angle", "body")
        return Rotated(shape_from_dict(d["body"]), d["angle"])
    if kind == "scaled":
        _require(d, "factor", "body")
        return Scaled(shape_from_dict(d["body"]), d["factor"])
    if kind == "minkowski_sum":
        _require(d, "parts")
        return MinkowskiSum([shape_from_dict(p) for p in d["parts"]])
    raise ParameterError(f"unknown shape kind {kind!r}")


def distribution_to_dict(dist):
    if isinstance(dist, Fixed):
        return {"dist": "fixed", "value": dist.value.tolist()}
    if isinstance(dist, Mixture):
        return {
            "dist": "mixture",
            "atoms": dist.atoms.tolist(),
            "weights": dist.weights.tolist(),
        }
    if isinstance(dist, LogNormal):
        return {"dist": "lognormal", "dim": dist.dim, "mu": dist.mu, "sigma": dist.sigma}
    raise ParameterError(f"cannot serialize distribution of type {type(dist).__name__}")


def distribution_from_dict(d):
    if not isinstance(d, dict) or "dist" not in d:
        raise ParameterError("size distribution must be an object with a 'dist' key")
    name = d["dist"]
    if name == "fixed":
        _require(d, "value")
        return Fixed(d["value"])
    if name == "mixture":
        _require(d, "atoms", "weights")
        return Mixture(d["atoms"], d["weights"])
    if name == "lognormal":
        _require(d, "dim")
        return LogNormal(d["dim"], d.get("mu", 0.0), d.get("sigma", 0.25))
    raise ParameterError(f"unknown distribution {name!r}")


def model_to_dict(model):
    """JSON-ready description of a random-shape model."""
    if isinstance(model, DeterministicBody):
        return {"kind": model.kind, "body": shape_to_dict(model.body)}
    if isinstance(model, IsotropicZonotope):
        return {"kind": model.kind, "n": model.n,
                "faces": distribution_to_dict(model.sizes)}
    if isinstance(model, IsotropicRectangle):
        return {"kind": model.kind, "sides": distribution_to_dict(model.sizes)}
    if isinstance(model, IsotropicEllipse):
        return {"kind": model.kind, "semiaxes": distribution_to_dict(model.semiaxes)}
    raise ParameterError(f"cannot serialize model of type {type(model).__name__}")


def model_from_dict(d):
    """Inverse of model_to_dict."""
    if not isinstance(d, dict) or "kind" not in d:
        raise ParameterError("model description must be an object with a 'kind' key")
    kind = d["kind"]
    if kind == "deterministic_body":
        _require(d, "body")
        return DeterministicBody(shape_from_dict(d["body"]))
    if kind == "isotropic_zonotope":
        _require(d, "n", "faces")
        return IsotropicZonotope(d["n"], distribution_from_dict(d["faces"]))
    if kind == "isotropic_rectangle":
        _require(d, "sides")
        return IsotropicRectangle(distribution_from_dict(d["sides"]))
    if kind == "isotropic_ellipse":
        _require(d, "semiaxes")
        return IsotropicEllipse(distribution_from_dict(d["semiaxes"]))
    raise ParameterError(f"unknown model kind {kind!r}")


def _maybe_list(x):
    return None if x is None else np.asarray(x).tolist()


def moments_to_dict(m):
    """JSON-ready description of process, central, or interpolant face moments."""
    if isinstance(m, FeretProcessMoments):
        return {
            "type": "feret_moments",
            "n": m.n,
            "theta": m.theta.tolist(),
            "mean": m.mean.tolist(),
            "second": m.second.tolist(),
            "stderr_mean": _maybe_list(m.stderr_mean),
            "stderr_second": _maybe_list(m.stderr_second),
            "stationary": m.stationary,
        }
    if isinstance(m, CentralFaceMoments):
        return {
            "type": "central_face_moments",
            "n": m.n,
            "mean_alpha": m.mean_alpha,
            "v_alpha": m.v_alpha.tolist(),
            "stderr_mean_alpha": m.stderr_mean_alpha,
            "stderr_v_alpha": _maybe_list(m.stderr_v_alpha),
            "psd_repaired": m.psd_repaired,
        }
    if isinstance(m, C0FaceMoments):
        return {
            "type": "interpolant_face_moments",
            "n": m.n,
            "mean": m.mean.tolist(),
            "second": m.second.tolist(),
            "cov": m.cov.tolist(),
            "stderr_mean": _maybe_list(m.stderr_mean),
            "stderr_second": _maybe_list(m.stderr_second),
        }
    raise ParameterError(f"cannot serialize moments of type {type(m).__name__}")


def moments_from_dict(d):
    """Inverse of moments_to_dict, dispatching on the 'type' key."""
    if not isinstance(d, dict) or "type" not in d:
        raise ParameterError("moment description must be an object with a 'type' key")
    t = d["type"]
    if t == "feret_moments":
        _require(d, "mean", "second")
        return FeretProcessMoments(
            mean=d["mean"],
            second=d["second"],
            stderr_mean=d.get("stderr_mean"),
            stderr_second=d.get("stderr_second"),
            stationary=bool(d.get("stationary", False)),
        )
    if t == "central_face_moments":
        _require(d, "n", "mean_alpha", "v_alpha")
        return CentralFaceMoments(
            d["n"],
            d["mean_alpha"],
            d["v_alpha"],
            stderr_mean_alpha=d.get("stderr_mean_alpha"),
            stderr_v_alpha=d.get("stderr_v_alpha"),
        )
    if t == "interpolant_face_moments":
        _require(d, "n", "mean", "second", "cov")
        return C0FaceMoments(
            d["n"],
            d["mean"],
            d["second"],
            d["cov"],
            stderr_mean=d.get("stderr_mean"),
            stderr_second=d.get("stderr_second"),
        )
    raise ParameterError(f"unknown moment type {t!r}")


def format_csv(header, rows):
    """CSV text with the version comment line, then a header row, then data rows.

    Floats are rendered with repr for exact round-trips; other values with str.
    """
    buf = io.StringIO()
    buf.write(CSV_VERSION_LINE + "\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(
            [repr(float(v)) if isinstance(v, (float, np.floating)) else str(v)
             for v in row]
        )
    return buf.getvalue()


def write_csv(path, header, rows):
    with open(path, "w") as f:
        f.write(format_csv(header, rows))


def write_sample_csv(path, theta, h):
    """Sample table with columns sample_id,theta,h; one row per angle per sample."""
    h = np.atleast_2d(np.asarray(h, dtype=float))
    theta = np.asarray(theta, dtype=float)
    rows = (
        (k, theta[j], h[k, j])
        for k in range(h.shape[0])
        for j in range(h.shape[1])
    )
    write_csv(path, ["sample_id", "theta", "h"], rows)


def read_sample_csv(path):
    """Parse a sample_id,theta,h table into (theta, h-matrix).

    Every sample must report the same angle grid, in any row order.
    Returns theta sorted ascending and h with shape (samples, len(theta)).
    """
    with open(path) as f:
        lines = [ln for ln in f if ln.strip() and not ln.lstrip().startswith("#")]
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None or [c.strip() for c in header] != ["sample_id", "theta", "h"]:
        raise ParameterError("sample CSV must have the header sample_id,theta,h")
    data = {}
    for row in reader:
        if len(row) != 3:
            raise ParameterError(f"malformed sample CSV row: {row!r}")
        try:
            sid, th, val = row[0].strip(), float(row[1]), float(row[2])
        except ValueError as e:
            raise ParameterError(f"malformed sample CSV row: {row!r}") from e
        data.setdefault(sid, []).append((th, val))
    if not data:
        raise ParameterError("sample CSV contains no data rows")
    grids = set()
    table = {}
    for sid, pairs in data.items():
        pairs.sort()
        ths = tuple(p[0] for p in pairs)
        if len(set(ths)) != len(ths):
            raise ParameterError(f"sample {sid!r} repeats an angle")
        grids.add(ths)
        table[sid] = [p[1] for p in pairs]
    if len(grids) != 1:
        raise ParameterError("all samples must share one angle grid")
    theta = np.array(grids.pop())
    # rows come back in first-appearance order of sample_id
    h = np.array([table[sid] for sid in data])
    return theta, h

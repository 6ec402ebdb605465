"""Command-line front end: approximate, sweep, estimate, simulate.

Every command is a thin orchestration of library calls; outputs are
byte-equal to calling the library directly with the same configuration.
Exit codes: 0 success, 2 invalid input, 3 numeric failure, 4 underdetermined
estimation.  The ZONOFIT_THREADS environment variable caps simulation
workers without affecting any output.
"""

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import serialize
from .approx import (
    c0_approximate,
    cinf_approximate,
    hausdorff_bound,
    worst_offset,
)
from .bodies import Disk, Ellipse, Segment, SymmetricPolygon, regular_subdivision
from .errors import SolverError, UnderdeterminedError, ZonofitError, ParameterError
from .metrics import diameter, hausdorff_distance, perimeter_cauchy
from .process import (
    central_from_feret,
    central_nnls,
    confidence_bound,
    existence_check,
    isotropize_moments,
    stationarity_diagnostic,
)
from .simulate import (
    CHUNK,
    DeterministicBody,
    Fixed,
    IsotropicEllipse,
    IsotropicRectangle,
    empirical_moments,
    estimate_process_moments,
    feret_sample_block,
)


def square_body(side=1.0):
    """Axis-aligned square of the given side, centered at the origin."""
    s = 0.5 * float(side)
    if s <= 0:
        raise ParameterError(f"side must be positive, got {side}")
    return SymmetricPolygon([[s, s], [-s, s], [-s, -s], [s, -s]])


def _float_args(text, spec):
    try:
        return [float(p) for p in text.split(",") if p.strip()]
    except ValueError as e:
        raise ParameterError(f"bad numeric parameters in {spec!r}") from e


def parse_shape(spec):
    """Shape from inline JSON, a .json file path, or `kind:p1,p2,...` shorthand.

    Shorthands: disk:r | ellipse:a,b[,phi] | segment:length[,angle] |
    square[:side].
    """
    spec = spec.strip()
    if spec.startswith("{"):
        return serialize.shape_from_dict(_loads(spec))
    if spec.endswith(".json"):
        return serialize.shape_from_dict(_read_json(spec))
    kind, _, rest = spec.partition(":")
    vals = _float_args(rest, spec)
    if kind == "disk" and len(vals) == 1:
        return Disk(vals[0])
    if kind == "ellipse" and len(vals) in (2, 3):
        return Ellipse(*vals)
    if kind == "segment" and len(vals) in (1, 2):
        return Segment(*vals)
    if kind == "square" and len(vals) in (0, 1):
        return square_body(*vals)
    raise ParameterError(f"cannot parse shape spec {spec!r}")


def parse_model(spec):
    """Random-shape model from inline JSON, a .json file, or a shorthand.

    Shorthands: deterministic:<shape> | isotropic_square[:side] |
    isotropic_rectangle:a,b | isotropic_ellipse:a,b.
    """
    spec = spec.strip()
    if spec.startswith("{"):
        return serialize.model_from_dict(_loads(spec))
    if spec.endswith(".json"):
        return serialize.model_from_dict(_read_json(spec))
    kind, _, rest = spec.partition(":")
    if kind == "deterministic" and rest:
        return DeterministicBody(parse_shape(rest))
    vals = _float_args(rest, spec)
    if kind == "isotropic_square" and len(vals) in (0, 1):
        side = vals[0] if vals else 1.0
        if side <= 0:
            raise ParameterError(f"side must be positive, got {side}")
        return IsotropicRectangle(Fixed([side, side]))
    if kind == "isotropic_rectangle" and len(vals) == 2:
        return IsotropicRectangle(Fixed(vals))
    if kind == "isotropic_ellipse" and len(vals) == 2:
        return IsotropicEllipse(Fixed(vals))
    raise ParameterError(f"cannot parse model spec {spec!r}")


def _loads(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterError(f"bad inline JSON: {e}") from e


def _read_json(path):
    try:
        return serialize.read_json(path)
    except FileNotFoundError as e:
        raise ParameterError(f"no such file: {path}") from e
    except json.JSONDecodeError as e:
        raise ParameterError(f"{path} is not valid JSON: {e}") from e


def parse_int_list(text):
    """Integers from `a:b` (inclusive range) or a comma list; may be empty."""
    text = text.strip()
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError as e:
        raise ParameterError(f"bad integer list {text!r}") from e


def _emit(text, out):
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def cmd_approximate(args):
    x = parse_shape(args.shape)
    n = args.n
    if args.mode == "c0":
        tau, z = 0.0, c0_approximate(x, n)
    else:
        tau, z = cinf_approximate(x, n, grid_points=args.grid)
    report = {
        "command": "approximate",
        "mode": args.mode,
        "n": n,
        "tau": tau,
        "theta": z.theta,
        "alpha": z.alpha,
        "d_hausdorff": hausdorff_distance(x, z),
        "bound": hausdorff_bound(n, diameter(x)),
        "perimeter": z.perimeter(),
        "area": z.area(),
        "vertices": z.vertices().vertices,
    }
    if args.format == "csv":
        _emit(serialize.format_csv(["x", "y"], report["vertices"]), args.out)
    else:
        _emit(serialize.dumps(report), args.out)
    return 0


def cmd_sweep(args):
    ns = parse_int_list(args.n)
    ks = _float_args(args.k, args.k)
    if not ks:
        raise ParameterError("need at least one axis ratio")
    rows = []
    for k in sorted(ks):
        if k < 1:
            raise ParameterError(f"axis ratio must be >= 1, got {k}")
        raw = Ellipse(k, 1.0)
        u = perimeter_cauchy(raw)
        x = Ellipse(k / u, 1.0 / u)
        dia = diameter(x)
        for n in ns:
            bound = hausdorff_bound(n, dia)
            _, z = cinf_approximate(x, n, grid_points=args.grid)
            d_best = hausdorff_distance(x, z)
            _, d_worst = worst_offset(x, n, grid_points=args.grid)
            rows.append((n, k, d_best, bound, "c0_best"))
            rows.append((n, k, d_worst, bound, "c0_worst"))
            rows.append((n, k, d_best, bound, "cinf"))
    rows.sort(key=lambda r: (r[1], r[0], r[4]))
    header = ["n", "k", "d_hausdorff", "bound", "mode"]
    if args.format == "json":
        _emit(serialize.dumps({"rows": [dict(zip(header, r)) for r in rows]}),
              args.out)
    else:
        _emit(serialize.format_csv(header, rows), args.out)
    return 0


def _fold_lag(z):
    """Angular lag folded to [0, pi/2]: lags z and pi - z are equivalent."""
    z = abs(z) % np.pi
    return min(z, np.pi - z)


def _irregular_estimate(theta, h, n):
    """NNLS face moments from samples on a non-regular angle grid.

    Under isotropy every angle pair (i, j) observes the covariance lag
    |theta_i - theta_j|; the pooled (lag, E[H H']) pairs feed the
    least-squares kernel fit.  Raises UnderdeterminedError through
    central_nnls when the design has too few distinct lags for n.
    """
    if n is None:
        raise ParameterError(
            "samples are not on the regular grid; pass --n and --solver nnls"
        )
    g = len(theta)
    second = (h.T @ h) / h.shape[0]
    seen = {}
    for i in range(g):
        for j in range(i, g):
            lag = round(_fold_lag(theta[i] - theta[j]), 12)
            seen.setdefault(lag, []).append(second[i, j])
    obs = [(lag, float(np.mean(vals))) for lag, vals in sorted(seen.items())]
    mean_alpha = np.pi / (2.0 * n) * float(h.mean())
    return central_nnls(obs, n, mean_alpha=mean_alpha)


def cmd_estimate(args):
    path = args.input
    irregular = None
    if path.endswith(".csv"):
        theta, h = serialize.read_sample_csv(path)
        if np.allclose(theta, regular_subdivision(len(theta)), atol=1e-9):
            m = empirical_moments(h)
        elif args.solver == "nnls":
            irregular = (theta, h)
        else:
            raise ParameterError(
                "the linear solver needs samples on the regular grid "
                "theta_i = (i-1) pi / n; use --solver nnls for other designs"
            )
        mean_diam = float(np.mean(h.max(axis=1)))
    else:
        m = serialize.moments_from_dict(_read_json(path))
        if not hasattr(m, "stationary"):
            raise ParameterError("estimate needs Feret-process moments as input")
        mean_diam = float(m.mean.max())

    if irregular is not None:
        n = args.n
        theta, h = irregular
        central = _irregular_estimate(theta, h, n)
        diag = None
        isotropized = False
    else:
        n = m.n
        if args.n is not None and args.n != n:
            raise ParameterError(f"input has n={n} angles, requested n={args.n}")
        diag = stationarity_diagnostic(m)
        isotropized = not m.stationary
        stat = isotropize_moments(m) if isotropized else m
        if args.solver == "linear":
            central = central_from_feret(stat, max_condition=args.max_condition)
        else:
            obs = [(stat.theta[d], stat.second[0, d]) for d in range(n // 2 + 1)]
            mean_alpha = np.pi / (2.0 * n) * float(stat.mean.mean())
            central = central_nnls(obs, n, mean_alpha=mean_alpha)
    report = {
        "command": "estimate",
        "solver": args.solver,
        "n": n,
        "isotropized": isotropized,
        "central": serialize.moments_to_dict(central),
    }
    if diag is not None:
        report["stationarity"] = {
            "passed": diag.passed,
            "mean_deviation": diag.mean_deviation,
            "mean_threshold": diag.mean_threshold,
            "second_deviation": diag.second_deviation,
            "second_threshold": diag.second_threshold,
        }
    if args.epsilon is not None:
        if not 0.0 < args.epsilon <= 1.0:
            raise ParameterError(f"epsilon must be in (0, 1], got {args.epsilon}")
        report["epsilon"] = args.epsilon
        report["confidence_bound"] = confidence_bound(args.epsilon, n, mean_diam)
    if args.format == "csv":
        rows = [("mean_alpha", "", central.mean_alpha)]
        rows += [("v_alpha", d, v) for d, v in enumerate(central.v_alpha)]
        _emit(serialize.format_csv(["quantity", "index", "value"], rows), args.out)
    else:
        _emit(serialize.dumps(report), args.out)
    return 0


def cmd_simulate(args):
    model = parse_model(args.model)
    if args.samples < 2:
        raise ParameterError("need at least 2 samples")
    est = estimate_process_moments(model, args.n, args.samples, args.seed)
    diag = stationarity_diagnostic(est.moments)
    exist = existence_check(est.moments)
    base = args.out or "zonofit_run"
    csv_path = base + ".csv"
    json_path = base + ".json"
    grid = regular_subdivision(args.n)
    with open(csv_path, "w", newline="") as f:
        f.write(serialize.CSV_VERSION_LINE + "\n")
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["sample_id", "theta", "h"])
        for start in range(0, args.samples, CHUNK):
            count = min(CHUNK, args.samples - start)
            h = feret_sample_block(model, args.n, args.seed, start, count)
            for i in range(count):
                for j in range(args.n):
                    w.writerow([start + i, repr(float(grid[j])), repr(float(h[i, j]))])
    summary = {
        "command": "simulate",
        "model": serialize.model_to_dict(model),
        "n": args.n,
        "samples": est.sample_count,
        "seed": est.seed,
        "moments": serialize.moments_to_dict(est.moments),
        "stationarity": {
            "passed": diag.passed,
            "mean_deviation": diag.mean_deviation,
            "mean_threshold": diag.mean_threshold,
            "second_deviation": diag.second_deviation,
            "second_threshold": diag.second_threshold,
        },
        "existence": {
            "passed": exist.passed,
            "perimeter_mean": exist.perimeter_mean,
            "perimeter_second_moment_proxy": exist.perimeter_second_moment_proxy,
        },
        "samples_csv": os.path.basename(csv_path),
    }
    serialize.write_json(json_path, summary)
    sys.stdout.write(csv_path + "\n" + json_path + "\n")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="zonofit",
        description="Zonotope description and approximation of symmetric "
                    "convex shapes from Feret diameters.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="random stream seed (default 0)")
    common.add_argument("--out", default=None,
                        help="output path (default stdout; simulate: base name)")
    common.add_argument("--format", choices=["json", "csv"], default=None,
                        help="output format (default depends on command)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("approximate", parents=[common],
                       help="fit one zonotope to one shape")
    p.add_argument("--shape", required=True,
                   help="shape spec: shorthand, inline JSON, or .json path")
    p.add_argument("--n", type=int, required=True, help="number of face directions")
    p.add_argument("--mode", choices=["c0", "cinf"], default="c0")
    p.add_argument("--grid", type=int, default=256,
                   help="offset scan resolution for cinf (default 256)")
    p.set_defaults(func=cmd_approximate, default_format="json")

    p = sub.add_parser("sweep", parents=[common],
                       help="accuracy table over n for unit-perimeter ellipses")
    p.add_argument("--n", required=True, help="n values: a:b range or comma list")
    p.add_argument("--k", default="1,2,4,8", help="axis ratios, comma list")
    p.add_argument("--grid", type=int, default=128,
                   help="offset scan resolution (default 128)")
    p.set_defaults(func=cmd_sweep, default_format="csv")

    p = sub.add_parser("estimate", parents=[common],
                       help="central face moments from samples or moments")
    p.add_argument("--input", required=True,
                   help="sample table (.csv) or Feret moments (.json)")
    p.add_argument("--n", type=int, default=None,
                   help="expected number of angles (checked against the input)")
    p.add_argument("--solver", choices=["linear", "nnls"], default="linear")
    p.add_argument("--max-condition", type=float, default=1e12,
                   help="reject the moment solve above this condition number")
    p.add_argument("--epsilon", type=float, default=None,
                   help="also report the (1-epsilon) interpolant distance bound")
    p.set_defaults(func=cmd_estimate, default_format="json")

    p = sub.add_parser("simulate", parents=[common],
                       help="sample a model, write sample CSV + estimate JSON")
    p.add_argument("--model", required=True,
                   help="model spec: shorthand, inline JSON, or .json path")
    p.add_argument("--n", type=int, required=True, help="number of grid angles")
    p.add_argument("--samples", type=int, required=True)
    p.set_defaults(func=cmd_simulate, default_format="json")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    return args.func(args)


def entry(argv=None):
    """Console entry point mapping library errors to stable exit codes."""
    try:
        return main(argv)
    except UnderdeterminedError as e:
        print(f"zonofit: {e}", file=sys.stderr)
        return 4
    except SolverError as e:
        print(f"zonofit: {e}", file=sys.stderr)
        return 3
    except (ZonofitError, OSError, ValueError) as e:
        print(f"zonofit: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(entry())

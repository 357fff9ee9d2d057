"""Command-line front end: ``heischain {ground,thermal,threshold,validate}``.

Each data command writes a CSV and a ``<csv>.manifest`` key=value file
sharing one run identifier.  The identifier is a hash of the resolved
parameters, so reruns produce byte-identical CSVs.

Exit status: 0 success, 1 validation failure, 2 usage error,
3 resource or I/O error.
"""

import argparse
import hashlib
import io
import os
import sys
import time

import numpy as np

from . import __version__, eigen, scan, validate
from .errors import ConvergenceError, ParameterError, ResourceError
from .observables import DJ, KINK_TOL

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt(x):
    """12 significant digits, '.' decimal point, no negative zero."""
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x) + 0.0, ".12g")


def parse_grid(text):
    try:
        lo, hi, n = text.split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be min:max:steps, got {text!r}") from None
    if n < 1 or (n > 1 and not lo < hi):
        raise argparse.ArgumentTypeError(f"grid needs min < max and steps >= 1, got {text!r}")
    return np.linspace(lo, hi, n) if n > 1 else np.array([lo])


def parse_sizes(text):
    out = []
    try:
        for part in text.split(","):
            if "-" in part:
                a, b = part.split("-")
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad size list {text!r}") from None
    return out


def build_parser():
    p = argparse.ArgumentParser(prog="heischain", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", required=True, help="CSV output path")
        sp.add_argument("--workers", type=int, default=os.cpu_count() or 1)

    g = sub.add_parser("ground", help="ground-state J sweep")
    g.add_argument("--L", type=int, required=True)
    g.add_argument("--j-min", type=float, default=-1.0)
    g.add_argument("--j-max", type=float, default=1.0)
    g.add_argument("--steps", type=int, default=201)
    common(g)

    t = sub.add_parser("thermal", help="thermal concurrence on a (T, J) grid")
    t.add_argument("--L", type=int, required=True)
    t.add_argument("--j-grid", type=parse_grid, default="-1:1:81", help="min:max:steps")
    t.add_argument("--t-grid", type=parse_grid, default="0.05:4:81", help="min:max:steps, T > 0")
    t.add_argument("--distance", type=int, choices=(1, 2), default=1)
    common(t)

    h = sub.add_parser("threshold", help="threshold temperature curves")
    h.add_argument("--L-list", type=parse_sizes, default="4-12", help="e.g. 4-12 or 4,6,8")
    h.add_argument("--j-grid", type=parse_grid, default="-1:1:81", help="min:max:steps")
    h.add_argument("--distance", type=int, choices=(1, 2), default=1)
    h.add_argument("--t-max", type=float, default=scan.T_MAX)
    common(h)

    v = sub.add_parser("validate", help="run all cross-checks")
    v.add_argument("--max-L", type=int, default=8)
    return p


def _check_args(args):
    if args.command == "ground":
        if not 4 <= args.L <= 16:
            raise UsageError("--L must lie in [4, 16]")
        if not args.j_min < args.j_max or args.steps < 2:
            raise UsageError("need --j-min < --j-max and --steps >= 2")
    elif args.command == "thermal":
        if not 4 <= args.L <= eigen.MAX_L_VECTORS:
            raise UsageError(f"--L must lie in [4, {eigen.MAX_L_VECTORS}]")
        if np.any(args.t_grid <= 0):
            raise UsageError("--t-grid temperatures must be positive")
    elif args.command == "threshold":
        if not args.L_list or any(not 4 <= L <= 12 for L in args.L_list):
            raise UsageError("--L-list entries must lie in [4, 12]")
        if not args.t_max > 0:
            raise UsageError("--t-max must be positive")
    elif args.command == "validate":
        if not 4 <= args.max_L <= 10:
            raise UsageError("--max-L must lie in [4, 10]")
    if getattr(args, "workers", 1) < 1:
        raise UsageError("--workers must be >= 1")
    out = getattr(args, "out", None)
    if out is not None:
        d = os.path.dirname(os.path.abspath(out))
        if not os.path.isdir(d) or not os.access(d, os.W_OK):
            raise OSError(f"cannot write to {out!r}: directory missing or not writable")


def _params(args):
    skip = {"command", "out", "workers"}
    out = {}
    for k, v in sorted(vars(args).items()):
        if k in skip:
            continue
        if isinstance(v, np.ndarray):
            v = f"{fmt(v[0])}:{fmt(v[-1])}:{len(v)}"
        elif isinstance(v, list):
            v = ",".join(map(str, v))
        out[k] = v
    return out


def run_id(command, params):
    blob = "\n".join([command, __version__] + [f"{k}={v}" for k, v in params.items()])
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _csv(header, rows):
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for r in rows:
        buf.write(",".join(fmt(x) for x in r) + "\n")
    return buf.getvalue()


def _write_atomic(path, text):
    tmp = f"{path}.tmp{os.getpid()}"
    with open(tmp, "w", encoding="ascii", newline="\n") as f:
        f.write(text)
    os.replace(tmp, path)


def _rows_ground(args):
    g = scan.ground_scan(args.L, args.j_min, args.j_max, args.steps, args.workers)
    header = ["J", "E0", "G1", "G2", "C1", "C2", "crossing_flag"]
    rows = zip(g.J_grid, g.E0, g.G1, g.G2, g.C1, g.C2, g.crossing_flags)
    return header, rows


def _rows_thermal(args):
    grid = scan.thermal_grid(args.L, args.j_grid, args.t_grid, args.workers)
    C = grid.C1 if args.distance == 1 else grid.C2
    rows = [(T, J, C[a, b]) for a, T in enumerate(grid.T_grid) for b, J in enumerate(grid.J_grid)]
    return ["T", "J", "C"], rows


def _rows_threshold(args):
    curves = scan.threshold_curve(args.L_list, args.j_grid, args.distance, args.t_max,
                                  workers=args.workers)
    rows = [(c.L, J, t) for c in curves for J, t in zip(c.J_grid, c.T_th)]
    return ["L", "J", "T_th"], rows


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad flags
    try:
        _check_args(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"heischain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"heischain: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    start = time.perf_counter()
    try:
        if args.command == "validate":
            checks = validate.run_checks(args.max_L)
            print(validate.format_report(checks))
            failed = [c for c in checks if not c.passed and not c.informational]
            return EXIT_VALIDATION if failed else EXIT_OK
        header, rows = {"ground": _rows_ground, "thermal": _rows_thermal,
                        "threshold": _rows_threshold}[args.command](args)
        text = _csv(header, rows)
    except ParameterError as exc:
        print(f"heischain: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, ConvergenceError, MemoryError) as exc:
        print(f"heischain: error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE

    params = _params(args)
    rid = run_id(args.command, params)
    manifest = [
        ("run_id", rid),
        ("command", args.command),
        ("argv", " ".join(argv)),
        *params.items(),
        ("workers", args.workers),
        ("degeneracy_tol", eigen.DEGENERACY_TOL),
        ("dense_max_dim", eigen.DENSE_MAX_DIM),
        ("hellmann_dJ", DJ),
        ("kink_tol", KINK_TOL),
        ("threshold_eps", scan.EPS),
        ("threshold_tol", scan.T_TOL),
        ("version", __version__),
        ("csv", os.path.basename(args.out)),
        ("csv_sha256", hashlib.sha256(text.encode()).hexdigest()),
        ("wall_seconds", f"{time.perf_counter() - start:.3f}"),
    ]
    try:
        _write_atomic(args.out, text)
        _write_atomic(args.out + ".manifest", "".join(f"{k}={v}\n" for k, v in manifest))
    except OSError as exc:
        print(f"heischain: error: cannot write {args.out!r}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    print(f"wrote {args.out} ({len(text.splitlines()) - 1} rows, run {rid})", file=sys.stderr)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface: verification runs, parameter sweeps and CSV
reproductions of the scaled-concurrence and magnetization figures.

Exit codes: 0 success, 1 verification/cross-check failure, 2 invalid input.
"""

import argparse
import itertools
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import ed, entanglement, observables, parent
from .checks import VerifyConfig, run_verify
from .ed import state_expectation_one, state_expectation_two
from .entanglement import concurrence_closed, scaling_limit
from .model import ModelParams, mps_matrices
from .mps import build_state, explicit_ground_state
from .observables import DiscontinuityError, SingularParameterError
from .pauli import SX, SY, SZ

DEFAULT_G_VALUES = [-2.0, -0.5, 0.3, 0.7, 1.0, 1.5]
FIGURE1_SIZES = [6, 7, 8, 9, 10, 20, 30, 40, 50]


def _fmt(x):
    """Deterministic 15-significant-digit float formatting."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return "nan"
    x = float(x)
    if x == 0:
        x = 0.0  # avoid "-0"
    return f"{x:.15g}"


def _write_lines(path, lines):
    text = "\n".join(lines) + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _g_grid(args, default=None):
    if args.g_min is None and args.g_max is None:
        return list(default) if default is not None else None
    g_min = args.g_min if args.g_min is not None else args.g_max
    g_max = args.g_max if args.g_max is not None else args.g_min
    if g_min > g_max:
        raise SystemExit(2)
    if args.g_steps < 1:
        raise SystemExit(2)
    if args.g_steps == 1:
        return [g_min]
    return list(np.linspace(g_min, g_max, args.g_steps))


def _n_list(args, default):
    if args.n_list:
        return args.n_list
    if args.n is not None:
        return [args.n]
    return list(default)


def _map_ordered(fn, items, workers):
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def cmd_verify(args):
    n_list = _n_list(args, [4, 6])
    if args.eta == -1 and any(n % 2 for n in n_list):
        print("error: eta=-1 requires even ring sizes", file=sys.stderr)
        return 2
    cfg = VerifyConfig(
        j=args.j,
        n_list=n_list,
        g_values=_g_grid(args, DEFAULT_G_VALUES),
        tolerance=args.tolerance,
    )
    results, coverage_ok = run_verify(cfg)
    records = []
    failed = False
    for r in results:
        label = r.status.upper()
        print(f"{label:5s} {r.name}")
        if r.status == "fail":
            failed = True
            print(f"      details: {r.details}")
        records.append(
            json.dumps(
                {"check": r.name, "status": r.status, "covers": r.covers,
                 "details": _jsonable(r.details)},
                sort_keys=True,
            )
        )
    records.append(json.dumps({"check": "op-coverage", "status": "pass" if coverage_ok else "fail"}))
    print(f"{'PASS' if coverage_ok else 'FAIL':5s} op-coverage")
    if args.output:
        _write_lines(args.output, records)
    return 1 if (failed or not coverage_ok) else 0


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    return obj


def cmd_sweep(args):
    g_values = _g_grid(args, np.linspace(0.0, 2.0, 41))
    n_list = _n_list(args, [8])

    def row(point):
        g, n = point
        if g == -1:
            print(f"warning: skipping singular point g=-1 (n={n})", file=sys.stderr)
            return None
        rec = observables.observable_record(args.epsilon, g, n)
        c = concurrence_closed(g, n)
        if args.check and n <= 10:
            p = ModelParams(epsilon=args.epsilon, eta=1, g=g, j=args.j, n=n)
            psi = build_state(mps_matrices(p), n)
            errs = [abs(state_expectation_one(psi, SX, 1).real - rec.mx)]
            for op, val in ((SX, rec.gx), (SY, rec.gy), (SZ, rec.gz)):
                errs.append(abs(state_expectation_two(psi, op, op, 1, 2).real - val))
            if max(errs) > args.tolerance:
                raise ArithmeticError(
                    f"cross-check failed at g={g}, n={n}: max error {max(errs)}"
                )
        return ",".join(
            [_fmt(g), str(n), _fmt(rec.u), _fmt(rec.mx), _fmt(rec.gx), _fmt(rec.gy),
             _fmt(rec.gz), _fmt(c)]
        )

    points = list(itertools.product(g_values, n_list))
    try:
        rows = _map_ordered(row, points, args.workers)
    except ArithmeticError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = ["g,N,u,mx,Gx,Gy,Gz,C"] + [r for r in rows if r is not None]
    _write_lines(args.output, lines)
    return 0


def cmd_figure1(args):
    g_values = _g_grid(args, np.linspace(0.0, 5.0, 101))
    sizes = _n_list(args, FIGURE1_SIZES)

    def row(g):
        vals = [n * concurrence_closed(g / n, n) for n in sizes]
        return ",".join([_fmt(g)] + [_fmt(v) for v in vals] + [_fmt(scaling_limit(g))])

    header = ",".join(["g"] + [f"NC_N{n}" for n in sizes] + ["limit"])
    lines = [header] + _map_ordered(row, list(g_values), args.workers)
    _write_lines(args.output, lines)
    return 0


def cmd_figure2(args):
    g_values = _g_grid(args, np.linspace(-2.0, 2.0, 81))
    sizes = _n_list(args, [4, 8, 16, 64])

    def safe(fn, *a):
        try:
            return fn(*a)
        except (SingularParameterError, DiscontinuityError):
            return float("nan")

    def row(g):
        finite = [safe(observables.magnetization_x, args.epsilon, g, n) for n in sizes]
        lim = safe(observables.thermodynamic_magnetization, args.epsilon, g)
        alt = safe(observables.thermodynamic_magnetization_alt, args.epsilon, g)
        return ",".join([_fmt(g)] + [_fmt(v) for v in finite] + [_fmt(lim), _fmt(alt)])

    header = ",".join(
        ["g"] + [f"mx_N{n}" for n in sizes] + ["mx_limit", "mx_limit_reciprocal"]
    )
    lines = [header] + _map_ordered(row, list(g_values), args.workers)
    _write_lines(args.output, lines)
    return 0


def cmd_ed_compare(args):
    g_values = _g_grid(args, DEFAULT_G_VALUES)
    n_list = _n_list(args, [4, 6])
    if any(n > parent.DENSE_CAP for n in n_list):
        print(f"error: ring sizes above dense cap {parent.DENSE_CAP}", file=sys.stderr)
        return 2
    lines = ["epsilon,eta,g,J,N,energy_ed,energy_expected,residual,overlap,degeneracy"]
    worst = 0.0
    classes = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
    for (eps, eta), g, n in itertools.product(classes, g_values, n_list):
        if eta == -1 and n % 2 != 0:
            continue
        p = ModelParams(epsilon=eps, eta=eta, g=g, j=args.j, n=n)
        h_coupling = parent.assemble_chain_h(p, form="coupling")
        h_proj = parent.assemble_chain_h(p, form="projector")
        spec = ed.dense_spectrum(h_coupling)
        expected = -n * parent.constant_shift(p)
        psi = explicit_ground_state(p)
        res, ov = ed.ground_membership(h_proj, psi)
        worst = max(worst, abs(spec.eigenvalues[0] - expected), res, 1 - ov)
        lines.append(
            ",".join(
                [str(eps), str(eta), _fmt(g), _fmt(args.j), str(n),
                 _fmt(spec.eigenvalues[0]), _fmt(expected), _fmt(res), _fmt(ov),
                 str(spec.ground_space_dim)]
            )
        )
    _write_lines(args.output, lines)
    print(f"max deviation: {_fmt(worst)}", file=sys.stderr)
    return 0 if worst < args.tolerance else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xyzring",
        description="Exactly solvable spin-1/2 xyz rings: verification, "
        "sweeps and figure data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    commands = {
        "verify": (cmd_verify, "run all invariant and oracle checks"),
        "sweep": (cmd_sweep, "closed-form observables over a (g, N) grid as CSV"),
        "figure1": (cmd_figure1, "scaled concurrence curves and their limit as CSV"),
        "figure2": (cmd_figure2, "finite-N and limiting magnetization as CSV"),
        "ed-compare": (cmd_ed_compare, "exact-diagonalization comparison table"),
    }
    for name, (fn, help_text) in commands.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--epsilon", type=int, choices=(1, -1), default=1,
                        help="sign of the field term (default +1)")
        sp.add_argument("--eta", type=int, choices=(1, -1), default=1,
                        help="sign selecting the yz coupling sector (default +1)")
        sp.add_argument("--j", type=float, default=1.0,
                        help="non-negative coupling weight (default 1)")
        sp.add_argument("--n", type=int, default=None, help="single ring size")
        sp.add_argument("--n-list", type=lambda s: [int(x) for x in s.split(",")],
                        default=None, help="comma-separated ring sizes")
        sp.add_argument("--g-min", type=float, default=None)
        sp.add_argument("--g-max", type=float, default=None)
        sp.add_argument("--g-steps", type=int, default=41,
                        help="number of grid samples between g-min and g-max")
        sp.add_argument("--output", default=None, help="output file (default stdout)")
        sp.add_argument("--tolerance", type=float, default=1e-10)
        sp.add_argument("--check", action="store_true",
                        help="enable brute-force cross-checks where available")
        sp.add_argument("--workers", type=int, default=1,
                        help="worker threads for grid evaluation")
        sp.set_defaults(func=fn)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.j < 0 or args.workers < 1:
        print("error: invalid configuration", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Commands: params, locate, coeffs, stability, mucrit, normalform, orbit,
sweep, check.  Output is deterministic JSON (17 significant digits, stable
key order) or CSV; identical invocations produce byte-identical output.

Exit codes: 0 success, 1 invalid parameters, 2 numerical non-convergence,
3 requested quantity undefined in this regime.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .equilibria import locate_series, locate_series_linear, refine_newton
from .errors import InvalidParamsError, Pr3bpError, UndefinedQuantityError
from .expansion import cubic_coeffs, quad_coeffs, series_l0_l1
from .normalform import ActionAngle, normal_form_map, orbit_reconstruct_state
from .params import SystemParams, derive_params
from .report import consistency_report, render_json
from .stability import char_roots, mu_crit_numeric, mu_crit_series

_SWEEPABLE = ("mu", "q1", "a2", "cd", "w1")
_CSV_COLUMNS = ("param", "value", "x_star", "y_star", "E", "F", "G", "D",
                "omega1", "omega2", "mu_c_series", "mu_c_numeric", "error")


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; this front end reserves 2 for
    non-convergence, so usage errors exit 1 (invalid parameters)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(1)


def _fnum(v: float) -> str:
    if v is None:
        return ""
    return format(float(v), ".17g")


def _build_parser() -> _Parser:
    parser = _Parser(prog="pr3bp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mu", type=float, default=None, help="mass ratio")
    common.add_argument("--q1", type=float, default=None,
                        help="mass reduction factor (default 1)")
    common.add_argument("--a2", type=float, default=None,
                        help="oblateness coefficient (default 0)")
    common.add_argument("--cd", type=float, default=None,
                        help="dimensionless light speed")
    common.add_argument("--w1", type=float, default=None,
                        help="direct drag coefficient (bypasses --cd)")
    common.add_argument("--branch", choices=("L4", "L5"), default="L4")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write output to a file")
    common.add_argument("--fd-step", type=float, default=None,
                        help="override the finite-difference base step")
    common.add_argument("--tol", type=float, default=None,
                        help="override the Newton tolerance")
    common.add_argument("--config", default=None,
                        help="JSON file with flag defaults (CLI overrides it)")

    for name in ("params", "locate", "coeffs", "stability", "mucrit",
                 "normalform", "check"):
        sub.add_parser(name, parents=[common])

    orbit = sub.add_parser("orbit", parents=[common])
    orbit.add_argument("--i1", type=float, default=0.0, help="mode-1 action")
    orbit.add_argument("--i2", type=float, default=0.0, help="mode-2 action")
    orbit.add_argument("--phi10", type=float, default=0.0)
    orbit.add_argument("--phi20", type=float, default=0.0)
    orbit.add_argument("--t-end", type=float, default=None,
                       help="end time (default: one long-mode period)")
    orbit.add_argument("--dt", type=float, default=0.01)

    sweep = sub.add_parser("sweep", parents=[common])
    sweep.add_argument("--param", choices=_SWEEPABLE, required=True)
    sweep.add_argument("--from", dest="from_", type=float, required=True)
    sweep.add_argument("--to", type=float, required=True)
    sweep.add_argument("--steps", type=int, required=True)

    return parser


def _apply_config(args, parser):
    """Fill in flags from --config JSON; explicit CLI flags win."""
    if not args.config:
        return
    try:
        with open(args.config, "r", encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        parser.error(f"cannot read config: {exc}")
    if not isinstance(cfg, dict):
        parser.error("config must be a JSON object of flag values")
    for key, val in cfg.items():
        attr = key.replace("-", "_")
        if attr == "from":
            attr = "from_"
        if not hasattr(args, attr):
            continue
        if getattr(args, attr) is None:
            setattr(args, attr, val)


def _system(args) -> SystemParams:
    if args.mu is None:
        raise InvalidParamsError("--mu is required (no canonical default)")
    if args.cd is None and args.w1 is None:
        raise InvalidParamsError(
            "supply --cd or --w1 explicitly; the light speed has no "
            "canonical default")
    return SystemParams(
        mu=args.mu,
        q1=1.0 if args.q1 is None else args.q1,
        a2=0.0 if args.a2 is None else args.a2,
        c_d=args.cd,
        w1_override=args.w1,
    )


def _emit(args, payload) -> str:
    if args.format == "csv":
        rows = []
        _flatten("", payload, rows)
        lines = ["key,value"]
        lines += [f"{k},{v}" for k, v in rows]
        return "\n".join(lines) + "\n"
    return render_json(payload) + "\n"


def _flatten(prefix, obj, rows):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list, tuple)):
                _flatten(f"{prefix}{k}.", v, rows)
            else:
                rows.append((f"{prefix}{k}", _csv_scalar(v)))
        return
    if isinstance(obj, (list, tuple)):
        for i, v in enumerate(obj):
            if isinstance(v, (dict, list, tuple)):
                _flatten(f"{prefix}{i}.", v, rows)
            else:
                rows.append((f"{prefix}{i}", _csv_scalar(v)))
        return
    rows.append((prefix.rstrip("."), _csv_scalar(obj)))


def _csv_scalar(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return _fnum(v)
    if isinstance(v, int):
        return str(v)
    text = str(v)
    if any(ch in text for ch in ",\"\n"):
        text = '"' + text.replace('"', '""') + '"'
    return text


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def _cmd_params(args):
    d = derive_params(_system(args))
    return {
        "mu": d.mu, "q1": d.q1, "a2": d.a2, "c_d": d.c_d,
        "w1": d.w1, "n": d.n, "eps": d.eps, "delta": d.delta,
        "gamma": d.gamma, "n_w1": d.nw1,
    }


def _cmd_locate(args):
    d = derive_params(_system(args))
    series = locate_series(d, args.branch)
    newton = refine_newton(
        d, series.xy,
        tol=1e-12 if args.tol is None else args.tol,
        fd_step=1e-6 if args.fd_step is None else args.fd_step)
    lx, ly, a, b = locate_series_linear(d)
    out = {
        "branch": args.branch,
        "series45": {"x": series.x_star, "y": series.y_star,
                     "anchor_x0": series.anchor_x0,
                     "anchor_y0": series.anchor_y0},
        "newton": {"x": newton.x_star, "y": newton.y_star,
                   "iterations": newton.iterations,
                   "residual": newton.residual},
    }
    if args.branch == "L4":
        out["series78"] = {"x": lx, "y": ly, "a": a, "b": b}
    return out


def _cmd_coeffs(args):
    d = derive_params(_system(args))
    q = quad_coeffs(d)
    t = cubic_coeffs(d)
    l0, l1 = series_l0_l1(d)
    return {
        "quad": {"E": q.e, "F": q.f, "G": q.g, "n": q.n},
        "cubic": {"T1": t.t1, "T2": t.t2, "T3": t.t3, "T4": t.t4},
        "l0": l0,
        "l1": l1,
    }


def _spectrum_dict(sp):
    return {
        "b_coeff": sp.b_coeff, "c_coeff": sp.c_coeff, "disc": sp.disc,
        "omega1": sp.omega1, "omega2": sp.omega2,
        "classification": sp.classification,
    }


def _cmd_stability(args):
    d = derive_params(_system(args))
    sp = char_roots(quad_coeffs(d))
    return {
        "spectrum": _spectrum_dict(sp),
        "stable": sp.classification == "stable",
    }


def _cmd_mucrit(args):
    d = derive_params(_system(args))
    return {
        "series": mu_crit_series(d).mu_c,
        "numeric": mu_crit_numeric(d).mu_c,
    }


def _cmd_normalform(args):
    d = derive_params(_system(args))
    nf = normal_form_map(d, branch=args.branch)
    return {
        "omega1": nf.omega1, "omega2": nf.omega2,
        "l1": nf.l1, "l2": nf.l2, "k1": nf.k1, "k2": nf.k2,
        "j13": nf.j13, "j14": nf.j14, "j21": nf.j21,
        "j22": nf.j22, "j23": nf.j23, "j24": nf.j24,
    }


def _cmd_orbit(args):
    d = derive_params(_system(args))
    nf = normal_form_map(d, branch=args.branch)
    aa0 = ActionAngle(i1=args.i1, i2=args.i2,
                      phi1=args.phi10, phi2=args.phi20)
    t_end = args.t_end if args.t_end is not None else 2.0 * math.pi / nf.omega1
    if t_end <= 0.0 or args.dt <= 0.0:
        raise Pr3bpError("need positive --t-end and --dt")
    n = int(round(t_end / args.dt))
    samples = []
    for k in range(n + 1):
        t = k * args.dt
        x, y, vx, vy = orbit_reconstruct_state(nf, aa0, t)
        samples.append((t, x, y, vx, vy))
    if args.format == "csv":
        lines = ["t,x,y,vx,vy"]
        lines += [",".join(_fnum(v) for v in row) for row in samples]
        return "\n".join(lines) + "\n"
    return {
        "samples": [
            {"t": t, "x": x, "y": y, "vx": vx, "vy": vy}
            for t, x, y, vx, vy in samples
        ],
    }


def _sweep_system(args, value) -> SystemParams:
    name = args.param
    mu = args.mu
    q1 = args.q1
    a2 = args.a2
    cd = args.cd
    w1 = args.w1
    if name == "mu":
        mu = value
    elif name == "q1":
        q1 = value
    elif name == "a2":
        a2 = value
    elif name == "cd":
        cd = value
    elif name == "w1":
        w1 = value
    if mu is None:
        raise Pr3bpError("--mu is required (or sweep it)")
    if cd is None and w1 is None:
        raise Pr3bpError("supply --cd or --w1 explicitly (or sweep one)")
    return SystemParams(mu=mu, q1=1.0 if q1 is None else q1,
                        a2=0.0 if a2 is None else a2,
                        c_d=cd, w1_override=w1)


def _cmd_sweep(args):
    if args.steps < 2:
        raise InvalidParamsError("sweep needs --steps >= 2")
    if not args.from_ < args.to:
        raise InvalidParamsError("sweep needs --from < --to")
    lines = [",".join(_CSV_COLUMNS)]
    for k in range(args.steps):
        value = args.from_ + (args.to - args.from_) * k / (args.steps - 1)
        cells = {name: "" for name in _CSV_COLUMNS}
        cells["param"] = args.param
        cells["value"] = _fnum(value)
        try:
            d = derive_params(_sweep_system(args, value))
            eq = refine_newton(d, locate_series(d, args.branch).xy)
            q = quad_coeffs(d)
            sp = char_roots(q)
            cells["x_star"] = _fnum(eq.x_star)
            cells["y_star"] = _fnum(eq.y_star)
            cells["E"] = _fnum(q.e)
            cells["F"] = _fnum(q.f)
            cells["G"] = _fnum(q.g)
            cells["D"] = _fnum(sp.disc)
            if sp.classification == "stable":
                cells["omega1"] = _fnum(sp.omega1)
                cells["omega2"] = _fnum(sp.omega2)
            cells["mu_c_series"] = _fnum(mu_crit_series(d).mu_c)
            cells["mu_c_numeric"] = _fnum(mu_crit_numeric(d).mu_c)
        except Pr3bpError as exc:
            cells["error"] = _csv_scalar(f"{type(exc).__name__}: {exc}")
        lines.append(",".join(cells[name] for name in _CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def _cmd_check(args):
    system = _system(args)
    # The oracle battery compares triangular-point quantities, which need
    # both primaries present.
    if system.mu * (1.0 - system.mu) == 0.0:
        raise InvalidParamsError(
            f"check needs both primaries massive (mu(1-mu) > 0), got mu={system.mu}")
    return consistency_report(system)


_COMMANDS = {
    "params": _cmd_params,
    "locate": _cmd_locate,
    "coeffs": _cmd_coeffs,
    "stability": _cmd_stability,
    "mucrit": _cmd_mucrit,
    "normalform": _cmd_normalform,
    "orbit": _cmd_orbit,
    "sweep": _cmd_sweep,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    _apply_config(args, parser)
    try:
        result = _COMMANDS[args.command](args)
        text = result if isinstance(result, str) else _emit(args, result)
    except Pr3bpError as exc:
        sys.stderr.write(f"pr3bp: {type(exc).__name__}: {exc}\n")
        return exc.exit_code
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

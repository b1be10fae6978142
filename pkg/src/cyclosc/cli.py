"""Command-line front end.

Subcommands: info (parameter tables and low-lying spectrum), sga (extracted
structure polynomials vs closed forms), sweep (one statistic along a line in
the z plane, CSV out), verify (invariant suites).

Exit codes: 0 success, 1 bad input, 2 verification failure, 3 numerical
trouble (truncation or quadrature).  Every error path emits a single line
starting with "error:" on stderr.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraParams, validate_params, build_fock_rep, energy
from .sga import (
    build_sga,
    extract_f_poly,
    extract_h_poly_and_casimir,
    closed_form_f,
    closed_form_h,
    closed_form_casimir,
)
from .coherent import build_cs, TruncationError
from .stats import mandel_q, quadrature_stats, squeeze_ratios, uncertainty_rhs
from .verify import run_suites, SUITES

__all__ = ["SweepSpec", "main", "run"]

_RATIO_INDEX = {"X": 0, "P": 1, "Y": 2, "Q4": 3, "x4-ratio": 2, "p4-ratio": 3}
_QUANTITIES = ("mandel-q", "var-x", "var-p") + tuple(_RATIO_INDEX)


class _Parser(argparse.ArgumentParser):
    # single-line errors, no usage dump, stable exit code
    def error(self, message):
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _parse_alpha(lam: int, text) -> list:
    if text is None:
        return [0.0] * lam
    parts = [p.strip() for p in str(text).split(",")]
    vals = []
    for i, part in enumerate(parts):
        if part == "auto" and i == len(parts) - 1:
            vals.append(-sum(vals))
        else:
            try:
                vals.append(float(part))
            except ValueError:
                raise ValueError(f"invalid alpha entry {part!r}") from None
    return vals


def _parse_complex(text: str) -> complex:
    try:
        return complex(str(text).replace(" ", ""))
    except ValueError:
        raise ValueError(f"invalid complex number {text!r}") from None


@dataclass(frozen=True)
class SweepSpec:
    """A validated sweep request: which statistic, over which z points."""

    params: AlgebraParams
    mu: int
    kind: str
    quantity: str
    points: tuple


def make_sweep_spec(args) -> SweepSpec:
    params = validate_params(args.lam, _parse_alpha(args.lam, args.alpha))
    if not 0 <= args.mu < params.lam:
        raise ValueError(f"mu must be in 0..{params.lam - 1}, got {args.mu}")
    if args.steps < 2:
        raise ValueError(f"steps must be at least 2, got {args.steps}")
    z_given = args.z_from is not None or args.z_to is not None
    r_given = args.r_from is not None or args.r_to is not None
    if z_given == r_given:
        raise ValueError("specify exactly one of --z-from/--z-to or --r-from/--r-to")
    ts = np.linspace(0.0, 1.0, args.steps)
    if z_given:
        if args.z_from is None or args.z_to is None:
            raise ValueError("both --z-from and --z-to are required")
        z0 = _parse_complex(args.z_from)
        z1 = _parse_complex(args.z_to)
        if z0 == z1:
            raise ValueError("sweep endpoints must differ")
        points = tuple(complex(z0 + (z1 - z0) * t) for t in ts)
    else:
        if args.r_from is None or args.r_to is None:
            raise ValueError("both --r-from and --r-to are required")
        if args.r_from < 0 or args.r_to < 0:
            raise ValueError("radii must be nonnegative")
        if args.r_from == args.r_to:
            raise ValueError("sweep endpoints must differ")
        ph = complex(math.cos(args.phase), math.sin(args.phase))
        points = tuple(
            complex((args.r_from + (args.r_to - args.r_from) * t) * ph) for t in ts
        )
    return SweepSpec(params, args.mu, args.photons, args.quantity, points)


def evaluate_point(spec: SweepSpec, z: complex) -> float:
    cs = build_cs(spec.params, spec.mu, z)
    fock = build_fock_rep(spec.params, cs.n_max)
    if spec.quantity == "mandel-q":
        q = mandel_q(cs, fock)
        return float("nan") if q is None else q
    if spec.quantity == "var-x":
        return quadrature_stats(cs, fock, spec.kind).var_x
    if spec.quantity == "var-p":
        return quadrature_stats(cs, fock, spec.kind).var_p
    return squeeze_ratios(cs, fock, spec.kind)[_RATIO_INDEX[spec.quantity]]


def _write_out(text: str, out) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_sweep(args) -> int:
    spec = make_sweep_spec(args)
    lines = ["z_re,z_im,abs_z,value"]
    for z in spec.points:
        val = evaluate_point(spec, z)
        lines.append(f"{z.real:.17g},{z.imag:.17g},{abs(z):.17g},{val:.17g}")
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_info(args) -> int:
    params = validate_params(args.lam, _parse_alpha(args.lam, args.alpha))
    lam = params.lam
    out = [f"lambda: {lam}"]
    out.append("alpha: " + ", ".join(f"{v:.12g}" for v in params.alpha))
    out.append("mu   alpha          beta           beta_bar       gamma")
    for mu in range(lam):
        out.append(
            f"{mu:<4d} {params.alpha[mu]:< 14.8g} {params.beta[mu]:< 14.8g} "
            f"{params.beta_bar[mu]:< 14.8g} {params.gamma[mu]:< 14.8g}"
        )
    ens = ", ".join(f"{energy(params, n):.12g}" for n in range(3 * lam))
    out.append(f"energies E_0..E_{3 * lam - 1}: {ens}")
    out.append("uncertainty products at z = 0 (dressed quadratures):")
    for mu in range(lam):
        bb = params.beta_bar
        disp = 0.5 * lam * (bb[mu + 1] + bb[mu])
        out.append(
            f"  sector {mu}: var_x = var_p = {disp:.12g}, "
            f"product = {disp * disp:.12g}, bound = {uncertainty_rhs(params, mu):.12g}"
        )
    _write_out("\n".join(out) + "\n", args.out)
    return 0


def cmd_sga(args) -> int:
    params = validate_params(args.lam, _parse_alpha(args.lam, args.alpha))
    lam = params.lam
    n_max = 3 * lam * lam + 2 * lam
    sga = build_sga(build_fock_rep(params, n_max))
    s = extract_f_poly(sga)
    poly = extract_h_poly_and_casimir(sga, s)

    if args.format == "csv":
        lines = ["kind,mu,power,value"]
        for mu in range(lam):
            for i in range(lam):
                lines.append(f"f,{mu},{i},{s[mu, i]:.17g}")
            for i in range(lam + 1):
                lines.append(f"h,{mu},{i},{poly.t[mu, i]:.17g}")
            lines.append(f"casimir,{mu},0,{poly.c[mu]:.17g}")
    else:
        lines = [f"lambda: {lam}", "alpha: " + ", ".join(f"{v:.12g}" for v in params.alpha)]
        lines.append(f"fit residuals: f {poly.f_residual.max():.3e}, h {poly.h_residual.max():.3e}")
        for mu in range(lam):
            lines.append(f"sector {mu}:")
            lines.append("  [J+,J-] coefficients (1, J0, ...): "
                         + ", ".join(f"{v:.12g}" for v in s[mu]))
            lines.append("  h coefficients (1, J0, ...):       "
                         + ", ".join(f"{v:.12g}" for v in poly.t[mu]))
            lines.append(f"  casimir: {poly.c[mu]:.12g}")

    dev = None
    cf = closed_form_f(params)
    if cf is not None:
        dev = float(np.max(np.abs(s - cf)))
        dev = max(dev, float(np.max(np.abs(poly.t - closed_form_h(params)))))
        dev = max(dev, float(np.max(np.abs(poly.c - closed_form_casimir(params)))))
        if args.format != "csv":
            lines.append(f"closed-form max deviation: {dev:.3e}")
    _write_out("\n".join(lines) + "\n", args.out)
    if dev is not None and dev > 1e-8:
        print(f"error: extracted polynomials deviate from closed forms by {dev:.3e}", file=sys.stderr)
        return 2
    return 0


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    ok, lines = run_suites(names, seed=args.seed, tol=args.tol)
    _write_out("\n".join(lines) + "\n", args.out)
    if not ok:
        print("error: verification failed", file=sys.stderr)
        return 2
    return 0


def _add_params(p) -> None:
    p.add_argument("--lambda", dest="lam", type=int, required=True,
                   help="cyclic order (integer >= 2)")
    p.add_argument("--alpha", default=None,
                   help="comma-separated deformation parameters; last entry may "
                        "be 'auto' to close the zero sum (default: all zero)")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")


def _build_parser() -> _Parser:
    parser = _Parser(prog="cyclosc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="parameter tables and low-lying spectrum")
    _add_params(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sga", help="extracted structure polynomials and casimir")
    _add_params(p)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_sga)

    p = sub.add_parser("sweep", help="sweep one statistic along a line in z")
    _add_params(p)
    p.add_argument("--mu", type=int, default=0, help="sector index")
    p.add_argument("--photons", choices=("dressed", "real"), default="dressed",
                   help="ladder pair used for quadratures")
    p.add_argument("--quantity", choices=_QUANTITIES, required=True)
    p.add_argument("--z-from", default=None, help="complex start, e.g. '-6' or '1+0.5j'")
    p.add_argument("--z-to", default=None, help="complex end")
    p.add_argument("--r-from", type=float, default=None, help="radial start (|z|)")
    p.add_argument("--r-to", type=float, default=None, help="radial end")
    p.add_argument("--phase", type=float, default=0.0, help="phase of z in radians for radial sweeps")
    p.add_argument("--steps", type=int, default=50)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--out", default=None, help="write output to this file instead of stdout")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--seed", type=int, default=12345)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except TruncationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Invariant suites (commutators, sga, cs, measure) over built-in parameter
sets plus seeded random admissible draws, and independent series-route
implementations of the expectation values used to cross-check the matrix
quadratic forms.

Every check returns a CheckResult; the CLI turns the list into a report and
an exit code.  Representations are always rebuilt through the algebra module
namespace so test hooks that patch algebra.structure_function propagate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from . import algebra
from .algebra import validate_params, random_admissible_alpha, energy
from .sga import (
    build_sga,
    extract_f_poly,
    extract_h_poly_and_casimir,
    closed_form_f,
    closed_form_h,
    closed_form_casimir,
)
from .coherent import build_cs, eigen_residual, mittag_leffler_check, normalization
from .stats import QuadratureMoments, mandel_q, quadrature_stats, uncertainty_rhs
from .measure import (
    moment_target,
    weight_lambda2,
    weight_photon,
    moment_check,
    unity_reconstruction,
    angular_offdiagonal,
)
from .specfun import bessel_i, pochhammer

__all__ = [
    "CheckResult",
    "series_number_moments",
    "series_quadrature_moments",
    "suite_commutators",
    "suite_sga",
    "suite_cs",
    "suite_measure",
    "run_suites",
    "SUITES",
]

_BUILTIN = {
    2: [[0.5, -0.5], [0.0, 0.0], [1.0, -1.0], [-0.5, 0.5]],
    3: [[0.0, 0.0, 0.0], [-0.5, 0.25, 0.25]],
    4: [[0.0] * 4, [0.3, -0.1, 0.2, -0.4]],
    5: [[0.0] * 5],
}


def _std_n_max(lam: int) -> int:
    # room for SGA residual validation at k up to 3*lam - 1 in every sector
    return 3 * lam * lam + 2 * lam


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _param_sets(seed: int, n_random: int, lams=(2, 3, 4, 5)):
    rng = np.random.default_rng(seed)
    sets = [(lam, np.asarray(al, dtype=float)) for lam in lams for al in _BUILTIN.get(lam, [])]
    for i in range(n_random):
        lam = lams[i % len(lams)]
        sets.append((lam, random_admissible_alpha(lam, rng)))
    return sets


def _tag(lam, alpha) -> str:
    return f"lam={lam} alpha={np.round(np.asarray(alpha), 6).tolist()}"


# ---------------------------------------------------------------------------
# series-route expectation values (no operator matrices involved)

def _apply_lower(params, v, kind):
    out = np.zeros_like(v)
    for n in range(1, v.size):
        f = algebra.structure_function(params, n) if kind == "dressed" else float(n)
        out[n - 1] = math.sqrt(f) * v[n]
    return out


def _apply_raise(params, v, kind):
    out = np.zeros_like(v)
    for n in range(1, v.size):
        f = algebra.structure_function(params, n) if kind == "dressed" else float(n)
        out[n] = math.sqrt(f) * v[n - 1]
    return out


def series_number_moments(params, coeffs):
    """<N>, <N^2> by direct coefficient summation."""
    mean = 0.0
    second = 0.0
    for n, c in enumerate(coeffs):
        p = (c * c.conjugate()).real
        mean += n * p
        second += n * n * p
    return mean, second


def series_quadrature_moments(params, coeffs, kind="dressed") -> QuadratureMoments:
    """Same moments as stats.quadrature_stats, evaluated by shifting the
    coefficient vector directly (one sqrt(F) factor per shift) instead of
    through operator matrices."""
    v = np.asarray(coeffs, dtype=complex)

    def apply_x(u):
        return (_apply_raise(params, u, kind) + _apply_lower(params, u, kind)) / math.sqrt(2.0)

    def apply_p(u):
        return 1j * (_apply_raise(params, u, kind) - _apply_lower(params, u, kind)) / math.sqrt(2.0)

    out = []
    for op in (apply_x, apply_p):
        mean = float(np.real(np.vdot(v, op(v))))
        w1 = op(v) - mean * v
        var = float(np.real(np.vdot(w1, w1)))
        w2 = op(w1) - mean * w1
        m4 = float(np.real(np.vdot(w2, w2)))
        out.append((mean, var, m4))
    (mx, vx, x4), (mp, vp, p4) = out
    return QuadratureMoments(mx, mp, vx, vp, x4, p4)


# ---------------------------------------------------------------------------
# suites

def suite_commutators(seed: int = 12345, tol: float = 1e-8, n_random: int = 20):
    results = []
    for lam, alpha in _param_sets(seed, n_random):
        params = validate_params(lam, alpha)
        n_max = _std_n_max(lam)
        fock = algebra.build_fock_rep(params, n_max)
        dim = n_max + 1
        tag = _tag(lam, alpha)

        comm = fock.a @ fock.a_dag - fock.a_dag @ fock.a
        target = np.eye(dim) + sum(
            params.alpha[mu] * fock.projectors[mu] for mu in range(lam)
        )
        dev = float(np.max(np.abs((comm - target)[:n_max, :n_max])))
        results.append(CheckResult("commutator-identity", dev < min(tol, 1e-12), f"{tag} dev={dev:.3e}"))

        dev = max(
            float(np.max(np.abs(fock.a_dag @ fock.projectors[mu] - fock.projectors[(mu + 1) % lam] @ fock.a_dag)))
            for mu in range(lam)
        )
        results.append(CheckResult("projector-shift", dev == 0.0, f"{tag} dev={dev:.3e}"))

        dev = float(np.max(np.abs(sum(fock.projectors) - np.eye(dim))))
        for mu in range(lam):
            for nu in range(lam):
                expect = fock.projectors[mu] if mu == nu else 0.0
                dev = max(dev, float(np.max(np.abs(fock.projectors[mu] @ fock.projectors[nu] - expect))))
        results.append(CheckResult("projector-algebra", dev == 0.0, f"{tag} dev={dev:.3e}"))

        dev = float(np.max(np.abs((fock.n_op @ fock.a_dag - fock.a_dag @ fock.n_op - fock.a_dag)[:n_max, :n_max])))
        dev = max(dev, float(np.max(np.abs((fock.n_op @ fock.a - fock.a @ fock.n_op + fock.a)[:n_max, :n_max]))))
        results.append(CheckResult("number-commutators", dev < 1e-12, f"{tag} dev={dev:.3e}"))

        fs = [algebra.structure_function(params, n) for n in range(1, n_max + 1)]
        results.append(CheckResult("structure-positivity", min(fs) > 0.0, f"{tag} min F={min(fs):.3e}"))

        dev = 0.0
        for n in range(1, dim):
            dev = max(dev, abs(fock.a[n - 1, n] - fock.b[n - 1, n] * math.sqrt(algebra.structure_function(params, n) / n)))
        results.append(CheckResult("dressed-ladder-relation", dev < 1e-13, f"{tag} dev={dev:.3e}"))

        diag = np.diag(fock.a_dag @ fock.a)
        exact = np.array([fock.a[n - 1, n] ** 2 if n else 0.0 for n in range(dim)])
        results.append(
            CheckResult("number-diagonal", bool(np.array_equal(diag, exact)), f"{tag}")
        )

        dev = max(
            abs(fock.h0[n, n] - energy(params, n)) for n in range(n_max)
        )
        results.append(CheckResult("energy-diagonal", dev < 1e-12, f"{tag} dev={dev:.3e}"))

        if lam == 2:
            kmat = np.diag((-1.0) ** np.arange(dim))
            dev = float(np.max(np.abs(kmat @ fock.a_dag + fock.a_dag @ kmat)))
            results.append(CheckResult("parity-anticommutation", dev == 0.0, f"{tag} dev={dev:.3e}"))
            dev = float(np.max(np.abs((comm - np.eye(dim) - params.alpha[0] * kmat)[:n_max, :n_max])))
            results.append(CheckResult("parity-commutator-form", dev < 1e-12, f"{tag} dev={dev:.3e}"))
    return results


def suite_sga(seed: int = 12345, tol: float = 1e-8, n_random: int = 20):
    results = []
    for lam, alpha in _param_sets(seed, n_random):
        params = validate_params(lam, alpha)
        n_max = _std_n_max(lam)
        fock = algebra.build_fock_rep(params, n_max)
        sga = build_sga(fock)
        tag = _tag(lam, alpha)

        dev = float(np.max(np.abs(
            (sga.j_zero @ sga.j_plus - sga.j_plus @ sga.j_zero - sga.j_plus)[: n_max - lam, : n_max - lam]
        )))
        results.append(CheckResult("j0-ladder-commutator", dev < 1e-10, f"{tag} dev={dev:.3e}"))

        dev = max(float(np.linalg.norm(sga.j_minus[:, mu])) for mu in range(lam))
        results.append(CheckResult("jminus-annihilates-sector-floor", dev == 0.0, f"{tag} dev={dev:.3e}"))

        try:
            s = extract_f_poly(sga)
            poly = extract_h_poly_and_casimir(sga, s)
        except (RuntimeError, ValueError) as exc:
            results.append(CheckResult("polynomial-extraction", False, f"{tag} {exc}"))
            continue
        results.append(CheckResult(
            "polynomial-extraction", True,
            f"{tag} f_resid={poly.f_residual.max():.3e} h_resid={poly.h_residual.max():.3e}",
        ))

        # Casimir constant across k = 0..3 per sector, from the matrices
        g = np.diag(sga.j_minus @ sga.j_plus)
        dev = 0.0
        for mu in range(lam):
            vals = []
            scale = 1.0
            for k in range(4):
                n = k * lam + mu
                j0 = energy(params, n) / lam
                vals.append(g[n] + float(np.polynomial.polynomial.polyval(j0, poly.t[mu])))
                scale = max(scale, abs(g[n]))
            dev = max(dev, float(np.std(vals)) / scale)
        results.append(CheckResult("casimir-constancy", dev < 1e-9, f"{tag} rel_sd={dev:.3e}"))

        dev = max(
            abs(sga.j_zero[mu, mu] - (mu + params.gamma[mu] + 0.5) / lam) for mu in range(lam)
        )
        results.append(CheckResult("lowest-j0-eigenvalue", dev < 1e-12, f"{tag} dev={dev:.3e}"))

        cf = closed_form_f(params)
        if cf is not None:
            dev = float(np.max(np.abs(s - cf)))
            dev = max(dev, float(np.max(np.abs(poly.t - closed_form_h(params)))))
            dev = max(dev, float(np.max(np.abs(poly.c - closed_form_casimir(params)))))
            results.append(CheckResult("closed-form-match", dev < 1e-9, f"{tag} dev={dev:.3e}"))

        if np.allclose(params.alpha, 0.0):
            jb_p = np.linalg.matrix_power(fock.b_dag, lam) / lam
            jb_m = np.linalg.matrix_power(fock.b, lam) / lam
            cb = np.diag(jb_p @ jb_m - jb_m @ jb_p)
            dev = 0.0
            for mu in range(lam):
                for k in range(2 * lam):
                    n = k * lam + mu
                    if n + lam > n_max:
                        break
                    j0 = energy(params, n) / lam
                    fit = float(np.polynomial.polynomial.polyval(j0, s[mu]))
                    dev = max(dev, abs(cb[n] - fit) / max(1.0, abs(cb[n])))
            results.append(CheckResult("undeformed-generator-consistency", dev < 1e-9, f"{tag} dev={dev:.3e}"))
    return results


def _brute_norm(params, mu, z):
    """Partial sums of sum_k |d_k|^2 via the term-ratio recurrence (no
    lgamma, no hypergeometric evaluator)."""
    lam = params.lam
    bb = params.beta_bar
    y = abs(z) ** 2 / lam ** (lam - 2)
    total = 1.0
    term = 1.0
    for k in range(2000):
        r = y / (k + 1.0)
        for nu in range(1, mu + 1):
            r /= bb[nu] + 1.0 + k
        for nup in range(mu + 1, lam):
            r /= bb[nup] + k
        term *= r
        total += term
        if term < 1e-17 * total:
            return total
    raise RuntimeError("norm series did not converge")


def suite_cs(seed: int = 12345, tol: float = 1e-8, n_random: int = 20):
    results = []
    rng = np.random.default_rng(seed)
    sets = _param_sets(seed, n_random, lams=(2, 3, 4))
    for idx, (lam, alpha) in enumerate(sets):
        params = validate_params(lam, alpha)
        tag = _tag(lam, alpha)
        builtin = idx < sum(len(v) for l, v in _BUILTIN.items() if l in (2, 3, 4))
        mus = range(lam) if builtin else [int(rng.integers(0, lam))]
        zs = [0.5 + 0j, 2 + 1j, -3 + 0j] if builtin else [
            complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        ]
        for mu in mus:
            for z in zs:
                cs = build_cs(params, mu, z)
                fock = algebra.build_fock_rep(params, cs.n_max)
                sga = build_sga(fock)
                ztag = f"{tag} mu={mu} z={z}"

                res = eigen_residual(cs, sga)
                results.append(CheckResult("cs-eigen-residual", res < 1e-10, f"{ztag} resid={res:.3e}"))

                w = np.linalg.matrix_power(fock.a, lam) @ cs.coeffs - lam * z * cs.coeffs
                w[cs.n_max - lam + 1:] = 0.0
                res2 = float(np.linalg.norm(w) / lam / max(abs(z), 1.0))
                results.append(CheckResult("cs-eigen-equivalent-form", abs(res2 - res) < 1e-12, f"{ztag}"))

                dev = abs(float(np.linalg.norm(cs.coeffs)) - 1.0)
                results.append(CheckResult("cs-unit-norm", dev <= 1e-12 + cs.tail_bound, f"{ztag} dev={dev:.3e}"))

                dev = abs(_brute_norm(params, mu, z) - cs.norm_factor) / cs.norm_factor
                results.append(CheckResult("cs-norm-crosscheck", dev < 1e-11, f"{ztag} rel={dev:.3e}"))

                ok = cs.coeffs[mu].imag == 0.0 and cs.coeffs[mu].real > 0
                k_probe = min(3, (cs.n_max - mu) // lam)
                expect = cmath.phase(z) * k_probe
                got = cmath.phase(cs.coeffs[k_probe * lam + mu])
                ok = ok and abs(cmath.exp(1j * (got - expect)) - 1.0) < 1e-10
                results.append(CheckResult("cs-phase-convention", ok, ztag))

                mm = quadrature_stats(cs, fock, "dressed")
                ss = series_quadrature_moments(params, cs.coeffs, "dressed")
                dev = max(
                    abs(mm.mean_x - ss.mean_x), abs(mm.mean_p - ss.mean_p),
                    abs(mm.var_x - ss.var_x), abs(mm.var_p - ss.var_p),
                    abs(mm.central_x4 - ss.central_x4), abs(mm.central_p4 - ss.central_p4),
                )
                p = np.abs(cs.coeffs) ** 2
                mean_n = float(np.dot(p, np.arange(p.size)))
                sn, sn2 = series_number_moments(params, cs.coeffs)
                dev = max(dev, abs(mean_n - sn))
                results.append(CheckResult("dual-route-expectations", dev < 1e-11, f"{ztag} dev={dev:.3e}"))

                prod = mm.var_x * mm.var_p
                rhs = uncertainty_rhs(params, mu)
                results.append(CheckResult("uncertainty-product", prod >= rhs - 1e-10, f"{ztag} prod={prod:.6g} rhs={rhs:.6g}"))

                if lam == 2:
                    nu = params.beta_bar[1] - 1.0 + mu
                    y = abs(z) ** 2
                    ref = math.gamma(nu + 1.0) * y ** (-nu / 2.0) * bessel_i(nu, 2.0 * math.sqrt(y))
                    dev = abs(ref - cs.norm_factor) / cs.norm_factor
                    results.append(CheckResult("cs-bessel-normalization", dev < 1e-10, f"{ztag} rel={dev:.3e}"))

                if np.allclose(params.alpha, 0.0):
                    dev = mittag_leffler_check(params, mu, z, n_max=cs.n_max)
                    results.append(CheckResult("cs-mittag-leffler-form", dev < 1e-12, f"{ztag} dev={dev:.3e}"))

        # per-parameter (z-independent) checks
        cs0 = build_cs(params, 0, 0.8 + 0.3j)
        cs1 = build_cs(params, 1, 0.8 + 0.3j, n_max=cs0.n_max)
        dot = abs(complex(np.vdot(cs0.coeffs, cs1.coeffs)))
        results.append(CheckResult("cs-sector-orthogonality", dot == 0.0, f"{tag} overlap={dot:.3e}"))

        base = build_cs(params, 0, 1.1 - 0.6j)
        near = build_cs(params, 0, 1.1 - 0.6j + 1e-6, n_max=base.n_max)
        dev = float(np.linalg.norm(near.coeffs - base.coeffs))
        results.append(CheckResult("cs-label-continuity", dev < 1e-4, f"{tag} step={dev:.3e}"))

        mu = 0 if builtin else int(rng.integers(0, lam))
        z0 = build_cs(params, mu, 0.0)
        fock0 = algebra.build_fock_rep(params, z0.n_max)
        m0 = quadrature_stats(z0, fock0, "dressed")
        bb = params.beta_bar
        want = (lam / 2.0) * (bb[mu + 1] + bb[mu])
        dev = max(abs(m0.var_x - want), abs(m0.var_p - want))
        results.append(CheckResult("vacuum-dispersions", dev < 1e-12, f"{tag} mu={mu} dev={dev:.3e}"))
        rhs = uncertainty_rhs(params, mu)
        prod = m0.var_x * m0.var_p
        if mu == 0:
            ok = abs(prod - rhs) < 1e-12
        else:
            ok = prod - rhs >= 1e-6
        results.append(CheckResult("vacuum-uncertainty-floor", ok, f"{tag} mu={mu} prod={prod:.6g} rhs={rhs:.6g}"))
    return results


def suite_measure(seed: int = 12345, tol: float = 1e-8, n_random: int = 20):
    results = []
    for a0 in (-0.5, 0.0, 0.5, 2.0):
        params = validate_params(2, [a0, -a0])
        for mu in (0, 1):
            worst = 0.0
            for k in range(7):
                tgt = moment_target(params, mu, k)
                _, rel = moment_check(lambda y: weight_lambda2(params, mu, y), mu, k, tgt)
                worst = max(worst, rel)
            results.append(CheckResult(
                "bessel-weight-moments", worst < tol, f"alpha0={a0} mu={mu} worst_rel={worst:.3e}"
            ))
    rng = np.random.default_rng(seed)
    for _ in range(n_random):
        alpha = random_admissible_alpha(2, rng)
        params = validate_params(2, alpha)
        worst = 0.0
        for mu in (0, 1):
            for k in (0, 2, 5):
                tgt = moment_target(params, mu, k)
                _, rel = moment_check(lambda y: weight_lambda2(params, mu, y), mu, k, tgt)
                worst = max(worst, rel)
        results.append(CheckResult(
            "bessel-weight-moments-random", worst < tol, f"{_tag(2, alpha)} worst_rel={worst:.3e}"
        ))
    for lam in (2, 3, 4):
        params = validate_params(lam, [0.0] * lam)
        worst = 0.0
        for mu in range(lam):
            for k in range(7):
                tgt = moment_target(params, mu, k)
                _, rel = moment_check(lambda y: weight_photon(lam, mu, y), mu, k, tgt)
                worst = max(worst, rel)
        results.append(CheckResult("photon-weight-moments", worst < tol, f"lam={lam} worst_rel={worst:.3e}"))

    params = validate_params(2, [0.0, 0.0])
    dev = max(
        abs(weight_lambda2(params, mu, y) - weight_photon(2, mu, y))
        for mu in (0, 1)
        for y in (0.05, 0.3, 1.0, 2.7, 9.0)
    )
    results.append(CheckResult("weight-forms-agree", dev < 1e-10, f"dev={dev:.3e}"))

    params = validate_params(2, [0.5, -0.5])
    entries = unity_reconstruction(params, "lambda2", 5)
    dev = float(np.max(np.abs(entries - 1.0)))
    results.append(CheckResult("unity-diagonal-lambda2", dev < 1e-7, f"alpha0=0.5 dev={dev:.3e}"))
    params3 = validate_params(3, [0.0] * 3)
    entries = unity_reconstruction(params3, "photon", 4)
    dev = float(np.max(np.abs(entries - 1.0)))
    results.append(CheckResult("unity-diagonal-photon", dev < 1e-7, f"lam=3 dev={dev:.3e}"))

    dev = angular_offdiagonal(params, 0, 1.2)
    results.append(CheckResult("angular-offdiagonal", dev < 1e-12, f"lam=2 dev={dev:.3e}"))
    dev = angular_offdiagonal(params3, 1, 1.0)
    results.append(CheckResult("angular-offdiagonal", dev < 1e-12, f"lam=3 dev={dev:.3e}"))

    tgt = moment_target(params3, 0, 3)
    _, rel = moment_check(lambda y: 1.01 * weight_photon(3, 0, y), 0, 3, tgt)
    results.append(CheckResult("scaled-weight-detected", 0.005 < rel < 0.02, f"rel={rel:.3e}"))
    return results


SUITES = {
    "commutators": suite_commutators,
    "sga": suite_sga,
    "cs": suite_cs,
    "measure": suite_measure,
}


def run_suites(names, seed: int = 12345, tol: float = 1e-8, n_random: int = 20):
    """Run the named suites; returns (all_ok, report_lines)."""
    lines = [f"seed: {seed}", f"tol: {tol:g}"]
    ok = True
    for name in names:
        results = SUITES[name](seed=seed, tol=tol, n_random=n_random)
        passed = sum(r.ok for r in results)
        for r in results:
            if not r.ok:
                lines.append(f"FAIL [{name}] {r.name}: {r.detail}")
                ok = False
        lines.append(f"suite {name}: {passed}/{len(results)} checks passed")
    return ok, lines

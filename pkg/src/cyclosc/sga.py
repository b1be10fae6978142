"""Spectrum-generating algebra of the graded oscillator.

J_+ = (a†)^lambda / lambda, J_- = a^lambda / lambda, J_0 = h0 / lambda close a
polynomial deformation of su(1,1):

    [J_0, J_±] = ±J_±,      [J_+, J_-] = f(J_0, P_mu),

with f of degree lambda-1 in J_0 and sector-dependent coefficients.  The
Casimir C = J_- J_+ + h(J_0, P_mu) = J_+ J_- + h - f is constant on each
sector, with h of degree lambda.  This module extracts f, h, and the Casimir
eigenvalues numerically by exact interpolation on interior eigenvalues, and
provides the lambda = 2, 3 closed forms for golden comparisons.

The constant term of h is fixed to zero (any constant can be traded between
h and the Casimir eigenvalues); both closed-form cases below share that
normalization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import FockRep, AlgebraParams, energy

__all__ = [
    "SgaRep",
    "SgaPolynomials",
    "build_sga",
    "extract_f_poly",
    "extract_h_poly_and_casimir",
    "closed_form_f",
    "closed_form_h",
    "closed_form_casimir",
]


@dataclass(frozen=True)
class SgaRep:
    fock: FockRep
    j_plus: np.ndarray
    j_minus: np.ndarray
    j_zero: np.ndarray


@dataclass(frozen=True)
class SgaPolynomials:
    """Fitted coefficients, ascending powers of J_0.

    s[mu][i] — coefficient of J_0^i in f on sector mu (degree lambda-1),
    t[mu][i] — coefficient of J_0^i in h on sector mu (degree lambda, t[mu][0] = 0),
    c[mu]    — Casimir eigenvalue on sector mu.
    f_residual/h_residual — worst deviation at the extra interior validation
    nodes (beyond the interpolation nodes).
    """

    s: np.ndarray
    t: np.ndarray
    c: np.ndarray
    f_residual: np.ndarray
    h_residual: np.ndarray


def build_sga(fock: FockRep) -> SgaRep:
    """Form J_± and J_0 from a Fock representation (n_max >= 4*lambda)."""
    lam = fock.params.lam
    if fock.n_max < 4 * lam:
        raise ValueError(
            f"n_max = {fock.n_max} too small for SGA extraction: need >= {4 * lam}"
        )
    j_plus = np.linalg.matrix_power(fock.a_dag, lam) / lam
    j_minus = np.linalg.matrix_power(fock.a, lam) / lam
    j_zero = fock.h0 / lam
    return SgaRep(fock, j_plus, j_minus, j_zero)


def _interp_monomial(xs, ys) -> np.ndarray:
    """Newton divided-difference interpolation through (xs, ys), expanded to
    monomial coefficients in ascending powers.  Degrees here are tiny
    (<= lambda), so the expansion is well conditioned."""
    xs = np.asarray(xs, dtype=float)
    n = xs.size
    coef = np.asarray(ys, dtype=float).copy()
    for j in range(1, n):
        coef[j:n] = (coef[j:n] - coef[j - 1:n - 1]) / (xs[j:n] - xs[0:n - j])
    mono = np.zeros(n)
    mono[0] = coef[n - 1]
    deg = 0
    for i in range(n - 2, -1, -1):
        shifted = np.zeros(n)
        shifted[1:deg + 2] = mono[0:deg + 1]
        shifted[0:deg + 1] -= xs[i] * mono[0:deg + 1]
        shifted[0] += coef[i]
        mono = shifted
        deg += 1
    return mono


def _peval(mono, x: float) -> float:
    return float(np.polynomial.polynomial.polyval(x, mono))


def _j0_eigenvalue(params: AlgebraParams, n: int) -> float:
    return energy(params, n) / params.lam


def extract_f_poly(sga: SgaRep) -> np.ndarray:
    """Fit, per sector, the degree-(lambda-1) polynomial with
    [J_+, J_-] = f(J_0), interpolating at the lambda smallest interior levels
    and validating the fit at every further interior level up to k = 3*lambda-1.

    Returns the (lambda, lambda) coefficient array s.  A relative residual
    above 1e-8 at a validation node means the commutator is not polynomial of
    the expected degree and raises (implementation-bug signal).
    """
    s, _ = _fit_f(sga)
    return s


def _fit_f(sga: SgaRep):
    fock = sga.fock
    params = fock.params
    lam = params.lam
    n_max = fock.n_max
    comm_diag = np.diag(sga.j_plus @ sga.j_minus - sga.j_minus @ sga.j_plus)
    s = np.zeros((lam, lam))
    resid = np.zeros(lam)
    for mu in range(lam):
        # commutator diagonal is uncontaminated only where n + lam <= n_max
        k_avail = (n_max - lam - mu) // lam
        if k_avail < lam - 1:
            raise ValueError(
                f"n_max = {n_max} leaves too few interior levels in sector {mu} "
                f"to fit f (need k up to {lam - 1}, have {k_avail})"
            )
        ns = np.arange(lam) * lam + mu
        xs = [_j0_eigenvalue(params, n) for n in ns]
        mono = _interp_monomial(xs, comm_diag[ns])
        worst = 0.0
        for k in range(lam, min(3 * lam - 1, k_avail) + 1):
            n = k * lam + mu
            scale = max(1.0, abs(comm_diag[n]))
            worst = max(worst, abs(_peval(mono, _j0_eigenvalue(params, n)) - comm_diag[n]) / scale)
        if worst >= 1e-8:
            raise RuntimeError(
                f"[J_+, J_-] is not a degree-{lam - 1} polynomial in J_0 on "
                f"sector {mu} (validation residual {worst:.3e})"
            )
        s[mu] = mono
        resid[mu] = worst
    return s, resid


def extract_h_poly_and_casimir(sga: SgaRep, s: np.ndarray) -> SgaPolynomials:
    """Fit, per sector, the degree-lambda polynomial h with J_- J_+ + h(J_0)
    constant, pinning h(0) = 0 so the constant is the Casimir eigenvalue c_mu.

    Validates constancy at every further interior level up to k = 3*lambda-1
    and cross-checks the second Casimir form J_+ J_- + h - f at the same
    levels, both to 1e-8 relative to the local magnitude.
    """
    fock = sga.fock
    params = fock.params
    lam = params.lam
    n_max = fock.n_max
    g_diag = np.diag(sga.j_minus @ sga.j_plus)       # valid for n + lam <= n_max
    g2_diag = np.diag(sga.j_plus @ sga.j_minus)      # valid for all n <= n_max
    _, f_resid = _fit_f(sga)
    t = np.zeros((lam, lam + 1))
    c = np.zeros(lam)
    h_resid = np.zeros(lam)
    for mu in range(lam):
        k_avail = (n_max - lam - mu) // lam
        if k_avail < lam:
            raise ValueError(
                f"n_max = {n_max} leaves too few interior levels in sector {mu} "
                f"to fit h (need k up to {lam}, have {k_avail})"
            )
        ns = np.arange(lam + 1) * lam + mu
        xs = [_j0_eigenvalue(params, n) for n in ns]
        mono_g = _interp_monomial(xs, g_diag[ns])    # J_- J_+ eigenvalue as poly in j0
        c[mu] = mono_g[0]
        t[mu, 1:] = -mono_g[1:]
        worst = 0.0
        for k in range(0, min(3 * lam - 1, k_avail) + 1):
            n = k * lam + mu
            j0 = _j0_eigenvalue(params, n)
            h_val = _peval(t[mu], j0)
            scale = max(1.0, abs(g_diag[n]))
            worst = max(worst, abs(g_diag[n] + h_val - c[mu]) / scale)
            second = g2_diag[n] + h_val - _peval(s[mu], j0)
            worst = max(worst, abs(second - c[mu]) / scale)
        if worst >= 1e-8:
            raise RuntimeError(
                f"J_- J_+ + h(J_0) is not constant on sector {mu} "
                f"(worst deviation {worst:.3e})"
            )
        h_resid[mu] = worst
    return SgaPolynomials(np.asarray(s, dtype=float), t, c, f_resid, h_resid)


def closed_form_f(params: AlgebraParams):
    """Closed-form s coefficients for lambda in {2, 3}; None otherwise.

    lambda = 2: f = -2 J_0.
    lambda = 3: f = -9 J_0^2 - (alpha_mu + 2 alpha_{mu+1}) J_0
                    - (1 + alpha_mu)(5 - alpha_mu)/12,
    with the index mu+1 taken mod 3.
    """
    lam = params.lam
    al = params.alpha
    if lam == 2:
        return np.array([[0.0, -2.0], [0.0, -2.0]])
    if lam == 3:
        s = np.zeros((3, 3))
        for mu in range(3):
            a0 = al[mu]
            a1 = al[(mu + 1) % 3]
            s[mu] = [-(1 + a0) * (5 - a0) / 12.0, -(a0 + 2 * a1), -9.0]
        return s
    return None


def closed_form_h(params: AlgebraParams):
    """Closed-form t coefficients for lambda in {2, 3}; None otherwise.

    lambda = 2: h = -J_0 (J_0 + 1).
    lambda = 3: h = -3 J_0^3 - (9 + alpha_mu + 2 alpha_{mu+1}) J_0^2 / 2
                    - (23 + 10 alpha_mu + 12 alpha_{mu+1} - alpha_mu^2) J_0 / 12.
    """
    lam = params.lam
    al = params.alpha
    if lam == 2:
        return np.array([[0.0, -1.0, -1.0], [0.0, -1.0, -1.0]])
    if lam == 3:
        t = np.zeros((3, 4))
        for mu in range(3):
            a0 = al[mu]
            a1 = al[(mu + 1) % 3]
            t[mu] = [
                0.0,
                -(23 + 10 * a0 + 12 * a1 - a0 * a0) / 12.0,
                -(9 + a0 + 2 * a1) / 2.0,
                -3.0,
            ]
        return t
    return None


def closed_form_casimir(params: AlgebraParams):
    """Closed-form Casimir eigenvalues for lambda in {2, 3}; None otherwise.

    lambda = 2: c_mu = (1 + alpha_mu)(3 - alpha_mu)/16.
    lambda = 3: c_mu = (1 + alpha_mu)(5 - alpha_mu)(3 + alpha_mu + 2 alpha_{mu+1})/72.
    """
    lam = params.lam
    al = params.alpha
    if lam == 2:
        return np.array([(1 + al[mu]) * (3 - al[mu]) / 16.0 for mu in range(2)])
    if lam == 3:
        return np.array(
            [
                (1 + al[mu]) * (5 - al[mu]) * (3 + al[mu] + 2 * al[(mu + 1) % 3]) / 72.0
                for mu in range(3)
            ]
        )
    return None

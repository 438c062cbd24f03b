"""Airy function Ai, its derivative, and the integrated Airy function Ai1.

Evaluation strategy for Ai (validated against an extended-precision series
oracle in the test suite):

* x in [-8, 4]: Maclaurin series summed in 80-bit extended precision.
  With Ai = Ai(0) f + Ai'(0) g, where f and g solve y'' = x y with
  (f, f')(0) = (1, 0) and (g, g')(0) = (0, 1).
* x in (4, 9]: Taylor steps off a cached anchor table.  The anchors are
  computed once in exact rational arithmetic (for x > 0 the series of f
  and g have positive terms only, so `fractions.Fraction` sums them
  exactly; the single cancellation Ai(0) f - |Ai'(0)| g happens with
  40-digit rational constants).  Naive double/extended summation loses up
  to all digits here because Ai decays like e^{-zeta} while the series
  terms grow like e^{+zeta}, zeta = (2/3) x^{3/2}.
* x > 9 and x < -8: standard asymptotic expansions, truncated at the
  smallest term (error ~ e^{-2 zeta}, below double rounding).

Ai1(xi) = int_xi^inf Ai(u) du uses quadrature anchored at cached unit-panel
antiderivative values on [-15, 15] and asymptotic series (obtained from the
Ai expansions by substituting zeta and integrating by parts repeatedly)
outside, where their optimal-truncation error e^{-zeta} is below rounding.
Ai1(0) = 1/3, Ai1(-inf) = 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .quadrature import gauss_legendre

__all__ = ["airy_ai", "airy_ai_prime", "airy_ai_complex", "airy_ai_prime_complex",
           "airy_integrated", "AIRY_AI_0", "AIRY_AIP_0"]

# Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3), 40 digits
_AI0_DIGITS = "3550280538878172392600631860041831763980"
_AIP0_DIGITS = "2588194037928067984051835601892039634793"
AIRY_AI_0 = float("0." + _AI0_DIGITS)
AIRY_AIP_0 = -float("0." + _AIP0_DIGITS)

_LD = np.longdouble
_INV_2SQRTPI = 0.5 / math.sqrt(math.pi)
_INV_SQRTPI = 1.0 / math.sqrt(math.pi)

_NEG_SPLIT = -8.0    # below: oscillatory asymptotics
_GAP_LO = 4.0        # Maclaurin up to here
_GAP_HI = 9.0        # anchored Taylor on (4, 9]; decaying asymptotics beyond
_ANCHOR_STEP = 0.2


# ----------------------------------------------------------------------
# Maclaurin series of the ODE basis f, g.
# ----------------------------------------------------------------------

def _series_fg(x, dtype):
    """Values (f, g, f', g') of the two y'' = x y basis solutions."""
    x = np.asarray(x, dtype=dtype)
    x3 = x * x * x
    f = np.ones_like(x)
    g = x.copy()
    fp = np.zeros_like(x)
    gp = np.ones_like(x)
    tf = np.ones_like(x)  # a_k x^{3k}
    tg = x.copy()         # b_k x^{3k+1}
    x2 = x * x
    for k in range(1, 240):
        fp = fp + tf * x2 / (3 * k - 1)        # a_k 3k x^{3k-1}
        gp = gp + tg * x2 / (3 * k)            # b_k (3k+1) x^{3k}
        tf = tf * x3 / ((3 * k) * (3 * k - 1))
        tg = tg * x3 / ((3 * k + 1) * (3 * k))
        f = f + tf
        g = g + tg
        if np.all(np.abs(tf) + np.abs(tg) < 1e-24 * (np.abs(f) + np.abs(g))):
            break
    return f, g, fp, gp


def _ai_series(x):
    f, g, fp, gp = _series_fg(x, _LD)
    ai = _LD(AIRY_AI_0) * f + _LD(AIRY_AIP_0) * g
    aip = _LD(AIRY_AI_0) * fp + _LD(AIRY_AIP_0) * gp
    return np.asarray(ai, dtype=float), np.asarray(aip, dtype=float)


def _ai_series_complex(z):
    f, g, fp, gp = _series_fg(z, np.clongdouble)
    ai = np.clongdouble(AIRY_AI_0) * f + np.clongdouble(AIRY_AIP_0) * g
    aip = np.clongdouble(AIRY_AI_0) * fp + np.clongdouble(AIRY_AIP_0) * gp
    return np.asarray(ai, dtype=complex), np.asarray(aip, dtype=complex)


# ----------------------------------------------------------------------
# Exact-rational anchors in the cancellation gap.
# ----------------------------------------------------------------------

@lru_cache(maxsize=1)
def _gap_anchors():
    """(Ai, Ai') at x = 4.0, 4.2, ..., 9.0, exact-rational construction."""
    c_ai = Fraction(int(_AI0_DIGITS), 10 ** len(_AI0_DIGITS))
    c_aip = -Fraction(int(_AIP0_DIGITS), 10 ** len(_AIP0_DIGITS))
    xs, ai, aip = [], [], []
    n_anchors = int(round((_GAP_HI - _GAP_LO) / _ANCHOR_STEP)) + 1
    for i in range(n_anchors):
        x0 = Fraction(int(round((_GAP_LO + i * _ANCHOR_STEP) * 5)), 5)
        x3 = x0 ** 3
        f = tf = Fraction(1)
        g = tg = x0
        fp = Fraction(0)
        gp = Fraction(1)
        k = 1
        while True:
            tf_new = tf * x3 / ((3 * k) * (3 * k - 1))
            tg_new = tg * x3 / ((3 * k + 1) * (3 * k))
            f += tf_new
            g += tg_new
            fp += tf_new * (3 * k) / x0
            gp += tg_new * (3 * k + 1) / x0
            if tf_new < Fraction(1, 10 ** 50) * f and tg_new < Fraction(1, 10 ** 50) * g:
                break
            tf, tg = tf_new, tg_new
            k += 1
        xs.append(float(x0))
        ai.append(float(c_ai * f + c_aip * g))
        aip.append(float(c_ai * fp + c_aip * gp))
    return np.array(xs), np.array(ai), np.array(aip)


def _taylor_from_anchor(z, n_terms: int = 52):
    """Taylor evaluation of (Ai, Ai') off the nearest gap anchor.

    Valid when Re z is in (4, 9]; the step away from the anchor must stay
    within the contamination-safe radius (|Im z| <= 2.5 in practice).
    """
    xs, ai0, aip0 = _gap_anchors()
    z = np.asarray(z)
    idx = np.clip(np.round((np.real(z) - _GAP_LO) / _ANCHOR_STEP).astype(int),
                  0, len(xs) - 1)
    x0 = xs[idx]
    h = z - x0
    # c_{n+2} = (x0 c_n + c_{n-1}) / ((n+1)(n+2)), Taylor coefficients of
    # the solution of y'' = (x0 + h) y around h = 0.
    c_prev = ai0[idx].astype(z.dtype)      # c_0
    c_cur = aip0[idx].astype(z.dtype)      # c_1
    val = c_prev + c_cur * h
    der = c_cur.copy()
    hn = h.copy()                          # h^1
    c_list = [c_prev, c_cur]
    for n in range(0, n_terms):
        c_next = (x0 * c_list[n] + (c_list[n - 1] if n >= 1 else 0.0)) / ((n + 1) * (n + 2))
        c_list.append(c_next)
        der = der + c_next * (n + 2) * hn
        hn = hn * h
        val = val + c_next * hn
    return val, der


# ----------------------------------------------------------------------
# Asymptotic expansions; u_k, v_k are the classical Airy coefficients.
# ----------------------------------------------------------------------

@lru_cache(maxsize=1)
def _uv_coefficients(n_max: int = 48):
    u = [1.0]
    v = [1.0]
    for k in range(1, n_max):
        uk = u[-1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
        u.append(uk)
        v.append(uk * (6 * k + 1) / (6 * k - 1))
    return np.array(u), np.array(v)


def _asymptotic_sum(coeff, inv_zeta):
    """Sum coeff[n] * inv_zeta^n, truncated per element at the smallest
    term (optimal truncation of an asymptotic series)."""
    inv_zeta = np.atleast_1d(inv_zeta)
    powers = inv_zeta[None, :] ** np.arange(len(coeff))[:, None]
    terms = coeff[:, None] * powers
    mag = np.abs(terms)
    cut = np.argmin(np.where(mag > 0, mag, np.inf), axis=0)
    keep = np.arange(len(coeff))[:, None] <= cut[None, :]
    return np.sum(np.where(keep, terms, 0.0), axis=0)


def _ai_asym_pos(x):
    """Decaying expansion; x real > 9 or complex with Re x > 9."""
    u, v = _uv_coefficients()
    x = np.atleast_1d(x)
    zeta = (2.0 / 3.0) * x ** 1.5
    alt = (-1.0) ** np.arange(len(u))
    su = _asymptotic_sum((alt * u).astype(x.dtype), 1.0 / zeta)
    sv = _asymptotic_sum((alt * v).astype(x.dtype), 1.0 / zeta)
    with np.errstate(under="ignore"):
        pref = _INV_2SQRTPI * np.exp(-zeta)
        ai = pref * su / x ** 0.25
        aip = -pref * sv * x ** 0.25
    return ai, aip


def _ai_asym_neg(xm):
    """Oscillatory expansion for Ai(-xm), xm > 8."""
    u, v = _uv_coefficients()
    xm = np.atleast_1d(np.asarray(xm, dtype=float))
    zeta = (2.0 / 3.0) * xm ** 1.5
    th = zeta + 0.25 * math.pi
    m = np.arange(len(u) // 2)
    sgn = (-1.0) ** m
    inv2 = 1.0 / (zeta * zeta)
    se_u = _asymptotic_sum(sgn * u[0::2][: len(m)], inv2)
    so_u = _asymptotic_sum(sgn * u[1::2][: len(m)], inv2) / zeta
    se_v = _asymptotic_sum(sgn * v[0::2][: len(m)], inv2)
    so_v = _asymptotic_sum(sgn * v[1::2][: len(m)], inv2) / zeta
    ai = _INV_SQRTPI / xm ** 0.25 * (np.sin(th) * se_u - np.cos(th) * so_u)
    aip = -_INV_SQRTPI * xm ** 0.25 * (np.cos(th) * se_v + np.sin(th) * so_v)
    return ai, aip


def _ai_and_prime(x):
    x = np.asarray(x, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    neg = x < _NEG_SPLIT
    mid = (x >= _NEG_SPLIT) & (x <= _GAP_LO)
    gap = (x > _GAP_LO) & (x <= _GAP_HI)
    far = x > _GAP_HI
    if np.any(mid):
        ai[mid], aip[mid] = _ai_series(x[mid])
    if np.any(gap):
        ai[gap], aip[gap] = _taylor_from_anchor(x[gap])
    if np.any(far):
        ai[far], aip[far] = _ai_asym_pos(x[far])
    if np.any(neg):
        ai[neg], aip[neg] = _ai_asym_neg(-x[neg])
    if scalar:
        return float(ai[0]), float(aip[0])
    return ai, aip


def airy_ai(x):
    """Airy function Ai(x), real scalar or array."""
    return _ai_and_prime(x)[0]


def airy_ai_prime(x):
    """Derivative Ai'(x), real scalar or array."""
    return _ai_and_prime(x)[1]


def _ai_complex_pair(z):
    z = np.asarray(z, dtype=complex)
    scalar = z.ndim == 0
    z = np.atleast_1d(z)
    if np.any(np.abs(np.imag(z)) > 2.5):
        raise ValueError("complex Airy evaluation limited to |Im z| <= 2.5")
    ai = np.empty_like(z)
    aip = np.empty_like(z)
    re = np.real(z)
    near = (re <= _GAP_LO)
    gap = (re > _GAP_LO) & (re <= _GAP_HI)
    far = re > _GAP_HI
    if np.any(near):
        zn = z[near]
        if np.any(np.abs(zn) > 11.0):
            raise ValueError("complex Airy evaluation limited to |z| <= 11 for Re z <= 4")
        ai[near], aip[near] = _ai_series_complex(zn)
    if np.any(gap):
        ai[gap], aip[gap] = _taylor_from_anchor(z[gap])
    if np.any(far):
        ai[far], aip[far] = _ai_asym_pos(z[far])
    if scalar:
        return complex(ai[0]), complex(aip[0])
    return ai, aip


def airy_ai_complex(z):
    """Ai(z) for complex z (|Im z| <= 2.5; any Re z >= -11)."""
    return _ai_complex_pair(z)[0]


def airy_ai_prime_complex(z):
    """Ai'(z) for complex z, same domain as airy_ai_complex."""
    return _ai_complex_pair(z)[1]


# ----------------------------------------------------------------------
# Integrated Airy function.
# ----------------------------------------------------------------------

_AI1_NEG_SPLIT = -15.0
_AI1_POS_SPLIT = 15.0
_AI1_NODES = 48


@lru_cache(maxsize=1)
def _ai1_series_coefficients(n_max: int = 44):
    """Coefficients of the asymptotic series for Ai1.

    Right tail:  Ai1(x)  = e^{-zeta} sqrt(2/3)/(2 sqrt(pi))
                           * sum_n d_n zeta^{-1/2-n},
    left tail:   Ai1(-x) = 1 - sqrt(2/3)/sqrt(pi)
                           * Im( e^{i(zeta+pi/4)} sum_n r_n zeta^{-n} )
                           / sqrt(zeta),
    zeta = (2/3)|x|^{3/2}.  Both follow by substituting zeta as the
    integration variable in the Ai expansions and integrating
    zeta^{-a} e^{-zeta} (resp. e^{i zeta}) by parts repeatedly.
    """
    u, _ = _uv_coefficients()
    d = np.zeros(n_max)
    r = np.zeros(n_max, dtype=complex)
    for n in range(n_max):
        acc = 0.0
        for k in range(0, n + 1):
            a = 0.5 + k
            prod = 1.0
            for j in range(n - k):
                prod *= a + j
            acc += (-1.0) ** k * u[k] * (-1.0) ** (n - k) * prod
        d[n] = acc
        pc = 0j  # even-index u part, power offset 1/2
        for k in range(0, n // 2 + 1):
            mm = n - 2 * k
            a = 0.5 + 2 * k
            prod = 1.0
            for j in range(mm):
                prod *= a + j
            pc += (-1.0) ** k * u[2 * k] * 1j * (-1j) ** mm * prod
        qc = 0j  # odd-index u part, power offset 3/2 (hence index shift)
        for k in range(0, (n - 1) // 2 + 1):
            mm = (n - 1) - 2 * k
            if mm < 0:
                continue
            a = 1.5 + 2 * k
            prod = 1.0
            for j in range(mm):
                prod *= a + j
            qc += (-1.0) ** k * u[2 * k + 1] * 1j * (-1j) ** mm * prod
        r[n] = pc - 1j * qc
    return d, r


def _ai1_asym_pos(xi):
    d, _ = _ai1_series_coefficients()
    xi = np.atleast_1d(np.asarray(xi, dtype=float))
    zeta = (2.0 / 3.0) * xi ** 1.5
    s = _asymptotic_sum(d, 1.0 / zeta)
    with np.errstate(under="ignore"):
        return math.sqrt(2.0 / 3.0) * _INV_2SQRTPI * np.exp(-zeta) * s / np.sqrt(zeta)


def _ai1_asym_neg(xi):
    _, r = _ai1_series_coefficients()
    xm = np.atleast_1d(np.asarray(-xi, dtype=float))
    zeta = (2.0 / 3.0) * xm ** 1.5
    s = _asymptotic_sum(r, (1.0 / zeta).astype(complex))
    osc = np.imag(np.exp(1j * (zeta + 0.25 * math.pi)) * s) / np.sqrt(zeta)
    return 1.0 - math.sqrt(2.0 / 3.0) * _INV_SQRTPI * osc


@lru_cache(maxsize=1)
def _ai1_anchors():
    """Ai1 at the integers of [-15, 15], accumulated by unit-panel
    Gauss-Legendre integrals of Ai downward from the asymptotic value at
    the top edge."""
    lo, hi = int(_AI1_NEG_SPLIT), int(_AI1_POS_SPLIT)
    x, w = gauss_legendre(_AI1_NODES)
    anchors = {hi: float(_ai1_asym_pos(float(hi))[0])}
    for m in range(hi - 1, lo - 1, -1):
        nodes = m + 0.5 + 0.5 * x
        anchors[m] = anchors[m + 1] + 0.5 * float(np.dot(w, airy_ai(nodes)))
    return anchors


def airy_integrated(xi):
    """Integrated Airy function Ai1(xi) = int_xi^inf Ai(u) du.

    Ai1(0) = 1/3, Ai1(-inf) = 1, Ai1(+inf) = 0.  Scalar or array input.
    """
    xi = np.asarray(xi, dtype=float)
    scalar = xi.ndim == 0
    xi = np.atleast_1d(xi)
    out = np.empty_like(xi)
    neg = xi <= _AI1_NEG_SPLIT
    pos = xi >= _AI1_POS_SPLIT
    mid = ~(neg | pos)
    if np.any(pos):
        out[pos] = _ai1_asym_pos(xi[pos])
    if np.any(neg):
        out[neg] = _ai1_asym_neg(xi[neg])
    if np.any(mid):
        anchors = _ai1_anchors()
        xm = xi[mid]
        x, w = gauss_legendre(_AI1_NODES)
        tops = np.floor(xm).astype(int) + 1
        base = np.array([anchors[t] for t in tops])
        half = 0.5 * (tops - xm)
        nodes = xm[:, None] + half[:, None] * (x[None, :] + 1.0)
        vals = airy_ai(nodes.ravel()).reshape(nodes.shape)
        out[mid] = base + np.sum(w[None, :] * vals, axis=1) * half
    if scalar:
        return float(out[0])
    return out

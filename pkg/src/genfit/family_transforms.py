"""The 24 generator families.

Each family is a cdf-valued transform h: [0,1] -> [0,1] with one to three
induced shape parameters.  A composed distribution has cdf h(G(x)) where G is
a shifted base cdf, pdf h'(G(x)) g(x), and quantile G^{-1}(h^{-1}(p)).

Transforms receive both ``u = G(x)`` and ``omu = 1 - u`` (the base survival
value) so that families built on -log(1-u) keep full precision deep in the
right tail.  ``log_h_prime`` is the log of h's derivative; the family log-pdf
is ``log_h_prime(G(x)) + log g(x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.special as sc

from .base_distributions import (
    base_cdf,
    base_isf_log,
    base_log_hazard,
    base_log_pdf,
    base_log_sf,
    base_quantile,
    base_sf,
    get_base,
)
from .special_functions import (
    inv_reg_inc_beta,
    inv_reg_inc_gamma_lower,
    log_beta,
    log_gamma,
    reg_inc_beta,
    reg_inc_gamma_lower,
    reg_inc_gamma_upper,
)

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "get_family",
    "h_forward",
    "log_h_prime",
    "h_inverse",
    "h_inverse_sf",
    "h_inverse_log_sf",
    "split_params",
    "family_log_pdf",
    "family_pdf",
    "family_cdf",
    "family_quantile",
    "family_sample",
    "n_total_params",
]

_xlogy = sc.xlogy
_xlog1py = sc.xlog1py


def _log1m_exp(x):
    """ln(1 - e^-x) for x >= 0, accurate at both ends."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        small = np.log(-np.expm1(-np.minimum(x, 0.6931471805599453)))
        large = np.log1p(-np.exp(-np.maximum(x, 0.6931471805599453)))
    return np.where(x < 0.6931471805599453, small, large)


def _log_neg_log1m(omu, lsf):
    """ln(-ln u) for u = 1 - omu, via lsf = -ln(omu) once omu is tiny.

    Near u = 1 the exact -ln u equals omu to first order, so its log is -lsf
    even when omu itself has underflowed to zero.
    """
    omu = np.asarray(omu, dtype=float)
    lsf = np.asarray(lsf, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        direct = np.log(-np.log1p(-omu))
    return np.where(omu < 1e-8, -lsf, direct)


def _log_one_minus_upow(omu, lsf, a):
    """ln(1 - u^a) for u = 1 - omu, finite past the underflow of omu.

    Writes 1 - u^a = 1 - e^{-a t} with t = -ln u; deep in the right tail
    this is a t to first order, so its log is ln a + ln t computed from lsf.
    """
    omu = np.asarray(omu, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        t = -np.log1p(-omu)
        deep = math.log(a) + _log_neg_log1m(omu, lsf)
        mid = _log1m_exp(a * t)
    return np.where(deep < -30.0, deep, mid)


@dataclass(frozen=True)
class FamilySpec:
    """One generator transform and its induced-parameter metadata."""

    name: str
    param_names: tuple[str, ...]
    # open interval per induced parameter
    domains: tuple[tuple[float, float], ...]
    h: Callable          # h(u, omu, lsf, *induced); lsf = -ln(omu)
    log_h_prime: Callable  # log_h_prime(u, omu, lsf, *induced)
    h_inv: Callable      # h_inv(p, *induced)
    h_inv_sf: Callable   # survival side of the inverse: 1 - h_inv(p), full precision
    # optional -ln(1 - h_inv(p)) for transforms whose survival side underflows
    h_inv_lsf: Callable | None = None
    # optional ln(h'(u) * (1 - u)), for transforms whose h' grows like
    # 1/(1 - u); pairing it with the base log-hazard avoids the huge
    # cancelling +/- ln(sf) terms in the composite log-density
    log_h_prime_sf: Callable | None = None

    @property
    def n_induced(self) -> int:
        return len(self.param_names)


_POS = (0.0, math.inf)


# --- betaexpg --------------------------------------------------------------

def _betaexpg_h(u, omu, lsf, a, b, d):
    return 1.0 - reg_inc_beta(np.exp(d * np.log(omu)), a, b)


def _betaexpg_lhp(u, omu, lsf, a, b, d):
    s = -d * lsf
    return (
        math.log(d)
        - log_beta(a, b)
        + _xlogy(b - 1.0, -np.expm1(s))
        - (a * d - 1.0) * lsf
    )


def _betaexpg_hinv(p, a, b, d):
    omu = inv_reg_inc_beta(1.0 - p, a, b) ** (1.0 / d)
    return 1.0 - omu


def _betaexpg_hinv_sf(p, a, b, d):
    return inv_reg_inc_beta(1.0 - p, a, b) ** (1.0 / d)


# --- betag -----------------------------------------------------------------

def _betag_h(u, omu, lsf, a, b):
    return reg_inc_beta(u, a, b)


def _betag_lhp(u, omu, lsf, a, b):
    return _xlogy(a - 1.0, u) - (b - 1.0) * lsf - log_beta(a, b)


def _betag_hinv(p, a, b):
    return inv_reg_inc_beta(p, a, b)


def _betag_hinv_sf(p, a, b):
    # I_u(a, b) = p  <=>  I_{1-u}(b, a) = 1 - p
    return inv_reg_inc_beta(1.0 - p, b, a)


# --- expexppg --------------------------------------------------------------

def _expexppg_h(u, omu, lsf, a, b):
    return np.expm1(-b * u**a) / np.expm1(-b)


def _expexppg_lhp(u, omu, lsf, a, b):
    return (
        math.log(a * b)
        + _xlogy(a - 1.0, u)
        - b * u**a
        - math.log(-math.expm1(-b))
    )


def _expexppg_hinv(p, a, b):
    return (-np.log1p(p * math.expm1(-b)) / b) ** (1.0 / a)


def _expexppg_hinv_sf(p, a, b):
    inner = -np.log1p(p * math.expm1(-b)) / b
    with np.errstate(divide="ignore"):
        return -np.expm1(np.log(inner) / a)


# --- expg ------------------------------------------------------------------

def _expg_h(u, omu, lsf, a):
    return u**a


def _expg_lhp(u, omu, lsf, a):
    return math.log(a) + _xlogy(a - 1.0, u)


def _expg_hinv(p, a):
    return p ** (1.0 / a)


def _expg_hinv_sf(p, a):
    with np.errstate(divide="ignore"):
        return -np.expm1(np.log(p) / a)


# --- expgg -----------------------------------------------------------------

def _expgg_h(u, omu, lsf, a, b):
    return (-np.expm1(a * np.log(omu))) ** b


def _expgg_lhp(u, omu, lsf, a, b):
    return (
        math.log(a * b)
        + _xlogy(a - 1.0, omu)
        + _xlogy(b - 1.0, -np.expm1(a * np.log(omu)))
    )


def _expgg_hinv(p, a, b):
    with np.errstate(divide="ignore"):
        omu = (-np.expm1(np.log(p) / b)) ** (1.0 / a)
    return 1.0 - omu


def _expgg_hinv_sf(p, a, b):
    with np.errstate(divide="ignore"):
        return (-np.expm1(np.log(p) / b)) ** (1.0 / a)


# --- expkumg ---------------------------------------------------------------

def _expkumg_h(u, omu, lsf, a, b, d):
    w = u**a
    return (-np.expm1(b * np.log1p(-w))) ** d


def _expkumg_lhp(u, omu, lsf, a, b, d):
    l1 = _log_one_minus_upow(omu, lsf, a)  # ln(1 - u^a)
    l2 = _log1m_exp(-b * l1)  # ln(1 - (1 - u^a)^b)
    return math.log(a * b * d) + _xlogy(a - 1.0, u) + (b - 1.0) * l1 + (d - 1.0) * l2


def _expkumg_hinv(p, a, b, d):
    with np.errstate(divide="ignore"):
        inner = -np.expm1(np.log1p(-p ** (1.0 / d)) / b)
    return inner ** (1.0 / a)


def _expkumg_hinv_sf(p, a, b, d):
    with np.errstate(divide="ignore"):
        inner = -np.expm1(np.log1p(-p ** (1.0 / d)) / b)
        return -np.expm1(np.log(inner) / a)


# --- gammag ----------------------------------------------------------------

def _gammag_h(u, omu, lsf, a):
    return reg_inc_gamma_lower(lsf, a)


def _gammag_lhp(u, omu, lsf, a):
    return _xlogy(a - 1.0, lsf) - log_gamma(a)


def _gammag_hinv(p, a):
    return -np.expm1(-inv_reg_inc_gamma_lower(p, a))


def _gammag_hinv_sf(p, a):
    return np.exp(-inv_reg_inc_gamma_lower(p, a))


def _gammag_hinv_lsf(p, a):
    return inv_reg_inc_gamma_lower(p, a)


# --- gammag1 ---------------------------------------------------------------

def _gammag1_h(u, omu, lsf, a):
    with np.errstate(divide="ignore"):
        t = -np.log(u)
    return reg_inc_gamma_upper(t, a)


def _gammag1_lhp(u, omu, lsf, a):
    return (a - 1.0) * _log_neg_log1m(omu, lsf) - log_gamma(a)


def _gammag1_hinv(p, a):
    return np.exp(-inv_reg_inc_gamma_lower(1.0 - p, a))


def _gammag1_hinv_sf(p, a):
    return -np.expm1(-inv_reg_inc_gamma_lower(1.0 - p, a))


# --- gammag2 ---------------------------------------------------------------

def _gammag2_h(u, omu, lsf, a):
    with np.errstate(divide="ignore"):
        t = u / omu
    return reg_inc_gamma_lower(t, a)


def _gammag2_lhp(u, omu, lsf, a):
    with np.errstate(divide="ignore"):
        t = u / omu
    return _xlogy(a - 1.0, t) - t + 2.0 * lsf - log_gamma(a)


def _gammag2_hinv(p, a):
    t = inv_reg_inc_gamma_lower(p, a)
    return t / (1.0 + t)


def _gammag2_hinv_sf(p, a):
    t = inv_reg_inc_gamma_lower(p, a)
    return 1.0 / (1.0 + t)


# --- gbetag ----------------------------------------------------------------

def _gbetag_h(u, omu, lsf, a, b, d):
    return reg_inc_beta(u**d, a, b)


def _gbetag_lhp(u, omu, lsf, a, b, d):
    return (
        math.log(d)
        - log_beta(a, b)
        + _xlogy(a * d - 1.0, u)
        + (b - 1.0) * _log_one_minus_upow(omu, lsf, d)
    )


def _gbetag_hinv(p, a, b, d):
    return inv_reg_inc_beta(p, a, b) ** (1.0 / d)


def _gbetag_hinv_sf(p, a, b, d):
    with np.errstate(divide="ignore"):
        return -np.expm1(np.log(inv_reg_inc_beta(p, a, b)) / d)


# --- gexppg ----------------------------------------------------------------

def _gexppg_den(u, omu, a, b):
    z = np.exp(-a * omu)
    return -math.expm1(-a) - b * (-np.expm1(-a * omu)), z


def _gexppg_h(u, omu, lsf, a, b):
    den, z = _gexppg_den(u, omu, a, b)
    return (z - math.exp(-a)) / den


def _gexppg_lhp(u, omu, lsf, a, b):
    den, _ = _gexppg_den(u, omu, a, b)
    return (
        math.log(a)
        + math.log1p(-b)
        + math.log(-math.expm1(-a))
        - a * omu
        - 2.0 * np.log(den)
    )


def _gexppg_hinv(p, a, b):
    ea = math.exp(-a)
    z = (ea + p * (1.0 - ea - b)) / (1.0 - p * b)
    omu = -np.log(z) / a
    return 1.0 - omu


def _gexppg_hinv_sf(p, a, b):
    ea = math.exp(-a)
    z = (ea + p * (1.0 - ea - b)) / (1.0 - p * b)
    return -np.log(z) / a


# --- gmbetaexpg ------------------------------------------------------------

def _gmbetaexpg_h(u, omu, lsf, a, b):
    with np.errstate(divide="ignore", over="ignore"):
        t = u / omu
        return (-np.expm1(-b * t)) ** a


def _gmbetaexpg_lhp(u, omu, lsf, a, b):
    with np.errstate(divide="ignore", over="ignore"):
        t = u / omu
        return (
            math.log(a * b)
            + 2.0 * lsf
            - b * t
            + _xlogy(a - 1.0, -np.expm1(-b * t))
        )


def _gmbetaexpg_hinv(p, a, b):
    with np.errstate(divide="ignore"):
        t = -np.log1p(-np.exp(np.log(p) / a)) / b
    return t / (1.0 + t)


def _gmbetaexpg_hinv_sf(p, a, b):
    with np.errstate(divide="ignore"):
        t = -np.log1p(-np.exp(np.log(p) / a)) / b
    return 1.0 / (1.0 + t)


# --- gtransg ---------------------------------------------------------------

def _gtransg_h(u, omu, lsf, a, b):
    return (u * (1.0 + b * omu)) ** a


def _gtransg_lhp(u, omu, lsf, a, b):
    return (
        math.log(a)
        + _xlogy(a - 1.0, u)
        + np.log(1.0 + b - 2.0 * b * u)
        + _xlogy(a - 1.0, 1.0 + b * omu)
    )


def _gtransg_hinv(p, a, b):
    s = np.asarray(p, dtype=float) ** (1.0 / a)
    if abs(b) < 1e-12:
        return s
    # positive root of b u^2 - (1+b) u + s = 0, written cancellation-free
    disc = np.sqrt((1.0 + b) ** 2 - 4.0 * b * s)
    return 2.0 * s / (1.0 + b + disc)


def _gtransg_hinv_sf(p, a, b):
    with np.errstate(divide="ignore"):
        oms = -np.expm1(np.log(p) / a)  # 1 - p^(1/a)
    if abs(b) < 1e-12:
        return oms
    # positive root of b w^2 + (1-b) w - (1-s) = 0 for w = 1 - u
    disc = np.sqrt((1.0 - b) ** 2 + 4.0 * b * oms)
    return 2.0 * oms / (1.0 - b + disc)


# --- gxlogisticg -----------------------------------------------------------

def _gxlogisticg_h(u, omu, lsf, a):
    with np.errstate(divide="ignore"):
        lt = np.log(lsf)
    return sc.expit(a * lt)


def _gxlogisticg_lhp(u, omu, lsf, a):
    t = lsf
    with np.errstate(divide="ignore"):
        lt = np.log(t)
    return (
        math.log(a)
        + _xlogy(a - 1.0, t)
        - 2.0 * np.logaddexp(0.0, a * lt)
        + lsf
    )


def _gxlogisticg_lhp_sf(u, omu, lsf, a):
    # ln(h'(u) * (1 - u)): the lhp above minus its +lsf term
    with np.errstate(divide="ignore"):
        lt = np.log(lsf)
    return math.log(a) + _xlogy(a - 1.0, lsf) - 2.0 * np.logaddexp(0.0, a * lt)


def _gxlogisticg_hinv(p, a):
    t = np.exp(sc.logit(p) / a)
    return -np.expm1(-t)


def _gxlogisticg_hinv_sf(p, a):
    with np.errstate(over="ignore"):
        t = np.exp(sc.logit(p) / a)
    return np.exp(-t)


def _gxlogisticg_hinv_lsf(p, a):
    with np.errstate(over="ignore"):
        return np.exp(sc.logit(p) / a)


# --- kumg ------------------------------------------------------------------

def _kumg_h(u, omu, lsf, a, b):
    return -np.expm1(b * np.log1p(-(u**a)))


def _kumg_lhp(u, omu, lsf, a, b):
    l1 = _log_one_minus_upow(omu, lsf, a)  # ln(1 - u^a)
    return math.log(a * b) + _xlogy(a - 1.0, u) + (b - 1.0) * l1


def _kumg_hinv(p, a, b):
    return (-np.expm1(np.log1p(-p) / b)) ** (1.0 / a)


def _kumg_hinv_sf(p, a, b):
    with np.errstate(divide="ignore"):
        inner = -np.expm1(np.log1p(-p) / b)
        return -np.expm1(np.log(inner) / a)


# --- loggammag1 ------------------------------------------------------------

def _loggammag1_h(u, omu, lsf, a, b):
    return reg_inc_gamma_lower(b * lsf, a)


def _loggammag1_lhp(u, omu, lsf, a, b):
    return (
        a * math.log(b)
        - log_gamma(a)
        + _xlogy(a - 1.0, lsf)
        - (b - 1.0) * lsf
    )


def _loggammag1_hinv(p, a, b):
    return -np.expm1(-inv_reg_inc_gamma_lower(p, a) / b)


def _loggammag1_hinv_sf(p, a, b):
    return np.exp(-inv_reg_inc_gamma_lower(p, a) / b)


def _loggammag1_hinv_lsf(p, a, b):
    return inv_reg_inc_gamma_lower(p, a) / b


# --- loggammag2 ------------------------------------------------------------

def _loggammag2_h(u, omu, lsf, a, b):
    with np.errstate(divide="ignore"):
        t = -np.log(u)
    return reg_inc_gamma_upper(b * t, a)


def _loggammag2_lhp(u, omu, lsf, a, b):
    log_t = _log_neg_log1m(omu, lsf)  # ln(-ln u)
    return a * math.log(b) - log_gamma(a) + (a - 1.0) * log_t + _xlogy(b - 1.0, u)


def _loggammag2_hinv(p, a, b):
    return np.exp(-inv_reg_inc_gamma_lower(1.0 - p, a) / b)


def _loggammag2_hinv_sf(p, a, b):
    return -np.expm1(-inv_reg_inc_gamma_lower(1.0 - p, a) / b)


# --- mbetag ----------------------------------------------------------------

def _mbetag_h(u, omu, lsf, a, b, d):
    s = d * u / (1.0 - (1.0 - d) * u)
    return reg_inc_beta(np.clip(s, 0.0, 1.0), a, b)


def _mbetag_lhp(u, omu, lsf, a, b, d):
    return (
        a * math.log(d)
        + _xlogy(a - 1.0, u)
        - (b - 1.0) * lsf
        - log_beta(a, b)
        - (a + b) * np.log(1.0 - (1.0 - d) * u)
    )


def _mbetag_hinv(p, a, b, d):
    y = inv_reg_inc_beta(p, a, b)
    return y / (d + (1.0 - d) * y)


def _mbetag_hinv_sf(p, a, b, d):
    y = inv_reg_inc_beta(p, a, b)
    return d * (1.0 - y) / (d + (1.0 - d) * y)


# --- mog -------------------------------------------------------------------

def _mog_h(u, omu, lsf, a):
    return u / (u + a * omu)


def _mog_lhp(u, omu, lsf, a):
    return math.log(a) - 2.0 * np.log(u + a * omu)


def _mog_hinv(p, a):
    omp = 1.0 - np.asarray(p, dtype=float)
    v = omp / (a + (1.0 - a) * omp)
    return 1.0 - v


def _mog_hinv_sf(p, a):
    omp = 1.0 - np.asarray(p, dtype=float)
    return omp / (a + (1.0 - a) * omp)


# --- mokumg ----------------------------------------------------------------

def _mokumg_h(u, omu, lsf, a, b, d):
    v = np.exp(b * np.log1p(-(u**a)))
    return (1.0 - v) / (1.0 - v + d * v)


def _mokumg_lhp(u, omu, lsf, a, b, d):
    l1 = _log_one_minus_upow(omu, lsf, a)  # ln(1 - u^a)
    with np.errstate(over="ignore"):
        v = np.exp(b * l1)  # (1 - u^a)^b
    return (
        math.log(a * b * d)
        + _xlogy(a - 1.0, u)
        + (b - 1.0) * l1
        - 2.0 * np.log(1.0 - (1.0 - d) * v)
    )


def _mokumg_hinv(p, a, b, d):
    omp = 1.0 - np.asarray(p, dtype=float)
    w = omp / (d + (1.0 - d) * omp)
    with np.errstate(divide="ignore"):
        return (-np.expm1(np.log(w) / b)) ** (1.0 / a)


def _mokumg_hinv_sf(p, a, b, d):
    omp = 1.0 - np.asarray(p, dtype=float)
    w = omp / (d + (1.0 - d) * omp)
    with np.errstate(divide="ignore"):
        inner = -np.expm1(np.log(w) / b)
        return -np.expm1(np.log(inner) / a)


# --- ologlogg --------------------------------------------------------------

def _ologlogg_w(u, omu, lsf, d):
    # w = u^d / (u^d + (1-u)^d), the odds transform
    with np.errstate(divide="ignore", over="ignore"):
        return sc.expit(d * (np.log(u) + lsf))


def _ologlogg_h(u, omu, lsf, a, b, d):
    w = _ologlogg_w(u, omu, lsf, d)
    with np.errstate(divide="ignore"):
        wa = np.exp(a * np.log(w))
    return -np.expm1(b * np.log1p(-wa))


def _ologlogg_lhp(u, omu, lsf, a, b, d):
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        z = d * (np.log(u) + lsf)  # logit of the odds transform w
        lnw = -np.logaddexp(0.0, -z)
        # ln(1 - w^a): for large z, 1 - w^a ~ a e^-z
        l1 = np.where(z > 700.0, math.log(a) - z, _log1m_exp(-a * lnw))
    return (
        math.log(a * b * d)
        + _xlogy(a * d - 1.0, u)
        - (d - 1.0) * lsf
        - (a + 1.0) * np.log(u**d + omu**d)
        + (b - 1.0) * l1
    )


def _ologlogg_hinv(p, a, b, d):
    with np.errstate(divide="ignore"):
        w = (-np.expm1(np.log1p(-p) / b)) ** (1.0 / a)
    return sc.expit(sc.logit(w) / d)


def _ologlogg_hinv_sf(p, a, b, d):
    with np.errstate(divide="ignore"):
        w = (-np.expm1(np.log1p(-p) / b)) ** (1.0 / a)
    return sc.expit(-sc.logit(w) / d)


# --- texpsg ----------------------------------------------------------------

def _texpsg_h(u, omu, lsf, a):
    return np.expm1(-a * u) / math.expm1(-a)


def _texpsg_lhp(u, omu, lsf, a):
    return math.log(a) - a * u - math.log(-math.expm1(-a))


def _texpsg_hinv(p, a):
    return -np.log1p(p * math.expm1(-a)) / a


def _texpsg_hinv_sf(p, a):
    # 1 - u = log(p + (1-p) e^a) / a, evaluated in log space
    p = np.asarray(p, dtype=float)
    with np.errstate(divide="ignore"):
        return np.logaddexp(np.log(p), np.log1p(-p) + a) / a


# --- weibullextg -----------------------------------------------------------

def _weibullextg_h(u, omu, lsf, a, b):
    with np.errstate(divide="ignore", over="ignore"):
        t = u / omu
        return -np.expm1(-a * t ** (1.0 / b))


def _weibullextg_lhp(u, omu, lsf, a, b):
    with np.errstate(divide="ignore", over="ignore"):
        t = u / omu
        return (
            math.log(a / b)
            + 2.0 * lsf
            + _xlogy(1.0 / b - 1.0, t)
            - a * t ** (1.0 / b)
        )


def _weibullextg_hinv(p, a, b):
    t = (-np.log1p(-np.asarray(p, dtype=float)) / a) ** b
    return t / (1.0 + t)


def _weibullextg_hinv_sf(p, a, b):
    t = (-np.log1p(-np.asarray(p, dtype=float)) / a) ** b
    return 1.0 / (1.0 + t)


# --- weibullg --------------------------------------------------------------

def _weibullg_h(u, omu, lsf, a, b):
    t = lsf
    return -np.expm1(-((t / b) ** a))


def _weibullg_lhp(u, omu, lsf, a, b):
    t = lsf
    return (
        math.log(a)
        - a * math.log(b)
        + _xlogy(a - 1.0, t)
        - (t / b) ** a
        + lsf
    )


def _weibullg_hinv(p, a, b):
    t = b * (-np.log1p(-np.asarray(p, dtype=float))) ** (1.0 / a)
    return -np.expm1(-t)


def _weibullg_hinv_sf(p, a, b):
    t = b * (-np.log1p(-np.asarray(p, dtype=float))) ** (1.0 / a)
    return np.exp(-t)


def _weibullg_hinv_lsf(p, a, b):
    return b * (-np.log1p(-np.asarray(p, dtype=float))) ** (1.0 / a)


FAMILIES: dict[str, FamilySpec] = {
    f.name: f
    for f in [
        FamilySpec("betaexpg", ("a", "b", "d"), (_POS, _POS, _POS), _betaexpg_h, _betaexpg_lhp, _betaexpg_hinv, _betaexpg_hinv_sf),
        FamilySpec("betag", ("a", "b"), (_POS, _POS), _betag_h, _betag_lhp, _betag_hinv, _betag_hinv_sf),
        FamilySpec("expexppg", ("a", "b"), (_POS, _POS), _expexppg_h, _expexppg_lhp, _expexppg_hinv, _expexppg_hinv_sf),
        FamilySpec("expg", ("a",), (_POS,), _expg_h, _expg_lhp, _expg_hinv, _expg_hinv_sf),
        FamilySpec("expgg", ("a", "b"), (_POS, _POS), _expgg_h, _expgg_lhp, _expgg_hinv, _expgg_hinv_sf),
        FamilySpec("expkumg", ("a", "b", "d"), (_POS, _POS, _POS), _expkumg_h, _expkumg_lhp, _expkumg_hinv, _expkumg_hinv_sf),
        FamilySpec("gammag", ("a",), (_POS,), _gammag_h, _gammag_lhp, _gammag_hinv, _gammag_hinv_sf, _gammag_hinv_lsf),
        FamilySpec("gammag1", ("a",), (_POS,), _gammag1_h, _gammag1_lhp, _gammag1_hinv, _gammag1_hinv_sf),
        FamilySpec("gammag2", ("a",), (_POS,), _gammag2_h, _gammag2_lhp, _gammag2_hinv, _gammag2_hinv_sf),
        FamilySpec("gbetag", ("a", "b", "d"), (_POS, _POS, _POS), _gbetag_h, _gbetag_lhp, _gbetag_hinv, _gbetag_hinv_sf),
        FamilySpec("gexppg", ("a", "b"), (_POS, (0.0, 1.0)), _gexppg_h, _gexppg_lhp, _gexppg_hinv, _gexppg_hinv_sf),
        FamilySpec("gmbetaexpg", ("a", "b"), (_POS, _POS), _gmbetaexpg_h, _gmbetaexpg_lhp, _gmbetaexpg_hinv, _gmbetaexpg_hinv_sf),
        FamilySpec("gtransg", ("a", "b"), (_POS, (-1.0, 1.0)), _gtransg_h, _gtransg_lhp, _gtransg_hinv, _gtransg_hinv_sf),
        FamilySpec("gxlogisticg", ("a",), (_POS,), _gxlogisticg_h, _gxlogisticg_lhp, _gxlogisticg_hinv, _gxlogisticg_hinv_sf, _gxlogisticg_hinv_lsf, log_h_prime_sf=_gxlogisticg_lhp_sf),
        FamilySpec("kumg", ("a", "b"), (_POS, _POS), _kumg_h, _kumg_lhp, _kumg_hinv, _kumg_hinv_sf),
        FamilySpec("loggammag1", ("a", "b"), (_POS, _POS), _loggammag1_h, _loggammag1_lhp, _loggammag1_hinv, _loggammag1_hinv_sf, _loggammag1_hinv_lsf),
        FamilySpec("loggammag2", ("a", "b"), (_POS, _POS), _loggammag2_h, _loggammag2_lhp, _loggammag2_hinv, _loggammag2_hinv_sf),
        FamilySpec("mbetag", ("a", "b", "d"), (_POS, _POS, _POS), _mbetag_h, _mbetag_lhp, _mbetag_hinv, _mbetag_hinv_sf),
        FamilySpec("mog", ("a",), (_POS,), _mog_h, _mog_lhp, _mog_hinv, _mog_hinv_sf),
        FamilySpec("mokumg", ("a", "b", "d"), (_POS, _POS, _POS), _mokumg_h, _mokumg_lhp, _mokumg_hinv, _mokumg_hinv_sf),
        FamilySpec("ologlogg", ("a", "b", "d"), (_POS, _POS, _POS), _ologlogg_h, _ologlogg_lhp, _ologlogg_hinv, _ologlogg_hinv_sf),
        FamilySpec("texpsg", ("a",), (_POS,), _texpsg_h, _texpsg_lhp, _texpsg_hinv, _texpsg_hinv_sf),
        FamilySpec("weibullextg", ("a", "b"), (_POS, _POS), _weibullextg_h, _weibullextg_lhp, _weibullextg_hinv, _weibullextg_hinv_sf),
        FamilySpec("weibullg", ("a", "b"), (_POS, _POS), _weibullg_h, _weibullg_lhp, _weibullg_hinv, _weibullg_hinv_sf, _weibullg_hinv_lsf),
    ]
}


def get_family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        raise KeyError(
            f"unknown family {name!r}; valid: {sorted(FAMILIES)}"
        ) from None


def _check_induced(fam: FamilySpec, induced):
    induced = tuple(float(v) for v in induced)
    if len(induced) != fam.n_induced:
        raise ValueError(f"{fam.name} takes {fam.n_induced} induced parameters")
    for v, (lo, hi), nm in zip(induced, fam.domains, fam.param_names):
        if not (lo < v < hi):
            raise ValueError(
                f"{fam.name} parameter {nm}={v} outside ({lo}, {hi})"
            )
    return induced


def h_forward(name, u, induced, one_minus_u=None, neg_log_sf=None):
    """Transform value h(u); h(0) = 0, h(1) = 1, nondecreasing.

    ``one_minus_u`` and ``neg_log_sf`` optionally supply 1-u and -ln(1-u) at
    full precision when the caller knows them better than 1-u can express.
    """
    fam = get_family(name)
    induced = _check_induced(fam, induced)
    u = np.asarray(u, dtype=float)
    if np.any((u < 0) | (u > 1)):
        raise ValueError("h_forward requires u in [0, 1]")
    omu = 1.0 - u if one_minus_u is None else np.asarray(one_minus_u, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        lsf = -np.log(omu) if neg_log_sf is None else np.asarray(neg_log_sf, dtype=float)
        out = fam.h(u, omu, lsf, *induced)
    out = np.clip(np.where(np.isnan(out), np.where(u > 0.5, 1.0, 0.0), out), 0.0, 1.0)
    return out if np.ndim(out) else float(out)


def log_h_prime(name, u, induced, one_minus_u=None, neg_log_sf=None):
    """log dh/du; may be +-inf at the endpoints, never NaN."""
    fam = get_family(name)
    induced = _check_induced(fam, induced)
    u = np.asarray(u, dtype=float)
    omu = 1.0 - u if one_minus_u is None else np.asarray(one_minus_u, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        lsf = -np.log(omu) if neg_log_sf is None else np.asarray(neg_log_sf, dtype=float)
        out = fam.log_h_prime(u, omu, lsf, *induced)
    out = np.where(np.isnan(out), -np.inf, out)
    return out if np.ndim(out) else float(out)


def h_inverse(name, p, induced):
    """The u with h(u) = p."""
    fam = get_family(name)
    induced = _check_induced(fam, induced)
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise ValueError("h_inverse requires p in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = fam.h_inv(p, *induced)
    out = np.clip(np.where(np.isnan(out), np.where(p > 0.5, 1.0, 0.0), out), 0.0, 1.0)
    out = np.where(p == 0.0, 0.0, np.where(p == 1.0, 1.0, out))
    return out if np.ndim(out) else float(out)


def h_inverse_sf(name, p, induced):
    """The survival value 1 - u at the u with h(u) = p, kept at full precision."""
    fam = get_family(name)
    induced = _check_induced(fam, induced)
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise ValueError("h_inverse_sf requires p in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        out = fam.h_inv_sf(p, *induced)
    out = np.clip(np.where(np.isnan(out), np.where(p > 0.5, 0.0, 1.0), out), 0.0, 1.0)
    out = np.where(p == 0.0, 1.0, np.where(p == 1.0, 0.0, out))
    return out if np.ndim(out) else float(out)


def h_inverse_log_sf(name, p, induced):
    """-ln of the survival value at the u with h(u) = p; finite past underflow."""
    fam = get_family(name)
    induced = _check_induced(fam, induced)
    p = np.asarray(p, dtype=float)
    if np.any((p < 0) | (p > 1)):
        raise ValueError("h_inverse_log_sf requires p in [0, 1]")
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        if fam.h_inv_lsf is not None:
            out = fam.h_inv_lsf(p, *induced)
        else:
            out = -np.log(fam.h_inv_sf(p, *induced))
    out = np.maximum(np.where(np.isnan(out), np.where(p > 0.5, np.inf, 0.0), out), 0.0)
    out = np.where(p == 0.0, 0.0, np.where(p == 1.0, np.inf, out))
    return out if np.ndim(out) else float(out)


def n_total_params(family, base, location=True):
    return get_family(family).n_induced + get_base(base).n_params + (1 if location else 0)


def split_params(family, base, params, location=True):
    """Split a full parameter vector into (induced, base-with-mu) per the
    ordering contract: induced a[, b[, d]] first, base shapes next, mu last."""
    fam = get_family(family)
    bd = get_base(base)
    params = tuple(float(p) for p in params)
    want = fam.n_induced + bd.n_params + (1 if location else 0)
    if len(params) != want:
        raise ValueError(
            f"{family} x {base} with location={location} expects {want} "
            f"parameters, got {len(params)}"
        )
    induced = params[: fam.n_induced]
    base_params = params[fam.n_induced :]
    if not location:
        base_params = base_params + (0.0,)
    return induced, base_params


def family_log_pdf(family, base, x, params, location=True):
    induced, bp = split_params(family, base, params, location)
    u = np.asarray(base_cdf(base, x, bp), dtype=float)
    omu = np.asarray(base_sf(base, x, bp), dtype=float)
    lsf = -np.asarray(base_log_sf(base, x, bp), dtype=float)
    fam = get_family(family)
    if fam.log_h_prime_sf is not None:
        # composite density as [h'(u)(1-u)] * hazard(x): both factors stay
        # moderate where ln h'(u) and the base log-density separately blow
        # up to +/- lsf and their sum is cancellation noise
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = np.asarray(fam.log_h_prime_sf(u, omu, lsf, *induced)) + np.asarray(
                base_log_hazard(base, x, bp)
            )
        out = np.where(np.isnan(out), -np.inf, out)
        # lsf underflowing to exact zero means -ln(sf) < 1e-308: so close to
        # the left edge that the composite density is below representability
        out = np.where(lsf <= 0.0, -np.inf, out)
        return out if np.ndim(out) else float(out)
    lhp = np.asarray(log_h_prime(family, u, induced, one_minus_u=omu, neg_log_sf=lsf))
    lg = np.asarray(base_log_pdf(base, x, bp))
    with np.errstate(invalid="ignore"):
        out = lhp + lg
    out = np.where(np.isnan(out), -np.inf, out)
    # h' is finite on the open interval, so lhp = +inf with a finite base
    # log-density means u (or 1-u) underflowed to an exact boundary value;
    # there the true density is itself below double-precision underflow
    out = np.where(np.isposinf(lhp) & np.isfinite(lg), -np.inf, out)
    return out if np.ndim(out) else float(out)


def family_pdf(family, base, x, params, location=True, log=False):
    lp = family_log_pdf(family, base, x, params, location)
    if log:
        return lp
    with np.errstate(over="ignore"):
        out = np.exp(lp)
    return out if np.ndim(out) else float(out)


def family_cdf(family, base, x, params, location=True, log_p=False, lower_tail=True):
    induced, bp = split_params(family, base, params, location)
    u = np.asarray(base_cdf(base, x, bp), dtype=float)
    omu = np.asarray(base_sf(base, x, bp), dtype=float)
    lsf = -np.asarray(base_log_sf(base, x, bp), dtype=float)
    out = np.asarray(h_forward(family, u, induced, one_minus_u=omu, neg_log_sf=lsf))
    if not lower_tail:
        out = 1.0 - out
    if log_p:
        with np.errstate(divide="ignore"):
            out = np.log(out)
    return out if np.ndim(out) else float(out)


def family_quantile(family, base, p, params, location=True, log_p=False, lower_tail=True):
    induced, bp = split_params(family, base, params, location)
    p = np.asarray(p, dtype=float)
    if log_p:
        p = np.exp(-p)
    if not lower_tail:
        p = 1.0 - p
    if np.any((p < 0) | (p > 1)):
        raise ValueError("quantile probabilities must lie in [0, 1]")
    # lower half of u through the base quantile, upper half through the base
    # inverse-survival (in -log survival form) so a u that saturates at 1.0
    # in double precision never loses the tail
    u = np.asarray(h_inverse(family, p, induced))
    l = np.asarray(h_inverse_log_sf(family, p, induced))
    with np.errstate(invalid="ignore", over="ignore"):
        lo = base_quantile(base, np.where(u <= 0.5, u, 0.5), bp)
        hi = base_isf_log(base, np.where(u > 0.5, l, 1.0), bp)
    out = np.where(u <= 0.5, lo, hi)
    return out if np.ndim(out) else float(out)


def family_sample(family, base, n, params, location=True, seed=None, rng=None):
    """Inverse-transform sample: quantile applied to n seeded uniforms."""
    if n < 0:
        raise ValueError("sample size must be nonnegative")
    if rng is None:
        rng = np.random.default_rng(seed)
    u = rng.uniform(size=n)
    out = family_quantile(family, base, u, params, location)
    return np.asarray(out, dtype=float).reshape(n)

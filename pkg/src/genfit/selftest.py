"""Sampling self-test: draw random parameter vectors, simulate, and check the
samples against the generating cdf with a one-sample Kolmogorov-Smirnov test.

For each sample size the test draws every parameter coordinate uniformly over
(0.5, 5) (clipped into the coordinate's domain), simulates, and records the
KS p-value over repeated replications.  A healthy sampler leaves almost all
p-values above 0.05.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .base_distributions import get_base
from .family_transforms import family_cdf, family_sample, get_family
from .gof import ks_test

__all__ = ["SelfTestRow", "selftest", "default_n_grid"]

_DRAW_LO, _DRAW_HI = 0.5, 5.0


@dataclass(frozen=True)
class SelfTestRow:
    n: int
    p_values: np.ndarray
    redraws: int

    @property
    def frac_above_005(self) -> float:
        return float(np.mean(self.p_values > 0.05))

    def summary(self):
        q = np.quantile(self.p_values, [0.0, 0.25, 0.5, 0.75, 1.0])
        return {
            "n": self.n,
            "min": float(q[0]),
            "q1": float(q[1]),
            "median": float(q[2]),
            "q3": float(q[3]),
            "max": float(q[4]),
            "frac_above_0.05": self.frac_above_005,
            "redraws": self.redraws,
        }


def default_n_grid():
    return list(range(5, 101, 5))


def _draw_theta(family, base, rng):
    fam = get_family(family)
    bd = get_base(base)
    theta = []
    for lo, hi in fam.domains:
        a = max(lo + 1e-9, _DRAW_LO) if lo > -math.inf else _DRAW_LO
        b = min(hi - 1e-9, _DRAW_HI)
        theta.append(rng.uniform(min(a, b), max(a, b)))
    for _ in range(bd.n_params):
        theta.append(rng.uniform(_DRAW_LO, _DRAW_HI))
    theta.append(rng.uniform(_DRAW_LO, _DRAW_HI))  # mu
    return np.asarray(theta)


def selftest(family, base, n_grid=None, reps=100, seed=None, max_redraws=50):
    """Run the replication study; returns one SelfTestRow per sample size."""
    if n_grid is None:
        n_grid = default_n_grid()
    rng = np.random.default_rng(seed)
    rows = []
    for n in n_grid:
        p_values = np.empty(reps)
        redraws = 0
        for r in range(reps):
            for _ in range(max_redraws):
                theta = _draw_theta(family, base, rng)
                x = family_sample(family, base, n, theta, location=True, rng=rng)
                if np.all(np.isfinite(x)):
                    break
                redraws += 1
            else:
                raise RuntimeError(
                    f"could not draw a feasible parameter vector for {family} x {base}"
                )
            u = family_cdf(family, base, np.sort(x), theta, location=True)
            _, p = ks_test(u)
            p_values[r] = p
        rows.append(SelfTestRow(n=int(n), p_values=p_values, redraws=redraws))
    return rows

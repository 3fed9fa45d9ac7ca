"""Derivative-free and gradient-based maximizers for the spacing objective.

The objective convention is maximization; infeasible points are signalled by
-inf, never by exceptions.  Nelder-Mead, BFGS, and CG are delegated to
``scipy.optimize`` (BFGS/CG with an explicit central-difference gradient);
simulated annealing is implemented here.  "L-BFGS-B" is accepted as an alias
of BFGS because all box constraints are removed upstream by smooth
reparameterization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

__all__ = ["OptimizerConfig", "OptResult", "maximize", "resolve_method"]

_BIG = 1e300

_ALIASES = {
    "nelder-mead": "nelder-mead",
    "neldermead": "nelder-mead",
    "nedler-mead": "nelder-mead",  # the published example session's spelling
    "bfgs": "bfgs",
    "l-bfgs-b": "bfgs",
    "lbfgsb": "bfgs",
    "cg": "cg",
    "sann": "sann",
}


def resolve_method(name: str) -> str:
    key = name.strip().lower()
    if key not in _ALIASES:
        raise ValueError(
            f"unknown optimizer {name!r}; valid: Nelder-Mead, BFGS, CG, L-BFGS-B, SANN"
        )
    return _ALIASES[key]


@dataclass
class OptimizerConfig:
    method: str = "nelder-mead"
    max_iter: int = 2000
    f_tol: float = 1e-10
    x_tol: float = 1e-8
    restarts: int = 3
    seed: int | None = None


@dataclass
class OptResult:
    x_opt: np.ndarray
    f_opt: float
    n_evals: int
    converged: bool
    message: str


def _central_diff_grad(f, x):
    g = np.zeros_like(x)
    for i in range(x.size):
        h = max(1e-7, 1e-7 * abs(x[i]))
        e = np.zeros_like(x)
        e[i] = h
        fp, fm = f(x + e), f(x - e)
        g[i] = (fp - fm) / (2.0 * h)
    return g


def _sann(neg_f, x0, config, rng):
    x = x0.copy()
    fx = neg_f(x)
    best_x, best_f = x.copy(), fx
    temp = 1.0
    n_evals = 1
    for _ in range(config.max_iter):
        cand = x + rng.normal(scale=0.1 + 0.4 * temp, size=x.size)
        fc = neg_f(cand)
        n_evals += 1
        if fc < fx or rng.uniform() < np.exp(-(fc - fx) / max(temp, 1e-12)):
            x, fx = cand, fc
            if fx < best_f:
                best_x, best_f = x.copy(), fx
        temp *= 0.995
    return best_x, best_f, n_evals


def _run_once(objective, x0, config, rng):
    evals = [0]

    def neg_f(x):
        evals[0] += 1
        v = objective(np.asarray(x, dtype=float))
        return _BIG if not np.isfinite(v) else -float(v)

    method = resolve_method(config.method)
    if method == "sann":
        x, f, n = _sann(neg_f, x0, config, rng)
        return OptResult(x, -f, evals[0], True, "sann schedule completed")
    if method == "nelder-mead":
        res = minimize(
            neg_f,
            x0,
            method="Nelder-Mead",
            options={
                "maxiter": config.max_iter,
                "maxfev": 50 * config.max_iter,
                "xatol": config.x_tol,
                "fatol": config.f_tol,
            },
        )
    else:
        scipy_method = {"bfgs": "BFGS", "cg": "CG"}[method]
        res = minimize(
            neg_f,
            x0,
            method=scipy_method,
            jac=lambda x: _central_diff_grad(neg_f, x),
            options={"maxiter": config.max_iter},
        )
    return OptResult(
        np.asarray(res.x, dtype=float),
        -float(res.fun),
        evals[0],
        bool(res.success),
        str(res.message),
    )


def maximize(objective, x0, config: OptimizerConfig) -> OptResult:
    """Maximize ``objective`` from x0 with jittered restarts; returns the best
    point found.  Raises if the starting point itself is infeasible."""
    x0 = np.asarray(x0, dtype=float)
    if not np.isfinite(objective(x0)):
        raise ValueError("infeasible start")
    rng = np.random.default_rng(config.seed)
    best = _run_once(objective, x0, config, rng)
    for _ in range(max(config.restarts, 0)):
        jittered = x0 + rng.normal(scale=0.3, size=x0.size)
        if not np.isfinite(objective(jittered)):
            continue
        trial = _run_once(objective, jittered, config, rng)
        if trial.f_opt > best.f_opt:
            best = trial
    # never report a point worse than where we started
    f0 = float(objective(x0))
    if best.f_opt < f0:
        best = OptResult(x0, f0, best.n_evals, False, "no improvement over start")
    return best

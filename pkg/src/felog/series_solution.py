"""Series evaluation, convergence radii, and the classical degeneration.

The series is summed in the variable tau = t^(2*beta): even coefficients are
exactly zero, so a Horner pass over the odd coefficients halves the work and
never multiplies by stored zeros. Fractional powers are taken as
exp(beta*k*log t) with the t = 0 limit special-cased.

Four radius notions are reported side by side. The two printed formula radii
are *diagnostics only*: evaluated verbatim they do not reproduce their own
claimed limiting constants (c1, c2), so the report carries formula value,
claimed constant and empirical estimate together and asserts nothing.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Union

import numpy as np

from .euler_beta import BetaEulerSequence, build_sequence
from .specfun import EULER_MASCHERONI, ln_gamma

__all__ = [
    "C1_CLAIMED",
    "C2_CLAIMED",
    "EvalResult",
    "RadiusReport",
    "SeriesSolution",
    "evaluate",
    "radius_report",
    "remark_bound",
    "remark_radius",
    "remark_bound_pole",
    "compare_classical",
]

#: Limiting constants claimed for the two printed radius formulas.
C1_CLAIMED = 3.074366
C2_CLAIMED = 3.116623


@dataclass(frozen=True)
class EvalResult:
    """Partial sum, geometric tail estimate, and domain flag (arrays when the
    query was an array)."""

    w: Union[float, np.ndarray]
    tail_bound: Union[float, np.ndarray]
    in_domain: Union[bool, np.ndarray]


@dataclass(frozen=True)
class RadiusReport:
    """The four radius estimates for one sequence.

    ``r_formula_ii`` is None when beta <= gamma_EM - 1/2, where formula (ii)
    is not stated. ``r_empirical`` is None when too few nonzero coefficients
    are available for the ratio test.
    """

    r_formula_i: float
    r_formula_ii: Optional[float]
    r_guaranteed: float
    r_empirical: Optional[float]
    c1_claimed: float = C1_CLAIMED
    c2_claimed: float = C2_CLAIMED
    m: float = 1.0

    def to_json_dict(self) -> dict:
        # discrepancy fields compare each formula, taken at beta -> 1, with
        # its claimed limiting constant (times m)
        return {
            "r_formula_i": self.r_formula_i,
            "r_formula_ii": self.r_formula_ii,
            "r_guaranteed": self.r_guaranteed,
            "r_empirical": self.r_empirical,
            "c1_claimed": self.c1_claimed,
            "c2_claimed": self.c2_claimed,
            "discrepancy_i": abs(_formula_i(1.0, self.m) - self.c1_claimed * self.m),
            "discrepancy_ii": abs(_formula_ii(1.0, self.m) - self.c2_claimed * self.m),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def _formula_i(beta: float, m: float) -> float:
    return (
        m
        * (2.0**beta / math.exp(beta))
        * ((3 * beta + 1) / (2 * beta + 1)) ** (2 * beta + 0.5)
        * (3 * beta + 1) ** (beta + (0.5 - EULER_MASCHERONI))
    )


def _formula_ii(beta: float, m: float) -> float:
    return (
        m
        * (2.0 / (math.exp(2 * beta) * math.sqrt(beta + 1)))
        * ((3 * beta + 1) / (2 * beta + 1)) ** (2 * beta + 0.5)
        * (3 * beta + 1) ** (-beta + EULER_MASCHERONI - 0.5)
    )


def radius_report(seq: BetaEulerSequence) -> RadiusReport:
    """Evaluate the two printed radius formulas, the majorant radius, and the
    ratio-test estimate.

    The empirical estimate extrapolates the last five consecutive-odd-term
    ratios (|g_{2k+1}|/|g_{2k+3}|)^(1/(2*beta)) with one Richardson level in
    1/k and takes the median; raw last-ratio estimates oscillate for small
    beta.
    """
    if seq.n_terms < 20:
        raise ValueError("radius_report needs n_terms >= 20")
    beta, m = seq.beta, seq.m

    r_i = _formula_i(beta, m)
    r_ii = _formula_ii(beta, m) if beta > EULER_MASCHERONI - 0.5 else None

    p = 0.25 / math.exp(ln_gamma(beta + 1.0))
    q = 2.0 * p * math.exp(ln_gamma(2 * beta + 1.0) - ln_gamma(3 * beta + 1.0))
    r_guaranteed = (m * m / q) ** (1.0 / (2.0 * beta))

    odd = np.abs(seq.g[1::2])
    ratios = []
    for j in range(len(odd) - 1):
        if odd[j] > 0.0 and odd[j + 1] > 0.0:
            ratios.append((odd[j] / odd[j + 1]) ** (1.0 / (2.0 * beta)))
    r_empirical: Optional[float] = None
    if len(ratios) >= 5:
        xs = np.array(ratios[-5:])
        k = np.arange(len(ratios) - 4, len(ratios) + 1, dtype=float)
        level1 = k[1:] * xs[1:] - (k[1:] - 1.0) * xs[:-1]
        r_empirical = float(np.median(level1))

    return RadiusReport(
        r_formula_i=r_i,
        r_formula_ii=r_ii,
        r_guaranteed=r_guaranteed,
        r_empirical=r_empirical,
        m=m,
    )


class SeriesSolution:
    """Evaluate the series and report its domain of validity.

    Construct from a built sequence, or with ``SeriesSolution.build(beta, m)``.
    Instances are immutable and safe to share; grid evaluation is a read-only
    pass over the coefficients.
    """

    def __init__(self, seq: BetaEulerSequence):
        self.seq = seq
        p = 0.25 / math.exp(ln_gamma(seq.beta + 1.0))
        self._q = 2.0 * p * math.exp(
            ln_gamma(2 * seq.beta + 1.0) - ln_gamma(3 * seq.beta + 1.0)
        )

    @classmethod
    def build(cls, beta: float, m: float = 1.0, n_terms: int = 64) -> "SeriesSolution":
        return cls(build_sequence(beta, m, n_terms))

    @cached_property
    def radius(self) -> RadiusReport:
        return radius_report(self.seq)

    @property
    def domain_edge(self) -> float:
        """Operative validity edge: the empirical radius, falling back to the
        majorant radius when the ratio test is unavailable."""
        r = self.radius
        return r.r_empirical if r.r_empirical is not None else r.r_guaranteed

    def evaluate(self, t) -> EvalResult:
        """Partial sum with a geometric tail estimate.

        The tail applies the ratio q * t^(2*beta) / m^2 to the last retained
        odd term; it is +inf where that ratio reaches 1. ``in_domain`` flags
        t values at or below the operative radius. Negative t is rejected.
        """
        t_arr = np.asarray(t, dtype=float)
        scalar = t_arr.ndim == 0
        t_arr = np.atleast_1d(t_arr)
        if np.any(t_arr < 0.0):
            raise ValueError("t must be >= 0")

        beta, m = self.seq.beta, self.seq.m
        c = self.seq.g[1::2]  # odd coefficients; evens are exactly zero
        pos = t_arr > 0.0
        log_t = np.log(np.where(pos, t_arr, 1.0))
        tb = np.where(pos, np.exp(beta * log_t), 0.0)   # t^beta, 0 at t=0
        tau = tb * tb                                    # t^(2*beta)

        acc = np.zeros_like(t_arr)
        for coeff in c[::-1]:  # Horner in tau
            acc = acc * tau + coeff
        w = 0.5 + tb * acc

        k_last = 2 * len(c) - 1
        with np.errstate(divide="ignore", invalid="ignore"):
            last_term = np.abs(c[-1]) * np.where(pos, np.exp(beta * k_last * log_t), 0.0)
            ratio = self._q * tau / (m * m)
            tail = np.where(ratio < 1.0, last_term * ratio / (1.0 - ratio), np.inf)
        in_domain = t_arr <= self.domain_edge

        if scalar:
            return EvalResult(float(w[0]), float(tail[0]), bool(in_domain[0]))
        for arr in (w, tail, in_domain):
            arr.setflags(write=False)
        return EvalResult(w, tail, in_domain)

    def __call__(self, t):
        return self.evaluate(t).w

    def curve_csv(self, t) -> str:
        """Columns t, w, tail_bound, in_domain."""
        res = self.evaluate(np.atleast_1d(np.asarray(t, dtype=float)))
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["t", "w", "tail_bound", "in_domain"])
        for ti, wi, tb, dom in zip(
            np.atleast_1d(t), np.atleast_1d(res.w), np.atleast_1d(res.tail_bound),
            np.atleast_1d(res.in_domain),
        ):
            writer.writerow([repr(float(ti)), repr(float(wi)), repr(float(tb)),
                             str(bool(dom)).lower()])
        return buf.getvalue()


def evaluate(sol: SeriesSolution, t) -> EvalResult:
    """Module-level alias for :meth:`SeriesSolution.evaluate`."""
    return sol.evaluate(t)


def remark_radius(beta: float) -> float:
    """Printed radius of the closed-form majorant: 2^(2b-1) (1 + 2b^2/(2b+1)).

    At beta = 1 this evaluates to 10/3, although it is printed as <= 3; the
    value is returned exactly as the formula gives it.
    """
    if not (0.5 < beta <= 1.0):
        raise ValueError("the closed-form majorant requires beta in (1/2, 1]")
    return 2.0 ** (2 * beta - 1) * (1.0 + 2 * beta * beta / (2 * beta + 1))


def remark_bound_pole(beta: float) -> float:
    """Where the closed-form majorant's own geometric factor blows up.

    This lies strictly below :func:`remark_radius`; between the two the
    printed expression is negative and useless as a bound.
    """
    if not (0.5 < beta <= 1.0):
        raise ValueError("the closed-form majorant requires beta in (1/2, 1]")
    return 2.0 ** (2 * beta - 1) * (3 * beta + 1 + 2 * beta * beta) / (3 * beta + 1)


def remark_bound(beta: float, t: float) -> float:
    """Closed-form majorant 1/2 + (1/(4 Gamma(b+1))) (1 - 2^(1-2b) (3b+1)/(3b+1+2b^2) t)^-1.

    Stated for m = 1 and beta > 1/2; raises for t at or beyond the printed
    radius. The expression is transcribed verbatim, including the fact that
    its own pole precedes that radius.
    """
    if not (0.5 < beta <= 1.0):
        raise ValueError("the closed-form majorant requires beta in (1/2, 1]")
    r = remark_radius(beta)
    if not (0.0 <= t < r):
        raise ValueError(f"t must lie in [0, {r}), got {t}")
    rate = 2.0 ** (1 - 2 * beta) * (3 * beta + 1) / (3 * beta + 1 + 2 * beta * beta)
    return 0.5 + (0.25 / math.exp(ln_gamma(beta + 1.0))) / (1.0 - rate * t)


def compare_classical(
    m: float,
    t_grid,
    n_terms: int = 64,
    beta: float = 1.0,
) -> float:
    """Max absolute deviation of the beta = 1 series from 1/(1 + exp(-t/m)).

    The closed form solves u' = (u - u^2)/m from u(0) = 1/2, which is the
    equation the series is built for. Only beta = 1 admits it.
    """
    if beta != 1.0:
        raise ValueError("the closed-form comparison requires beta = 1")
    t_arr = np.asarray(t_grid, dtype=float)
    if np.any(t_arr < 0.0) or np.any(t_arr >= math.pi * m):
        raise ValueError("t grid must lie within [0, pi * m)")
    sol = SeriesSolution.build(1.0, m, n_terms)
    w = np.atleast_1d(sol.evaluate(t_arr).w)
    closed = 1.0 / (1.0 + np.exp(-t_arr / m))
    return float(np.max(np.abs(w - closed)))

"""The majorization order, Schur-direction sampling, and the equivalence scan
between the distinct-variable and subset-power families."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from . import families
from .vectors import (RationalLike, RationalVector, log_of_fraction, lp_mean,
                      partial_sums_desc, to_fraction)

__all__ = [
    "MajorizationVerdict",
    "majorizes",
    "SchurSampleVerdict",
    "schur_ostrowski_sample",
    "CellViolation",
    "Theorem2Report",
    "theorem2_scan",
    "s_r_limit_estimate",
    "psi_value",
    "psi_sum",
    "PsiComparison",
    "psi_compare",
    "t_transform_pair",
]


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of an exact majorization comparison."""

    holds: bool
    sum_equal: bool
    first_violation: Optional[tuple[int, Fraction, Fraction]]


def majorizes(x: RationalVector, y: RationalVector) -> MajorizationVerdict:
    """Exact partial-sum dominance of x over y, with total-sum equality."""
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    sum_equal = x.total() == y.total()
    px, py = partial_sums_desc(x), partial_sums_desc(y)
    first = None
    for k in range(len(x) - 1):
        if px[k] < py[k]:
            first = (k + 1, px[k], py[k])
            break
    return MajorizationVerdict(holds=sum_equal and first is None,
                               sum_equal=sum_equal, first_violation=first)


@dataclass(frozen=True)
class SchurSampleVerdict:
    family: str
    k: int
    r: int
    ok: bool
    pairs_checked: int
    worst_pair: Optional[tuple[int, int]]
    worst_quotient: Optional[Union[Fraction, float]]
    exact: bool


def _fd_gradient(fn: Callable[[RationalVector], Fraction],
                 x: RationalVector, h: float) -> list[float]:
    # central differences on float casts; a second-order one-sided stencil
    # keeps the evaluations inside the nonnegative orthant near zero entries
    xs = x.to_floats()

    def value_at(i: int, v: float) -> float:
        moved = list(xs)
        moved[i] = v
        return float(fn(RationalVector(moved)))

    grad = []
    for i, xi in enumerate(xs):
        step = h * max(1.0, abs(xi))
        if xi - step < 0:
            f0 = value_at(i, xi)
            f1 = value_at(i, xi + step)
            f2 = value_at(i, xi + 2 * step)
            grad.append((-3 * f0 + 4 * f1 - f2) / (2 * step))
        else:
            grad.append((value_at(i, xi + step) - value_at(i, xi - step))
                        / (2 * step))
    return grad


def schur_ostrowski_sample(family: str, x: RationalVector, k: int, r: int,
                           fd_step: float = 1e-4,
                           tol: float = 1e-7) -> SchurSampleVerdict:
    """Differential monotonicity probe at a single point.

    Evaluates ``(dPhi/dx_i - dPhi/dx_j) / (x_j - x_i)`` over all index pairs
    with distinct entries.  F uses exact gradients and exact sign tests; G and
    M fall back to central finite differences on float casts with a small
    relative slack.  Nonnegative quotients certify the concave direction for
    F and G; M runs in the convex direction (quotients negated before the
    test).  A point with all entries equal passes vacuously.
    """
    if family not in ("F", "G", "M"):
        raise ValueError("family must be F, G, or M")
    n = len(x)
    if family == "F":
        grad: Sequence[Union[Fraction, float]] = families.grad_f_kr(x, r, k)
        exact, direction = True, 1
    elif family == "G":
        grad = _fd_gradient(lambda v: families.g_kr(v, k, r), x, fd_step)
        exact, direction = False, 1
    else:
        grad = _fd_gradient(lambda v: families.m_kr(v, k, r), x, fd_step)
        exact, direction = False, -1

    pairs = 0
    worst_pair = None
    worst: Optional[Union[Fraction, float]] = None
    largest = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            if x[i] == x[j]:
                continue
            pairs += 1
            if exact:
                quotient = (grad[i] - grad[j]) / (x[j] - x[i])
            else:
                quotient = (grad[i] - grad[j]) / float(x[j] - x[i])
            signed = direction * quotient
            largest = max(largest, abs(float(quotient)))
            if worst is None or signed < worst:
                worst, worst_pair = signed, (i, j)
    if pairs == 0:
        return SchurSampleVerdict(family, k, r, True, 0, None, None, exact)
    slack = Fraction(0) if exact else tol * max(1.0, largest)
    ok = worst >= -slack
    return SchurSampleVerdict(family, k, r, bool(ok), pairs, worst_pair,
                              worst, exact)


@dataclass(frozen=True)
class CellViolation:
    r: int
    k: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class Theorem2Report:
    """Truth table of the three equivalent majorization characterizations,
    with the polynomial families scanned only up to k_max."""

    sums_equal: bool
    k_max: int
    majorization: Optional[MajorizationVerdict]
    distinct_var_violation: Optional[CellViolation]  # G_{k,r}(x) > G_{k,r}(y)
    subset_power_violation: Optional[CellViolation]  # M_{k,r}(x) < M_{k,r}(y)
    cells_checked: int
    note: str = ("polynomial families checked only for k <= k_max; "
                 "the characterization quantifies over all k")

    @property
    def majorization_holds(self) -> bool:
        return self.majorization is not None and self.majorization.holds

    @property
    def distinct_var_holds_up_to_k_max(self) -> bool:
        return self.sums_equal and self.distinct_var_violation is None

    @property
    def subset_power_holds_up_to_k_max(self) -> bool:
        return self.sums_equal and self.subset_power_violation is None


def theorem2_scan(x: RationalVector, y: RationalVector, k_max: int) -> Theorem2Report:
    """Scan majorization against the G and M family inequalities.

    Requires exactly equal totals; with unequal totals the characterization
    does not apply and a not-applicable report is returned.  Cells are walked
    in (r, k) order and the first violation per family is recorded.
    """
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    if k_max < 1:
        raise ValueError("need k_max >= 1")
    if x.total() != y.total():
        return Theorem2Report(sums_equal=False, k_max=k_max, majorization=None,
                              distinct_var_violation=None,
                              subset_power_violation=None, cells_checked=0)
    verdict = majorizes(x, y)
    n = len(x)
    g_violation = None
    m_violation = None
    cells = 0
    for r in range(1, n + 1):
        for k in range(r, k_max + 1):
            cells += 1
            if g_violation is None:
                gx, gy = families.g_kr(x, k, r), families.g_kr(y, k, r)
                if gx > gy:
                    g_violation = CellViolation(r, k, gx, gy)
            if m_violation is None:
                mx, my = families.m_kr(x, k, r), families.m_kr(y, k, r)
                if mx < my:
                    m_violation = CellViolation(r, k, mx, my)
    return Theorem2Report(sums_equal=True, k_max=k_max, majorization=verdict,
                          distinct_var_violation=g_violation,
                          subset_power_violation=m_violation,
                          cells_checked=cells)


def s_r_limit_estimate(x: RationalVector, r: int, k_max: int) -> list[float]:
    """``M_{k,r}^(1/k)`` for k = 1..k_max; approaches the sum of the r largest
    entries from above as k grows."""
    if not 1 <= r <= len(x):
        raise ValueError("need 1 <= r <= n")
    out = []
    for k in range(1, k_max + 1):
        m = families.m_kr(x, k, r)
        out.append(math.exp(log_of_fraction(m) / k) if m > 0 else 0.0)
    return out


def psi_value(s: float, lam: float) -> float:
    """``min(s, lambda) + lambda * log_+(s / lambda)`` (natural log)."""
    if lam <= 0:
        raise ValueError("lambda must be positive")
    if s < 0:
        raise ValueError("psi is defined on [0, inf)")
    if s <= lam:
        return s
    return lam + lam * math.log(s / lam)


def psi_sum(x: RationalVector, lam: Union[int, float, Fraction]) -> float:
    """Sum of the concave test function over the entries, in floats."""
    lamf = float(lam)
    return math.fsum(psi_value(float(e), lamf) for e in x.entries)


@dataclass(frozen=True)
class PsiComparison:
    lam: float
    lhs: float
    rhs: float
    holds: bool


def psi_compare(x: RationalVector, y: RationalVector,
                lambda_grid: Sequence[Union[int, float, Fraction]],
                tol: float = 1e-9) -> list[PsiComparison]:
    """Evaluate ``sum psi(x_i) <= sum psi(y_i)`` on a lambda grid.

    An empirical companion to the polynomial-family hypotheses; this reports
    observations and proves nothing.
    """
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    rows = []
    for lam in lambda_grid:
        lhs, rhs = psi_sum(x, lam), psi_sum(y, lam)
        rows.append(PsiComparison(float(lam), lhs, rhs,
                                  lhs <= rhs + tol * max(1.0, abs(rhs))))
    return rows


def t_transform_pair(rng: random.Random, n: int, max_numerator: int = 40,
                     denominator_bound: int = 8,
                     max_transforms: int = 3) -> tuple[RationalVector, RationalVector]:
    """A random exact pair with x majorizing y, built by Robin Hood transfers:
    repeatedly move part of the gap between two entries from the larger to the
    smaller.  Majorization holds by construction, no rejection needed."""
    if n < 1:
        raise ValueError("need n >= 1")
    x = RationalVector(Fraction(rng.randint(0, max_numerator),
                                rng.randint(1, denominator_bound))
                       for _ in range(n))
    ys = list(x.entries)
    if n >= 2:
        for _ in range(rng.randint(1, max_transforms)):
            i, j = rng.sample(range(n), 2)
            if ys[i] == ys[j]:
                continue
            if ys[i] < ys[j]:
                i, j = j, i
            delta = (ys[i] - ys[j]) * Fraction(rng.randint(0, 8), 16)
            ys[i] -= delta
            ys[j] += delta
    return x, RationalVector(ys)

"""The headline verifier: exact polynomial-family comparisons on one side,
lp-mean grids on the other.

The hypothesis side is exact rational arithmetic.  The conclusion side is
always measured on float grids, even where the implication guarantees the
outcome, so the verifier doubles as an end-to-end self-test and as a
falsifier for user-supplied template variants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .families import f_kr_all
from .vectors import RationalVector, lp_mean

__all__ = [
    "HypothesisCheck",
    "HypothesisReport",
    "check_hypotheses",
    "check_hypotheses_coeffs",
    "GridPoint",
    "ConclusionReport",
    "verify_conclusions",
    "FullReport",
    "full_report",
]

DEFAULT_GRID_POINTS = 101
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class HypothesisCheck:
    k: int
    fx: Fraction
    fy: Fraction
    ok: bool


@dataclass(frozen=True)
class HypothesisReport:
    """Per-k ledger of the exact comparisons F_{k,r}(x) <= F_{k,r}(y) for
    k in [r, n*r], plus the exact total-sum equality flag."""

    r: int
    n: int
    checks: tuple[HypothesisCheck, ...]
    all_pass: bool
    sums_equal: bool

    def first_failure(self) -> Optional[HypothesisCheck]:
        for c in self.checks:
            if not c.ok:
                return c
        return None


def check_hypotheses(x: RationalVector, y: RationalVector, r: int) -> HypothesisReport:
    """Exact family comparisons for every k in [r, n*r]."""
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    return check_hypotheses_coeffs(f_kr_all(x, r), f_kr_all(y, r), r, len(x))


def check_hypotheses_coeffs(fx: Sequence[Fraction], fy: Sequence[Fraction],
                            r: int, n: int) -> HypothesisReport:
    """The same check from precomputed coefficient tables (index k = 0..n*r),
    so exact matrix-determinant pipelines can feed the verifier directly."""
    if r < 1:
        raise ValueError("need r >= 1")
    if len(fx) != n * r + 1 or len(fy) != n * r + 1:
        raise ValueError(f"coefficient tables must have length {n * r + 1}")
    checks = tuple(HypothesisCheck(k, fx[k], fy[k], fx[k] <= fy[k])
                   for k in range(r, n * r + 1))
    # coefficient 1 is the entry sum for every template order
    sums_equal = fx[1] == fy[1]
    return HypothesisReport(r=r, n=n, checks=checks,
                            all_pass=all(c.ok for c in checks),
                            sums_equal=sums_equal)


@dataclass(frozen=True)
class GridPoint:
    p: float
    x_mean: float
    y_mean: float
    margin: float
    ok: Optional[bool]  # None when the point is measured but not asserted


@dataclass(frozen=True)
class ConclusionReport:
    """Float comparisons of lp means over [0, 1] and [1, r+1].

    Low-grid margins are y - x (x is required not to exceed y); high-grid
    margins are x - y, and the high grid is only asserted under exact sum
    equality.
    """

    r: int
    tol: float
    sums_equal: bool
    low_grid: tuple[GridPoint, ...]
    high_grid: tuple[GridPoint, ...]

    @property
    def low_all_pass(self) -> bool:
        return all(pt.ok for pt in self.low_grid)

    @property
    def high_all_pass(self) -> Optional[bool]:
        if not self.sums_equal:
            return None
        return all(pt.ok for pt in self.high_grid)

    @property
    def all_asserted_pass(self) -> bool:
        high = self.high_all_pass
        return self.low_all_pass and (high is None or high)


def verify_conclusions(x: RationalVector, y: RationalVector, r: int,
                       grid_points: int = DEFAULT_GRID_POINTS,
                       tol: float = DEFAULT_TOL,
                       sums_equal: Optional[bool] = None) -> ConclusionReport:
    """Measure the lp-mean inequalities on uniform grids over [0, 1] and
    [1, r+1]; both interval endpoints always land on grid points.

    ``sums_equal`` may be supplied by callers that certified it through an
    exact side channel (e.g. equal degree-1 determinant coefficients); by
    default it is computed exactly from the vectors.
    """
    if len(x) != len(y):
        raise ValueError("vectors must have equal length")
    if r < 1:
        raise ValueError("need r >= 1")
    if grid_points < 3:
        raise ValueError("need at least 3 grid points")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if sums_equal is None:
        sums_equal = x.total() == y.total()

    low = []
    for i in range(grid_points):
        p = i / (grid_points - 1)
        nx, ny = lp_mean(x, p), lp_mean(y, p)
        margin = ny - nx
        low.append(GridPoint(p, nx, ny, margin, margin >= -tol))
    high = []
    for i in range(grid_points):
        p = 1.0 + i * r / (grid_points - 1)
        nx, ny = lp_mean(x, p), lp_mean(y, p)
        margin = nx - ny
        high.append(GridPoint(p, nx, ny, margin,
                              (margin >= -tol) if sums_equal else None))
    return ConclusionReport(r=r, tol=tol, sums_equal=sums_equal,
                            low_grid=tuple(low), high_grid=tuple(high))


@dataclass(frozen=True)
class FullReport:
    """Hypothesis reports for r = 1..r_max, the largest certified order, and
    the conclusion grids measured at that order."""

    hypotheses: tuple[HypothesisReport, ...]
    certified_r: Optional[int]
    conclusions: Optional[ConclusionReport]

    @property
    def certified_interval(self) -> Optional[tuple[float, float]]:
        # the certified p-interval [0, r+1]; the upper half needs equal sums
        if self.certified_r is None:
            return None
        return (0.0, float(self.certified_r + 1))


def full_report(x: RationalVector, y: RationalVector, r_max: int,
                grid_points: int = DEFAULT_GRID_POINTS,
                tol: float = DEFAULT_TOL) -> FullReport:
    """Scan template orders 1..r_max, certify the largest passing order, and
    measure its conclusion grids."""
    if r_max < 1:
        raise ValueError("need r_max >= 1")
    reports = tuple(check_hypotheses(x, y, r) for r in range(1, r_max + 1))
    certified = None
    for rep in reports:
        if rep.all_pass:
            certified = rep.r
    conclusions = None
    if certified is not None:
        conclusions = verify_conclusions(x, y, certified, grid_points, tol)
    return FullReport(hypotheses=reports, certified_r=certified,
                      conclusions=conclusions)

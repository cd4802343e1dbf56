"""The named symmetric-polynomial families: fast exact evaluators and gradients.

All families act on nonnegative rational vectors:

- ``E_k``       elementary symmetric polynomials,
- ``F_{k,r}``   terms of ``(sum x)^k / k!`` with every exponent at most r,
- ``G_{k,r}``   terms with at least r distinct variables (``Gbar`` is the
                complement, ``DeltaGbar`` the exactly-r slice),
- ``M_{k,r}``   k-th powers of all r-element subset sums,
- ``H_S``       the generic family indexed by a permutation-invariant set of
                exponent tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Callable, Optional

from . import oracles
from .oracles import OracleSizeError
from .series import TruncatedSeries, product_over_vector, series_mul, substitute_scale, taylor_template
from .vectors import RationalVector

__all__ = [
    "FamilyValue",
    "IndexSet",
    "SpecialIdentityReport",
    "elementary_all",
    "f_kr_all",
    "f_kr",
    "f_kr_oracle",
    "f_special_identities",
    "g_kr",
    "gbar_kr",
    "delta_gbar_kr",
    "m_kr",
    "m_kr_from_gbar",
    "binom_ext",
    "h_s",
    "max_part_index_set",
    "min_support_index_set",
    "is_schur_concave_index_set",
    "grad_f_kr",
]

FAMILIES = ("E", "F", "G", "Gbar", "DeltaGbar", "M", "H_S")

# Inclusion-exclusion over variable supports walks 2^|support| subsets; past
# this width the exact path is refused rather than left to run unbounded.
MAX_SUPPORT_DIMENSION = 20


@dataclass(frozen=True)
class FamilyValue:
    """A tagged exact family value."""

    family: str
    k: int
    value: Fraction
    r: Optional[int] = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.value < 0:
            raise ValueError("family values on nonnegative vectors are nonnegative")


def elementary_all(x: RationalVector) -> list[Fraction]:
    """E_0..E_n by incremental multiplication of the linear factors."""
    es = [Fraction(1)]
    for xi in x.entries:
        es.append(Fraction(0))
        for k in range(len(es) - 1, 0, -1):
            es[k] += xi * es[k - 1]
    return es


def f_kr_all(x: RationalVector, r: int) -> list[Fraction]:
    """F_{0,r}..F_{nr,r}: the coefficient list of the order-r exponential-template
    product over the entries."""
    if r < 1:
        raise ValueError("need r >= 1")
    return list(product_over_vector(x, taylor_template(r)).coeffs)


def f_kr(x: RationalVector, k: int, r: int) -> Fraction:
    """A single F_{k,r}; zero above the top degree n*r."""
    if k < 0:
        raise ValueError("need k >= 0")
    if r < 1:
        raise ValueError("need r >= 1")
    if k > len(x) * r:
        return Fraction(0)
    # truncating the product at degree k is enough for one coefficient
    return product_over_vector(x, taylor_template(r), degree_bound=k).coefficient(k)


def f_kr_oracle(x: RationalVector, r: int, k: int) -> Fraction:
    """Brute-force F_{k,r} by its defining constrained-composition sum.

    Test equipment; shares no arithmetic with the series path.
    """
    return oracles.oracle_value("F", x, k, r)


@dataclass(frozen=True)
class SpecialIdentityReport:
    """Exact pass/fail for the closed forms satisfied by the F family."""

    low_degree_ok: bool   # F_{k,r} = E_1^k / k! for k <= r
    r_plus_one_ok: bool   # F_{r+1,r} = (E_1^{r+1} - sum_i x_i^{r+1}) / (r+1)!
    top_degree_ok: bool   # F_{nr,r} = E_n^r / (r!)^n

    @property
    def all_ok(self) -> bool:
        return self.low_degree_ok and self.r_plus_one_ok and self.top_degree_ok


def f_special_identities(x: RationalVector, r: int) -> SpecialIdentityReport:
    if r < 1:
        raise ValueError("need r >= 1")
    n = len(x)
    coeffs = f_kr_all(x, r)
    e1 = x.total()
    low = all(coeffs[k] == e1 ** k / factorial(k) for k in range(min(r, n * r) + 1))
    value_rp1 = coeffs[r + 1] if r + 1 <= n * r else Fraction(0)
    power_sum = sum((e ** (r + 1) for e in x.entries), Fraction(0))
    rp1 = value_rp1 == (e1 ** (r + 1) - power_sum) / factorial(r + 1)
    en = elementary_all(x)[n]
    top = coeffs[n * r] == en ** r / Fraction(factorial(r)) ** n
    return SpecialIdentityReport(low, rp1, top)


def _exactly_supported_sum(x: RationalVector, k: int,
                           support: tuple[int, ...]) -> Fraction:
    # monomial mass of (sum x)^k / k! whose variable set is exactly `support`
    m = len(support)
    total = Fraction(0)
    for size in range(m + 1):
        sign = -1 if (m - size) % 2 else 1
        for sub in combinations(support, size):
            s = sum((x[i] for i in sub), Fraction(0))
            total += sign * s ** k
    return total / factorial(k)


def _check_support_width(n: int) -> None:
    if n > MAX_SUPPORT_DIMENSION:
        raise OracleSizeError(
            f"support enumeration refused for n = {n} > {MAX_SUPPORT_DIMENSION}")


def gbar_kr(x: RationalVector, k: int, r: int) -> Fraction:
    """Terms of ``(sum x)^k / k!`` using fewer than r distinct variables,
    by inclusion-exclusion over variable supports."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    n = len(x)
    _check_support_width(n)
    total = Fraction(0)
    for size in range(min(r - 1, n) + 1):
        for support in combinations(range(n), size):
            total += _exactly_supported_sum(x, k, support)
    return total


def delta_gbar_kr(x: RationalVector, k: int, r: int) -> Fraction:
    """Terms using exactly r distinct variables: Gbar_{k,r+1} - Gbar_{k,r}."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    n = len(x)
    _check_support_width(n)
    if r > n:
        return Fraction(0)
    total = Fraction(0)
    for support in combinations(range(n), r):
        total += _exactly_supported_sum(x, k, support)
    return total


def g_kr(x: RationalVector, k: int, r: int) -> Fraction:
    """Terms of ``(sum x)^k / k!`` using at least r distinct variables."""
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    if k < r:
        return Fraction(0)  # a degree-k monomial has at most k distinct variables
    return x.total() ** k / factorial(k) - gbar_kr(x, k, r)


def m_kr(x: RationalVector, k: int, r: int) -> Fraction:
    """Sum of k-th powers of all r-element subset sums."""
    if k < 1 or r < 1:
        raise ValueError("need k, r >= 1")
    n = len(x)
    if r > n:
        return Fraction(0)  # empty sum
    if comb(n, r) > oracles.MAX_SUBSETS:
        raise OracleSizeError(f"more than {oracles.MAX_SUBSETS} subsets")
    total = Fraction(0)
    for idx in combinations(range(n), r):
        s = sum((x[i] for i in idx), Fraction(0))
        total += s ** k
    return total


def binom_ext(a: int, b: int) -> int:
    """Binomial coefficient with the conventions the subset-power identity
    needs: C(a, 0) = 1 for every integer a; 0 when b < 0 or b > a >= 0."""
    if b == 0:
        return 1
    if b < 0:
        return 0
    assert a >= 0, "negative upper index with positive lower never arises here"
    return comb(a, b) if b <= a else 0


def m_kr_from_gbar(x: RationalVector, k: int, r: int) -> Fraction:
    """M_{k,r} reassembled from the Gbar family:
    ``M/k! = sum_m C(n-r-1+m, m) * Gbar_{k, r+1-m}`` for m = 0..r-1."""
    n = len(x)
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    total = Fraction(0)
    for m in range(r):
        total += binom_ext(n - r - 1 + m, m) * gbar_kr(x, k, r + 1 - m)
    return factorial(k) * total


@dataclass(frozen=True)
class IndexSet:
    """A set of exponent tuples p (p_i >= 0, sum p_i = k) given by a
    membership predicate, which must be permutation-invariant for the
    associated polynomial to be symmetric."""

    n: int
    k: int
    membership: Callable[[tuple[int, ...]], bool]


def max_part_index_set(n: int, k: int, r: int) -> IndexSet:
    """Exponent tuples with every part at most r (the F-family index set)."""
    return IndexSet(n, k, lambda p: max(p) <= r)


def min_support_index_set(n: int, k: int, r: int) -> IndexSet:
    """Exponent tuples with at least r nonzero parts (the G-family index set)."""
    return IndexSet(n, k, lambda p: sum(1 for v in p if v) >= r)


def h_s(x: RationalVector, idx: IndexSet) -> Fraction:
    """Generic family value: direct sum of ``prod_i x_i^{p_i} / p_i!`` over
    the members of the index set."""
    if len(x) != idx.n:
        raise ValueError("vector length does not match the index set")
    total = Fraction(0)
    stream = oracles.CompositionStream(idx.n, idx.k)
    for p in oracles.enumerate_compositions(stream):
        if idx.membership(p):
            term = Fraction(1)
            for xi, e in zip(x.entries, p):
                if e:
                    term *= xi ** e / factorial(e)
            total += term
    return total


def is_schur_concave_index_set(
        idx: IndexSet) -> tuple[bool, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """Check downward closure under integer majorization.

    Returns (True, None), or (False, (p, q)) for the first member p that
    majorizes a non-member q.  Raises if the membership predicate is not
    permutation-invariant.
    """
    stream = oracles.CompositionStream(idx.n, idx.k)
    comps = list(oracles.enumerate_compositions(stream))
    member: dict[tuple[int, ...], bool] = {}
    by_signature: dict[tuple[int, ...], bool] = {}
    for p in comps:
        m = bool(idx.membership(p))
        member[p] = m
        sig = tuple(sorted(p, reverse=True))
        if by_signature.setdefault(sig, m) != m:
            raise ValueError("membership is not permutation-invariant")
    non_members = [q for q in comps if not member[q]]
    for p in comps:
        if not member[p]:
            continue
        for q in non_members:
            if oracles.majorizes_int(p, q):
                return False, (p, q)
    return True, None


def grad_f_kr(x: RationalVector, r: int, k: int) -> tuple[Fraction, ...]:
    """Exact gradient of F_{k,r}: component i is the t^k coefficient of
    ``tpl'(x_i t) * t * prod_{j != i} tpl(x_j t)``."""
    n = len(x)
    if r < 1:
        raise ValueError("need r >= 1")
    if not 0 <= k <= n * r:
        raise ValueError(f"need 0 <= k <= {n * r}")
    if k == 0:
        return tuple(Fraction(0) for _ in range(n))
    tpl = taylor_template(r)
    d = k
    factors = [substitute_scale(tpl, xi, d) for xi in x.entries]
    prefix = [TruncatedSeries.one(d)]
    for f in factors:
        prefix.append(series_mul(prefix[-1], f))
    suffix = [TruncatedSeries.one(d)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = series_mul(factors[i], suffix[i + 1])
    grads = []
    for i, xi in enumerate(x.entries):
        deriv = [Fraction(0)] * (d + 1)
        power = Fraction(1)  # x_i^{j-1}
        for j in range(1, min(tpl.degree, d) + 1):
            deriv[j] = j * tpl.base_coeffs[j] * power
            power *= xi
        rest = series_mul(prefix[i], suffix[i + 1])
        grads.append(series_mul(rest, TruncatedSeries(deriv)).coefficient(k))
    return tuple(grads)

"""Exact truncated power series in one formal variable and per-entry products.

The generating objects here all share one shape: a base template
``s -> sum_j a_j s^j`` with ``a_0 = 1`` is substituted at ``s = x_i * t`` for
every entry of a vector and the factors are multiplied out modulo ``t^(D+1)``.
The coefficient lists are dense because these products are dense by
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Optional

from .vectors import RationalLike, RationalVector, to_fraction

__all__ = [
    "TruncatedSeries",
    "SeriesTemplate",
    "Catalyst",
    "series_mul",
    "taylor_template",
    "padded_taylor_template",
    "substitute_scale",
    "product_over_vector",
    "catalyst_product",
    "tensor",
]


class TruncatedSeries:
    """Polynomial in t modulo ``t^(D+1)`` with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = tuple(to_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def one(cls, degree_bound: int) -> "TruncatedSeries":
        if degree_bound < 0:
            raise ValueError("degree bound must be nonnegative")
        return cls([Fraction(1)] + [Fraction(0)] * degree_bound)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree_bound(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if not 0 <= k <= self.degree_bound:
            raise IndexError(f"coefficient {k} outside degree bound {self.degree_bound}")
        return self._coeffs[k]

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries([{', '.join(str(c) for c in self._coeffs)}])"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact Cauchy product truncated at the common degree bound."""
    if a.degree_bound != b.degree_bound:
        raise ValueError(
            f"degree bounds differ: {a.degree_bound} vs {b.degree_bound}")
    d = a.degree_bound
    ac, bc = a.coeffs, b.coeffs
    out = [Fraction(0)] * (d + 1)
    for i, ai in enumerate(ac):
        if not ai:
            continue
        for j in range(d - i + 1):
            bj = bc[j]
            if bj:
                out[i + j] += ai * bj
    return TruncatedSeries(out)


@dataclass(frozen=True)
class SeriesTemplate:
    """Base series ``s -> sum_j a_j s^j`` with a_0 = 1 and nonnegative a_j."""

    base_coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(to_fraction(c) for c in self.base_coeffs)
        object.__setattr__(self, "base_coeffs", coeffs)
        if not coeffs or coeffs[0] != 1:
            raise ValueError("a template must have constant coefficient 1")
        if any(c < 0 for c in coeffs):
            raise ValueError("template coefficients must be nonnegative")

    @property
    def degree(self) -> int:
        return len(self.base_coeffs) - 1


def taylor_template(r: int) -> SeriesTemplate:
    """The degree-r truncation of exp: coefficients 1/j! for j <= r."""
    if r < 1:
        raise ValueError("template order must be >= 1")
    return SeriesTemplate(tuple(Fraction(1, factorial(j)) for j in range(r + 1)))


def padded_taylor_template(r: int, extras: Mapping[int, RationalLike]) -> SeriesTemplate:
    """Order-r exponential template extended by terms ``a_j s^j / j!`` with
    0 <= a_j < 1 for j > r.

    This builds order-zero style variants of the exponential template; any
    growth condition on the resulting entire function is the caller's
    responsibility.
    """
    if r < 1:
        raise ValueError("template order must be >= 1")
    if not extras:
        return taylor_template(r)
    top = max(extras)
    if min(extras) <= r:
        raise ValueError("padding starts above the template order")
    coeffs = [Fraction(1, factorial(j)) for j in range(r + 1)]
    for j in range(r + 1, top + 1):
        a = to_fraction(extras.get(j, 0))
        if not 0 <= a < 1:
            raise ValueError("padding coefficients must lie in [0, 1)")
        coeffs.append(a / factorial(j))
    return SeriesTemplate(tuple(coeffs))


@dataclass(frozen=True)
class Catalyst:
    """Finite auxiliary vector c with c_0 = 1; comparisons are run on the
    tensor products of the inputs with c."""

    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        ent = tuple(to_fraction(c) for c in self.entries)
        object.__setattr__(self, "entries", ent)
        if not ent or ent[0] != 1:
            raise ValueError("a catalyst must start with entry 1")
        if any(c < 0 for c in ent):
            raise ValueError("catalyst entries must be nonnegative")

    def __len__(self) -> int:
        return len(self.entries)


def substitute_scale(tpl: SeriesTemplate, a: RationalLike,
                     degree_bound: int) -> TruncatedSeries:
    """The series of ``tpl(a*t)`` modulo ``t^(D+1)``: coefficient j is a^j a_j."""
    af = to_fraction(a)
    if af < 0:
        raise ValueError("scale must be nonnegative")
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    out = [Fraction(0)] * (degree_bound + 1)
    power = Fraction(1)
    for j in range(degree_bound + 1):
        if j <= tpl.degree:
            out[j] = tpl.base_coeffs[j] * power
        power *= af
    return TruncatedSeries(out)


def product_over_vector(x: RationalVector, tpl: SeriesTemplate,
                        degree_bound: Optional[int] = None) -> TruncatedSeries:
    """Exact coefficients of ``prod_i tpl(x_i t)`` modulo ``t^(D+1)``.

    The default bound n * deg(tpl) captures the full polynomial when the
    template is itself a polynomial; callers may truncate lower.
    """
    d = len(x) * tpl.degree if degree_bound is None else degree_bound
    acc = TruncatedSeries.one(d)
    for e in x.entries:
        acc = series_mul(acc, substitute_scale(tpl, e, d))
    return acc


def tensor(x: RationalVector, c: Catalyst) -> RationalVector:
    """All products x_i * c_j in row-major order."""
    return RationalVector(xi * cj for xi in x.entries for cj in c.entries)


def catalyst_product(x: RationalVector, c: Catalyst, tpl: SeriesTemplate,
                     degree_bound: Optional[int] = None) -> TruncatedSeries:
    """Exact coefficients of ``prod_i prod_j tpl(c_j x_i t)``.

    Evaluated one catalyst entry at a time (a scaled copy of x per entry),
    which keeps the route independent of the flat product over the tensor
    vector that the identity tests compare against.
    """
    d = len(x) * len(c) * tpl.degree if degree_bound is None else degree_bound
    acc = TruncatedSeries.one(d)
    for cj in c.entries:
        acc = series_mul(acc, product_over_vector(x.scale(cj), tpl, d))
    return acc

"""Brute-force reference evaluators for the polynomial families.

This is test equipment: independent enumeration loops that deliberately share
no code with the fast paths they check.  Oversized instances are refused with
a typed error rather than attempted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Optional

from .vectors import RationalVector

__all__ = [
    "OracleSizeError",
    "CompositionStream",
    "enumerate_compositions",
    "composition_count",
    "oracle_value",
    "majorizes_int",
    "MAX_COMPOSITIONS",
    "MAX_SUBSETS",
]

MAX_COMPOSITIONS = 200_000
MAX_SUBSETS = 10 ** 6

CONSTRAINTS = ("none", "max_le_r", "nonzero_ge_r", "distinct_lt_r")


class OracleSizeError(ValueError):
    """A brute-force enumeration would exceed the size guards."""


@dataclass(frozen=True)
class CompositionStream:
    """Lexicographic stream of compositions of k into n nonnegative parts.

    Constraints: "max_le_r" keeps every part <= r, "nonzero_ge_r" keeps
    compositions with at least r nonzero parts, "distinct_lt_r" keeps those
    with fewer than r nonzero parts (a nonzero part is a used variable).
    """

    n: int
    k: int
    constraint: str = "none"
    r: Optional[int] = None

    def __post_init__(self) -> None:
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")
        if self.constraint != "none" and self.r is None:
            raise ValueError("constrained streams need the order parameter r")
        if self.n < 1 or self.k < 0:
            raise ValueError("need n >= 1 and k >= 0")


def composition_count(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def _check_budget(n: int, k: int) -> None:
    count = composition_count(n, k)
    if count > MAX_COMPOSITIONS:
        raise OracleSizeError(
            f"{count} compositions of {k} into {n} parts exceeds the "
            f"oracle budget of {MAX_COMPOSITIONS}")


def enumerate_compositions(stream: CompositionStream) -> Iterator[tuple[int, ...]]:
    """Every admitted composition exactly once, in lexicographic order."""
    _check_budget(stream.n, stream.k)
    cap = stream.r if stream.constraint == "max_le_r" else stream.k

    def rec(parts_left: int, total_left: int, prefix: tuple[int, ...]):
        if parts_left == 1:
            if total_left <= cap:
                yield prefix + (total_left,)
            return
        for v in range(min(cap, total_left) + 1):
            yield from rec(parts_left - 1, total_left - v, prefix + (v,))

    for composition in rec(stream.n, stream.k, ()):
        if stream.constraint == "nonzero_ge_r":
            if sum(1 for v in composition if v) < stream.r:
                continue
        elif stream.constraint == "distinct_lt_r":
            if sum(1 for v in composition if v) >= stream.r:
                continue
        yield composition


def _sum_over_compositions(x: RationalVector, stream: CompositionStream) -> Fraction:
    total = Fraction(0)
    for composition in enumerate_compositions(stream):
        term = Fraction(1)
        for xi, power in zip(x.entries, composition):
            if power:
                term *= xi ** power / factorial(power)
        total += term
    return total


def oracle_value(family: str, x: RationalVector, k: int, r: int) -> Fraction:
    """Ground truth by direct summation of the defining expression.

    Families: "F" (every exponent <= r), "G" (at least r distinct variables),
    "Gbar" (fewer than r distinct variables), "M" (k-th powers of r-element
    subset sums).
    """
    n = len(x)
    if family == "F":
        return _sum_over_compositions(x, CompositionStream(n, k, "max_le_r", r))
    if family == "G":
        return _sum_over_compositions(x, CompositionStream(n, k, "nonzero_ge_r", r))
    if family == "Gbar":
        return _sum_over_compositions(x, CompositionStream(n, k, "distinct_lt_r", r))
    if family == "M":
        if r > n:
            return Fraction(0)
        if n > 24 or comb(n, r) > MAX_SUBSETS:
            raise OracleSizeError(f"too many {r}-subsets of {n} elements")
        total = Fraction(0)
        # bitmask order, independent of the combinations() order of the fast path
        for mask in range(1 << n):
            if mask.bit_count() != r:
                continue
            s = sum((x[i] for i in range(n) if mask >> i & 1), Fraction(0))
            total += s ** k
        return total
    raise ValueError(f"unknown family {family!r}")


def majorizes_int(p: tuple[int, ...], q: tuple[int, ...]) -> bool:
    """Integer majorization: sorted partial-sum dominance with equal totals."""
    if len(p) != len(q) or sum(p) != sum(q):
        return False
    acc_p = acc_q = 0
    for a, b in zip(sorted(p, reverse=True), sorted(q, reverse=True)):
        acc_p += a
        acc_q += b
        if acc_p < acc_q:
            return False
    return True

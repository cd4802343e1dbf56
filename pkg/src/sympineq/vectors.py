"""Exact nonnegative rational vectors and the lp-mean conventions shared repo-wide.

Every polynomial-family value in this package is an exact ``fractions.Fraction``;
lp means are the one deliberately float-valued quantity, and they are only ever
compared on grids with explicit tolerances.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Iterator, Union

RationalLike = Union[Fraction, int, float, str]

__all__ = [
    "RationalLike",
    "RationalVector",
    "to_fraction",
    "log_of_fraction",
    "lp_mean",
    "partial_sums_desc",
]


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce a scalar to an exact rational.

    Strings parse exactly: ``"3/7"`` as a quotient, ``"1.9"`` as the decimal
    19/10 -- never as the nearest binary float.  Python floats convert to the
    exact rational value they already hold.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, (int, str, float)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def log_of_fraction(q: Fraction) -> float:
    """Natural log of a positive rational, safe far beyond the float range."""
    if q <= 0:
        raise ValueError("log of a nonpositive rational")
    return math.log(q.numerator) - math.log(q.denominator)


class RationalVector:
    """Finite vector of nonnegative exact rationals; the universal input type."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[RationalLike]):
        ent = tuple(to_fraction(e) for e in entries)
        if not ent:
            raise ValueError("a vector needs at least one entry")
        for e in ent:
            if e < 0:
                raise ValueError(f"vector entries must be nonnegative, got {e}")
        self._entries = ent

    @classmethod
    def from_json(cls, text: str) -> "RationalVector":
        """Parse the shared vector literal format: a JSON array whose items are
        numbers or strings, each read as an exact rational."""
        data = json.loads(text, parse_float=Fraction)
        if not isinstance(data, list):
            raise ValueError("vector literal must be a JSON array")
        return cls(data)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._entries)

    def __getitem__(self, i: int) -> Fraction:
        return self._entries[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalVector) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"RationalVector([{', '.join(str(e) for e in self._entries)}])"

    def total(self) -> Fraction:
        return sum(self._entries, Fraction(0))

    def sorted_desc(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self._entries, reverse=True))

    def scale(self, c: RationalLike) -> "RationalVector":
        return RationalVector(e * to_fraction(c) for e in self._entries)

    def to_floats(self) -> list[float]:
        return [float(e) for e in self._entries]


def lp_mean(x: RationalVector, p: Union[int, float, Fraction]) -> float:
    """The lp mean ``(n^-1 sum x_i^p)^(1/p)`` with its continuous-limit conventions.

    p = 0 is the geometric mean, p = +/-inf the largest/smallest entry, and a
    negative p with any zero entry gives 0.
    """
    entries = x.entries
    n = len(entries)
    if isinstance(p, float) and math.isinf(p):
        chosen = max(entries) if p > 0 else min(entries)
        return float(chosen)
    pf = float(p)
    if pf == 0.0:
        if any(e == 0 for e in entries):
            return 0.0
        return math.exp(math.fsum(log_of_fraction(e) for e in entries) / n)
    if pf < 0 and any(e == 0 for e in entries):
        return 0.0
    mean_pow = math.fsum(float(e) ** pf for e in entries) / n
    return mean_pow ** (1.0 / pf)


def partial_sums_desc(x: RationalVector) -> tuple[Fraction, ...]:
    """Exact sums of the k largest entries, k = 1..n."""
    sums = []
    acc = Fraction(0)
    for e in x.sorted_desc():
        acc += e
        sums.append(acc)
    return tuple(sums)

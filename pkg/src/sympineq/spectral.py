"""Exact matrix pipeline: Gram products, determinant generating coefficients,
and truncated-exponential determinant expansions.

Eigenvalues are never extracted numerically here; every spectral quantity is
reached through exact determinant coefficients, so integer inputs give exact
rational outputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "IntMatrix",
    "as_int_matrix",
    "gram",
    "det_I_plus_tA",
    "f_from_matrix",
    "sign_flip_variants",
    "SpectralSummary",
    "spectral_summary",
]

IntMatrix = tuple[tuple[int, ...], ...]


def as_int_matrix(rows: Iterable[Sequence[int]]) -> IntMatrix:
    """Validate and freeze a rectangular integer matrix."""
    m = tuple(tuple(row) for row in rows)
    if not m or not m[0]:
        raise ValueError("matrix must be nonempty")
    width = len(m[0])
    for row in m:
        if len(row) != width:
            raise ValueError("rows must all have the same length")
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"integer entries required, got {v!r}")
    return m


def _require_square(m: IntMatrix) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("square matrix required")
    return n


def gram(q: Iterable[Sequence[int]]) -> IntMatrix:
    """The exact integer Gram product Q Q^T (symmetric, PSD)."""
    qm = as_int_matrix(q)
    return tuple(tuple(sum(a * b for a, b in zip(r1, r2)) for r2 in qm)
                 for r1 in qm)


def _mat_mul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def det_I_plus_tA(a: Iterable[Sequence[int]]) -> list[Fraction]:
    """Coefficients of det(I + tA), computed by the Faddeev-LeVerrier
    recurrence in exact rationals.

    Coefficient k is the k-th elementary symmetric function of the spectrum
    of A.
    """
    am = as_int_matrix(a)
    n = _require_square(am)
    af = [[Fraction(v) for v in row] for row in am]
    coeffs = [Fraction(1)]
    # w carries A * M_k where M_1 = I and M_{k+1} = A M_k + c_k I
    w = [row[:] for row in af]
    for k in range(1, n + 1):
        ck = -sum(w[i][i] for i in range(n)) / k
        coeffs.append(ck if k % 2 == 0 else -ck)  # e_k = (-1)^k c_k
        if k < n:
            for i in range(n):
                w[i][i] += ck
            w = _mat_mul(af, w)
    return coeffs


def _det_fraction(m: list[list[Fraction]]) -> Fraction:
    # Gaussian elimination with a nonzero pivot search; exact in rationals
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        pv = m[col][col]
        det *= pv
        for i in range(col + 1, n):
            if m[i][col]:
                f = m[i][col] / pv
                row, prow = m[i], m[col]
                for l in range(col, n):
                    row[l] -= f * prow[l]
    return det


def _interpolate(nodes: Sequence[int], values: Sequence[Fraction]) -> list[Fraction]:
    # exact Lagrange interpolation, coefficients accumulated per basis poly
    out = [Fraction(0)] * len(nodes)
    for i, (ti, yi) in enumerate(zip(nodes, values)):
        if yi == 0:
            continue
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, tj in enumerate(nodes):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for deg, b in enumerate(basis):
                new[deg] -= tj * b
                new[deg + 1] += b
            basis = new
            denom *= ti - tj
        scale = yi / denom
        for deg, b in enumerate(basis):
            out[deg] += scale * b
    return out


def f_from_matrix(a: Iterable[Sequence[int]], r: int) -> list[Fraction]:
    """Coefficients of ``det(sum_{j<=r} A^j t^j / j!)`` up to degree n*r.

    The determinant is evaluated exactly at the integer nodes t = 0..n*r and
    the coefficients recovered by exact interpolation; with the spectrum
    nonnegative, coefficient k is the order-r family value F_{k,r} of the
    eigenvalues.
    """
    am = as_int_matrix(a)
    n = _require_square(am)
    if r < 1:
        raise ValueError("need r >= 1")
    deg = n * r
    powers: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(n)]
                                      for i in range(n)]]
    for _ in range(r):
        prev = powers[-1]
        powers.append([[sum(prev[i][l] * am[l][j] for l in range(n))
                        for j in range(n)] for i in range(n)])
    values = []
    for t in range(deg + 1):
        mat = [[sum(Fraction(powers[j][i][l] * t ** j, factorial(j))
                    for j in range(r + 1))
                for l in range(n)] for i in range(n)]
        values.append(_det_fraction(mat))
    return _interpolate(range(deg + 1), values)


def sign_flip_variants(q: Iterable[Sequence[int]], budget: int) -> Iterator[IntMatrix]:
    """Deterministic enumeration of sign-flip variants of a matrix.

    Flip sets are bit masks over the nonzero positions in row-major order,
    masks ascending, so the unflipped matrix always comes first.  At most
    ``budget`` variants are yielded.
    """
    qm = as_int_matrix(q)
    if budget < 0:
        raise ValueError("budget must be nonnegative")
    positions = [(i, j) for i, row in enumerate(qm)
                 for j, v in enumerate(row) if v]
    total = 1 << len(positions)
    count = 0
    mask = 0
    while mask < total and count < budget:
        rows = [list(row) for row in qm]
        mm, idx = mask, 0
        while mm:
            if mm & 1:
                i, j = positions[idx]
                rows[i][j] = -rows[i][j]
            mm >>= 1
            idx += 1
        yield tuple(tuple(row) for row in rows)
        count += 1
        mask += 1


@dataclass(frozen=True)
class SpectralSummary:
    """Exact spectral coefficients of one matrix: the elementary symmetric
    values of its eigenvalues and the order-r family tables."""

    e_coeffs: tuple[Fraction, ...]
    f_coeffs: dict[int, tuple[Fraction, ...]]


def spectral_summary(a: Iterable[Sequence[int]], rs: Sequence[int] = (1,),
                     assume_psd: bool = False) -> SpectralSummary:
    """Bundle det(I + tA) coefficients with family tables for each order in rs.

    With ``assume_psd`` (e.g. for Gram products) negative determinant
    coefficients are rejected as a bug instead of returned.
    """
    am = as_int_matrix(a)
    e = tuple(det_I_plus_tA(am))
    if assume_psd and any(c < 0 for c in e):
        raise ValueError("negative spectral coefficient on a PSD matrix; "
                         "this indicates a bug in the input or the pipeline")
    f = {r: tuple(f_from_matrix(am, r)) for r in rs}
    return SpectralSummary(e_coeffs=e, f_coeffs=f)

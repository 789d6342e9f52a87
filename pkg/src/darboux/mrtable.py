"""The Morales-Ramis eigenvalue families E_k.

For a homogeneity degree k (k not in {-2, 0, 2}) the allowed Hessian
eigenvalues at Darboux points form an infinite but discrete set E_k: the union
of finitely many quadratics in an integer index j.  Two families apply to
every nonzero k; the others are specific to k in {-5, -4, -3, 3, 4, 5}.

Every family is quadratic in j with positive leading coefficient, so each is
bounded below and only finitely many j fall under any finite bound; that makes
membership decidable (exact integer-root tests on the quadratic) and bounded
enumeration complete.

Our normalization of the Darboux equation (gradient = k*c, not = c) scales all
eigenvalues by k relative to older statements; this is what keeps every E_k
bounded below by min(0, k).

The second k = 5 family is printed in our source material as
``-9/8 + (4 + 6j)^2 / 8``, whose j = -1 value -5/8 violates the min(0, k)
lower bound; the sibling k = -5 family and the bound both point to
``(4 + 10j)`` instead.  The corrected row is the default; the printed variant
stays available behind ``k5_variant="printed"``.
"""

from __future__ import annotations

from dataclasses import dataclass
from gmpy2 import is_square, isqrt, mpq, mpz

__all__ = [
    "MRRow",
    "EigenvalueCandidate",
    "K5_VARIANTS",
    "applicable_rows",
    "ek_contains",
    "ek_enumerate_up_to",
    "ek_enumerate_between",
    "ek_min",
]

EXCLUDED_DEGREES = (-2, 0, 2)

K5_VARIANTS = ("corrected", "printed")


class ExcludedDegreeError(ValueError):
    """k in {-2, 0, 2} is outside the theory."""


@dataclass(frozen=True)
class MRRow:
    """One family: lambda(j) = a2*j^2 + a1*j + a0, quadratic with a2 > 0."""

    row_id: int
    a2: mpq
    a1: mpq
    a0: mpq

    def value(self, j: int) -> mpq:
        return (self.a2 * j + self.a1) * j + self.a0

    def min_value(self) -> mpq:
        """Minimum over integer j (vertex rounded both ways)."""
        vertex = -self.a1 / (2 * self.a2)
        lo = _floor(vertex)
        return min(self.value(lo), self.value(lo + 1))

    def integer_roots(self, lam: mpq) -> list[int]:
        """All integers j with value(j) == lam, by exact discriminant test."""
        c = self.a0 - lam
        disc = self.a1 * self.a1 - 4 * self.a2 * c
        if disc < 0:
            return []
        root = _rational_sqrt(disc)
        if root is None:
            return []
        out = []
        for sgn in ((root, -root) if root else (root,)):
            j = (-self.a1 + sgn) / (2 * self.a2)
            if j.denominator == 1:
                out.append(int(j))
        return sorted(set(out))

    def j_range_upto(self, bound: mpq):
        """Integer interval [j_lo, j_hi] with value(j) <= bound (possibly empty)."""
        c = self.a0 - bound
        disc = self.a1 * self.a1 - 4 * self.a2 * c
        if disc <= 0:
            return None
        lo = (-self.a1 - _sqrt_upper(disc)) / (2 * self.a2)
        hi = (-self.a1 + _sqrt_upper(disc)) / (2 * self.a2)
        j_lo, j_hi = _ceil(lo) - 1, _floor(hi) + 1
        while j_lo <= j_hi and self.value(j_lo) > bound:
            j_lo += 1
        while j_hi >= j_lo and self.value(j_hi) > bound:
            j_hi -= 1
        if j_lo > j_hi:
            return None
        return j_lo, j_hi


@dataclass(frozen=True)
class EigenvalueCandidate:
    """An allowed eigenvalue together with every (row, j) realizing it."""

    value: mpq
    witnesses: tuple

    def __str__(self) -> str:
        w = ", ".join(f"(row {r}, j={j})" for r, j in self.witnesses)
        return f"{self.value} via {w}"


def _floor(q: mpq) -> int:
    return int(q.numerator // q.denominator)


def _ceil(q: mpq) -> int:
    return -_floor(-q)


def _rational_sqrt(q: mpq):
    """Exact nonnegative square root of a rational, or None."""
    if q < 0:
        return None
    n, d = mpz(q.numerator), mpz(q.denominator)
    if not (is_square(n) and is_square(d)):
        return None
    return mpq(isqrt(n), isqrt(d))


def _sqrt_upper(q: mpq) -> mpq:
    """A rational upper bound for sqrt(q), tight enough for range scans."""
    n, d = mpz(q.numerator), mpz(q.denominator)
    return mpq(isqrt(n * d) + 1, d)


def _check_degree(k: int) -> None:
    if k in EXCLUDED_DEGREES:
        raise ExcludedDegreeError(f"homogeneity degree {k} is excluded")
    if k == 0:
        raise ExcludedDegreeError("homogeneity degree 0 is excluded")


# Specific rows: (k, shift a0, scale s, offset b, stride m) encoding
# a0 + s*(b + m*j)^2.  Order follows the published table so that witness row
# ids are stable; rows 1 and 2 are the generic families.
_SPECIFIC = [
    (3, -5, mpq(-49, 8), mpq(1, 8), mpq(10, 3), 10),
    (4, -5, mpq(-49, 8), mpq(1, 8), mpq(4), 10),
    (5, -4, mpq(-9, 2), mpq(1, 2), mpq(4, 3), 4),
    (6, -3, mpq(-25, 8), mpq(1, 8), mpq(2), 6),
    (7, -3, mpq(-25, 8), mpq(1, 8), mpq(3, 2), 6),
    (8, -3, mpq(-25, 8), mpq(1, 8), mpq(6, 5), 6),
    (9, -3, mpq(-25, 8), mpq(1, 8), mpq(12, 5), 6),
    (10, 3, mpq(-1, 8), mpq(1, 8), mpq(2), 6),
    (11, 3, mpq(-1, 8), mpq(1, 8), mpq(3, 2), 6),
    (12, 3, mpq(-1, 8), mpq(1, 8), mpq(6, 5), 6),
    (13, 3, mpq(-1, 8), mpq(1, 8), mpq(12, 5), 6),
    (14, 4, mpq(-1, 2), mpq(1, 2), mpq(4, 3), 4),
    (15, 5, mpq(-9, 8), mpq(1, 8), mpq(10, 3), 10),
]

_ROW16 = {
    # printed stride 6 vs corrected stride 10 in -9/8 + (4 + m*j)^2 / 8
    "printed": (16, 5, mpq(-9, 8), mpq(1, 8), mpq(4), 6),
    "corrected": (16, 5, mpq(-9, 8), mpq(1, 8), mpq(4), 10),
}


def _shifted_square_row(row_id, a0, s, b, m) -> MRRow:
    # a0 + s*(b + m*j)^2 = (s*m^2) j^2 + (2*s*b*m) j + (a0 + s*b^2)
    return MRRow(row_id, s * m * m, 2 * s * b * m, a0 + s * b * b)


def applicable_rows(k: int, k5_variant: str = "corrected") -> list[MRRow]:
    """The families that constrain degree k: two generic rows plus matches."""
    _check_degree(k)
    if k5_variant not in K5_VARIANTS:
        raise ValueError(f"unknown k5 variant {k5_variant!r}")
    kq = mpq(k)
    rows = [
        # j*k*(j*k + k - 2)/2
        MRRow(1, kq * kq / 2, kq * (kq - 2) / 2, mpq(0)),
        # (j*k + 1)*(j*k + k - 1)/2
        MRRow(2, kq * kq / 2, kq * kq / 2, (kq - 1) / 2),
    ]
    for row_id, row_k, a0, s, b, m in _SPECIFIC:
        if row_k == k:
            rows.append(_shifted_square_row(row_id, a0, s, b, m))
    if k == 5:
        row_id, _, a0, s, b, m = _ROW16[k5_variant]
        rows.append(_shifted_square_row(row_id, a0, s, b, m))
    return rows


def ek_contains(k: int, lam, k5_variant: str = "corrected"):
    """Decide lam in E_k; returns (bool, witnesses as ((row_id, j), ...))."""
    lam = mpq(lam)
    witnesses = []
    for row in applicable_rows(k, k5_variant):
        for j in row.integer_roots(lam):
            witnesses.append((row.row_id, j))
    return bool(witnesses), tuple(witnesses)


def ek_enumerate_between(k: int, lo, hi, k5_variant: str = "corrected") -> list[EigenvalueCandidate]:
    """All elements of E_k in [lo, hi], sorted, each with all witnesses."""
    lo = None if lo is None else mpq(lo)
    hi = mpq(hi)
    found: dict[mpq, list] = {}
    for row in applicable_rows(k, k5_variant):
        rng = row.j_range_upto(hi)
        if rng is None:
            continue
        for j in range(rng[0], rng[1] + 1):
            v = row.value(j)
            if lo is not None and v < lo:
                continue
            found.setdefault(v, []).append((row.row_id, j))
    return [
        EigenvalueCandidate(v, tuple(sorted(found[v])))
        for v in sorted(found)
    ]


def ek_enumerate_up_to(k: int, bound, k5_variant: str = "corrected") -> list[EigenvalueCandidate]:
    """All elements of E_k up to bound (inclusive), sorted ascending."""
    return ek_enumerate_between(k, None, bound, k5_variant)


def ek_min(k: int, k5_variant: str = "corrected") -> mpq:
    """The least element of E_k."""
    return min(row.min_value() for row in applicable_rows(k, k5_variant))

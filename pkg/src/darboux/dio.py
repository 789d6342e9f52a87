"""Recursive solver for sum(1/(lambda_i - k)) = c with all lambda_i in E_k.

The key facts making this finite: every E_k is discrete and bounded below,
and any solution satisfies min(lambda_i) <= p/c + k when c > 0 and
min(lambda_i) <= k when c <= 0.  Solutions are produced as non-decreasing
tuples (the canonical representative of the permutation class) by always
choosing the smallest remaining eigenvalue first; the bound above then applies
to that choice at every level of the recursion.

lambda = k never appears in a solution (the summand 1/(lambda - k) is
undefined there), so candidates skip it.

The case p = 0 (no Darboux points) returns the empty multiset when c = 0 and
nothing otherwise; model functions that are pure monomials need it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from gmpy2 import mpq

from .mrtable import ek_contains, ek_enumerate_between

__all__ = ["DioProblem", "DioBudgetExceeded", "mr_dio_solve"]


class DioBudgetExceeded(RuntimeError):
    """The candidate scan outgrew the configured cap.

    Raised rather than silently truncating: the solution set would otherwise
    be incomplete, which the downstream variety computation must never absorb.
    """

    def __init__(self, scanned: int, cap: int):
        super().__init__(f"diophantine scan exceeded budget ({scanned} > {cap})")
        self.scanned = scanned
        self.cap = cap


@dataclass(frozen=True)
class DioProblem:
    p: int
    k: int
    c: mpq

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("p must be nonnegative")
        if self.k in (-2, 0, 2):
            raise ValueError("homogeneity degree excluded")
        object.__setattr__(self, "c", mpq(self.c))


@dataclass
class _Scan:
    cap: int
    scanned: int = 0

    def charge(self, n: int):
        self.scanned += n
        if self.scanned > self.cap:
            raise DioBudgetExceeded(self.scanned, self.cap)


class _EkCache:
    """Sorted prefix of E_k, grown geometrically and sliced by bisection."""

    def __init__(self, k: int, k5_variant: str):
        self.k = k
        self.k5_variant = k5_variant
        self.bound = None
        self.values: list[mpq] = []

    def upto(self, hi: mpq) -> list[mpq]:
        if self.bound is None or hi > self.bound:
            new_hi = mpq(max(hi, 16))
            if self.bound is not None:
                new_hi = max(new_hi, self.bound * 4)
            self.values = [
                c.value
                for c in ek_enumerate_between(self.k, None, new_hi, self.k5_variant)
            ]
            self.bound = new_hi
        import bisect

        cut = bisect.bisect_right(self.values, hi)
        return self.values[:cut]


def mr_dio_solve(
    prob: DioProblem,
    k5_variant: str = "corrected",
    max_scan: int = 2_000_000,
) -> list[tuple]:
    """All multisets {lambda_1 <= ... <= lambda_p} in E_k solving the relation.

    Returns a sorted list of non-decreasing tuples of rationals; the empty
    list means no solution, and for p = 0 with c = 0 the single empty tuple
    is returned.
    """
    scan = _Scan(max_scan)
    cache = _EkCache(prob.k, k5_variant)
    out = _solve(prob.p, prob.k, prob.c, None, k5_variant, scan, cache)
    return sorted(out)


def _solve(p, k, c, lo, k5_variant, scan, cache) -> list[tuple]:
    import bisect

    if p == 0:
        return [()] if c == 0 else []
    if p == 1:
        if c == 0:
            return []
        lam = 1 / c + k
        if lo is not None and lam < lo:
            return []
        ok, _ = ek_contains(k, lam, k5_variant)
        return [(lam,)] if ok and lam != k else []
    if lo is not None and lo > k:
        # all remaining terms are positive and at most 1/(lo - k)
        if c <= 0 or c > mpq(p) / (lo - k):
            return []
    # the minimum of the remaining p values is the next one chosen
    bound = mpq(p) / c + k if c > 0 else mpq(k)
    if lo is not None and lo > bound:
        return []
    values = cache.upto(bound)
    start = 0 if lo is None else bisect.bisect_left(values, lo)
    # once the minimum exceeds k every term is positive, so the whole tail of
    # candidates above k must also leave room: 1/(lam - k) < c strictly
    strict_lo = k + 1 / c if c > 0 else None
    solutions = []
    scanned = 0
    for lam in values[start:]:
        scanned += 1
        if lam == k:
            continue
        if lam > k:
            if c <= 0:
                break  # positive terms cannot reach a nonpositive sum
            if strict_lo is not None and lam <= strict_lo:
                continue
        rest = _solve(p - 1, k, c - 1 / (lam - k), lam, k5_variant, scan, cache)
        for tail in rest:
            solutions.append((lam,) + tail)
    scan.charge(scanned)
    return solutions

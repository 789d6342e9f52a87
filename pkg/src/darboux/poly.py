"""Sparse exact polynomial arithmetic over Q(i).

Three layers live here:

* ``MultiPoly`` - sparse multivariate polynomials, a dict from exponent
  tuples to nonzero Gaussian-rational coefficients.  The zero polynomial is
  the empty dict.  High-degree inputs in this problem have few terms, so a
  dense representation would be wasteful.
* ``UniPoly`` - dense univariate polynomials over Q(i) for the instantiated
  work: gcd chains, squarefree decomposition, resultants, trace-form root
  sums.
* ``RationalFunction`` - a numer/denom pair of MultiPolys with one
  distinguished main variable, normalized lazily (gcd removal is deferred
  until somebody reads the reduced parts).

Division with respect to one variable of a MultiPoly (needed for the
Euclidean division of condition polynomials) is provided as ``divmod_in``;
when the divisor's leading coefficient is not an invertible constant, the
pseudo-division fallback ``pseudo_divmod_in`` tracks the multiplier.
"""

from __future__ import annotations

from gmpy2 import mpq

from .rationals import (
    GQ_ONE,
    GQ_ZERO,
    DivisionByZero,
    GaussianRational,
    gq,
    rat_gcd,
)

__all__ = [
    "MultiPoly",
    "UniPoly",
    "RationalFunction",
    "divmod_in",
    "pseudo_divmod_in",
    "resultant_in",
    "mp_gcd",
    "mp_squarefree_part",
    "root_sum",
]


class PolynomialError(ValueError):
    pass


class UnsupportedDivision(PolynomialError):
    """Euclidean division attempted with a non-invertible leading coefficient."""


# ---------------------------------------------------------------------------
# Multivariate polynomials
# ---------------------------------------------------------------------------


class MultiPoly:
    """Sparse polynomial in named variables with Q(i) coefficients.

    ``terms`` maps exponent tuples (one entry per variable) to nonzero
    coefficients.  Instances are treated as immutable.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, vars: tuple[str, ...], terms: dict):
        self.vars = tuple(vars)
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, vars: tuple[str, ...]) -> "MultiPoly":
        return cls(vars, {})

    @classmethod
    def const(cls, vars: tuple[str, ...], c) -> "MultiPoly":
        c = gq(c) if not isinstance(c, GaussianRational) else c
        if c.is_zero():
            return cls(vars, {})
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: tuple[str, ...], name: str) -> "MultiPoly":
        idx = vars.index(name)
        e = [0] * len(vars)
        e[idx] = 1
        return cls(vars, {tuple(e): GQ_ONE})

    @classmethod
    def from_terms(cls, vars, items) -> "MultiPoly":
        terms = {}
        for exp, coeff in items:
            if not isinstance(coeff, GaussianRational):
                coeff = gq(coeff)
            if coeff.is_zero():
                continue
            exp = tuple(exp)
            prev = terms.get(exp)
            coeff = prev + coeff if prev is not None else coeff
            if coeff.is_zero():
                terms.pop(exp, None)
            else:
                terms[exp] = coeff
        return cls(tuple(vars), terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return GQ_ZERO
        if not self.is_constant():
            raise PolynomialError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: str) -> int:
        """Degree in one variable; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def uses(self, var: str) -> bool:
        if var not in self.vars:
            return False
        i = self.vars.index(var)
        return any(e[i] for e in self.terms)

    def used_vars(self) -> tuple[str, ...]:
        flags = [False] * len(self.vars)
        for e in self.terms:
            for i, exp in enumerate(e):
                if exp:
                    flags[i] = True
        return tuple(v for v, f in zip(self.vars, flags) if f)

    def num_terms(self) -> int:
        return len(self.terms)

    # -- ring structure ----------------------------------------------------

    def _aligned(self, other: "MultiPoly"):
        if self.vars == other.vars:
            return self, other
        merged = list(self.vars)
        for v in other.vars:
            if v not in merged:
                merged.append(v)
        merged = tuple(merged)
        return self.embed(merged), other.embed(merged)

    def embed(self, vars: tuple[str, ...]) -> "MultiPoly":
        """Re-express in a larger (or reordered) variable list."""
        if vars == self.vars:
            return self
        pos = []
        for v in self.vars:
            try:
                pos.append(vars.index(v))
            except ValueError:
                raise PolynomialError(f"variable {v} missing from target ring")
        n = len(vars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for p, exp in zip(pos, e):
                ne[p] = exp
            terms[tuple(ne)] = c
        return MultiPoly(vars, terms)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        a, b = self._aligned(other)
        if not a.terms:
            return b
        if not b.terms:
            return a
        terms = dict(a.terms)
        for e, c in b.terms.items():
            prev = terms.get(e)
            if prev is None:
                terms[e] = c
            else:
                s = prev + c
                if s.is_zero():
                    del terms[e]
                else:
                    terms[e] = s
        return MultiPoly(a.vars, terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        a, b = self._aligned(other)
        if not a.terms or not b.terms:
            return MultiPoly(a.vars, {})
        if len(a.terms) < len(b.terms):
            a, b = b, a
        terms = {}
        for eb, cb in b.terms.items():
            for ea, ca in a.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                prev = terms.get(e)
                if prev is None:
                    terms[e] = c
                else:
                    s = prev + c
                    if s.is_zero():
                        del terms[e]
                    else:
                        terms[e] = s
        return MultiPoly(a.vars, terms)

    def scale(self, c) -> "MultiPoly":
        if not isinstance(c, GaussianRational):
            c = gq(c)
        if c.is_zero():
            return MultiPoly(self.vars, {})
        return MultiPoly(self.vars, {e: k * c for e, k in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise PolynomialError("negative power of a polynomial")
        result = MultiPoly.const(self.vars, GQ_ONE)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted((e, c.re, c.im) for e, c in self.terms.items()))))

    # -- calculus / structure ----------------------------------------------

    def derivative(self, var: str) -> "MultiPoly":
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if not e[i]:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c.scale(e[i])
        return MultiPoly(self.vars, terms)

    def coeffs_in(self, var: str) -> dict:
        """Split into {degree-in-var: coefficient} with coefficients in the full ring."""
        i = self.vars.index(var)
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            d = e[i]
            ne = list(e)
            ne[i] = 0
            out.setdefault(d, {})[tuple(ne)] = c
        return {d: MultiPoly(self.vars, t) for d, t in out.items()}

    def coeff_of(self, var: str, power: int) -> "MultiPoly":
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == power:
                ne = list(e)
                ne[i] = 0
                terms[tuple(ne)] = c
        return MultiPoly(self.vars, terms)

    def lc_in(self, var: str) -> "MultiPoly":
        d = self.degree_in(var)
        if d < 0:
            return MultiPoly(self.vars, {})
        return self.coeff_of(var, d)

    def valuation_in(self, var: str) -> int:
        """Lowest power of var present; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        i = self.vars.index(var)
        return min(e[i] for e in self.terms)

    def shift_var(self, var: str, amount: int) -> "MultiPoly":
        """Multiply by var**amount (amount may be negative if divisible)."""
        i = self.vars.index(var)
        terms = {}
        for e, c in self.terms.items():
            ne = list(e)
            ne[i] += amount
            if ne[i] < 0:
                raise PolynomialError("negative exponent after shift")
            terms[tuple(ne)] = c
        return MultiPoly(self.vars, terms)

    def substitute(self, values: dict) -> "MultiPoly":
        """Substitute polynomials (or scalars) for a subset of the variables."""
        subs = {}
        for name, val in values.items():
            if name not in self.vars:
                continue
            if not isinstance(val, MultiPoly):
                val = MultiPoly.const(self.vars, val)
            subs[self.vars.index(name)] = val
        power_cache: dict[tuple[int, int], MultiPoly] = {}

        def powered(i: int, exp: int) -> MultiPoly:
            key = (i, exp)
            if key not in power_cache:
                power_cache[key] = subs[i] ** exp
            return power_cache[key]

        result = None
        for e, c in self.terms.items():
            term = None
            rest = [0] * len(self.vars)
            for i, exp in enumerate(e):
                if i in subs:
                    if exp:
                        p = powered(i, exp)
                        term = p if term is None else term * p
                else:
                    rest[i] = exp
            mono = MultiPoly(self.vars, {tuple(rest): c})
            term = mono if term is None else term * mono
            result = term if result is None else result + term
        if result is None:
            return MultiPoly(self.vars, {})
        return result

    def evaluate(self, values: dict) -> GaussianRational:
        """Full evaluation; every used variable must be assigned."""
        idx = {}
        for name, val in values.items():
            if name in self.vars:
                idx[self.vars.index(name)] = val if isinstance(val, GaussianRational) else gq(val)
        total = GQ_ZERO
        for e, c in self.terms.items():
            term = c
            for i, exp in enumerate(e):
                if exp:
                    if i not in idx:
                        raise PolynomialError(f"unassigned variable {self.vars[i]}")
                    v = idx[i]
                    for _ in range(exp):
                        term = term * v
            total = total + term
        return total

    # -- exact division / content -------------------------------------------

    def exact_div(self, divisor: "MultiPoly") -> "MultiPoly":
        """Exact polynomial division; raises if the division is not exact."""
        a, d = self._aligned(divisor)
        if d.is_zero():
            raise DivisionByZero("exact division by zero polynomial")
        if d.is_constant():
            return a.scale(GQ_ONE / d.constant_value())
        key = _grevlex_key(len(a.vars))
        dlead = max(d.terms, key=key)
        dlc = d.terms[dlead]
        rem = dict(a.terms)
        qterms = {}
        while rem:
            rlead = max(rem, key=key)
            qexp = tuple(x - y for x, y in zip(rlead, dlead))
            if any(x < 0 for x in qexp):
                raise PolynomialError("division is not exact")
            qc = rem[rlead] / dlc
            qterms[qexp] = qc
            for e, c in d.terms.items():
                ne = tuple(x + y for x, y in zip(e, qexp))
                prev = rem.get(ne)
                s = (prev - c * qc) if prev is not None else -(c * qc)
                if s.is_zero():
                    rem.pop(ne, None)
                else:
                    rem[ne] = s
        return MultiPoly(a.vars, qterms)

    def content_rational(self) -> mpq:
        """gcd over Q of all coefficient components (0 for the zero poly)."""
        g = mpq(0)
        for c in self.terms.values():
            g = rat_gcd(g, c.re)
            g = rat_gcd(g, c.im)
        return g

    def primitive_part(self) -> "MultiPoly":
        g = self.content_rational()
        if not g or g == 1:
            return self
        return self.scale(gq(1 / g))

    # -- conversions ---------------------------------------------------------

    def as_unipoly(self, var: str) -> "UniPoly":
        """View as a univariate polynomial; all other variables must be unused."""
        i = self.vars.index(var)
        coeffs = {}
        for e, c in self.terms.items():
            if any(x for j, x in enumerate(e) if j != i):
                raise PolynomialError("polynomial is not univariate in " + var)
            coeffs[e[i]] = c
        deg = max(coeffs) if coeffs else -1
        return UniPoly([coeffs.get(d, GQ_ZERO) for d in range(deg + 1)])

    def __str__(self) -> str:
        return format_multipoly(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _grevlex_key(n: int):
    def key(e):
        return (sum(e), tuple(-x for x in reversed(e)))

    return key


def format_multipoly(p: MultiPoly) -> str:
    """Human-readable form, highest grevlex terms first."""
    if p.is_zero():
        return "0"
    key = _grevlex_key(len(p.vars))
    parts = []
    for e in sorted(p.terms, key=key, reverse=True):
        c = p.terms[e]
        mono = "*".join(
            f"{v}^{x}" if x > 1 else v for v, x in zip(p.vars, e) if x
        )
        if not mono:
            parts.append(f"({c})" if (c.im and c.re) else str(c))
            continue
        if c.is_one():
            parts.append(mono)
        elif c == gq(-1):
            parts.append(f"-{mono}")
        elif c.im and c.re:
            parts.append(f"({c})*{mono}")
        else:
            parts.append(f"{c}*{mono}")
    out = parts[0]
    for term in parts[1:]:
        out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return out


# ---------------------------------------------------------------------------
# Division in one variable, with MultiPoly coefficients
# ---------------------------------------------------------------------------


def _zsplit(p: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficient list [c0, c1, ...] of p seen in (rest)[var]."""
    d = p.degree_in(var)
    if d < 0:
        return []
    split = p.coeffs_in(var)
    zero = MultiPoly.zero(p.vars)
    return [split.get(k, zero) for k in range(d + 1)]


def _zjoin(coeffs: list[MultiPoly], var: str, vars: tuple[str, ...]) -> MultiPoly:
    i = vars.index(var)
    terms = {}
    for d, c in enumerate(coeffs):
        for e, k in c.terms.items():
            ne = list(e)
            ne[i] += d
            terms[tuple(ne)] = k
    return MultiPoly(vars, terms)


def divmod_in(p: MultiPoly, d: MultiPoly, var: str):
    """Euclidean division of p by d in (Q(i)[rest])[var].

    Requires the leading coefficient of d in var to be a nonzero constant of
    the field (then quotient and remainder stay polynomial in the remaining
    variables).  Raises UnsupportedDivision otherwise; callers that can live
    with a unit multiplier should use pseudo_divmod_in.
    """
    p, d = p._aligned(d)
    dd = d.degree_in(var)
    if dd < 0:
        raise DivisionByZero("division by zero polynomial")
    lead = d.lc_in(var)
    if not lead.is_constant():
        raise UnsupportedDivision(
            f"leading coefficient of divisor in {var} is not an invertible constant"
        )
    inv = GQ_ONE / lead.constant_value()
    dc = _zsplit(d, var)
    rc = _zsplit(p, var)
    zero = MultiPoly.zero(p.vars)
    q = [zero] * max(0, len(rc) - dd)
    while len(rc) > dd:
        top = rc[-1]
        if top.is_zero():
            rc.pop()
            continue
        shift = len(rc) - 1 - dd
        factor = top.scale(inv)
        q[shift] = q[shift] + factor
        for j in range(dd + 1):
            rc[shift + j] = rc[shift + j] - factor * dc[j]
        rc.pop()
    while rc and rc[-1].is_zero():
        rc.pop()
    return _zjoin(q, var, p.vars), _zjoin(rc, var, p.vars)


def pseudo_divmod_in(p: MultiPoly, d: MultiPoly, var: str):
    """Canonical pseudo-division: lc(d)^e * p = q*d + r, e = deg p - deg d + 1.

    Returns (q, r, multiplier) with multiplier = lc(d)^e as a MultiPoly.
    The fixed exponent (rather than one power per reduction step) is what the
    subresultant PRS divisions rely on.
    """
    p, d = p._aligned(d)
    dd = d.degree_in(var)
    if dd < 0:
        raise DivisionByZero("pseudo-division by zero polynomial")
    dp = p.degree_in(var)
    if dp < dd:
        return MultiPoly.zero(p.vars), p, MultiPoly.const(p.vars, GQ_ONE)
    lead = d.lc_in(var)
    dc = _zsplit(d, var)
    rc = _zsplit(p, var)
    zero = MultiPoly.zero(p.vars)
    q = [zero] * (len(rc) - dd)
    e = 0
    while len(rc) > dd:
        top = rc[-1]
        if top.is_zero():
            rc.pop()
            q = [lead * t for t in q]
            rc = [lead * t for t in rc]
            e += 1
            continue
        shift = len(rc) - 1 - dd
        q = [lead * t for t in q]
        rc = [lead * t for t in rc]
        e += 1
        q[shift] = q[shift] + top
        for j in range(dd + 1):
            rc[shift + j] = rc[shift + j] - top * dc[j]
        rc.pop()
    while rc and rc[-1].is_zero():
        rc.pop()
    return _zjoin(q, var, p.vars), _zjoin(rc, var, p.vars), lead**e


# ---------------------------------------------------------------------------
# Multivariate gcd (primitive PRS) and resultants (subresultant PRS)
# ---------------------------------------------------------------------------


def _mp_content_in(p: MultiPoly, var: str) -> MultiPoly:
    coeffs = [c for c in p.coeffs_in(var).values()]
    g = MultiPoly.zero(p.vars)
    for c in coeffs:
        g = mp_gcd(g, c)
        if g.is_constant() and not g.is_zero():
            break
    return g


def mp_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """gcd in Q(i)[vars], primitive up to a rational unit (monic-ish scaling).

    Classical primitive-PRS recursion on the variable set; adequate for the
    small parameter polynomials that appear in contents and normalizations.
    """
    p, q = p._aligned(q)
    if p.is_zero():
        return q.primitive_part()
    if q.is_zero():
        return p.primitive_part()
    if p.is_constant() or q.is_constant():
        return MultiPoly.const(p.vars, GQ_ONE)
    pv = set(p.used_vars())
    qv = set(q.used_vars())
    common = [v for v in p.vars if v in pv and v in qv]
    if not common:
        return MultiPoly.const(p.vars, GQ_ONE)
    var = common[0]
    cont_p = _mp_content_in(p, var)
    cont_q = _mp_content_in(q, var)
    cont = mp_gcd(cont_p, cont_q)
    a = p.exact_div(cont_p)
    b = q.exact_div(cont_q)
    if a.degree_in(var) < b.degree_in(var):
        a, b = b, a
    while not b.is_zero():
        _, r, _ = pseudo_divmod_in(a, b, var)
        a = b
        if r.is_zero():
            b = r
        else:
            b = r.exact_div(_mp_content_in(r, var))
    a = a.exact_div(_mp_content_in(a, var))
    return (cont * a).primitive_part()


def mp_squarefree_part(p: MultiPoly) -> MultiPoly:
    """Squarefree part: p / gcd(p, all first partials).  Char-0 only."""
    if p.is_zero() or p.is_constant():
        return p
    g = p
    for v in p.used_vars():
        g = mp_gcd(g, p.derivative(v))
        if g.is_constant():
            return p.primitive_part()
    return p.exact_div(g).primitive_part()


def resultant_in(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Resultant with respect to var via the subresultant PRS.

    Coefficients are polynomials in the remaining variables; the PRS keeps
    growth under control compared with expanding the Sylvester determinant.
    """
    p, q = p._aligned(q)
    if p.is_zero() or q.is_zero():
        raise PolynomialError("resultant of a zero polynomial")
    dp, dq = p.degree_in(var), q.degree_in(var)
    one = MultiPoly.const(p.vars, GQ_ONE)
    if dp == 0 and dq == 0:
        return one
    s = 1
    a_poly, b_poly = p, q
    if dp < dq:
        a_poly, b_poly = q, p
        if (dp & 1) and (dq & 1):
            s = -1
    cont_a = _mp_content_in(a_poly, var)
    cont_b = _mp_content_in(b_poly, var)
    A = a_poly.exact_div(cont_a)
    B = b_poly.exact_div(cont_b)
    t = (cont_a ** B.degree_in(var)) * (cont_b ** A.degree_in(var))
    g = one
    h = one
    while True:
        dA, dB = A.degree_in(var), B.degree_in(var)
        if dB == 0:
            break
        if (dA & 1) and (dB & 1):
            s = -s
        delta = dA - dB
        _, R, _ = pseudo_divmod_in(A, B, var)
        if R.is_zero():
            return MultiPoly.zero(p.vars)
        A = B
        B = R.exact_div(g * h**delta)
        g = A.lc_in(var)
        if delta:
            h = (g**delta).exact_div(h ** (delta - 1))
    dA = A.degree_in(var)
    if dA >= 1:
        core = (B**dA).exact_div(h ** (dA - 1))
    else:
        core = one
    res = core * t
    return -res if s < 0 else res


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q(i)
# ---------------------------------------------------------------------------


class UniPoly:
    """Univariate polynomial over Q(i), dense coefficient list, c[i] ~ z^i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1].is_zero():
            c.pop()
        self.coeffs = c

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls([])

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls([c if isinstance(c, GaussianRational) else gq(c)])

    @classmethod
    def from_ints(cls, ints) -> "UniPoly":
        return cls([gq(x) for x in ints])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> GaussianRational:
        if not self.coeffs:
            raise PolynomialError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> GaussianRational:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return GQ_ZERO

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                return i
        return -1

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        if self.is_zero() or other.is_zero():
            return UniPoly.zero()
        out = [GQ_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def scale(self, c: GaussianRational) -> "UniPoly":
        return UniPoly([x * c for x in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by z^k (k >= 0)."""
        if self.is_zero():
            return self
        return UniPoly([GQ_ZERO] * k + self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple((c.re, c.im) for c in self.coeffs))

    def divmod(self, d: "UniPoly"):
        if d.is_zero():
            raise DivisionByZero("division by zero polynomial")
        r = list(self.coeffs)
        dd = d.degree
        inv = GQ_ONE / d.lc()
        q = [GQ_ZERO] * max(0, len(r) - dd)
        while len(r) > dd:
            top = r[-1]
            if top.is_zero():
                r.pop()
                continue
            f = top * inv
            shift = len(r) - 1 - dd
            q[shift] = f
            for j in range(dd + 1):
                r[shift + j] = r[shift + j] - f * d.coeffs[j]
            r.pop()
        return UniPoly(q), UniPoly(r)

    def __mod__(self, d: "UniPoly") -> "UniPoly":
        return self.divmod(d)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self.scale(GQ_ONE / self.lc())

    def derivative(self) -> "UniPoly":
        return UniPoly([c.scale(i) for i, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x: GaussianRational) -> GaussianRational:
        total = GQ_ZERO
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def compose_neg(self) -> "UniPoly":
        """p(-z)."""
        return UniPoly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd by the Euclidean algorithm over the field Q(i)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    def xgcd(self, other: "UniPoly"):
        """Extended gcd: (g, s, t) with s*self + t*other = g, g monic."""
        a, b = self, other
        sa, sb = UniPoly.const(GQ_ONE), UniPoly.zero()
        ta, tb = UniPoly.zero(), UniPoly.const(GQ_ONE)
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            sa, sb = sb, sa - q * sb
            ta, tb = tb, ta - q * tb
        if a.is_zero():
            return a, sa, ta
        inv = GQ_ONE / a.lc()
        return a.scale(inv), sa.scale(inv), ta.scale(inv)

    def resultant(self, other: "UniPoly") -> GaussianRational:
        """Exact resultant over Q(i) by the Euclid recursion."""
        f, g = self, other
        if f.is_zero() or g.is_zero():
            raise PolynomialError("resultant of a zero polynomial")
        sign = 1
        acc = GQ_ONE
        while True:
            df, dg = f.degree, g.degree
            if dg == 0:
                base = g.coeffs[0]
                res = GQ_ONE
                for _ in range(df):
                    res = res * base
                return acc * res if sign > 0 else -(acc * res)
            if df < dg:
                f, g = g, f
                if (df & 1) and (dg & 1):
                    sign = -sign
                continue
            r = f % g
            if r.is_zero():
                return GQ_ZERO
            lc = g.lc()
            power = df - r.degree
            mult = GQ_ONE
            for _ in range(power):
                mult = mult * lc
            acc = acc * mult
            if (df & 1) and (dg & 1):
                sign = -sign
            f, g = g, r

    def squarefree_decomposition(self):
        """Yun's algorithm: list of (monic factor, multiplicity), char 0."""
        p = self.monic()
        if p.degree <= 0:
            return []
        dp = p.derivative()
        g = p.gcd(dp)
        if g.degree == 0:
            return [(p, 1)]
        c = p.divmod(g)[0]
        d = dp.divmod(g)[0] - c.derivative()
        out = []
        m = 1
        while c.degree > 0:
            f = c.gcd(d)
            if f.degree > 0:
                out.append((f, m))
            c = c.divmod(f)[0]
            d = (d.divmod(f)[0] if f.degree > 0 else d) - c.derivative()
            m += 1
        return out

    def squarefree_part(self) -> "UniPoly":
        if self.degree <= 0:
            return self.monic()
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self.monic()
        return self.divmod(g)[0].monic()

    def is_squarefree(self) -> bool:
        if self.degree <= 0:
            return True
        return self.gcd(self.derivative()).degree == 0

    def power_sums(self, upto: int) -> list:
        """Newton power sums s_0..s_upto of the roots (monic normalization)."""
        p = self.monic()
        n = p.degree
        if n < 0:
            raise PolynomialError("power sums of the zero polynomial")
        a = p.coeffs
        s = [gq(n)]
        for m in range(1, upto + 1):
            if m <= n:
                total = gq(-m) * a[n - m]
                for i in range(1, m):
                    total = total - a[n - i] * s[m - i]
            else:
                total = GQ_ZERO
                for i in range(1, n + 1):
                    total = total - a[n - i] * s[m - i]
            s.append(total)
        return s

    def as_multipoly(self, var: str, vars: tuple[str, ...] | None = None) -> MultiPoly:
        vars = vars or (var,)
        i = vars.index(var)
        terms = {}
        for d, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            e = [0] * len(vars)
            e[i] = d
            terms[tuple(e)] = c
        return MultiPoly(vars, terms)

    def __str__(self) -> str:
        return format_multipoly(self.as_multipoly("z"))

    def __repr__(self) -> str:
        return f"UniPoly({self})"


def root_sum(g_num: UniPoly, g_den: UniPoly, p: UniPoly) -> GaussianRational:
    """Exact sum of g_num(z)/g_den(z) over the roots of squarefree p.

    Inverts g_den modulo p and contracts against the Newton power sums (the
    trace form of Q(i)[z]/(p)).  g_den must be coprime to p: a common root
    would be a pole of the summand.
    """
    if p.is_zero() or p.degree < 0:
        raise PolynomialError("root_sum over the zero polynomial")
    if not p.is_squarefree():
        raise PolynomialError("root_sum requires a squarefree modulus")
    if p.degree == 0:
        return GQ_ZERO
    g, s, _ = g_den.xgcd(p)
    if g.degree != 0:
        raise PolynomialError("summand has a pole at a root of the modulus")
    h = (g_num * s) % p
    sums = p.power_sums(p.degree - 1)
    total = GQ_ZERO
    for i, c in enumerate(h.coeffs):
        total = total + c * sums[i]
    return total


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of MultiPolys with a distinguished main variable.

    Normalization (gcd removal and the canonical unit) is lazy: construction
    chains do no gcd work until ``numer``/``denom`` are read.
    """

    __slots__ = ("_numer", "_denom", "main_var", "_normalized")

    def __init__(self, numer: MultiPoly, denom: MultiPoly, main_var: str, normalized=False):
        if denom.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        n, d = numer._aligned(denom)
        self._numer = n
        self._denom = d
        self.main_var = main_var
        self._normalized = normalized

    @classmethod
    def from_poly(cls, p: MultiPoly, main_var: str) -> "RationalFunction":
        return cls(p, MultiPoly.const(p.vars, GQ_ONE), main_var, normalized=True)

    # -- lazy normalization -------------------------------------------------

    def _normalize(self):
        if self._normalized:
            return
        n, d = self._numer, self._denom
        if n.is_zero():
            self._numer = n
            self._denom = MultiPoly.const(d.vars, GQ_ONE)
            self._normalized = True
            return
        g = mp_gcd(n, d)
        if not g.is_constant():
            n = n.exact_div(g)
            d = d.exact_div(g)
        cn = n.content_rational()
        cd = d.content_rational()
        c = rat_gcd(cn, cd)
        if c and c != 1:
            inv = gq(1 / c)
            n = n.scale(inv)
            d = d.scale(inv)
        # canonical unit: make the main-variable leading coefficient of the
        # denominator real-positive when a +-1/+-i twist can achieve it
        lead = d.lc_in(self.main_var)
        if lead.is_constant():
            c0 = lead.constant_value()
            unit = None
            if not c0.re and c0.im:
                unit = gq(0, -1) if c0.im > 0 else gq(0, 1)
            elif c0.re < 0 and not c0.im:
                unit = gq(-1)
            if unit is not None:
                n = n.scale(unit)
                d = d.scale(unit)
        self._numer, self._denom = n, d
        self._normalized = True

    @property
    def numer(self) -> MultiPoly:
        self._normalize()
        return self._numer

    @property
    def denom(self) -> MultiPoly:
        self._normalize()
        return self._denom

    def raw_parts(self):
        """Numerator/denominator as constructed, without normalization."""
        return self._numer, self._denom

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self._numer * other._denom + other._numer * self._denom,
            self._denom * other._denom,
            self.main_var,
        )

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self._numer * other._denom - other._numer * self._denom,
            self._denom * other._denom,
            self.main_var,
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self._numer, self._denom, self.main_var, self._normalized)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(
            self._numer * other._numer, self._denom * other._denom, self.main_var
        )

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other._numer.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(
            self._numer * other._denom, self._denom * other._numer, self.main_var
        )

    def derivative(self) -> "RationalFunction":
        v = self.main_var
        n, d = self.numer, self.denom
        return RationalFunction(n.derivative(v) * d - n * d.derivative(v), d * d, v)

    def is_zero(self) -> bool:
        return self.numer.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (self._numer * other._denom) == (other._numer * self._denom)

    def substitute_params(self, values: dict) -> "RationalFunction":
        n = self._numer.substitute(values)
        d = self._denom.substitute(values)
        if d.is_zero():
            raise DivisionByZero("denominator vanishes identically at these parameters")
        return RationalFunction(n, d, self.main_var)

    def as_univariate(self):
        """(numer, denom) as UniPolys in the main variable, reduced."""
        return self.numer.as_unipoly(self.main_var), self.denom.as_unipoly(self.main_var)

    def __str__(self) -> str:
        n, d = self.numer, self.denom
        if d.is_constant() and d.constant_value().is_one():
            return str(n)
        return f"({n}) / ({d})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

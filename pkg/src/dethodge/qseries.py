"""Exact Laurent polynomial arithmetic in q, Gaussian binomials, and the
multiplicity tables of the Decomposition Theorem for the standard
resolutions of determinantal varieties.

The central computation: pushing a simple module of the rank-p stratum
down a projective resolution produces, in each cohomological degree j, a
semisimple module. Encoding the degree in a formal variable q turns the
bookkeeping into Laurent polynomial identities: stalks of IC sheaves are
Gaussian binomials at q^2 (up to a shift), and the multiplicity
polynomials f_i(q) are pinned down by a triangular system solvable by
exact back-substitution. The closed form is a shifted q-binomial, so the
solver doubles as an identity checker.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .matrixspace import MatrixSpace, Stratum, dim_stratum
from .reporting import VerificationReport


class LaurentPoly:
    """Integer Laurent polynomial in one variable q. Immutable, exact."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, dict) else coeffs
            for e, v in items:
                if v:
                    c[int(e)] = int(v)
        self._c = c

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def is_zero(self) -> bool:
        return not self._c

    def items(self):
        return self._c.items()

    def coefficient(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def coefficients(self):
        return list(self._c.values())

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("the zero polynomial has no support")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("the zero polynomial has no support")
        return max(self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self._c.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            nv = c.get(e, 0) + v
            if nv:
                c[e] = nv
            elif e in c:
                del c[e]
        out = LaurentPoly()
        out._c = c
        return out

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly()
            return LaurentPoly({e: v * other for e, v in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        c = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                nv = c.get(e, 0) + v1 * v2
                if nv:
                    c[e] = nv
                elif e in c:
                    del c[e]
        out = LaurentPoly()
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, power: int):
        if power < 0:
            raise ValueError("negative powers are not supported")
        out = LaurentPoly.one()
        base = self
        while power:
            if power & 1:
                out = out * base
            base = base * base
            power >>= 1
        return out

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by q^d."""
        return LaurentPoly({e + d: v for e, v in self._c.items()})

    def stretch(self, factor: int) -> "LaurentPoly":
        """Substitute q -> q^factor."""
        return LaurentPoly({factor * e: v for e, v in self._c.items()})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises ArithmeticError on any nonzero remainder.
        Used as the internal consistency guard wherever a division is
        mathematically forced to be exact."""
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if other.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return LaurentPoly()
        lead_e = other.max_exp
        lead_c = other._c[lead_e]
        floor_e = self.min_exp - other.min_exp
        rem = dict(self._c)
        quo = {}
        while rem:
            e = max(rem)
            qe = e - lead_e
            qc, r = divmod(rem[e], lead_c)
            if r or qe < floor_e:
                raise ArithmeticError(f"inexact division of {self} by {other}")
            quo[qe] = qc
            for oe, ov in other._c.items():
                ne = qe + oe
                nv = rem.get(ne, 0) - qc * ov
                if nv:
                    rem[ne] = nv
                elif ne in rem:
                    del rem[ne]
        return LaurentPoly(quo)

    def evaluate(self, x: int) -> int:
        """Value at an integer x (x must be nonzero if exponents dip below 0)."""
        total = 0
        for e, v in self._c.items():
            if e >= 0:
                total += v * x**e
            else:
                num, den = v, x ** (-e)
                q, r = divmod(num, den)
                if r:
                    raise ValueError("non-integer evaluation")
                total += q
        return total

    def at_one(self) -> int:
        return sum(self._c.values())

    def is_palindromic(self) -> bool:
        """Coefficient list symmetric under reversal of the support."""
        if self.is_zero:
            return True
        lo, hi = self.min_exp, self.max_exp
        return all(
            self.coefficient(lo + i) == self.coefficient(hi - i)
            for i in range(hi - lo + 1)
        )

    def to_coeff_map(self) -> dict:
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_coeff_map(cls, obj: dict) -> "LaurentPoly":
        return cls({int(e): v for e, v in obj.items()})

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            v = self._c[e]
            mag = abs(v)
            if e == 0:
                term = str(mag)
            else:
                base = "q" if e == 1 else f"q^{e}"
                term = base if mag == 1 else f"{mag}*{base}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self._c!r})"


@lru_cache(maxsize=None)
def q_binomial(a: int, b: int) -> LaurentPoly:
    """Gaussian binomial coefficient as an exact polynomial in q:

        (1-q^a)(1-q^(a-1))...(1-q^(a-b+1)) / ((1-q^b)...(1-q)),

    zero when a < b. The division is exact; the result has degree b*(a-b),
    nonnegative palindromic coefficients, and value comb(a, b) at q = 1.
    """
    if b < 0:
        raise ValueError("lower index must be nonnegative")
    if a < b:
        return LaurentPoly()
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(b):
        num = num * LaurentPoly({0: 1, a - i: -1})
        den = den * LaurentPoly({0: 1, b - i: -1})
    return num.divexact(den)


def substitute_q2(f: LaurentPoly) -> LaurentPoly:
    """Substitute q -> q^2 (double every exponent)."""
    return f.stretch(2)


def grassmannian_poincare(r: int, N: int) -> LaurentPoly:
    """Poincare polynomial of the Grassmannian of r-dimensional quotients
    of an N-dimensional space: the q-binomial comb(N, r) at q^2. Zero when
    r > N, matching the q-binomial convention."""
    if r < 0:
        raise ValueError("quotient rank must be nonnegative")
    return substitute_q2(q_binomial(N, r))


def stalk_poly(i: int, k: int, space: MatrixSpace) -> LaurentPoly:
    """Stalk cohomology of the IC complex of the rank <= i locus at a
    point of rank k, encoded as q^(-d_i) * qbin(n-k, i-k) at q^2. Defined
    for 0 <= k <= i (the point must lie in the closure)."""
    if not 0 <= i <= space.n:
        raise ValueError(f"stratum index i={i} outside 0..{space.n}")
    if not 0 <= k <= i:
        raise ValueError(f"stalk formula needs 0 <= k <= i, got k={k}, i={i}")
    d_i = dim_stratum(Stratum(space, i))
    return substitute_q2(q_binomial(space.n - k, i - k)).shift(-d_i)


class DecompositionTable:
    """Multiplicity table of a projective pushforward from the rank-p
    resolution: entries[i] is a Laurent polynomial whose q^j coefficient
    is the multiplicity of the rank-i simple module in cohomological
    degree j. Only indices 0 <= i <= p occur and all coefficients are
    nonnegative; zero entries are omitted."""

    def __init__(self, space: MatrixSpace, p: int, entries: dict):
        if not 0 <= p <= space.n:
            raise ValueError(f"stratum index p={p} outside 0..{space.n}")
        clean = {}
        for i in sorted(entries):
            poly = entries[i]
            if poly.is_zero:
                continue
            if not 0 <= i <= p:
                raise ValueError(f"summand index {i} outside 0..{p}")
            if any(v < 0 for v in poly.coefficients()):
                raise ValueError(f"negative multiplicity in entry {i}: {poly}")
            clean[i] = poly
        self.space = space
        self.p = p
        self.entries = clean

    def __eq__(self, other):
        return (
            isinstance(other, DecompositionTable)
            and self.space == other.space
            and self.p == other.p
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"DecompositionTable({self.space}, p={self.p}, {self.entries!r})"

    def lines(self) -> list[str]:
        return [f"i={i}: {self.entries[i]}" for i in sorted(self.entries, reverse=True)]

    def to_json_obj(self) -> dict:
        return {
            "m": self.space.m,
            "n": self.space.n,
            "p": self.p,
            "entries": [
                {"i": i, "poly": self.entries[i].to_coeff_map()}
                for i in sorted(self.entries)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DecompositionTable":
        entries = {
            row["i"]: LaurentPoly.from_coeff_map(row["poly"]) for row in obj["entries"]
        }
        return cls(MatrixSpace(obj["m"], obj["n"]), obj["p"], entries)


def solve_pushforward_OYp(space: MatrixSpace, p: int) -> DecompositionTable:
    """Multiplicities f_i(q) in the pushforward of the structure sheaf of
    the rank-p resolution, solved from the stalk identities

        qbin(m-k, p-k)@q^2 =
            sum_{i=k}^p f_i(q) * q^((p-i)(m+n-p-i)) * qbin(n-k, i-k)@q^2

    by back-substitution from k = p down to k = 0. Every division along
    the way is by a monomial and must be exact; a nonzero remainder would
    signal an implementation bug and raises."""
    if not 0 <= p <= space.n:
        raise ValueError(f"stratum index p={p} outside 0..{space.n}")
    m, n = space.m, space.n
    f: dict[int, LaurentPoly] = {}
    for k in range(p, -1, -1):
        acc = substitute_q2(q_binomial(m - k, p - k))
        for i in range(k + 1, p + 1):
            term = f[i] * substitute_q2(q_binomial(n - k, i - k))
            acc = acc - term.shift((p - i) * (m + n - p - i))
        f[k] = acc.divexact(LaurentPoly.monomial((p - k) * (m + n - p - k)))
    return DecompositionTable(space, p, f)


def closed_form_OYp(space: MatrixSpace, p: int) -> DecompositionTable:
    """Closed form of the same table: f_i(q) =
    q^(-(m-n-p+i)(p-i)) * qbin(m-n, p-i)@q^2."""
    if not 0 <= p <= space.n:
        raise ValueError(f"stratum index p={p} outside 0..{space.n}")
    m, n = space.m, space.n
    entries = {
        i: substitute_q2(q_binomial(m - n, p - i)).shift(-(m - n - p + i) * (p - i))
        for i in range(p + 1)
    }
    return DecompositionTable(space, p, entries)


def pushforward_prefactor(space: MatrixSpace, p: int) -> LaurentPoly:
    """The Grassmannian-bundle factor q^(-(n-p)(m-n)) * qbin(m-p, n-p)@q^2
    relating the rank-p simple module on the maximal-rank resolution to
    the structure sheaf of the rank-p resolution."""
    m, n = space.m, space.n
    return substitute_q2(q_binomial(m - p, n - p)).shift(-(n - p) * (m - n))


def pushforward_DpY(space: MatrixSpace, p: int) -> DecompositionTable:
    """Full multiplicity table for the pushforward of the rank-p simple
    module on the maximal-rank resolution:

        entries[i] = q^(-(n-p)(m-n)) * qbin(m-p, n-p)@q^2
                     * q^(-(m-n-p+i)(p-i)) * qbin(m-n, p-i)@q^2.
    """
    if not 0 <= p <= space.n:
        raise ValueError(f"stratum index p={p} outside 0..{space.n}")
    prefactor = pushforward_prefactor(space, p)
    closed = closed_form_OYp(space, p)
    entries = {i: prefactor * poly for i, poly in closed.entries.items()}
    return DecompositionTable(space, p, entries)


def verify_qbinomial_identity(a: int, b: int, c: int) -> bool:
    """Check the q-Vandermonde convolution

        qbin(a+b, c) = sum_{j=0}^c q^(j*(b-c+j)) * qbin(a, j) * qbin(b, c-j)

    as an exact polynomial equality. (The exponent comes from comparing
    z^c coefficients in the factorization of the q-Pochhammer symbol:
    b*j + comb(j, 2) + comb(c-j, 2) - comb(c, 2) = j*(b-c+j).)"""
    lhs = q_binomial(a + b, c)
    rhs = LaurentPoly.zero()
    for j in range(c + 1):
        left = q_binomial(a, j)
        if left.is_zero:
            continue
        right = q_binomial(b, c - j)
        if right.is_zero:
            continue
        rhs = rhs + (left * right).shift(j * (b - c + j))
    return lhs == rhs


def pushforward_structure_checks(space: MatrixSpace, p: int) -> VerificationReport:
    """Structural facts about the pushforward table of the rank-p simple
    module: (a) only summand indices i <= p occur; (b) the top degree of
    entry i is (n-p)(m-n) + (p-i)(m-n-p+i); (c) degree (n-i)(m-n) carries
    a nonzero multiplicity in entry i exactly when i = p."""
    m, n = space.m, space.n
    table = pushforward_DpY(space, p)
    report = VerificationReport("pushforward-structure", {"m": m, "n": n, "p": p})
    for i in table.entries:
        report.checks += 1
        if not 0 <= i <= p:
            report.add_failure(check="summand-range", i=i)
    for i, poly in table.entries.items():
        report.checks += 1
        expected_top = (n - p) * (m - n) + (p - i) * (m - n - p + i)
        if poly.max_exp != expected_top:
            report.add_failure(
                check="top-degree", i=i, top=poly.max_exp, expected=expected_top
            )
    for i in range(p + 1):
        report.checks += 1
        coeff = table.entries.get(i, LaurentPoly.zero()).coefficient((n - i) * (m - n))
        if (coeff != 0) != (i == p):
            report.add_failure(check="middle-degree", i=i, coefficient=coeff)
    return report

"""Hodge ideals of the determinant hypersurface, as weight predicates.

Two equivalent descriptions are implemented side by side for square
matrix spaces, and an exhaustive verifier confronts them over weight
boxes:

* ``in_hodge_ideal``: the k-th Hodge ideal as an intersection of symbolic
  powers of determinantal ideals, with exponent (n-p)(k-1) - comb(n-p, 2)
  at the rank p-1 locus;
* ``in_Fk_Sdet``: the level-k piece of the Hodge filtration on the
  localization of the coordinate ring at the determinant, a disjoint
  union of the filtration sets U^p_k;
* ``translate``: the change of frame mu -> mu - ((k+1)^n) between the two
  (twisting by the (k+1)-st power of the determinant).

GL-stable ideals are identified with their sets of dominant weights, so
all ideal arithmetic here is predicate arithmetic on partitions. The
polynomial-level ground truth lives in the oracle module.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .matrixspace import MatrixSpace
from .reporting import VerificationReport
from .repsets import _descriptor_args, _pull, classify, in_Ukp
from .weights import WeightBox, check_weight


def in_symbolic_power(mu, p: int, d: int, space: MatrixSpace) -> bool:
    """Does the isotypic component of the partition mu lie in the d-th
    symbolic power of the ideal of p-minors (functions vanishing to order
    d along the rank p-1 locus)? True iff mu_p + ... + mu_n >= d, with
    d <= 0 denoting the unit ideal."""
    mu = check_weight(mu, space.n)
    if not 1 <= p <= space.n:
        raise ValueError(f"minor size p={p} outside 1..{space.n}")
    if mu[-1] < 0:
        raise ValueError("symbolic powers live in the polynomial ring; need a partition")
    if d <= 0:
        return True
    return sum(mu[p - 1:]) >= d


def hodge_ideal_exponents(k: int, space: MatrixSpace) -> tuple[int, ...]:
    """The symbolic-power exponents ((n-p)*(k-1) - comb(n-p, 2)) for
    p = 1..n-1 cutting out the k-th Hodge ideal."""
    if k < 0:
        raise ValueError("Hodge ideals are indexed by k >= 0")
    n = space.n
    return tuple((n - p) * (k - 1) - comb(n - p, 2) for p in range(1, n))


def in_hodge_ideal(mu, k: int, space: MatrixSpace) -> bool:
    """Membership of a partition in the k-th Hodge ideal of the determinant
    hypersurface: mu_p + ... + mu_n >= (n-p)*(k-1) - comb(n-p, 2) for
    every p. The p = n term is a redundant no-op kept for clarity."""
    if k < 0:
        raise ValueError("Hodge ideals are indexed by k >= 0")
    if not space.is_square:
        raise ValueError("the determinant hypersurface needs a square space")
    n = space.n
    mu = check_weight(mu, n)
    if mu[-1] < 0:
        raise ValueError("Hodge ideals live in the polynomial ring; need a partition")
    for p in range(1, n + 1):
        if sum(mu[p - 1:]) < (n - p) * (k - 1) - comb(n - p, 2):
            return False
    return True


def in_Fk_Sdet(lam, k: int, space: MatrixSpace) -> bool:
    """Membership in the level-k piece of the Hodge filtration on the
    localization at the determinant: lam lies in U^p_k for its own
    stratum p."""
    if not space.is_square:
        raise ValueError("the localization at the determinant needs a square space")
    lam = check_weight(lam, space.n)
    p = classify(lam, space)
    return in_Ukp(lam, p, k, space)


def translate(mu, k: int) -> tuple[int, ...]:
    """Shift mu -> mu - ((k+1)^n), the weight effect of dividing by the
    (k+1)-st power of the determinant."""
    return tuple(x - (k + 1) for x in mu)


def untranslate(lam, k: int) -> tuple[int, ...]:
    return tuple(x + (k + 1) for x in lam)


def verify_equivalence(space: MatrixSpace, k: int, bound: int) -> VerificationReport:
    """Exhaustively confront the two descriptions of the Hodge filtration
    over a weight box: the filtration predicate must agree with the tail
    inequality family

        lam_{s+1} + ... + lam_n >= -comb(n-s+1, 2) - k  for 0 <= s <= n-1,

    and on partitions the Hodge-ideal predicate must match the filtration
    predicate through the translate change of frame."""
    n = space.n
    report = VerificationReport(
        "hodge-filtration-equivalence", {"n": n, "k": k, "box": bound}
    )
    for lam in WeightBox(n, bound):
        lhs = in_Fk_Sdet(lam, k, space)
        rhs = all(sum(lam[s:]) >= -comb(n - s + 1, 2) - k for s in range(n))
        report.checks += 1
        if lhs != rhs:
            report.add_failure(weight=lam, filtration=lhs, inequalities=rhs)
    for mu in WeightBox(n, bound):
        if mu[-1] < 0:
            continue
        ideal = in_hodge_ideal(mu, k, space)
        filt = in_Fk_Sdet(translate(mu, k), k, space)
        report.checks += 1
        if ideal != filt:
            report.add_failure(partition=mu, ideal=ideal, filtration=filt)
    return report


_IDEAL_KINDS = ("SymbolicPower", "HodgeIdeal", "FkSdet")


@dataclass(frozen=True)
class IdealWeightSet:
    """Weight set of a GL-stable ideal (or filtration piece) on a square
    matrix space: a symbolic power J_p^(d), a Hodge ideal I_k, or a Hodge
    filtration level F_k of the localization at the determinant."""

    space: MatrixSpace
    kind: str
    p: int | None = None
    param: int = 0

    def __post_init__(self):
        if self.kind not in _IDEAL_KINDS:
            raise ValueError(f"unknown ideal weight set kind {self.kind!r}")
        if not self.space.is_square:
            raise ValueError("ideal weight sets are defined on square spaces")
        if self.kind == "SymbolicPower":
            if self.p is None or not 1 <= self.p <= self.space.n:
                raise ValueError("SymbolicPower needs 1 <= p <= n")
        elif self.p is not None:
            raise ValueError(f"{self.kind} takes no stratum index")
        if self.kind in ("HodgeIdeal", "FkSdet") and self.param < 0:
            raise ValueError(f"{self.kind} is indexed by k >= 0")

    @property
    def partitions_only(self) -> bool:
        return self.kind != "FkSdet"

    def contains(self, lam) -> bool:
        if self.kind == "SymbolicPower":
            return in_symbolic_power(lam, self.p, self.param, self.space)
        if self.kind == "HodgeIdeal":
            return in_hodge_ideal(lam, self.param, self.space)
        return in_Fk_Sdet(lam, self.param, self.space)

    def members(self, bound: int) -> list[tuple[int, ...]]:
        out = []
        for lam in WeightBox(self.space.n, bound):
            if self.partitions_only and lam[-1] < 0:
                continue
            if self.contains(lam):
                out.append(lam)
        return out

    def descriptor(self) -> str:
        n = self.space.n
        if self.kind == "SymbolicPower":
            return f"Jpd(n={n},p={self.p},d={self.param})"
        if self.kind == "HodgeIdeal":
            return f"Ik(n={n},k={self.param})"
        return f"FkSdet(n={n},k={self.param})"


def parse_ideal_descriptor(text: str) -> IdealWeightSet:
    """Parse "Ik(n=2,k=3)", "Jpd(n=3,p=1,d=2)" or "FkSdet(n=2,k=1)"
    (positional forms like "Ik(2,3)" are accepted too)."""
    name, pos, kw = _descriptor_args(text)
    if name == "Ik":
        n, k = _pull(pos, kw, ("n", "k"))
        return IdealWeightSet(MatrixSpace(n, n), "HodgeIdeal", param=k)
    if name == "Jpd":
        n, p, d = _pull(pos, kw, ("n", "p", "d"))
        return IdealWeightSet(MatrixSpace(n, n), "SymbolicPower", p=p, param=d)
    if name == "FkSdet":
        n, k = _pull(pos, kw, ("n", "k"))
        return IdealWeightSet(MatrixSpace(n, n), "FkSdet", param=k)
    raise ValueError(f"unknown ideal weight set {name!r}")

"""Weight and Tate-twist ledger for the pure modules on matrix space.

One invariant drives everything here: a pure module supported on the
rank-p locus with Tate twist k has weight d_p - 2k, and its Hodge
filtration starts in level c_p + k. The functions below specialize the
twist to the two situations of interest (the weight-graded layers of the
localization at the determinant for square spaces, and the local
cohomology modules for m > n) and cross-check the resulting numerology.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .matrixspace import MatrixSpace, Stratum, codim_stratum, dim_stratum
from .reporting import VerificationReport
from .repsets import in_Ukp
from .weights import delta_p, dominant_tuples


@dataclass(frozen=True)
class HodgeModuleTag:
    """A pure module label: support stratum p plus a Tate twist. The
    weight is always recomputed as d_p - 2k, never stored."""

    space: MatrixSpace
    p: int
    tate_twist: int = 0

    def __post_init__(self):
        if not 0 <= self.p <= self.space.n:
            raise ValueError(f"stratum index p={self.p} outside 0..{self.space.n}")

    @property
    def weight(self) -> int:
        return weight_of(self)


def weight_of(tag: HodgeModuleTag) -> int:
    """Weight d_p - 2k of the twisted pure module on the rank-p locus."""
    return dim_stratum(Stratum(tag.space, tag.p)) - 2 * tag.tate_twist


def start_level(space: MatrixSpace, p: int, k: int) -> int:
    """First nonzero level c_p + k of the Hodge filtration on the rank-p
    simple module with Tate twist k."""
    return codim_stratum(Stratum(space, p)) + k


def square_weight_layer(space: MatrixSpace, p: int) -> tuple[int, int]:
    """(w_p, k_p) for the weight-graded layer of the localization at the
    determinant carried by the rank-p stratum (square spaces):

        w_p = n^2 + n - p,   k_p = -comb(n-p+1, 2).
    """
    if not space.is_square:
        raise ValueError("weight layers of the determinant localization need m = n")
    n = space.n
    if not 0 <= p <= n:
        raise ValueError(f"stratum index p={p} outside 0..{n}")
    w = n * n + n - p
    k = -comb(n - p + 1, 2)
    assert w == dim_stratum(Stratum(space, p)) - 2 * k
    return w, k


def square_start_levels_consistency(space: MatrixSpace) -> VerificationReport:
    """Numerical sanity of the square weight ledger: w_p strictly drops by
    exactly 1 with p, the start levels l_p = comb(n-p, 2) satisfy
    l_{p+1} + (n-p-1) <= l_p with equality, and d_p - w_p is even."""
    if not space.is_square:
        raise ValueError("this consistency check needs m = n")
    n = space.n
    report = VerificationReport("square-weight-ledger", {"n": n})
    layers = [square_weight_layer(space, p) for p in range(n + 1)]
    levels = [start_level(space, p, layers[p][1]) for p in range(n + 1)]
    for p in range(n + 1):
        w, _ = layers[p]
        report.checks += 1
        if levels[p] != comb(n - p, 2):
            report.add_failure(check="start-level", p=p, level=levels[p])
        report.checks += 1
        if (dim_stratum(Stratum(space, p)) - w) % 2:
            report.add_failure(check="parity", p=p, weight=w)
    for p in range(n):
        report.checks += 1
        if layers[p][0] - layers[p + 1][0] != 1:
            report.add_failure(
                check="weight-step", p=p, w=layers[p][0], w_next=layers[p + 1][0]
            )
        report.checks += 1
        if levels[p + 1] + (n - p - 1) != levels[p]:
            report.add_failure(
                check="level-step", p=p, l=levels[p], l_next=levels[p + 1]
            )
    return report


def local_cohomology_weight(space: MatrixSpace, p: int) -> tuple[int, int]:
    """(w'_p, k'_p) for the local cohomology module supported in the
    singular locus whose underlying simple module sits on the rank-p
    stratum (m > n):

        w'_p = mn + (n-p)*(m-n+1),
        k'_p = -comb(n-p+1, 2) - (n-p)*(m-n).

    The degenerate case p = n is admitted as the localization layer in
    cohomological degree 0, giving w' = mn and k' = 0.
    """
    if space.m <= space.n:
        raise ValueError("local cohomology weights need m > n")
    m, n = space.m, space.n
    if not 0 <= p <= n:
        raise ValueError(f"stratum index p={p} outside 0..{n}")
    w = m * n + (n - p) * (m - n + 1)
    k = -comb(n - p + 1, 2) - (n - p) * (m - n)
    assert w == dim_stratum(Stratum(space, p)) - 2 * k
    assert w == (n - p) * (m - n) + (m * n + n - p)
    return w, k


def filtration_support_check(space: MatrixSpace, kmax: int, box: int) -> VerificationReport:
    """The level-k piece of the Hodge filtration on the rank-p simple
    module (square spaces) is nonzero exactly when k >= (n-p)^2, i.e. the
    support set U^p_{k - comb(n-p+1, 2)} is nonempty exactly then.

    Nonemptiness is witnessed by the distinguished weight of the stratum;
    emptiness below the threshold is scanned exhaustively over the
    box-bounded dominant tails. (Membership constrains the head only
    through lam_p >= p-n, which the constant head p-n satisfies inside
    any box with bound >= n, so scanning tails is exhaustive.)
    """
    if not space.is_square:
        raise ValueError("the filtration support check needs m = n")
    n = space.n
    if box < n:
        raise ValueError("box bound must be at least n to contain the witnesses")
    report = VerificationReport(
        "filtration-support", {"n": n, "kmax": kmax, "box": box}
    )
    for p in range(n + 1):
        threshold = (n - p) ** 2
        tail_sums = [sum(t) for t in dominant_tuples(n - p, -box, p - n)]
        witness = delta_p(p, space)
        for k in range(kmax + 1):
            expected = k >= threshold
            if expected:
                # membership of delta^p exhibits nonemptiness
                observed = in_Ukp(witness, p, k - comb(n - p + 1, 2), space)
            else:
                # tail sum >= -k is the membership condition at this level
                observed = not all(s < -k for s in tail_sums)
            report.checks += 1
            if observed != expected:
                report.add_failure(p=p, k=k, expected=expected, observed=observed)
    return report


def local_weight_ledger_check(mmax: int) -> VerificationReport:
    """Arithmetic consistency of the local cohomology weights for all
    spaces with m <= mmax: the weight matches d_p - 2k' and the degree
    identity w' = (n-p)(m-n) + mn + n - p."""
    report = VerificationReport("local-cohomology-weights", {"mmax": mmax})
    for m in range(2, mmax + 1):
        for n in range(1, m):
            space = MatrixSpace(m, n)
            for p in range(n + 1):
                w, k = local_cohomology_weight(space, p)
                d_p = dim_stratum(Stratum(space, p))
                report.checks += 1
                if w != d_p - 2 * k:
                    report.add_failure(check="weight-twist", m=m, n=n, p=p, w=w, k=k)
                report.checks += 1
                if w != (n - p) * (m - n) + (m * n + n - p):
                    report.add_failure(check="degree-identity", m=m, n=n, p=p, w=w)
    return report


def generation_level_Sdet(space: MatrixSpace) -> int:
    """Generation level comb(n, 2) of the Hodge filtration on the
    localization at the determinant: the largest of the per-stratum start
    levels comb(n-p, 2), attained at p = 0."""
    if not space.is_square:
        raise ValueError("the determinant localization needs m = n")
    n = space.n
    levels = [comb(n - p, 2) for p in range(n + 1)]
    top = max(levels)
    assert top == levels[0] == comb(n, 2)
    return top

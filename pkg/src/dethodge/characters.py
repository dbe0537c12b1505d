"""Dimension and multiplicity arithmetic for GL representations.

Dimensions come from the standard product formula over positive roots,
tensor product multiplicities from direct enumeration of
Littlewood-Richardson skew tableaux (desk scale, with a hard size cap),
and graded dimensions of weight-set modules from summing products of
dimensions over the members of a set. A Cauchy-type identity against a
plain binomial count keeps the dimension formula honest.
"""

from __future__ import annotations

from math import comb

from .matrixspace import MatrixSpace, Stratum, codim_stratum
from .reporting import VerificationReport
from .repsets import compose_weight, lambda_p_mu
from .weights import WeightBox, check_weight, is_partition, pad, partitions_of, strip_zeros

LR_SIZE_CAP = 20


def dim_irrep(lam, N: int) -> int:
    """Dimension of the irreducible GL_N representation with highest
    weight lam, by the product formula

        prod_{i<j} (lam_i - lam_j + j - i) / (j - i).

    Invariant under adding a constant to every entry (determinant twist).
    """
    lam = check_weight(lam, N)
    num = 1
    den = 1
    for i in range(N):
        for j in range(i + 1, N):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _as_partition(entries) -> tuple[int, ...]:
    v = strip_zeros(tuple(entries))
    if v and not is_partition(v):
        raise ValueError(f"{tuple(entries)} is not a partition")
    return v


def lr_coefficient(gamma, beta, lam) -> int:
    """Littlewood-Richardson coefficient: the multiplicity of the irrep of
    highest weight lam inside the tensor product indexed by gamma and
    beta, computed by counting LR skew tableaux of shape lam/gamma and
    content beta. Symmetric in gamma and beta; zero when the sizes do not
    add up. Inputs are capped at |lam| <= 20."""
    g = _as_partition(gamma)
    b = _as_partition(beta)
    l = _as_partition(lam)
    if sum(l) > LR_SIZE_CAP:
        raise ValueError(f"|lam| = {sum(l)} exceeds the desk-scale cap {LR_SIZE_CAP}")
    if sum(g) + sum(b) != sum(l):
        return 0
    if len(g) > len(l) or any(g[i] > l[i] for i in range(len(g))):
        return 0
    if not b:
        return 1 if g == l else 0

    # Cells of the skew shape in reverse reading order (each row right to
    # left); filling in this order lets the lattice-word condition be
    # enforced on prefixes as we go.
    inner = g + (0,) * (len(l) - len(g))
    cells = []
    for r in range(len(l)):
        cells.extend((r, c) for c in range(l[r] - 1, inner[r] - 1, -1))

    nvals = len(b)
    counts = [0] * (nvals + 1)
    filled: dict[tuple[int, int], int] = {}

    def place(idx: int) -> int:
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        above = filled.get((r - 1, c))
        right = filled.get((r, c + 1))
        lo = 1 if above is None else above + 1
        hi = nvals if right is None else right
        total = 0
        for v in range(lo, hi + 1):
            if counts[v] >= b[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filled[(r, c)] = v
            total += place(idx + 1)
            counts[v] -= 1
            del filled[(r, c)]
        return total

    return place(0)


def tensor_expansion(nu, gamma, max_parts: int) -> dict[tuple[int, ...], int]:
    """Decomposition of the tensor product of the irreps indexed by the
    partitions nu and gamma in GL with at most max_parts rows, as a map
    constituent -> multiplicity (constituents zero-padded to max_parts)."""
    nu = _as_partition(nu)
    gamma = _as_partition(gamma)
    total = sum(nu) + sum(gamma)
    out: dict[tuple[int, ...], int] = {}
    for lam in partitions_of(total, max_parts):
        c = lr_coefficient(nu, gamma, lam)
        if c:
            out[lam] = c
    return out


def tensor_decomposition_check(gamma, p: int, mu, space: MatrixSpace) -> VerificationReport:
    """Verify the tensor step that builds a layer of the rank-p support
    out of its minimal elements: the product of the irrep of gamma (at
    most p parts) with the irrep of the minimal element attached to mu
    contains their sum with multiplicity one, and every other constituent
    beta dominates the minimal element with tail sum strictly above
    -|mu| - c_p. Non-partition weights are shifted to partitions before
    the LR computation; a uniform shift does not change multiplicities."""
    if not space.is_square:
        raise ValueError("the tensor-step check is stated for square spaces")
    n = space.n
    gamma = _as_partition(gamma)
    mu = _as_partition(mu)
    if len(gamma) > p:
        raise ValueError(f"gamma must have at most p={p} parts")
    d = sum(mu)
    nu = lambda_p_mu(p, mu, space)
    target = compose_weight(mu, gamma, p, space)
    c_p = codim_stratum(Stratum(space, p))

    shift = -nu[-1]
    nu_shifted = tuple(x + shift for x in nu)
    expansion = tensor_expansion(nu_shifted, gamma, n)

    report = VerificationReport(
        "tensor-step",
        {"n": n, "p": p, "mu": mu, "gamma": gamma},
    )
    designated = tuple(x + shift for x in target)
    report.checks += 1
    if expansion.get(designated, 0) != 1:
        report.add_failure(
            check="designated-multiplicity",
            weight=target,
            multiplicity=expansion.get(designated, 0),
        )
    for beta_shifted, mult in expansion.items():
        if beta_shifted == designated:
            continue
        beta = tuple(x - shift for x in beta_shifted)
        report.checks += 1
        if any(beta[i] < nu[i] for i in range(n)):
            report.add_failure(check="dominates-minimal", weight=beta, mult=mult)
        report.checks += 1
        if sum(beta[p:]) <= -d - c_p:
            report.add_failure(check="tail-sum", weight=beta, tail=sum(beta[p:]))
    return report


def cauchy_check(space: MatrixSpace, d: int) -> bool:
    """Degree-d instance of the Cauchy identity: the dimensions of the
    irreducible blocks of the degree-d polynomials on matrix space add up
    to the monomial count comb(mn + d - 1, d)."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    m, n = space.m, space.n
    total = 0
    for lam in partitions_of(d, n):
        total += dim_irrep(pad(lam, m), m) * dim_irrep(lam, n)
    return total == comb(m * n + d - 1, d)


def hilbert_function(weight_set, space: MatrixSpace, d: int, box: int | None = None) -> int:
    """Dimension of the degree-d graded piece of the module whose weight
    set is given: the sum of dim(V_lam^(m)) * dim(V_lam^(n)) over members
    lam of total size d.

    Sets consisting of partitions are summed exactly. Sets containing
    weights with negative entries are infinite in each degree direction,
    so an explicit box bound is required and the result is truncated to
    entries in [-box, box] (square spaces only).
    """
    n, m = space.n, space.m
    if weight_set.partitions_only:
        if d < 0:
            raise ValueError("graded pieces of ideals sit in degrees d >= 0")
        total = 0
        for lam in partitions_of(d, n):
            if weight_set.contains(lam):
                total += dim_irrep(pad(lam, m), m) * dim_irrep(lam, n)
        return total
    if box is None:
        raise ValueError(
            "weight sets with negative entries need an explicit box bound "
            "(the result is truncated)"
        )
    if not space.is_square:
        raise ValueError("box-truncated graded dimensions need a square space")
    total = 0
    for lam in WeightBox(n, box):
        if sum(lam) == d and weight_set.contains(lam):
            total += dim_irrep(lam, n) ** 2
    return total

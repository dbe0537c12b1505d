"""Cross-validation against the actual polynomial ring.

All the weight-set predicates above are combinatorial shadows of honest
statements about polynomials in the matrix entries. This script drives
the exact-arithmetic oracle: expand minors and highest weight vectors
symbolically, differentiate, and evaluate at random rank-constrained
integer matrices to test vanishing orders.
"""

from dethodge import (
    MatrixSpace,
    RankConstrainedSampler,
    dcep_cross_validation,
    highest_weight_vector,
    in_symbolic_power,
    minor,
    symbolic_membership,
    vanishes_on_rank,
)
from dethodge.weights import partitions_of

space = MatrixSpace(3, 3)
SEED = 1729

print("The 3x3 determinant, expanded exactly:")
det3 = minor(space, (0, 1, 2), (0, 1, 2))
print(f"  {det3}\n")

print("Highest weight vectors are products of leading principal minors;")
print("they generate the isotypic components of the coordinate ring:")
for lam in [(1, 1, 0), (2, 1, 0), (2, 2, 2)]:
    f = highest_weight_vector(lam, space)
    print(f"  lam={lam}: degree {f.total_degree}, {len(f._c)} terms")
print()

print("Vanishing on a rank stratum is tested by evaluation at products of")
print("random integer matrices (a nonzero value is an exact certificate):")
sampler = RankConstrainedSampler(space, 1, bound=7, seed=SEED)
m2 = minor(space, (0, 1), (0, 1))
print(f"  2x2 minor on rank<=1 points: vanishes = {vanishes_on_rank(m2, 1, sampler)}")
print(f"  2x2 minor on rank<=2 points: vanishes = {vanishes_on_rank(m2, 2, sampler)}\n")

print("Membership in a symbolic power means vanishing to a prescribed")
print("order; operationally, all lower-order partials vanish on the locus:")
cases = [((1, 1, 1), 2, 2), ((2, 1, 0), 2, 2), ((2, 2, 0), 2, 2), ((1, 1, 1), 3, 3)]
for lam, p, d in cases:
    f = highest_weight_vector(lam, space)
    s = RankConstrainedSampler(space, p - 1, bound=7, seed=SEED)
    differential = symbolic_membership(f, p, d, s)
    combinatorial = in_symbolic_power(lam, p, d, space)
    print(f"  lam={lam}, p={p}, d={d}: differential={differential}, "
          f"tail-sum predicate={combinatorial}")
print()

print("Sweeping all partitions of size <= 5 through both tests:")
lambdas = [lam for size in range(6) for lam in partitions_of(size, 3)]
for p in (1, 2, 3):
    for d in (1, 2, 3):
        s = RankConstrainedSampler(space, p - 1, bound=7, seed=SEED)
        report = dcep_cross_validation(space, lambdas, p, d, s)
        print(f"  {report.summary()}")

"""Positive roots, the distinguished root sets, and cone membership.

Run with: python3 demos/05_root_combinatorics.py
"""

from lrwkit import (
    LieSpec,
    Partition,
    RootLatticeElement,
    beta_roots,
    commute_check,
    cone_membership,
    family_decomposition,
    integer_root_coords,
    positive_roots,
    type_a_support,
    weight_from_partition,
    weight_of_root_vector,
)

# Positive roots in simple-root coordinates; counts are n^2 (B/C), n^2-n (D).
for spec in (LieSpec("B", 2), LieSpec("C", 3), LieSpec("D", 4)):
    roots = positive_roots(spec)
    print(f"{spec.family}{spec.rank}: {len(roots)} positive roots")
print()

# The distinguished two-index roots. At D5 they have neat weight coordinates.
spec = LieSpec("D", 5)
bset = beta_roots(spec)
print("distinguished roots of D5:")
for label, root in zip(bset.labels, bset.roots):
    print(f"  beta{label}: alpha-coords {root.coords}, "
          f"weight-coords {weight_of_root_vector(spec, root.coords)}")
print()

# Their commutation properties, verified by enumeration.
for family, rank in (("B", 5), ("C", 5), ("D", 6)):
    report = commute_check(LieSpec(family, rank))
    print(f"{family}{rank}: {report['beta_count']} roots, "
          f"violations: {len(report['pair_sum_violations'])} pair sums, "
          f"{len(report['pair_sum_minus_simple_violations'])} shifted sums, "
          f"{len(report['lowering_violations'])} lowerings -> ok={report['ok']}")
print()

# A difference supported on an A-type chain of the diagram cannot separate a
# component from the top of a family member.
spec = LieSpec("C", 4)
eta = RootLatticeElement((1, 1, 0, 0), 4)
print("chain-supported difference is type A:", type_a_support(eta, spec))
eta = RootLatticeElement((0, 0, 1, 1), 4)
print("difference across the double bond is type A:", type_a_support(eta, spec))
print()

# Every component of a family decomposition is reachable from the top inside
# the nonnegative span of the distinguished roots; the solutions list the ways.
spec = LieSpec("D", 5)
lam = Partition([3, 2, 1])
lam_w = weight_from_partition(lam, 5).coeffs
print(f"cone solutions for the components of the family member at {list(lam)}:")
for mu in family_decomposition(lam, "o").terms:
    mu_w = weight_from_partition(mu, 5).coeffs
    coords = integer_root_coords(spec, tuple(a - b for a, b in zip(lam_w, mu_w)))
    sols = cone_membership(RootLatticeElement(coords, 5), spec)
    print(f"  {list(mu)}: {sols}")

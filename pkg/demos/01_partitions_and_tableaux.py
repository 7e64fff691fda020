"""Partitions, the weight dictionary, and ballot tableaux.

Run with: python3 demos/01_partitions_and_tableaux.py
"""

from lrwkit import (
    DominantWeight,
    Partition,
    SkewShape,
    conjugate,
    content,
    enumerate_lr_tableaux,
    is_ballot,
    lr_coefficient,
    partition_from_weight,
    reverse_row_word,
    weight_from_partition,
)

# A dominant weight is a list of coefficients on the fundamental weights.
# The dictionary with partitions: the k-th coefficient counts columns of
# height exactly k.
w = DominantWeight((1, 2, 1), 3)
lam = partition_from_weight(w)
print(f"weight {w.coeffs} at rank 3  <->  partition {list(lam)}")
print(f"back again: {weight_from_partition(lam, 3).coeffs}")
print(f"conjugate diagram: {list(conjugate(lam))}")
print()

# Skew tableaux: fillings of lam with the boxes of an inner shape removed,
# weakly increasing along rows and strictly increasing down columns.
lam = Partition([3, 2, 1])
for inner in (Partition(), Partition([1, 1]), Partition([2, 2])):
    shape = SkewShape(lam, inner)
    tableaux = enumerate_lr_tableaux(shape)
    print(f"shape {list(lam)}/{list(inner)}: {len(tableaux)} ballot tableaux")
    for t in tableaux:
        word = reverse_row_word(t)
        print(f"  rows {t.entries}  word {word}  ballot={is_ballot(word)}"
              f"  content {list(content(t))}")
print()

# The number of ballot tableaux of shape lam/mu with a given content is the
# Littlewood-Richardson coefficient.
lam, mu, nu = Partition([2, 1]), Partition([1]), Partition([1, 1])
print(f"LR coefficient for {list(lam)} from {list(mu)} x {list(nu)}:",
      lr_coefficient(lam, mu, nu))
print("symmetric in the two factors:",
      lr_coefficient(lam, nu, mu) == lr_coefficient(lam, mu, nu))

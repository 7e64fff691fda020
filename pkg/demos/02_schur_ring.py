"""The ring of symmetric functions in the Schur basis, three ways.

Products by the Littlewood-Richardson rule, expansions by determinants of
complete symmetric functions, and brute-force monomial specializations all
have to agree.

Run with: python3 demos/02_schur_ring.py
"""

from lrwkit import (
    Partition,
    h_monomial_to_schur,
    jacobi_trudi,
    mult,
    omega,
    schur_basis,
    schur_polynomial,
    skew,
    skew_schur_expand,
)
from lrwkit.schur import poly_add_scaled, poly_mult

# Multiplication in the Schur basis.
s1 = schur_basis([1])
print("s[1] * s[1]  =", mult(s1, s1))
print("s[1] * s[2]  =", mult(s1, schur_basis([2])))
print()

# Skewing is adjoint to multiplication: it strips an inner shape.
lam = Partition([3, 2, 1])
print("skew of s[3,2,1] by [1,1]:", skew(schur_basis(lam), Partition([1, 1])))
print("skew of s[3,2,1] by [2,2]:", skew_schur_expand(lam, Partition([2, 2])))
print()

# The involution transposing all diagrams exchanges rows and columns.
print("omega(s[3])   =", omega(schur_basis([3])))
print("omega(s[2,1]) =", omega(schur_basis([2, 1])), "(self-conjugate)")
print()

# A second route: the determinant in complete symmetric functions.
det = jacobi_trudi(Partition([2, 1]))
print("determinant for [2,1]:", det)
print("re-expanded in Schur terms:", h_monomial_to_schur(det))
print()

# A third route: specialize to finitely many variables and multiply
# polynomials directly.
mu, nu = Partition([2]), Partition([1, 1])
nvars = 4
direct = poly_mult(schur_polynomial(mu, nvars), schur_polynomial(nu, nvars))
via_lr = {}
for lam, c in mult(schur_basis(mu), schur_basis(nu)).terms.items():
    poly_add_scaled(via_lr, schur_polynomial(lam, nvars), c)
print(f"monomial product of s{list(mu)} and s{list(nu)} in {nvars} variables"
      f" has {len(direct)} terms; matches the LR expansion: {direct == via_lr}")

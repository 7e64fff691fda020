"""Universal symplectic/orthogonal characters and the stable branching calculus.

The two classical bases are reached from the Schur basis by a unitriangular
change of basis (restriction), inverted exactly; their common structure
constants and the distinguished reducible family whose tensor products follow
the Littlewood-Richardson rule are computed from that.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .partitions import Partition, contains, size, subpartitions
from .schur import (
    IRREDUCIBLE,
    ORTHOGONAL,
    SCHUR,
    SYMPLECTIC,
    Expansion,
    mult,
    schur_basis,
    skew_schur_expand,
)

FAMILIES = (SYMPLECTIC, ORTHOGONAL)


def even_column_heights(nu: Partition) -> bool:
    """True iff every part occurs an even number of times.

    Equivalently the diagram's columns all have even height, so it can be
    tiled by vertical dominoes.
    """
    return all(v % 2 == 0 for v in Counter(nu).values())


def even_row_lengths(nu: Partition) -> bool:
    """True iff every part is even, so the diagram tiles by horizontal dominoes."""
    return all(part % 2 == 0 for part in nu)


def _check_family(family: str) -> str:
    if family not in FAMILIES:
        raise ValueError(f"family must be one of {FAMILIES}, got {family!r}")
    return family


@lru_cache(maxsize=None)
def _domino_class_sum(lam: Partition, columns: bool) -> Expansion:
    """Sum of skew expansions of lam over all contained domino-tileable inners."""
    test = even_column_heights if columns else even_row_lengths
    out: dict[Partition, int] = {}
    for nu in subpartitions(lam):
        if not test(nu):
            continue
        for mu, c in skew_schur_expand(lam, nu).terms.items():
            out[mu] = out.get(mu, 0) + c
    return Expansion(out, SCHUR)


@lru_cache(maxsize=None)
def branch_schur(lam: Partition, target: str) -> Expansion:
    """Restrict one Schur basis element to the symplectic or orthogonal basis.

    Symplectic restriction sums over vertical-domino inners, orthogonal over
    horizontal-domino inners. The result is unitriangular: lam itself appears
    with coefficient 1 and every other key is strictly smaller.
    """
    _check_family(target)
    columns = target == SYMPLECTIC
    return Expansion(_domino_class_sum(lam, columns).terms, target)


@lru_cache(maxsize=None)
def _universal_in_schur(lam: Partition, basis: str) -> Expansion:
    """One symplectic/orthogonal basis element written in the Schur basis.

    Inverts the unitriangular restriction by induction on box count.
    """
    out: dict[Partition, int] = {lam: 1}
    for mu, c in branch_schur(lam, basis).terms.items():
        if mu == lam:
            continue
        for p, k in _universal_in_schur(mu, basis).terms.items():
            out[p] = out.get(p, 0) - c * k
    return Expansion(out, SCHUR)


def to_schur(a: Expansion) -> Expansion:
    """Rewrite a symplectic/orthogonal expansion in the Schur basis."""
    if a.basis not in FAMILIES:
        raise ValueError(f"expected a classical-basis expansion, got {a.basis}")
    out: dict[Partition, int] = {}
    for lam, c in a.terms.items():
        for p, k in _universal_in_schur(lam, a.basis).terms.items():
            out[p] = out.get(p, 0) + c * k
    return Expansion(out, SCHUR)


def _branch_expansion(a: Expansion, target: str) -> Expansion:
    """Apply the restriction map to every key of a Schur expansion."""
    if a.basis != SCHUR:
        raise ValueError(f"expected a Schur expansion, got {a.basis}")
    out: dict[Partition, int] = {}
    for lam, c in a.terms.items():
        for mu, k in branch_schur(lam, target).terms.items():
            out[mu] = out.get(mu, 0) + c * k
    return Expansion(out, target)


@lru_cache(maxsize=None)
def stable_tensor_expansion(mu: Partition, nu: Partition, family: str) -> Expansion:
    """Product of two classical basis elements, expanded in the same basis.

    Computed by moving both factors to the Schur basis, multiplying there,
    and restricting back.
    """
    _check_family(family)
    prod = mult(_universal_in_schur(mu, family), _universal_in_schur(nu, family))
    return _branch_expansion(prod, family)


def stable_tensor_coefficient(
    mu: Partition, nu: Partition, lam: Partition, family: str = SYMPLECTIC
) -> int:
    """Stable tensor multiplicity of lam in the product of mu and nu.

    The symplectic and orthogonal bases share these structure constants; the
    family argument only selects the computation route.
    """
    return stable_tensor_expansion(mu, nu, family).coefficient(lam)


@dataclass(frozen=True)
class FamilyDecomposition:
    """Irreducible decomposition of one member of the tensor-closed family.

    ``terms`` maps each component partition to its positive multiplicity; the
    top partition always appears with multiplicity 1 and every component fits
    inside it.
    """

    family: str
    top: Partition
    terms: dict[Partition, int]

    def __post_init__(self) -> None:
        _check_family(self.family)
        if self.terms.get(self.top) != 1:
            raise ValueError(f"top component {list(self.top)} must have multiplicity 1")
        for mu, m in self.terms.items():
            if m <= 0:
                raise ValueError(f"multiplicities must be positive: {list(mu)}: {m}")
            if not contains(self.top, mu):
                raise ValueError(
                    f"component {list(mu)} does not fit inside top {list(self.top)}"
                )

    def multiplicity(self, mu: Partition) -> int:
        return self.terms.get(Partition(mu), 0)

    def sorted_terms(self) -> list[tuple[Partition, int]]:
        """Terms by descending box count, then descending lexicographic."""
        return [
            (p, self.terms[p])
            for p in sorted(self.terms, key=lambda q: (size(q), tuple(q)), reverse=True)
        ]

    def to_jsonable(self) -> dict:
        return {
            "family": "Sp" if self.family == SYMPLECTIC else "O",
            "top": list(self.top),
            "terms": [
                {"partition": list(p), "mult": m} for p, m in self.sorted_terms()
            ],
        }

    def __hash__(self) -> int:
        return hash((self.family, self.top, frozenset(self.terms.items())))


@lru_cache(maxsize=None)
def family_decomposition(lam: Partition, family: str) -> FamilyDecomposition:
    """Decompose the tensor-closed family member indexed by lam.

    The multiplicity of mu sums Littlewood-Richardson numbers over the domino
    class opposite to the one used for restriction: horizontal dominoes for
    the symplectic family, vertical for the orthogonal one.
    """
    _check_family(family)
    columns = family == ORTHOGONAL
    return FamilyDecomposition(family, lam, dict(_domino_class_sum(lam, columns).terms))


def tensor_product_two_ways(
    mu: Partition, nu: Partition, family: str
) -> tuple[Expansion, Expansion]:
    """Both sides of the family tensor rule, as irreducible-basis expansions.

    Left: decompose both factors and multiply componentwise with the stable
    tensor coefficients. Right: multiply in the Schur basis and decompose each
    resulting family member. The two must agree.
    """
    _check_family(family)
    lhs: dict[Partition, int] = {}
    wm = family_decomposition(mu, family)
    wn = family_decomposition(nu, family)
    for kap, m1 in wm.terms.items():
        for kap2, m2 in wn.terms.items():
            for lam, d in stable_tensor_expansion(kap, kap2, family).terms.items():
                lhs[lam] = lhs.get(lam, 0) + m1 * m2 * d
    rhs: dict[Partition, int] = {}
    for lam, c in mult(schur_basis(mu), schur_basis(nu)).terms.items():
        for p, m in family_decomposition(lam, family).terms.items():
            rhs[p] = rhs.get(p, 0) + c * m
    return Expansion(lhs, IRREDUCIBLE), Expansion(rhs, IRREDUCIBLE)


def min_stable_rank(lam: Partition, family: str) -> int:
    """Smallest rank at which the universal character of lam is irreducible.

    family is one of "sp", "o_odd", "o_even". The empty partition indexes the
    trivial character, which is irreducible at every rank.
    """
    if family not in (SYMPLECTIC, "o_odd", "o_even"):
        raise ValueError(f"family must be 'sp', 'o_odd' or 'o_even': {family!r}")
    if not lam:
        return 1
    rows = len(lam)
    return rows + 2 if family == "o_even" else rows + 1

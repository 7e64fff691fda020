"""The ring of symmetric functions in the Schur basis, with exact integers.

Products use the Littlewood-Richardson rule via ballot tableaux; the
determinant expansion and the monomial specialization give two independent
routes to the same answers.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Mapping

from .partitions import (
    EMPTY,
    Partition,
    conjugate,
    contains,
    partitions_of,
    size,
)
from .tableaux import SkewShape, _ballot_fillings, lr_coefficient

# Basis tags for Expansion values.
SCHUR = "schur"
H_MONOMIAL = "h"
SYMPLECTIC = "sp"
ORTHOGONAL = "o"
IRREDUCIBLE = "v"


class Expansion:
    """Sparse integer combination of basis elements indexed by partitions.

    One value type serves every basis in the library; the tag records which
    basis the keys refer to. Zero coefficients are never stored. Instances
    are treated as immutable: combine them with the module functions rather
    than editing ``terms``.
    """

    __slots__ = ("terms", "basis")

    def __init__(self, terms: Mapping[Partition, int] | None = None, basis: str = SCHUR):
        cleaned: dict[Partition, int] = {}
        for p, c in (terms or {}).items():
            c = int(c)
            if c != 0:
                cleaned[Partition(p)] = c
        self.terms = cleaned
        self.basis = basis

    def coefficient(self, p: Partition) -> int:
        return self.terms.get(Partition(p), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def support_sorted(self) -> list[Partition]:
        """Keys in descending lexicographic order."""
        return sorted(self.terms, reverse=True)

    def to_jsonable(self) -> list[dict]:
        return [
            {"partition": list(p), "coeff": self.terms[p]} for p in self.support_sorted()
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = " + ".join(
            f"{self.terms[p]}*{self.basis}{list(p)}" for p in self.support_sorted()
        )
        return body or f"0 ({self.basis})"


def schur_basis(p: Partition | list[int] | tuple[int, ...]) -> Expansion:
    """The basis element for one partition."""
    return Expansion({Partition(p): 1}, SCHUR)


def add(a: Expansion, b: Expansion) -> Expansion:
    if a.basis != b.basis:
        raise ValueError(f"basis mismatch: {a.basis} vs {b.basis}")
    out = dict(a.terms)
    for p, c in b.terms.items():
        out[p] = out.get(p, 0) + c
    return Expansion(out, a.basis)


def scale(a: Expansion, c: int) -> Expansion:
    return Expansion({p: c * v for p, v in a.terms.items()}, a.basis)


def retag(a: Expansion, basis: str) -> Expansion:
    return Expansion(a.terms, basis)


@lru_cache(maxsize=None)
def _mult_basis(mu: Partition, nu: Partition) -> Expansion:
    """Product of two Schur basis elements as a Schur expansion."""
    n = size(mu) + size(nu)
    out: dict[Partition, int] = {}
    for lam in partitions_of(n, max_part=(mu[0] if mu else 0) + (nu[0] if nu else 0),
                             max_rows=len(mu) + len(nu)):
        if not contains(lam, mu):
            continue
        c = lr_coefficient(lam, mu, nu)
        if c:
            out[lam] = c
    return Expansion(out, SCHUR)


def mult(a: Expansion, b: Expansion) -> Expansion:
    """Bilinear product; graded by box count."""
    if a.basis != SCHUR or b.basis != SCHUR:
        raise ValueError(f"mult needs Schur-tagged inputs, got {a.basis}, {b.basis}")
    out: dict[Partition, int] = {}
    for mu, cm in a.terms.items():
        for nu, cn in b.terms.items():
            for lam, c in _mult_basis(mu, nu).terms.items():
                out[lam] = out.get(lam, 0) + cm * cn * c
    return Expansion(out, SCHUR)


@lru_cache(maxsize=None)
def skew_schur_expand(lam: Partition, nu: Partition) -> Expansion:
    """Schur expansion of the skew function lam/nu via ballot tableaux.

    Zero when nu does not fit inside lam.
    """
    if not contains(lam, nu):
        return Expansion({}, SCHUR)
    shape = SkewShape(lam, nu)
    out: dict[Partition, int] = {}
    for rows in _ballot_fillings(shape, None):
        counts: dict[int, int] = {}
        for row in rows:
            for v in row:
                counts[v] = counts.get(v, 0) + 1
        mu = Partition(counts.get(v, 0) for v in range(1, len(counts) + 1))
        out[mu] = out.get(mu, 0) + 1
    return Expansion(out, SCHUR)


def skew(a: Expansion, nu: Partition) -> Expansion:
    """Adjoint of multiplication by the basis element of nu, extended linearly."""
    if a.basis != SCHUR:
        raise ValueError(f"skew needs a Schur-tagged input, got {a.basis}")
    out: dict[Partition, int] = {}
    for lam, c in a.terms.items():
        for mu, k in skew_schur_expand(lam, nu).terms.items():
            out[mu] = out.get(mu, 0) + c * k
    return Expansion(out, SCHUR)


def omega(a: Expansion) -> Expansion:
    """The involution conjugating every indexing partition."""
    if a.basis != SCHUR:
        raise ValueError(f"omega needs a Schur-tagged input, got {a.basis}")
    return Expansion({conjugate(p): c for p, c in a.terms.items()}, SCHUR)


def jacobi_trudi(lam: Partition, nu: Partition = EMPTY) -> Expansion:
    """Formal determinant of complete symmetric functions for the shape lam/nu.

    Returned in the h-monomial basis: each key is the multiset of h-indices
    of one product, encoded as a partition; h_0 = 1 contributes no index and
    any negative index kills the whole term. The permutation sum is expanded
    row by row, abandoning a branch as soon as an index goes negative.
    """
    r = max(len(lam), len(nu))
    if r == 0:
        return Expansion({EMPTY: 1}, H_MONOMIAL)
    lam_p = list(lam) + [0] * (r - len(lam))
    nu_p = list(nu) + [0] * (r - len(nu))
    out: dict[Partition, int] = {}
    used = [False] * r
    chosen: list[int] = []
    indices: list[int] = []

    def expand(i: int, sign: int) -> None:
        if i == r:
            key = Partition(sorted(indices, reverse=True))
            out[key] = out.get(key, 0) + sign
            return
        for j in range(r):
            if used[j]:
                continue
            k = lam_p[i] - nu_p[j] - i + j
            if k < 0:
                continue
            inversions = sum(1 for c in chosen if c > j)
            used[j] = True
            chosen.append(j)
            if k > 0:
                indices.append(k)
            expand(i + 1, -sign if inversions % 2 else sign)
            if k > 0:
                indices.pop()
            chosen.pop()
            used[j] = False

    expand(0, 1)
    return Expansion(out, H_MONOMIAL)


@lru_cache(maxsize=None)
def _h_product(key: Partition) -> Expansion:
    """Schur expansion of a product of single-row basis elements."""
    if not key:
        return Expansion({EMPTY: 1}, SCHUR)
    head = _h_product(Partition(key[:-1]))
    return mult(head, schur_basis([key[-1]]))


def h_monomial_to_schur(a: Expansion) -> Expansion:
    """Re-expand an h-monomial expansion in the Schur basis."""
    if a.basis != H_MONOMIAL:
        raise ValueError(f"expected an h-monomial expansion, got {a.basis}")
    out: dict[Partition, int] = {}
    for key, c in a.terms.items():
        for p, k in _h_product(key).terms.items():
            out[p] = out.get(p, 0) + c * k
    return Expansion(out, SCHUR)


def _column_strict_fillings(lam: Partition, num_vars: int) -> Iterator[list[int]]:
    """Content vectors of all semi-standard fillings of a straight shape.

    Entries run over 1..num_vars; this enumeration is independent of the
    ballot machinery so it can serve as an oracle for it.
    """
    nrows = len(lam)
    rows: list[list[int]] = [[0] * lam[i] for i in range(nrows)]
    counts = [0] * num_vars

    def fill(i: int, j: int) -> Iterator[list[int]]:
        if i == nrows:
            yield counts.copy()
            return
        ni, nj = (i, j + 1) if j + 1 < lam[i] else (i + 1, 0)
        lo = 1 if j == 0 else rows[i][j - 1]
        if i > 0 and j < lam[i - 1]:
            lo = max(lo, rows[i - 1][j] + 1)
        for v in range(lo, num_vars + 1):
            rows[i][j] = v
            counts[v - 1] += 1
            yield from fill(ni, nj)
            counts[v - 1] -= 1

    if nrows == 0:
        yield counts.copy()
        return
    if nrows > num_vars:
        return
    yield from fill(0, 0)


def schur_polynomial(lam: Partition, num_vars: int) -> dict[tuple[int, ...], int]:
    """Specialize a Schur basis element to num_vars variables.

    Returns an exponent-vector to coefficient map; zero (empty map) when the
    partition has more rows than there are variables.
    """
    if num_vars < 1:
        raise ValueError(f"num_vars must be positive: {num_vars}")
    out: dict[tuple[int, ...], int] = {}
    for counts in _column_strict_fillings(lam, num_vars):
        key = tuple(counts)
        out[key] = out.get(key, 0) + 1
    return out


def poly_mult(
    p: dict[tuple[int, ...], int], q: dict[tuple[int, ...], int]
) -> dict[tuple[int, ...], int]:
    """Multiply two exponent-vector polynomials."""
    out: dict[tuple[int, ...], int] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            val = out.get(key, 0) + c1 * c2
            if val:
                out[key] = val
            else:
                out.pop(key, None)
    return out


def poly_add_scaled(
    acc: dict[tuple[int, ...], int], p: dict[tuple[int, ...], int], c: int
) -> None:
    """In-place acc += c * p."""
    for e, v in p.items():
        val = acc.get(e, 0) + c * v
        if val:
            acc[e] = val
        else:
            acc.pop(e, None)

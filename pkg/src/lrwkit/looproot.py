"""Positive roots of types B/C/D and the distinguished two-index root sets.

The distinguished roots are, in orthogonal coordinates, e_k + e_l with both
indices below the spin/short tail of the diagram; type C also admits the
k = l degenerations 2e_l. Their nonnegative span bounds which irreducible
components can appear in the loop-algebra modules, and the commutation
lemma verified here is what makes that bound work.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .lie import LieSpec, adjacency, cartan_matrix, weight_of_root_vector
from .partitions import RootLatticeElement


def _root(spec: LieSpec, coords: list[int]) -> RootLatticeElement:
    return RootLatticeElement(tuple(coords), spec.rank)


def _segment(coords: list[int], lo: int, hi: int, value: int) -> None:
    """Add value on 0-indexed positions lo..hi inclusive (no-op when empty)."""
    for i in range(lo, hi + 1):
        coords[i] += value


@lru_cache(maxsize=None)
def positive_roots(spec: LieSpec) -> frozenset[RootLatticeElement]:
    """All positive roots in simple-root coordinates.

    Built from the orthogonal-coordinate descriptions: n^2 roots for B/C and
    n^2 - n for D.
    """
    if spec.family not in ("B", "C", "D"):
        raise ValueError(f"positive roots implemented for B/C/D only: {spec.family}")
    n = spec.rank
    roots: list[RootLatticeElement] = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            coords = [0] * n
            _segment(coords, i - 1, j - 2, 1)  # e_i - e_j
            roots.append(_root(spec, coords))
    if spec.family == "B":
        for i in range(1, n + 1):  # e_i
            coords = [0] * n
            _segment(coords, i - 1, n - 1, 1)
            roots.append(_root(spec, coords))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):  # e_i + e_j
                coords = [0] * n
                _segment(coords, i - 1, j - 2, 1)
                _segment(coords, j - 1, n - 1, 2)
                roots.append(_root(spec, coords))
    elif spec.family == "C":
        for i in range(1, n + 1):  # 2 e_i
            coords = [0] * n
            _segment(coords, i - 1, n - 2, 2)
            coords[n - 1] += 1
            roots.append(_root(spec, coords))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):  # e_i + e_j
                coords = [0] * n
                _segment(coords, i - 1, j - 2, 1)
                _segment(coords, j - 1, n - 2, 2)
                coords[n - 1] += 1
                roots.append(_root(spec, coords))
    else:  # D
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):  # e_i + e_j
                coords = [0] * n
                if j <= n - 1:
                    _segment(coords, i - 1, j - 2, 1)
                    _segment(coords, j - 1, n - 3, 2)
                    coords[n - 2] += 1
                    coords[n - 1] += 1
                else:
                    _segment(coords, i - 1, n - 3, 1)
                    coords[n - 1] += 1
                roots.append(_root(spec, coords))
    result = frozenset(roots)
    expected = n * n if spec.family in ("B", "C") else n * n - n
    assert len(result) == expected, (spec, len(result), expected)
    return result


@dataclass(frozen=True)
class BetaSet:
    """The ordered distinguished roots with their (k, l) labels.

    Labels are ordered lexicographically; l_max is the largest admissible
    second index (rank-1 for B/C, rank-2 for D, whose diagram indexing runs
    one past the construction's natural range).
    """

    spec: LieSpec
    labels: tuple[tuple[int, int], ...]
    roots: tuple[RootLatticeElement, ...]
    l_max: int

    def to_jsonable(self) -> dict:
        return {
            "family": self.spec.family,
            "rank": self.spec.rank,
            "l_max": self.l_max,
            "count": len(self.roots),
            "roots": [
                {
                    "label": list(label),
                    "alpha": list(root.coords),
                    "weight": list(weight_of_root_vector(self.spec, root.coords)),
                }
                for label, root in zip(self.labels, self.roots)
            ],
        }


def _beta_root(spec: LieSpec, k: int, l: int) -> RootLatticeElement:
    """The root e_k + e_l (k <= l; k = l only arises for type C)."""
    n = spec.rank
    coords = [0] * n
    if spec.family == "B":
        _segment(coords, k - 1, l - 2, 1)
        _segment(coords, l - 1, n - 1, 2)
    elif spec.family == "C":
        _segment(coords, k - 1, l - 2, 1)
        _segment(coords, l - 1, n - 2, 2)
        coords[n - 1] += 1
    else:  # D
        _segment(coords, k - 1, l - 2, 1)
        _segment(coords, l - 1, n - 3, 2)
        coords[n - 2] += 1
        coords[n - 1] += 1
    return _root(spec, coords)


@lru_cache(maxsize=None)
def beta_roots(spec: LieSpec) -> BetaSet:
    """The distinguished roots in lexicographic label order.

    For B and D the labels run over 1 <= k < l <= l_max; type C additionally
    gets every k = l degeneration (the doubled-coordinate roots 2e_l), which
    the commutation lemma requires.
    """
    if spec.family not in ("B", "C", "D"):
        raise ValueError(f"beta roots implemented for B/C/D only: {spec.family}")
    l_max = spec.rank - 2 if spec.family == "D" else spec.rank - 1
    labels = []
    for k in range(1, l_max + 1):
        start = k if spec.family == "C" else k + 1
        for l in range(start, l_max + 1):
            labels.append((k, l))
    labels.sort()
    roots = tuple(_beta_root(spec, k, l) for k, l in labels)
    allowed = positive_roots(spec)
    for root in roots:
        assert root in allowed, (spec, root)
    return BetaSet(spec, tuple(labels), roots, l_max)


def type_a_support(eta: RootLatticeElement, spec: LieSpec) -> bool:
    """Whether the minimal connected sub-diagram around the support is an A-chain.

    The support is closed up to the smallest connected set of nodes containing
    it; the answer is True iff the induced sub-diagram is a path with only
    single bonds.
    """
    if eta.rank != spec.rank:
        raise ValueError(f"rank mismatch: element {eta.rank} vs spec {spec.rank}")
    if any(x < 0 for x in eta.coords):
        raise ValueError(f"coordinates must be nonnegative: {eta.coords}")
    support = [i for i, x in enumerate(eta.coords) if x != 0]
    if not support:
        raise ValueError("zero element has no support")
    nbrs = adjacency(spec)
    # Steiner closure in a tree: union of the unique paths to a fixed node.
    root = support[0]
    parent: dict[int, int] = {root: root}
    queue = [root]
    while queue:
        u = queue.pop()
        for v in nbrs[u]:
            if v not in parent:
                parent[v] = u
                queue.append(v)
    closed = set(support)
    for node in support[1:]:
        while node != root:
            node = parent[node]
            closed.add(node)
    c = cartan_matrix(spec)
    for i in closed:
        inside = [j for j in nbrs[i] if j in closed]
        if len(inside) > 2:
            return False
        for j in inside:
            if c[i][j] * c[j][i] != 1:
                return False
    return True


def cone_membership(
    diff: RootLatticeElement, spec: LieSpec
) -> list[tuple[int, ...]]:
    """All nonnegative integer combinations of the distinguished roots equal to diff.

    Bounded exhaustive search; the full solution list (not just existence)
    feeds the multiplicity-bound checks. Empty means the necessary condition
    for a nonzero multiplicity fails.
    """
    if diff.rank != spec.rank:
        raise ValueError(f"rank mismatch: element {diff.rank} vs spec {spec.rank}")
    betas = beta_roots(spec).roots
    n = spec.rank
    solutions: list[tuple[int, ...]] = []
    coeffs: list[int] = []

    def rec(idx: int, remaining: list[int]) -> None:
        if any(x < 0 for x in remaining):
            return
        if idx == len(betas):
            if not any(remaining):
                solutions.append(tuple(coeffs))
            return
        beta = betas[idx].coords
        bound = min(
            (remaining[i] // beta[i] for i in range(n) if beta[i] > 0), default=0
        )
        for s in range(bound + 1):
            coeffs.append(s)
            rec(idx + 1, [remaining[i] - s * beta[i] for i in range(n)])
            coeffs.pop()

    rec(0, list(diff.coords))
    solutions.sort()
    return solutions


def commute_check(spec: LieSpec) -> dict:
    """Exhaustively verify the commutation properties of the distinguished roots.

    (i) no two of them sum to a positive root; (ii) no such sum minus a simple
    root is a positive root; (iii) lowering by a simple root lands on a later
    distinguished root, except at the final column index where it may leave
    the set. Returns a report whose violation lists are empty on success.
    """
    bset = beta_roots(spec)
    betas = bset.roots
    labels = bset.labels
    allowed = positive_roots(spec)
    n = spec.rank
    pair_sum: list[dict] = []
    pair_sum_minus_simple: list[dict] = []
    lowering: list[dict] = []
    for r in range(len(betas)):
        for s in range(len(betas)):
            total = tuple(a + b for a, b in zip(betas[r].coords, betas[s].coords))
            if RootLatticeElement(total, n) in allowed:
                pair_sum.append({"r": labels[r], "s": labels[s], "sum": list(total)})
            for i in range(n):
                shifted = list(total)
                shifted[i] -= 1
                if RootLatticeElement(tuple(shifted), n) in allowed:
                    pair_sum_minus_simple.append(
                        {"r": labels[r], "s": labels[s], "i": i + 1, "sum": shifted}
                    )
    for r in range(len(betas)):
        for i in range(n):
            lowered = list(betas[r].coords)
            lowered[i] -= 1
            elem = RootLatticeElement(tuple(lowered), n)
            if elem not in allowed:
                continue
            later = any(betas[s] == elem for s in range(r, len(betas)))
            escape = labels[r][1] == bset.l_max and i + 1 == bset.l_max
            if not (later or escape):
                lowering.append({"r": labels[r], "i": i + 1, "lowered": lowered})
    return {
        "family": spec.family,
        "rank": spec.rank,
        "l_max": bset.l_max,
        "beta_count": len(betas),
        "pair_sum_violations": pair_sum,
        "pair_sum_minus_simple_violations": pair_sum_minus_simple,
        "lowering_violations": lowering,
        "ok": not (pair_sum or pair_sum_minus_simple or lowering),
    }

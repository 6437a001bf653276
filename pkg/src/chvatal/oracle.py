"""Brute-force ground truth for the star bound on a single complex.

The largest intersecting subfamily of a complex is a maximum clique in the
graph whose nodes are faces and whose edges join intersecting faces. The
search below is a plain branch and bound over bitset adjacency, bounded by a
greedy colouring of the candidate set.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Complex, Family, bits
from .errors import BudgetExceeded, PreconditionViolated

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class Verdict:
    max_intersecting_size: int
    max_intersecting_witness: Family
    max_star_size: int
    max_star_vertex: int | None
    holds: bool

    def to_json(self) -> dict:
        g = self.max_intersecting_witness.ground
        return {
            "holds": self.holds,
            "max_intersecting_size": self.max_intersecting_size,
            "max_intersecting_witness": {
                "vertices": list(g.labels),
                "faces": self.max_intersecting_witness.label_faces(),
            },
            "max_star_size": self.max_star_size,
            "max_star_vertex": None if self.max_star_vertex is None else g.label(self.max_star_vertex),
        }


def max_star(complex: Complex) -> tuple[int, int]:
    """``(vertex, size)`` of a largest star; smallest vertex id on ties."""
    if not len(complex):
        raise PreconditionViolated("empty complex has no stars")
    counts = [0] * complex.ground.n
    for f in complex.faces:
        for v in bits(f):
            counts[v] += 1
    best = max(counts)
    return counts.index(best), best


def _colour_bound(cand: int, adj: list[int]) -> int:
    colours = 0
    while cand:
        colours += 1
        avail = cand
        while avail:
            low = avail & -avail
            cand ^= low
            avail &= ~adj[low.bit_length() - 1] & ~low
    return colours


def max_clique(adj: list[int], lower: int = 0,
               node_budget: int = DEFAULT_NODE_BUDGET) -> list[int] | None:
    """Lexicographically least maximum clique of the graph ``adj`` (bitset rows).

    Subtrees that cannot reach ``lower`` nodes are pruned from the start;
    ``None`` means no clique of that size exists. Branching follows node
    order, so the first maximum clique reached is the lexicographically least.
    """
    m = len(adj)
    everyone = (1 << m) - 1
    # Nodes adjacent to all others sit in every maximum clique.
    forced = 0
    for i, row in enumerate(adj):
        if row | 1 << i == everyone:
            forced |= 1 << i
    k = forced.bit_count()
    best: list[int] | None = None
    best_size = lower - 1
    nodes = 0
    chosen: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best, best_size, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(f"clique search exceeded {node_budget} nodes")
        size = len(chosen) + k
        if size > best_size:
            best_size = size
            best = chosen[:]
        if not cand or size + _colour_bound(cand, adj) <= best_size:
            return
        while cand:
            if size + cand.bit_count() <= best_size:
                return
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            chosen.append(i)
            expand(cand & adj[i])
            chosen.pop()

    expand(everyone & ~forced)
    if best is None:
        return None
    return sorted(best + list(bits(forced)))


def compatibility_graph(faces) -> list[int]:
    faces = list(faces)
    adj = []
    for i, f in enumerate(faces):
        row = 0
        for j, g in enumerate(faces):
            if i != j and f & g:
                row |= 1 << j
        adj.append(row)
    return adj


def max_intersecting(complex: Complex | Family, node_budget: int = DEFAULT_NODE_BUDGET,
                     lower: int = 0) -> tuple[int, Family]:
    """Largest intersecting subfamily, lexicographically least among optima.

    ``lower`` is a known lower bound on the answer (for example a star size);
    it only speeds up the search and never changes the result.
    """
    family = complex.family if isinstance(complex, Complex) else complex
    faces = family.faces
    if not faces:
        return 0, family.with_faces(())
    adj = compatibility_graph(faces)
    pick = max_clique(adj, lower, node_budget)
    if pick is None:
        pick = max_clique(adj, 0, node_budget)
    return len(pick), family.with_faces(faces[i] for i in pick)


def verify_chvatal(complex: Complex, node_budget: int = DEFAULT_NODE_BUDGET) -> Verdict:
    """Compare the largest intersecting family of ``complex`` with its largest star."""
    if not len(complex):
        return Verdict(0, complex.family, 0, None, True)
    v, s = max_star(complex)
    size, witness = max_intersecting(complex, node_budget, lower=s)
    return Verdict(size, witness, s, v, size <= s)

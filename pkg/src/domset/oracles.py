"""Ground-truth machinery: exact minimum dominating sets, enumeration
of all minimum dominating sets, brute-force biclique detection, and
the harmonic-number helper.

The exact solver is a branch and bound over "which vertex dominates
the hardest remaining target"; with the packing lower bound it is
comfortable up to roughly 30 vertices. Everything here is deterministic
so oracle outputs can be frozen into fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ._kernels import BitsetKernel
from .errors import ResourceLimitError, ValidationError
from .graph import Graph, ids_of, mask_of
from .solvers import BicliqueWitness, solve_classical


@dataclass(frozen=True)
class OracleResult:
    """opt_size/witness_set are None when a size budget was exceeded."""

    opt_size: int | None
    witness_set: tuple[int, ...] | None
    node_count: int
    exceeded: bool = False

    def as_document(self) -> dict:
        return {
            "opt_size": self.opt_size,
            "witness_set": None if self.witness_set is None else list(self.witness_set),
            "node_count": self.node_count,
            "exceeded": self.exceeded,
        }


def exact_min_dominating_set(
    g: Graph,
    targets: Iterable[int] | None = None,
    budget: int | None = None,
) -> OracleResult:
    """Exact minimum size of a set dominating `targets` plus one witness.

    With a budget b, only solutions of size <= b are searched for; if
    none exists the result reports exceeded=True instead of a value.
    Branches on the remaining target with the fewest allowed dominators,
    trying dominators in decreasing-coverage order and banning each
    tried dominator from the rest of its sibling subtrees.
    """
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    masks = g.closed_masks
    kern = BitsetKernel(masks, g.n)

    if tmask == 0:
        opt = 0 if budget is None or budget >= 0 else None
        if opt is None:
            return OracleResult(None, None, 0, exceeded=True)
        return OracleResult(0, (), 0)

    seed = solve_classical(g, targets).dominating_set
    best_size = len(seed)
    best_set: tuple[int, ...] | None = seed
    if budget is not None and budget + 1 < best_size:
        best_size = budget + 1
        best_set = None
    nodes = 0

    def search(active: int, banned: int, chosen: list[int]) -> None:
        nonlocal best_size, best_set, nodes
        nodes += 1
        if active == 0:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_set = tuple(sorted(chosen))
            return
        depth = len(chosen)
        lb = kern.pack_bound(active, banned)
        if lb < 0:
            return
        _, c = kern.best_cover(active, banned)
        if c == 0:
            return
        lb = max(lb, -(-active.bit_count() // c))
        if depth + lb >= best_size:
            return
        u = kern.pick_target(active, banned)
        cands = ids_of(masks[u] & ~banned)
        cands = sorted(cands, key=lambda v: (-(masks[v] & active).bit_count(), v))
        local_banned = banned
        for v in cands:
            chosen.append(v)
            search(active & ~masks[v], local_banned, chosen)
            chosen.pop()
            local_banned |= 1 << v
        return

    search(tmask, 0, [])
    if best_set is None:
        return OracleResult(None, None, nodes, exceeded=True)
    if budget is not None and best_size > budget:
        return OracleResult(None, None, nodes, exceeded=True)
    return OracleResult(best_size, best_set, nodes)


def enumerate_min_dominating_sets(
    g: Graph, targets: Iterable[int] | None = None
) -> list[tuple[int, ...]]:
    """All sets of minimum cardinality dominating `targets`, in
    lexicographic order. Exhaustive over size-k subsets; meant for
    small graphs (n up to about 16)."""
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    if tmask == 0:
        return [()]
    k = exact_min_dominating_set(g, targets).opt_size
    assert k is not None
    masks = g.closed_masks
    out = []
    for combo in combinations(range(g.n), k):
        covered = 0
        for v in combo:
            covered |= masks[v]
        if tmask & ~covered == 0:
            out.append(combo)
    return out


def has_biclique(g: Graph, a: int, b: int, max_left: int = 4) -> BicliqueWitness | None:
    """Search for a complete bipartite subgraph with side sizes a <= b
    (sides disjoint, all cross edges present; sides need not be
    independent). Returns the witness with the lexicographically first
    left side, or None.

    Enumerates a-subsets and intersects open neighborhoods, so `a` is
    capped (default 4) to guard against combinatorial blow-up.
    """
    if a < 1 or b < a:
        raise ValidationError(f"need 1 <= a <= b, got a={a}, b={b}")
    if a > max_left:
        raise ResourceLimitError(f"left side {a} exceeds the cap {max_left}")
    n = g.n
    open_masks = [g.closed_masks[v] & ~(1 << v) for v in range(n)]

    def extend(start: int, left: list[int], left_mask: int, common: int):
        if len(left) == a:
            cand = common & ~left_mask
            if cand.bit_count() >= b:
                return BicliqueWitness(tuple(left), ids_of(cand)[:b])
            return None
        for v in range(start, n - (a - len(left)) + 1):
            nxt = open_masks[v] if not left else common & open_masks[v]
            if (nxt & ~(left_mask | 1 << v)).bit_count() < b:
                continue
            found = extend(v + 1, left + [v], left_mask | 1 << v, nxt)
            if found is not None:
                return found
        return None

    return extend(0, [], 0, 0)


def harmonic(n: int) -> float:
    """H_n = sum_{i=1..n} 1/i, H_0 = 0. Accurate to ~1e-12 via fsum."""
    if n < 0:
        raise ValidationError(f"harmonic needs n >= 0, got {n}")
    return math.fsum(1.0 / i for i in range(1, n + 1))

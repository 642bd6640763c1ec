"""Shared test utilities: independent brute-force oracles and an
invariant checker that replays solver traces against the greedy rules.

Everything here recomputes from definitions, deliberately avoiding the
package's own search/selection code paths.
"""

from itertools import combinations

from domset.generators import gen_d_degenerate, gen_gnp, gen_grid, gen_random_tree
from domset.graph import Graph, ids_of, mask_of


def closed_mask(g: Graph, v: int) -> int:
    mask = 1 << v
    for u in g.adj[v]:
        mask |= 1 << u
    return mask


def covers(g: Graph, subset, tmask: int) -> bool:
    got = 0
    for v in subset:
        got |= closed_mask(g, v)
    return tmask & ~got == 0


def brute_min_dominating(g: Graph, targets=None):
    """(size, lexicographically first witness) by exhaustive search."""
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    if tmask == 0:
        return 0, ()
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if covers(g, combo, tmask):
                return k, combo
    raise AssertionError("a graph always dominates itself")


def brute_all_min_dominating(g: Graph, targets=None):
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    if tmask == 0:
        return [()]
    k, _ = brute_min_dominating(g, targets)
    return [c for c in combinations(range(g.n), k) if covers(g, c, tmask)]


def brute_has_biclique(g: Graph, a: int, b: int) -> bool:
    """Full double enumeration of candidate sides."""
    verts = range(g.n)
    adj = [set(row) for row in g.adj]
    for left in combinations(verts, a):
        rest = [v for v in verts if v not in left]
        for right in combinations(rest, b):
            if all(r in adj[l] for l in left for r in right):
                return True
    return False


def brute_min_set_cover(sc) -> int:
    """Minimum number of family sets covering the universe."""
    uni = set(sc.universe)
    members = [set(s) for s in sc.sets]
    for k in range(0, len(members) + 1):
        for combo in combinations(range(len(members)), k):
            got = set()
            for idx in combo:
                got |= members[idx]
            if got == uni:
                return k
    raise AssertionError("the family covers its own union")


def degeneracy(g: Graph) -> int:
    """Max over peeling steps of the minimum remaining degree."""
    alive = set(range(g.n))
    deg = {v: g.degree(v) for v in alive}
    worst = 0
    while alive:
        v = min(alive, key=lambda u: (deg[u], u))
        worst = max(worst, deg[v])
        alive.remove(v)
        for u in g.adj[v]:
            if u in alive:
                deg[u] -= 1
    return worst


def check_trace(g: Graph, result, targets=None, cap=None, auto_gate=False):
    """Replay a trace, asserting the greedy selection rules hold at
    every step: lowest-id maximality for each pick, nested pools with
    recorded sizes, per-round progress, and an empty final residual."""
    masks = [closed_mask(g, v) for v in range(g.n)]
    tmask = g.full_mask if targets is None else mask_of(g, targets)
    assert result.trace.initial_targets == ids_of(tmask)
    active = tmask
    all_chosen = []
    for rnd in result.trace.rounds:
        assert len(rnd.chosen) >= 1
        assert len(set(rnd.chosen)) == len(rnd.chosen)
        if cap is not None:
            assert len(rnd.chosen) <= cap
        assert len(rnd.b_sizes) == len(rnd.chosen)
        assert all(x >= y for x, y in zip(rnd.b_sizes, rnd.b_sizes[1:]))
        v1 = rnd.chosen[0]
        c1 = (masks[v1] & active).bit_count()
        for u in range(g.n):
            cu = (masks[u] & active).bit_count()
            assert cu <= c1
            if u < v1:
                assert cu < c1
        pool = masks[v1] & active & ~(1 << v1)
        assert pool.bit_count() == rnd.b_sizes[0]
        chosen_mask = 1 << v1
        covered = masks[v1] & active
        for s, v in enumerate(rnd.chosen[1:], start=1):
            c = (masks[v] & pool).bit_count()
            assert c >= 1
            for u in range(g.n):
                if chosen_mask >> u & 1:
                    continue
                cu = (masks[u] & pool).bit_count()
                assert cu <= c
                if u < v:
                    assert cu < c
            pool = masks[v] & pool & ~(1 << v)
            assert pool.bit_count() == rnd.b_sizes[s]
            if auto_gate:
                assert rnd.b_sizes[s] >= s + 1
            chosen_mask |= 1 << v
            covered |= masks[v] & active
        # the round must not have stopped while the rules said continue
        if cap is None or len(rnd.chosen) < cap:
            best_v, best_c = -1, 0
            for u in range(g.n):
                if chosen_mask >> u & 1:
                    continue
                cu = (masks[u] & pool).bit_count()
                if best_v < 0 or cu > best_c:
                    best_v, best_c = u, cu
            if auto_gate:
                if best_c > 0:
                    next_pool = masks[best_v] & pool & ~(1 << best_v)
                    assert next_pool.bit_count() < len(rnd.chosen) + 1
            else:
                assert best_c == 0
        assert rnd.newly_dominated == covered.bit_count() >= 1
        active &= ~covered
        all_chosen.extend(rnd.chosen)
    assert active == 0
    assert len(set(all_chosen)) == len(all_chosen)
    assert result.trace.final_set == tuple(sorted(all_chosen))
    assert result.dominating_set == result.trace.final_set


def build_validity_suite():
    """The 1000-instance seeded mix used by the acceptance criteria."""
    instances = []
    for n in (8, 16, 24, 32, 48, 64):
        for p in (0.05, 0.2, 0.5):
            for seed in range(20):
                instances.append((f"gnp:n={n},p={p},seed={seed}", gen_gnp(n, p, seed)))
    for seed in range(12):
        instances.append((f"gnp:n=10,p=0.2,seed={100 + seed}", gen_gnp(10, 0.2, 100 + seed)))
    for w in range(1, 9):
        for h in range(w, 9):
            instances.append((f"grid:w={w},h={h}", gen_grid(w, h)))
    for n in (4, 8, 12, 16, 24, 32, 48, 64):
        for seed in range(38):
            instances.append((f"random_tree:n={n},seed={seed}", gen_random_tree(n, seed)))
    for n in (8, 16, 32, 64):
        for d in range(4):
            for seed in range(18):
                instances.append(
                    (f"d_degenerate:n={n},d={d},seed={seed}", gen_d_degenerate(n, d, seed))
                )
    assert len(instances) == 1000
    return instances

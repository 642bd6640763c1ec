"""Pure-Python bitset kernels.

Reference implementation of the three inner-loop queries that dominate
solver and oracle runtime. `domset._ckernels` is a compiled drop-in
replacement; both must stay bit-for-bit identical in results and
tie-breaking (lowest id wins every tie).

All vertex sets are Python ints used as bitmasks (bit v = vertex v).
"""


class BitsetKernel:
    """Coverage queries over a fixed family of vertex masks.

    masks[v] is the closed neighborhood of v as a bitmask. A fresh
    kernel is cheap to build, so callers create one per solve instead
    of sharing across threads.
    """

    backend = "python"

    __slots__ = ("_masks",)

    def __init__(self, masks, nbits):
        self._masks = list(masks)

    def best_cover(self, active, excluded=0):
        """Vertex maximizing |masks[v] & active| over v not in `excluded`.

        Returns (vertex, count); (-1, 0) when every vertex is excluded.
        Ties break to the lowest vertex id.
        """
        best_v = -1
        best_c = 0
        for v, m in enumerate(self._masks):
            if excluded >> v & 1:
                continue
            c = (m & active).bit_count()
            if best_v < 0 or c > best_c:
                best_c = c
                best_v = v
        return best_v, best_c

    def pack_bound(self, active, banned=0):
        """Lower bound on how many non-banned vertices must be picked to
        cover every bit of `active`.

        Greedily packs active bits whose allowed dominator sets are
        pairwise disjoint; each packed bit needs its own vertex.
        Returns -1 if some active bit has no allowed dominator at all.
        """
        used = 0
        count = 0
        a = active
        while a:
            low = a & -a
            u = low.bit_length() - 1
            a ^= low
            dom = self._masks[u] & ~banned
            if dom == 0:
                return -1
            if dom & used == 0:
                count += 1
                used |= dom
        return count

    def pick_target(self, active, banned=0):
        """Active bit with the fewest allowed dominators (tie: lowest id).

        Returns -1 when `active` is empty.
        """
        best_u = -1
        best_c = -1
        a = active
        while a:
            low = a & -a
            u = low.bit_length() - 1
            a ^= low
            c = (self._masks[u] & ~banned).bit_count()
            if best_u < 0 or c < best_c:
                best_c = c
                best_u = u
        return best_u

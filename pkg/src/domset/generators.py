"""Reproducible instance generators.

Every generator draws from splitmix64 with a documented draw order, so
a (model, params, seed) triple yields the same instance on any platform
or implementation. Uniform floats take the top 53 bits of each 64-bit
output divided by 2^53; uniform integers below k are floor(float * k).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenerationError, ValidationError
from .graph import Graph
from .reduction import SetCoverInstance, build_instance

_MASK64 = (1 << 64) - 1

GEN_MODELS = ("gnp", "grid", "random_tree", "d_degenerate", "intersection_one_sc")


class SplitMix64:
    """splitmix64 with the standard constants; state advances by the
    golden-gamma increment per draw."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_f53(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def next_below(self, k: int) -> int:
        """Uniform integer in [0, k)."""
        return int(self.next_f53() * k)


@dataclass(frozen=True)
class GenSpec:
    """Parsed form of a generator request, e.g. "gnp:n=20,p=0.2,seed=7"."""

    model: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def name(self) -> str:
        parts = ",".join(f"{k}={self.params[k]}" for k in sorted(self.params))
        if self.model in ("gnp", "random_tree", "d_degenerate", "intersection_one_sc"):
            parts = parts + f",seed={self.seed}" if parts else f"seed={self.seed}"
        return f"{self.model}:{parts}"


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair {u, v} in lexicographic order is an edge iff
    the next float draw is < p. One draw per pair, even for p in {0, 1}."""
    if n < 0:
        raise ValidationError(f"n must be >= 0, got {n}")
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"p must be in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_f53() < p:
                edges.append((u, v))
    return Graph(n, edges)


def gen_grid(w: int, h: int) -> Graph:
    """w x h grid; vertex (row r, column c) gets id r*w + c."""
    if w < 1 or h < 1:
        raise ValidationError(f"grid sides must be >= 1, got {w}x{h}")
    edges = []
    for r in range(h):
        for c in range(w):
            if c + 1 < w:
                edges.append((r * w + c, r * w + c + 1))
            if r + 1 < h:
                edges.append((r * w + c, (r + 1) * w + c))
    return Graph(w * h, edges)


def gen_random_tree(n: int, seed: int) -> Graph:
    """Random attachment tree: vertex v >= 1 attaches to a uniform
    earlier vertex. Connected and acyclic with n-1 edges."""
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    rng = SplitMix64(seed)
    edges = [(rng.next_below(v), v) for v in range(1, n)]
    return Graph(n, edges)


def gen_d_degenerate(n: int, d: int, seed: int) -> Graph:
    """Vertices added in id order; vertex v picks min(d, v) distinct
    earlier neighbors by rejection (redraw on duplicates).

    The insertion order 0..n-1 is itself the degeneracy certificate:
    every vertex has at most d neighbors with smaller ids.
    """
    if n < 0 or d < 0:
        raise ValidationError(f"need n, d >= 0, got n={n}, d={d}")
    rng = SplitMix64(seed)
    edges = []
    for v in range(1, n):
        need = min(d, v)
        picked: list[int] = []
        while len(picked) < need:
            u = rng.next_below(v)
            if u not in picked:
                picked.append(u)
        edges.extend((u, v) for u in picked)
    return Graph(n, edges)


def gen_intersection_one(
    universe_size: int, set_count: int, max_set_size: int, seed: int
) -> SetCoverInstance:
    """Random set family over 0..universe_size-1 with pairwise
    intersections of size <= 1.

    Rejection sampling: propose sets of uniform size in [1,
    max_set_size] (clamped to the universe) with distinct elements
    drawn by redraw-on-duplicate; accept a proposal iff it meets every
    accepted set in <= 1 element and is not a repeat. Stops after
    set_count acceptances or 64 * set_count proposals, then adds
    singletons for any uncovered elements so the union is the whole
    universe.
    """
    if universe_size < 1 or set_count < 1 or max_set_size < 1:
        raise ValidationError("generator parameters must be >= 1")
    rng = SplitMix64(seed)
    top = min(max_set_size, universe_size)
    accepted: list[tuple[int, ...]] = []
    proposal_cap = 64 * set_count
    for _ in range(proposal_cap):
        if len(accepted) >= set_count:
            break
        size = 1 + rng.next_below(top)
        elems: list[int] = []
        while len(elems) < size:
            e = rng.next_below(universe_size)
            if e not in elems:
                elems.append(e)
        cand = tuple(sorted(elems))
        if cand in accepted:
            continue
        if all(len(set(cand) & set(a)) <= 1 for a in accepted):
            accepted.append(cand)
    if not accepted:
        raise GenerationError("proposal cap exhausted before any acceptance")
    covered = set().union(*accepted)
    singletons = [(e,) for e in range(universe_size) if e not in covered]
    return build_instance(range(universe_size), accepted + singletons)


def parse_genspec(text: str) -> GenSpec:
    """Parse "model:key=value,key=value" (seed is split out of params)."""
    model, _, rest = text.partition(":")
    model = model.strip()
    if model not in GEN_MODELS:
        raise ValidationError(f"unknown model {model!r}; expected one of {GEN_MODELS}")
    params: dict = {}
    seed = 0
    if rest.strip():
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ValidationError(f"bad genspec item {item!r} (expected key=value)")
            key = key.strip()
            value = value.strip()
            try:
                if key == "seed":
                    seed = int(value)
                elif key == "p":
                    params[key] = float(value)
                else:
                    params[key] = int(value)
            except ValueError:
                raise ValidationError(f"bad value for {key!r} in genspec: {value!r}") from None
    return GenSpec(model, params, seed)


_MODEL_KEYS = {
    "gnp": {"n", "p"},
    "grid": {"w", "h"},
    "random_tree": {"n"},
    "d_degenerate": {"n", "d"},
    "intersection_one_sc": {"universe_size", "set_count", "max_set_size"},
}


def build(spec: GenSpec) -> Graph | SetCoverInstance:
    """Instantiate a GenSpec. Raises on missing or unknown parameters."""
    model, params, seed = spec.model, spec.params, spec.seed
    expected = _MODEL_KEYS.get(model)
    if expected is None:
        raise ValidationError(f"unknown model {model!r}; expected one of {GEN_MODELS}")
    missing = sorted(expected - params.keys())
    unknown = sorted(params.keys() - expected)
    if missing:
        raise ValidationError(f"model {model!r} is missing parameters {missing}")
    if unknown:
        raise ValidationError(f"unknown parameters for {model!r}: {unknown}")
    if model == "gnp":
        return gen_gnp(params["n"], params["p"], seed)
    if model == "grid":
        return gen_grid(params["w"], params["h"])
    if model == "random_tree":
        return gen_random_tree(params["n"], seed)
    if model == "d_degenerate":
        return gen_d_degenerate(params["n"], params["d"], seed)
    return gen_intersection_one(
        params["universe_size"], params["set_count"], params["max_set_size"], seed
    )

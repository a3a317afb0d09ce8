"""Domination values across all orientations of a graph.

The 2^|E| orientations of a graph are indexed by the integer whose
k-th bit orients edge k (0 = low id -> high id).  domination_interval
computes gamma for every index, optionally in parallel: workers own
disjoint index ranges, and merging keeps the lowest-index witness per
value, so the result does not depend on the partitioning.

flip_walk realizes the constructive interval arguments: walking between
two orientations one arc flip at a time and recording gamma along the
way.  jump_search hunts for the opposite phenomenon: seeded random
graphs and orientations where one flip moves gamma by two or more.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from multiprocessing import Pool

from .errors import InfeasibleParams, TooManyEdges
from .graphs import (
    Bits,
    Graph,
    Params,
    bits_from_index,
    build_graph,
    normalize_bits,
    orient,
)
from .solver import gamma

_MAX_ENUM_EDGES = 24


@dataclass(frozen=True)
class DominationInterval:
    """Attained gamma values over all orientations of one graph.

    d/D are the extremes, attained is the full value set, full says
    whether every integer in [d, D] is attained, witnesses optionally
    maps each attained value to the first orientation producing it.
    """

    d: int
    D: int
    attained: frozenset[int]
    full: bool
    witnesses: dict[int, tuple[int, ...]] | None = None


@dataclass(frozen=True)
class WalkTrace:
    """Arc-flip walk: edge indices flipped and gamma after each step."""

    flip_sequence: tuple[int, ...]
    gamma_sequence: tuple[int, ...]


@dataclass(frozen=True)
class Jump:
    """A single arc flip that moved gamma by 2 or more, with both
    endpoint values recomputed by the solver."""

    graph: Graph
    bits: tuple[int, ...]
    edge_index: int
    gamma_before: int
    gamma_after: int

    @property
    def delta(self) -> int:
        return self.gamma_after - self.gamma_before


def _guard_enumeration(g: Graph, p: Params) -> None:
    if p.r > p.t:
        raise InfeasibleParams(f"r={p.r} exceeds t={p.t}")
    if len(g.edges) > _MAX_ENUM_EDGES:
        raise TooManyEdges(
            f"2^{len(g.edges)} orientations exceed the enumeration guard"
            f" (|E| <= {_MAX_ENUM_EDGES})"
        )


def _scan_range(
    n: int,
    edges: tuple[tuple[int, int], ...],
    t: int,
    r: int,
    start: int,
    stop: int,
) -> dict[int, int]:
    """gamma for orientation indices [start, stop); value -> first index."""
    g = build_graph(n, edges)
    p = Params(t, r)
    num_edges = len(edges)
    first: dict[int, int] = {}
    for index in range(start, stop):
        value = gamma(orient(g, bits_from_index(index, num_edges)), p).gamma
        if value not in first:
            first[value] = index
    return first


def _scan_range_star(args: tuple) -> dict[int, int]:
    return _scan_range(*args)


def domination_interval(
    g: Graph, p: Params, keep_witnesses: bool = False, jobs: int = 1
) -> DominationInterval:
    """Enumerate all 2^|E| orientations and aggregate their gamma values."""
    _guard_enumeration(g, p)
    num_edges = len(g.edges)
    count = 1 << num_edges
    if jobs <= 1 or count < 4 * jobs:
        first = _scan_range(g.n, g.edges, p.t, p.r, 0, count)
    else:
        step = -(-count // jobs)
        chunks = [
            (g.n, g.edges, p.t, p.r, lo, min(lo + step, count))
            for lo in range(0, count, step)
        ]
        with Pool(processes=jobs) as pool:
            partials = pool.map(_scan_range_star, chunks)
        first = {}
        for part in partials:
            for value, index in part.items():
                if value not in first or index < first[value]:
                    first[value] = index
    lo = min(first)
    hi = max(first)
    attained = frozenset(first)
    witnesses = None
    if keep_witnesses:
        witnesses = {
            value: bits_from_index(index, num_edges)
            for value, index in sorted(first.items())
        }
    return DominationInterval(
        d=lo,
        D=hi,
        attained=attained,
        full=all(v in attained for v in range(lo, hi + 1)),
        witnesses=witnesses,
    )


def is_full(iv: DominationInterval) -> bool:
    """Does the attained set cover every integer between its extremes?"""
    return all(v in iv.attained for v in range(iv.d, iv.D + 1))


def flip_walk(
    g: Graph, from_bits: Bits | str, to_bits: Bits | str, p: Params
) -> WalkTrace:
    """Flip the differing arcs one at a time, in ascending edge index,
    recording gamma before any flip and after each one.

    Intermediate values depend on this flip order; only the endpoints
    and (for r = 1 and (2,2)) the one-step bound are order-free.
    """
    if p.r > p.t:
        raise InfeasibleParams(f"r={p.r} exceeds t={p.t}")
    num_edges = len(g.edges)
    src = list(normalize_bits(from_bits, num_edges))
    dst = normalize_bits(to_bits, num_edges)
    flips = tuple(k for k in range(num_edges) if src[k] != dst[k])
    values = [gamma(orient(g, src), p).gamma]
    for k in flips:
        src[k] ^= 1
        values.append(gamma(orient(g, src), p).gamma)
    return WalkTrace(flip_sequence=flips, gamma_sequence=tuple(values))


def max_step(trace: WalkTrace) -> int:
    """Largest |delta gamma| along consecutive walk steps (0 if no flips)."""
    seq = trace.gamma_sequence
    return max(
        (abs(b - a) for a, b in zip(seq, seq[1:])), default=0
    )


def witness_orientation(
    g: Graph, p: Params, target: int
) -> tuple[int, ...] | None:
    """First enumerated orientation with gamma equal to target, if any."""
    _guard_enumeration(g, p)
    num_edges = len(g.edges)
    for index in range(1 << num_edges):
        bits = bits_from_index(index, num_edges)
        if gamma(orient(g, bits), p).gamma == target:
            return bits
    return None


def _random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Uniform random labeled tree plus a few extra edges."""
    if n == 1:
        return build_graph(1, [])
    if n == 2:
        return build_graph(2, [(0, 1)])
    # Pruefer decode gives a uniform labeled spanning tree
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges: list[tuple[int, int]] = []
    for x in seq:
        for leaf in range(n):
            if degree[leaf] == 1:
                edges.append((min(leaf, x), max(leaf, x)))
                degree[leaf] -= 1
                degree[x] -= 1
                break
    last = [v for v in range(n) if degree[v] == 1]
    edges.append((last[0], last[1]))
    present = set(edges)
    for _ in range(rng.randint(0, n // 2)):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e not in present:
            present.add(e)
            edges.append(e)
    return build_graph(n, edges)


def _sample_orientation(rng: random.Random, g: Graph) -> tuple[int, ...]:
    """Half the time uniform bits, half the time a flow orientation
    (edges point away from a random root, ties by coin).

    Uniform sampling alone essentially never produces the long coherent
    signal chains along which a single flip can strand several distant
    vertices at once; flow orientations make those common.
    """
    if rng.random() < 0.5:
        return tuple(rng.randint(0, 1) for _ in g.edges)
    root = rng.randrange(g.n)
    depth = {root: 0}
    frontier = [root]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.adjacency[u]:
                if w not in depth:
                    depth[w] = depth[u] + 1
                    nxt.append(w)
        frontier = nxt
    return tuple(
        (0 if depth[u] < depth[v] else 1)
        if depth[u] != depth[v]
        else rng.randint(0, 1)
        for (u, v) in g.edges
    )


def jump_search(
    p: Params, vertex_budget: int, trials: int, seed: int
) -> list[Jump]:
    """Seeded random hunt for single flips with |delta gamma| >= 2.

    Each trial samples a connected graph on up to vertex_budget
    vertices and an orientation, then tries every single-edge flip and
    records the ones that move gamma by at least 2.  Both endpoint
    values come from the solver, so each returned Jump is its own
    certificate.
    """
    if p.r > p.t:
        raise InfeasibleParams(f"r={p.r} exceeds t={p.t}")
    rng = random.Random(seed)
    found: list[Jump] = []
    low = min(4, vertex_budget)
    for _ in range(trials):
        n = rng.randint(low, vertex_budget)
        g = _random_connected_graph(rng, n)
        num_edges = len(g.edges)
        bits = _sample_orientation(rng, g)
        base = gamma(orient(g, bits), p).gamma
        for k in range(num_edges):
            flipped = bits[:k] + (bits[k] ^ 1,) + bits[k + 1 :]
            value = gamma(orient(g, flipped), p).gamma
            if abs(value - base) >= 2:
                found.append(
                    Jump(
                        graph=g,
                        bits=bits,
                        edge_index=k,
                        gamma_before=base,
                        gamma_after=value,
                    )
                )
    return found

"""Classification of unions and certification of colliding pairs.

A (multi)graph is in the partitionable class when its undirected edges
split into alternating cycles; that holds exactly when every vertex meets
an even number of edges from above and an even number from below, so the
predicate is a parity check on the degree profile and the witness
partition is materialized by the flexible-arc search.  The special
subclass additionally caps both counts at two.

Certification of a pair runs the oriented-union partition search: a
partition is the collision certificate, and a pair without one always
exposes a vertex whose arriving and leaving arcs cannot pair up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .cycles import (
    AlternatingCycle,
    CyclePartition,
    find_partition_single,
    make_cycle,
    make_partition,
    minimal_partition,
)
from .graphs import (
    VerticalGraph,
    VphtError,
    degree_profile,
    make_vertical_graph,
)
from .persistence import signatures_equal, vpht_signature

from collections import Counter


class InvalidPartitionError(VphtError, ValueError):
    """The partition does not cover exactly the graph's edges."""


class CycleNotInUnionError(VphtError, ValueError):
    """The cycle is not an alternating cycle of the pair's union."""


@dataclass(frozen=True)
class TypeGResult:
    is_type_g: bool
    witness: CyclePartition | int


@dataclass(frozen=True)
class PairVerdict:
    colliding: bool
    signatures_equal: bool
    witness: CyclePartition | int


def is_type_g(g: VerticalGraph) -> TypeGResult:
    prof = degree_profile(g)
    for v in range(1, g.n + 1):
        if prof.ldeg[v - 1] % 2 or prof.hdeg[v - 1] % 2:
            return TypeGResult(False, v)
    partition = find_partition_single(g)
    assert partition is not None  # even parity always admits one
    return TypeGResult(True, partition)


def is_special_type_g(g: VerticalGraph) -> TypeGResult:
    prof = degree_profile(g)
    for v in range(1, g.n + 1):
        ld, hd = prof.ldeg[v - 1], prof.hdeg[v - 1]
        if ld % 2 or hd % 2 or ld > 2 or hd > 2:
            return TypeGResult(False, v)
    partition = find_partition_single(g)
    assert partition is not None
    return TypeGResult(True, partition)


def split_type_g(
    g: VerticalGraph, partition: CyclePartition
) -> tuple[VerticalGraph, VerticalGraph]:
    """Route each cycle's rising arcs into the first graph and its falling
    arcs into the second."""
    up_edges: list = []
    down_edges: list = []
    for c in partition.cycles:
        for t, h, orient in c.arcs:
            (up_edges if orient == "up" else down_edges).append((min(t, h), max(t, h)))
    if Counter(up_edges) + Counter(down_edges) != Counter(g.edges):
        raise InvalidPartitionError("partition does not cover the graph's edges")
    g1 = make_vertical_graph(g.n, up_edges, allow_multi=len(set(up_edges)) < len(up_edges))
    g2 = make_vertical_graph(g.n, down_edges, allow_multi=len(set(down_edges)) < len(down_edges))
    return g1, g2


def _imbalanced_vertex(g1: VerticalGraph, g2: VerticalGraph) -> int:
    """Smallest vertex whose arc counts rule out any partition."""
    arrive_top = Counter()
    leave_bot = Counter()
    for lo, hi in g1.edges:
        arrive_top[hi] += 1
        leave_bot[lo] += 1
    for lo, hi in g2.edges:
        arrive_top[hi] -= 1
        leave_bot[lo] -= 1
    for v in range(1, g1.n + 1):
        if arrive_top[v] or leave_bot[v]:
            return v
    raise AssertionError("balanced pair reported as not partitionable")


def certify_pair(g1: VerticalGraph, g2: VerticalGraph) -> PairVerdict:
    """Decide whether the pair collides and produce the certificate: the
    least partition when it exists, otherwise the blocking vertex."""
    equal = signatures_equal(vpht_signature(g1), vpht_signature(g2))
    partition = minimal_partition(g1, g2)
    if partition is not None:
        return PairVerdict(True, equal, partition)
    return PairVerdict(False, equal, _imbalanced_vertex(g1, g2))


def duplicate_cycle(
    g1: VerticalGraph, g2: VerticalGraph, cycle
) -> tuple[VerticalGraph, VerticalGraph]:
    """Repeat one alternating cycle of the union: its rising arcs are added
    to the first graph as extra copies and its falling arcs to the second.
    """
    arcs = tuple(cycle.arcs) if isinstance(cycle, AlternatingCycle) else tuple(
        tuple(a) for a in cycle
    )
    if not arcs or len(arcs) % 2:
        raise CycleNotInUnionError("not a closed alternating cycle")
    up_extra: list = []
    down_extra: list = []
    for i, (t, h, orient) in enumerate(arcs):
        if orient != ("up" if i % 2 == 0 else "down"):
            raise CycleNotInUnionError("arcs do not alternate")
        if arcs[(i + 1) % len(arcs)][0] != h:
            raise CycleNotInUnionError("arcs do not chain into a cycle")
        if orient == "up":
            if not t < h:
                raise CycleNotInUnionError(f"arc {(t, h)} does not rise")
            up_extra.append((t, h))
        else:
            if not t > h:
                raise CycleNotInUnionError(f"arc {(t, h)} does not fall")
            down_extra.append((h, t))
    if Counter(up_extra) - Counter(g1.edges) or Counter(down_extra) - Counter(g2.edges):
        raise CycleNotInUnionError("cycle uses arcs outside the union")
    out1 = make_vertical_graph(g1.n, list(g1.edges) + up_extra, allow_multi=True)
    out2 = make_vertical_graph(g2.n, list(g2.edges) + down_extra, allow_multi=True)
    return out1, out2


def random_special_type_g(
    n: int, rng: random.Random
) -> tuple[VerticalGraph, CyclePartition]:
    """Random simple graph in the special class plus a witness partition,
    built by stacking rejection-sampled alternating cycles; small n may
    yield the empty graph."""
    edges: set = set()
    ldeg = Counter()
    hdeg = Counter()
    cycles = []
    for _ in range(rng.randint(1, 3)):
        for _attempt in range(60):
            m = rng.choice((2, 2, 3))
            lows = [rng.randint(1, n) for _ in range(m)]
            highs = [rng.randint(1, n) for _ in range(m)]
            cand = []
            for i in range(m):
                cand.append((lows[i], highs[i]))
                cand.append((lows[(i + 1) % m], highs[i]))
            if any(lo >= hi for lo, hi in cand):
                continue
            if len(set(cand)) < len(cand) or edges & set(cand):
                continue
            add_l = Counter(hi for _, hi in cand)
            add_h = Counter(lo for lo, _ in cand)
            if any(ldeg[v] + c > 2 for v, c in add_l.items()):
                continue
            if any(hdeg[v] + c > 2 for v, c in add_h.items()):
                continue
            edges.update(cand)
            ldeg += add_l
            hdeg += add_h
            arcs = []
            for i in range(m):
                arcs.append((lows[i], highs[i], "up"))
                arcs.append((highs[i], lows[(i + 1) % m], "down"))
            cycles.append(make_cycle(arcs))
            break
    return make_vertical_graph(n, sorted(edges)), make_partition(cycles)


def verdict_to_json(v: PairVerdict) -> dict:
    witness = v.witness
    if isinstance(witness, CyclePartition):
        from .cycles import partition_to_json

        witness = partition_to_json(witness)
    return {
        "colliding": v.colliding,
        "signatures_equal": v.signatures_equal,
        "witness": witness,
    }

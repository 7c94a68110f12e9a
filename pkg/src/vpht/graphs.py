"""Vertical graphs: validation, degrees, oriented unions, enumeration.

A vertical graph has n vertices pinned to distinct heights on a line and is
identified with its vertex count plus an edge multiset over index pairs.
Vertex i sits at height i when sweeping up and at height n + 1 - i when
sweeping down, so the whole transform is determined by these two directions.

Enumeration works over bitmasks: pair k of ``all_pairs(n)`` (lexicographic
(i, j), i < j) corresponds to bit k, which gives every simple graph on n
vertices a stable integer name used for ordering, parallel range splits,
and reproducible output.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]
Arc = tuple[int, int]

MAX_VERTICES = 32


class VphtError(Exception):
    """Base class for engine errors."""


class GraphError(VphtError, ValueError):
    pass


class OutOfRangeError(GraphError):
    """An edge endpoint is not in 1..n."""


class SelfLoopError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    """A repeated edge without allow_multi."""


class VertexCountMismatchError(GraphError):
    pass


class TooManyVerticesError(GraphError):
    """The enumeration universe is capped at 32 vertices."""


@dataclass(frozen=True)
class VerticalGraph:
    """A graph on vertices 1..n ordered by height; edges stored (lo, hi), sorted."""

    n: int
    edges: tuple[Edge, ...]
    multi: bool = False

    @property
    def simple(self) -> bool:
        return not self.multi


@dataclass(frozen=True)
class DegreeProfile:
    """ldeg[v-1] / hdeg[v-1]: neighbors strictly below / above vertex v."""

    ldeg: tuple[int, ...]
    hdeg: tuple[int, ...]


@dataclass(frozen=True)
class OrientedUnion:
    """Arcs of g1 pointing up and arcs of g2 pointing down, as (tail, head)."""

    n: int
    up: tuple[Arc, ...]
    down: tuple[Arc, ...]


def make_vertical_graph(n: int, edges: Iterable[Edge], allow_multi: bool = False) -> VerticalGraph:
    """Validate and normalize an edge list into a VerticalGraph."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    normalized = []
    for u, v in edges:
        if not (1 <= u <= n):
            raise OutOfRangeError(f"vertex {u} outside 1..{n}")
        if not (1 <= v <= n):
            raise OutOfRangeError(f"vertex {v} outside 1..{n}")
        if u == v:
            raise SelfLoopError(f"self loop at vertex {u}")
        normalized.append((u, v) if u < v else (v, u))
    normalized.sort()
    if not allow_multi:
        for a, b in zip(normalized, normalized[1:]):
            if a == b:
                raise DuplicateEdgeError(f"edge {a} repeats")
    return VerticalGraph(n, tuple(normalized), multi=allow_multi)


def degree_profile(g: VerticalGraph) -> DegreeProfile:
    ldeg = [0] * g.n
    hdeg = [0] * g.n
    for lo, hi in g.edges:
        ldeg[hi - 1] += 1
        hdeg[lo - 1] += 1
    return DegreeProfile(tuple(ldeg), tuple(hdeg))


def oriented_union(g1: VerticalGraph, g2: VerticalGraph) -> OrientedUnion:
    """Orient g1's edges upward and g2's edges downward over a shared vertex set."""
    if g1.n != g2.n:
        raise VertexCountMismatchError(f"{g1.n} != {g2.n}")
    up = tuple(sorted((lo, hi) for lo, hi in g1.edges))
    down = tuple(sorted((hi, lo) for lo, hi in g2.edges))
    return OrientedUnion(g1.n, up, down)


def mirror(g: VerticalGraph) -> VerticalGraph:
    """Flip the graph top to bottom (vertex i becomes n + 1 - i)."""
    flipped = [(g.n + 1 - hi, g.n + 1 - lo) for lo, hi in g.edges]
    return make_vertical_graph(g.n, flipped, allow_multi=g.multi)


def component_count(g: VerticalGraph) -> int:
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = g.n
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def all_pairs(n: int) -> list[Edge]:
    """Canonical pair order: (1,2), (1,3), ..., (1,n), (2,3), ..."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def edges_to_mask(n: int, edges: Iterable[Edge]) -> int:
    index = {p: k for k, p in enumerate(all_pairs(n))}
    mask = 0
    for u, v in edges:
        mask |= 1 << index[(u, v) if u < v else (v, u)]
    return mask


def mask_to_edges(n: int, mask: int) -> tuple[Edge, ...]:
    pairs = all_pairs(n)
    return tuple(p for k, p in enumerate(pairs) if mask >> k & 1)


def enumerate_graphs(
    n: int,
    base_edges: Iterable[Edge] = (),
    ignore_dangling: bool = False,
) -> Iterator[VerticalGraph]:
    """Every simple graph on n vertices containing base_edges, by ascending mask.

    With ignore_dangling, graphs having an isolated vertex are skipped.
    """
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    if n > MAX_VERTICES:
        raise TooManyVerticesError(f"n = {n} exceeds the {MAX_VERTICES}-vertex limit")
    base = make_vertical_graph(n, base_edges)
    if n == 1 and ignore_dangling:
        warnings.warn("a single vertex is always dangling; nothing to enumerate")
        return
    pairs = all_pairs(n)
    base_mask = edges_to_mask(n, base.edges)
    free = [k for k in range(len(pairs)) if not (base_mask >> k & 1)]
    for counter in range(1 << len(free)):
        mask = base_mask
        rest = counter
        for k in free:
            if rest == 0:
                break
            if rest & 1:
                mask |= 1 << k
            rest >>= 1
        edges = mask_to_edges(n, mask)
        if ignore_dangling:
            covered = 0
            for u, v in edges:
                covered |= (1 << u) | (1 << v)
            if covered != ((1 << (n + 1)) - 2):
                continue
        yield VerticalGraph(n, edges)


def graph_to_json(g: VerticalGraph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges], "multi": g.multi}


def graph_from_json(obj: dict) -> VerticalGraph:
    try:
        n = obj["n"]
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
        multi = bool(obj.get("multi", False))
        if not isinstance(n, int):
            raise GraphError(f"vertex count must be an integer, got {n!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"malformed graph object: {exc}") from exc
    return make_vertical_graph(n, edges, allow_multi=multi)

"""Sweep filtrations, verbose diagrams, signatures, and hashing.

The sweep scans vertices in ascending height order (for Down, vertex i sits
at height n + 1 - i).  Walking the upper vertex from the top down and the
lower endpoints bottom-up, then reversing, yields edges grouped by upper
endpoint ascending with lower endpoints descending inside each group; an
edge is born at its upper endpoint's height.  Any reordering inside one
birth level is another compatible index order and leaves the diagram
unchanged, which the tests exercise directly.

Verbose diagrams keep one dim0 point per vertex (diagonal points included).
The elder rule decides merges: the component whose oldest member is younger
dies.  Edges that close a cycle create dim1 points which, for graphs, never
die.

Signature bytes: for up then down, for dim0 then dim1, points sorted by
(birth, death) are emitted as little-endian uint32 pairs with 0xFFFFFFFF
standing for infinity.  Within one vertex count the layout is unambiguous
(dim0 blocks hold exactly n points and the two dim1 blocks share the
circuit-rank length); signatures are only ever compared inside one
universe.  Hashing is FNV-1a over those bytes.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from enum import Enum

from .graphs import VerticalGraph

INF = float("inf")
_INF_WORD = 0xFFFFFFFF
_FNV_BASIS = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF

Point = "tuple[int, int | float]"


class Direction(str, Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class Filtration:
    """Vertices as (vertex, height) ascending by height; edges as
    ((upper_position, lower_position), birth_height) in sweep order."""

    direction: Direction
    vertex_order: tuple[tuple[int, int], ...]
    edge_order: tuple[tuple[tuple[int, int], int], ...]

    def edge_pairs(self) -> list[tuple[tuple[int, int], int]]:
        """Edges as ((upper_vertex, lower_vertex), birth) in sweep order."""
        verts = [v for v, _ in self.vertex_order]
        return [((verts[i], verts[j]), birth) for (i, j), birth in self.edge_order]


@dataclass(frozen=True)
class VerboseDiagram:
    direction: Direction
    dim0: tuple
    dim1: tuple


@dataclass(frozen=True)
class VphtSignature:
    """Both direction diagrams plus their canonical byte serialization."""

    up: VerboseDiagram
    down: VerboseDiagram
    blob: bytes


def build_filtration(g: VerticalGraph, direction: Direction) -> Filtration:
    """Sweep-line filtration of a vertical (multi)graph in one direction."""
    n = g.n
    if direction == Direction.UP:
        verts = list(range(1, n + 1))
    else:
        verts = list(range(n, 0, -1))
    pos = {v: p for p, v in enumerate(verts)}
    mult: dict[tuple[int, int], int] = {}
    for lo, hi in g.edges:
        key = (pos[lo], pos[hi]) if pos[lo] > pos[hi] else (pos[hi], pos[lo])
        mult[key] = mult.get(key, 0) + 1
    edges = []
    for i in range(n - 1, 0, -1):
        for j in range(i):
            copies = mult.get((i, j), 0)
            for _ in range(copies):
                edges.append(((i, j), i + 1))
    edges.reverse()
    vertex_order = tuple((v, p + 1) for p, v in enumerate(verts))
    return Filtration(direction, vertex_order, tuple(edges))


def compute_verbose_diagram(f: Filtration) -> VerboseDiagram:
    """Elder-rule verbose persistence of an index filtration."""
    n = len(f.vertex_order)
    parent = list(range(n))
    oldest = list(range(n))  # per root, the minimal (= earliest) position

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deaths: list[int | float] = [INF] * n
    dim1 = []
    for (i, j), birth in f.edge_order:
        ri, rj = find(i), find(j)
        if ri == rj:
            dim1.append((birth, INF))
        else:
            young, old = (ri, rj) if oldest[ri] > oldest[rj] else (rj, ri)
            deaths[oldest[young]] = birth
            parent[young] = old
    dim0 = sorted((p + 1, deaths[p]) for p in range(n))
    return VerboseDiagram(f.direction, tuple(dim0), tuple(sorted(dim1)))


def _diagram_words(d: VerboseDiagram) -> list[int]:
    words = []
    for points in (d.dim0, d.dim1):
        for birth, death in points:
            words.append(birth)
            words.append(_INF_WORD if death == INF else int(death))
    return words


def serialize_signature(up: VerboseDiagram, down: VerboseDiagram) -> bytes:
    words = _diagram_words(up) + _diagram_words(down)
    return struct.pack(f"<{len(words)}I", *words)


def vpht_signature(g: VerticalGraph) -> VphtSignature:
    up = compute_verbose_diagram(build_filtration(g, Direction.UP))
    down = compute_verbose_diagram(build_filtration(g, Direction.DOWN))
    return VphtSignature(up, down, serialize_signature(up, down))


def signature_from_blob(n: int, blob: bytes) -> VphtSignature:
    """Rebuild a signature from its serialization (fixed vertex count)."""
    words = struct.unpack(f"<{len(blob) // 4}I", blob)
    total = len(words) // 2
    rank = (total - 2 * n) // 2
    points = [
        (words[2 * k], INF if words[2 * k + 1] == _INF_WORD else words[2 * k + 1])
        for k in range(total)
    ]
    up = VerboseDiagram(Direction.UP, tuple(points[:n]), tuple(points[n : n + rank]))
    down = VerboseDiagram(
        Direction.DOWN,
        tuple(points[n + rank : 2 * n + rank]),
        tuple(points[2 * n + rank :]),
    )
    return VphtSignature(up, down, blob)


def signatures_equal(s1: VphtSignature, s2: VphtSignature) -> bool:
    return s1.blob == s2.blob


def fnv1a(data: bytes) -> int:
    """64-bit FNV-1a."""
    h = _FNV_BASIS
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h


def hash_signature(sig: VphtSignature) -> int:
    return fnv1a(sig.blob)


def _coord_to_json(value):
    return "inf" if value == INF else value


def diagram_to_json(d: VerboseDiagram) -> dict:
    return {
        "direction": d.direction.value,
        "dim0": [[b, _coord_to_json(x)] for b, x in d.dim0],
        "dim1": [[b, _coord_to_json(x)] for b, x in d.dim1],
    }

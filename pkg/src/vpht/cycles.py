"""Alternating-cycle search over oriented unions.

An alternating cycle is a closed arc walk that strictly alternates rising
and falling arcs; vertices may repeat, arcs may not.  Cycles are stored in
a canonical rotation: start at the smallest visited vertex, on its rising
arc (lexicographically least such rotation when that vertex repeats).

Partitions of a pair's oriented union are searched by always covering the
smallest still-unused rising arc; every cycle through it is enumerated,
shortest closures first.  Minimal search keeps the least length tuple seen
under the descending-lexicographic order and cuts branches with the
all-two-cycles completion bound: splitting any longer cycle into a pair
and a remainder strictly lowers the tuple, so the tuple obtained by
padding the current choice with two-cycles bounds everything below a node.

Single graphs reuse the same search with flexible arcs: each edge is a
token usable once, as either a rising or a falling arc.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .graphs import (
    OrientedUnion,
    VertexCountMismatchError,
    VerticalGraph,
    VphtError,
)


class UnsortedTupleError(VphtError, ValueError):
    """A length tuple handed to the comparator was not descending."""


@dataclass(frozen=True)
class AlternatingCycle:
    """Arc triples (tail, head, "up"/"down"), canonically rotated."""

    arcs: tuple[tuple[int, int, str], ...]

    def __len__(self) -> int:
        return len(self.arcs)


@dataclass(frozen=True)
class CyclePartition:
    cycles: tuple[AlternatingCycle, ...]

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cycles)


def make_cycle(arcs) -> AlternatingCycle:
    arcs = tuple(tuple(a) for a in arcs)
    best_tail = min(a[0] for a in arcs if a[2] == "up")
    starts = [i for i, a in enumerate(arcs) if a[2] == "up" and a[0] == best_tail]
    if len(starts) == 1:
        i = starts[0]
        return AlternatingCycle(arcs if i == 0 else arcs[i:] + arcs[:i])
    return AlternatingCycle(min(arcs[i:] + arcs[:i] for i in starts))


def make_partition(cycles) -> CyclePartition:
    return CyclePartition(tuple(sorted(cycles, key=lambda c: (-len(c), c.arcs))))


class _Pool:
    """Arc tokens with per-orientation adjacency.

    A token is usable in the orientations it appears under in up_out /
    down_out; pair unions fix one orientation per token, single graphs
    allow both.  Lists are sorted, so ascending token ids give the
    deterministic search order everywhere.
    """

    __slots__ = ("up_out", "down_out", "end_up", "end_down", "tail_up",
                 "tail_down", "used", "pivots", "total")

    def __init__(self) -> None:
        self.up_out: dict[int, list[int]] = {}
        self.down_out: dict[int, list[int]] = {}
        self.end_up: list[int] = []
        self.end_down: list[int] = []
        self.tail_up: list[int] = []
        self.tail_down: list[int] = []
        self.used: list[bool] = []
        self.pivots: range = range(0)
        self.total = 0


def _pair_pool(up_arcs, down_arcs) -> _Pool:
    pool = _Pool()
    for t, h in sorted(up_arcs):
        aid = len(pool.used)
        pool.up_out.setdefault(t, []).append(aid)
        pool.end_up.append(h)
        pool.end_down.append(-1)
        pool.tail_up.append(t)
        pool.tail_down.append(-1)
        pool.used.append(False)
    pool.pivots = range(len(pool.used))
    for t, h in sorted(down_arcs):
        aid = len(pool.used)
        pool.down_out.setdefault(t, []).append(aid)
        pool.end_up.append(-1)
        pool.end_down.append(h)
        pool.tail_up.append(-1)
        pool.tail_down.append(t)
        pool.used.append(False)
    pool.total = len(pool.used)
    return pool


def _flexible_pool(g: VerticalGraph) -> _Pool:
    pool = _Pool()
    for lo, hi in g.edges:
        aid = len(pool.used)
        pool.up_out.setdefault(lo, []).append(aid)
        pool.down_out.setdefault(hi, []).append(aid)
        pool.end_up.append(hi)
        pool.end_down.append(lo)
        pool.tail_up.append(lo)
        pool.tail_down.append(hi)
        pool.used.append(False)
    pool.pivots = range(len(pool.used))
    pool.total = len(pool.used)
    return pool


def _walks(pool: _Pool, start_id: int, start_up: bool, prune=None):
    """Yield (token_ids, arc_triples) for each closed alternating walk
    starting with the given arc.  Tokens of a live walk are flagged used,
    so a caller may run nested searches between yields; prune(l) is asked
    before extending, with l the shortest closure length still reachable.
    """
    used = pool.used
    start_v = pool.tail_up[start_id] if start_up else pool.tail_down[start_id]
    ids = [start_id]
    arcs = [
        (start_v, pool.end_up[start_id], "up")
        if start_up
        else (start_v, pool.end_down[start_id], "down")
    ]
    used[start_id] = True

    def go(cur: int, need_up: bool):
        depth = len(ids)
        if cur == start_v and depth % 2 == 0:
            yield tuple(ids), tuple(arcs)
        if prune is not None and prune(depth + 2 - (depth & 1)):
            return
        outs = (pool.up_out if need_up else pool.down_out).get(cur)
        if not outs:
            return
        ends = pool.end_up if need_up else pool.end_down
        orient = "up" if need_up else "down"
        for aid in outs:
            if not used[aid]:
                used[aid] = True
                nxt = ends[aid]
                ids.append(aid)
                arcs.append((cur, nxt, orient))
                yield from go(nxt, not need_up)
                arcs.pop()
                ids.pop()
                used[aid] = False

    first_end = pool.end_up[start_id] if start_up else pool.end_down[start_id]
    yield from go(first_end, not start_up)
    used[start_id] = False


def _first_unused_pivot(pool: _Pool) -> int | None:
    used = pool.used
    for pid in pool.pivots:
        if not used[pid]:
            return pid
    return None


def _search_minimal(pool: _Pool) -> list[tuple] | None:
    best: list = [None, None]  # length tuple, arc tuples
    lengths: list[int] = []
    chosen: list[tuple] = []
    state = {"remaining": pool.total}

    def hopeless(extra: int) -> bool:
        # candidate completed with two-cycles only; monotone in extra
        if best[0] is None:
            return False
        pad = (state["remaining"] - extra) // 2
        cand = sorted(lengths + [extra] + [2] * pad, reverse=True)
        return tuple(cand) >= best[0]

    def rec() -> None:
        if state["remaining"] == 0:
            cand = tuple(sorted(lengths, reverse=True))
            if best[0] is None or cand < best[0]:
                best[0] = cand
                best[1] = list(chosen)
            return
        pivot = _first_unused_pivot(pool)
        if pivot is None:
            return
        seen: set[frozenset] = set()
        for ids, arcs in _walks(pool, pivot, True, prune=hopeless):
            key = frozenset(ids)
            if key in seen:
                continue
            seen.add(key)
            if hopeless(len(ids)):
                continue
            lengths.append(len(ids))
            chosen.append(arcs)
            state["remaining"] -= len(ids)
            rec()
            state["remaining"] += len(ids)
            chosen.pop()
            lengths.pop()

    rec()
    return best[1]


def _search_any(pool: _Pool) -> list[tuple] | None:
    chosen: list[tuple] = []
    state = {"remaining": pool.total}

    def rec() -> bool:
        if state["remaining"] == 0:
            return True
        pivot = _first_unused_pivot(pool)
        if pivot is None:
            return False
        seen: set[frozenset] = set()
        for ids, arcs in _walks(pool, pivot, True):
            key = frozenset(ids)
            if key in seen:
                continue
            seen.add(key)
            chosen.append(arcs)
            state["remaining"] -= len(ids)
            if rec():
                return True
            state["remaining"] += len(ids)
            chosen.pop()
        return False

    return chosen if rec() else None


def _pair_arcs(
    g1: VerticalGraph, g2: VerticalGraph, exclude_common: bool
) -> tuple[list, list]:
    """Sorted rising and falling arc lists of the oriented union."""
    if g1.n != g2.n:
        raise VertexCountMismatchError(f"vertex counts differ: {g1.n} != {g2.n}")
    if g1.multi or g2.multi:
        c1, c2 = Counter(g1.edges), Counter(g2.edges)
        if exclude_common:
            common = c1 & c2
            c1 -= common
            c2 -= common
        up_src: list = sorted(c1.elements())
        down_src = c2.elements()
    else:
        s1, s2 = set(g1.edges), set(g2.edges)
        up_src = sorted(s1 - s2 if exclude_common else s1)
        down_src = (s2 - s1) if exclude_common else s2
    return up_src, sorted((hi, lo) for lo, hi in down_src)


def _greedy_cover(up_arcs: list, down_arcs: list) -> list[list] | None:
    """Cover all arcs with cycles by walking maximal alternating trails,
    always taking the smallest available arc.  Returns cycles as lists of
    (tail, head) pairs whose orientation alternates starting upward, or
    None as soon as a trail jams; a jam is not a verdict, only a signal to
    fall back to the backtracking search."""
    ups: dict[int, list[int]] = {}
    for t, h in up_arcs:
        ups.setdefault(t, []).append(h)
    downs: dict[int, list[int]] = {}
    for t, h in down_arcs:
        downs.setdefault(t, []).append(h)
    up_at = dict.fromkeys(ups, 0)
    down_at = dict.fromkeys(downs, 0)
    remaining = len(up_arcs) + len(down_arcs)
    pivot_vs = sorted(ups)
    pv = 0
    cycles: list[list] = []
    while remaining:
        while pv < len(pivot_vs) and up_at[pivot_vs[pv]] >= len(ups[pivot_vs[pv]]):
            pv += 1
        if pv == len(pivot_vs):
            return None  # falling arcs remain without a rising pivot
        start = pivot_vs[pv]
        i = up_at[start]
        up_at[start] = i + 1
        cur = ups[start][i]
        arcs = [(start, cur)]
        remaining -= 1
        need_up = False
        while True:
            if need_up:
                lst = ups.get(cur)
                i = up_at[cur] if lst is not None else 0
                if lst is None or i >= len(lst):
                    if cur == start:
                        break  # the trail can only jam here when it closes
                    return None
                up_at[cur] = i + 1
            else:
                lst = downs.get(cur)
                i = down_at[cur] if lst is not None else 0
                if lst is None or i >= len(lst):
                    return None
                down_at[cur] = i + 1
            nxt = lst[i]
            arcs.append((cur, nxt))
            cur = nxt
            need_up = not need_up
            remaining -= 1
        cycles.append(arcs)
    return cycles


def _finish(raw: list[tuple] | None) -> CyclePartition | None:
    if raw is None:
        return None
    return make_partition([make_cycle(arcs) for arcs in raw])


def _finish_pairs(raw: list[list]) -> CyclePartition:
    cycles = []
    for pairs in raw:
        cycles.append(
            make_cycle(
                [
                    (t, h, "up" if k % 2 == 0 else "down")
                    for k, (t, h) in enumerate(pairs)
                ]
            )
        )
    return make_partition(cycles)


def minimal_partition(
    g1: VerticalGraph, g2: VerticalGraph, exclude_common: bool = False
) -> CyclePartition | None:
    """Least partition of the oriented union under the descending-tuple
    order, or None when no partition exists."""
    up, down = _pair_arcs(g1, g2, exclude_common)
    return _finish(_search_minimal(_pair_pool(up, down)))


def find_partition(
    g1: VerticalGraph, g2: VerticalGraph, exclude_common: bool = False
) -> CyclePartition | None:
    """Any partition of the oriented union, or None."""
    up, down = _pair_arcs(g1, g2, exclude_common)
    raw = _greedy_cover(up, down)
    if raw is not None:
        return _finish_pairs(raw)
    return _finish(_search_any(_pair_pool(up, down)))


def minimal_partition_single(g: VerticalGraph) -> CyclePartition | None:
    """Least flexible-orientation partition of a single graph's edges."""
    return _finish(_search_minimal(_flexible_pool(g)))


def find_partition_single(g: VerticalGraph) -> CyclePartition | None:
    return _finish(_search_any(_flexible_pool(g)))


def cycle_dfs(start, used_up, used_down, u: OrientedUnion) -> list[AlternatingCycle]:
    """All alternating cycles of the union through the start arc that avoid
    the given used arcs, deduplicated to canonical form, in search order."""
    pool = _pair_pool(u.up, u.down)
    by_value: dict[tuple[int, int, bool], list[int]] = {}
    for aid in range(pool.total):
        if pool.end_down[aid] < 0:
            key = (pool.tail_up[aid], pool.end_up[aid], True)
        else:
            key = (pool.tail_down[aid], pool.end_down[aid], False)
        by_value.setdefault(key, []).append(aid)

    def claim(arc, is_up: bool) -> int:
        t, h = arc
        for aid in by_value.get((t, h, is_up), ()):
            if not pool.used[aid]:
                return aid
        raise ValueError(f"arc {arc} is not available in the union")

    for arc in used_up:
        pool.used[claim(arc, True)] = True
    for arc in used_down:
        pool.used[claim(arc, False)] = True
    t, h = start
    start_up = t < h
    sid = claim(start, start_up)

    out: list[AlternatingCycle] = []
    seen: set[tuple] = set()
    for _ids, arcs in _walks(pool, sid, start_up):
        c = make_cycle(arcs)
        if c.arcs not in seen:
            seen.add(c.arcs)
            out.append(c)
    return out


def compare_partitions(p, q) -> int:
    """-1, 0, or 1 under the descending-lexicographic tuple order; tuples
    are zero-padded to equal length, so trailing zeros never matter."""
    for t in (p, q):
        for a, b in zip(t, t[1:]):
            if a < b:
                raise UnsortedTupleError(f"tuple {t} is not descending")
    k = max(len(p), len(q))
    pp = tuple(p) + (0,) * (k - len(p))
    qq = tuple(q) + (0,) * (k - len(q))
    return (pp > qq) - (pp < qq)


def partition_to_json(p: CyclePartition | None) -> dict:
    if p is None:
        return {"partitionable": False}
    return {
        "cycles": [[list(a) for a in c.arcs] for c in p.cycles],
        "tuple": list(p.lengths),
    }

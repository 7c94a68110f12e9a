"""Exhaustive signature-collision search over a graph universe.

Graphs are bitmasks over the canonical vertex-pair list, so one universe
scan walks an integer range.  Signatures are computed by a mask-level
replay of the sweep: the processing order of any edge subset inside the
complete graph's sweep order is that subgraph's own sweep order, so one
precomputed edge program per direction serves every mask.  Components are
position bitmasks, which makes the elder rule a lowest-set-bit comparison.
The byte stream produced this way is identical to the one the diagram
pipeline serializes, and the tests pin that equality exhaustively on small
universes.

Classes are collected in a power-of-two bucket table keyed by the low bits
of the 64-bit hash with full-byte confirmation inside a bucket, so true
hash collisions can never merge distinct classes.  Multi-process scans
split the mask range into contiguous chunks and the chunk results are
merged on (hash, first member); members arrive ascending per chunk and
chunks cover ascending ranges, so member lists stay in enumeration order
regardless of the worker count.
"""

from __future__ import annotations

import heapq
import os
import struct
from dataclasses import asdict, dataclass, fields
from multiprocessing import Pool

from .cycles import minimal_partition
from .graphs import (
    MAX_VERTICES,
    GraphError,
    TooManyVerticesError,
    VerticalGraph,
    VphtError,
    all_pairs,
    component_count,
    edges_to_mask,
    make_vertical_graph,
    mask_to_edges,
)
from .persistence import (
    Direction,
    VphtSignature,
    build_filtration,
    signature_from_blob,
    vpht_signature,
)

_FNV_BASIS = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = 0xFFFFFFFFFFFFFFFF
_INF_WORD = 0xFFFFFFFF


class MetricsInconsistentError(VphtError):
    """Members of one collision set disagree on a shared quantity."""


class UnknownMetricError(VphtError, KeyError):
    pass


class EmptyResultWarning(Warning):
    """The requested filter excludes the query graph itself."""


@dataclass(frozen=True)
class SetMetrics:
    components: int
    cycle_count: int
    off_diagonal_points: int
    longest_cycle: int
    has_nonpartitionable_pair: bool


@dataclass(frozen=True)
class CollisionSet:
    n: int
    members: tuple[VerticalGraph, ...]
    signature_hash: int
    signature: VphtSignature
    metrics: SetMetrics | None = None


class _Ctx:
    """Per-n scan context: edge programs and cover masks."""

    __slots__ = ("n", "pairs", "progs", "cover", "full_cover", "packers")

    def __init__(self, n: int) -> None:
        self.n = n
        pairs = all_pairs(n)
        self.pairs = pairs
        index = {p: k for k, p in enumerate(pairs)}
        kn = VerticalGraph(n, tuple(pairs))
        self.progs = []
        for direction in Direction:
            f = build_filtration(kn, direction)
            verts = [v for v, _ in f.vertex_order]
            prog = []
            for (i, j), _birth in f.edge_order:
                u, v = verts[i], verts[j]
                prog.append((1 << index[(min(u, v), max(u, v))], i, j))
            self.progs.append(prog)
        self.cover = [(1 << (a - 1)) | (1 << (b - 1)) for a, b in pairs]
        self.full_cover = (1 << n) - 1
        self.packers: dict[int, struct.Struct] = {}

    def pack(self, words: list[int]) -> bytes:
        packer = self.packers.get(len(words))
        if packer is None:
            packer = struct.Struct(f"<{len(words)}I")
            self.packers[len(words)] = packer
        return packer.pack(*words)


_CTX: dict[int, _Ctx] = {}


def _ctx(n: int) -> _Ctx:
    ctx = _CTX.get(n)
    if ctx is None:
        ctx = _Ctx(n)
        _CTX[n] = ctx
    return ctx


def _sig_words(ctx: _Ctx, mask: int) -> list[int]:
    n = ctx.n
    out: list[int] = []
    for prog in ctx.progs:
        comp = [1 << p for p in range(n)]
        deaths = [_INF_WORD] * n
        cyc: list[int] = []
        for bit, i, j in prog:
            if mask & bit:
                ci = comp[i]
                cj = comp[j]
                if ci == cj:
                    cyc.append(i + 1)
                else:
                    mi = (ci & -ci).bit_length()
                    mj = (cj & -cj).bit_length()
                    deaths[(mi if mi > mj else mj) - 1] = i + 1
                    merged = ci | cj
                    m = merged
                    while m:
                        b = m & -m
                        comp[b.bit_length() - 1] = merged
                        m ^= b
        for p in range(n):
            out.append(p + 1)
            out.append(deaths[p])
        for h in cyc:
            out.append(h)
            out.append(_INF_WORD)
    return out


def _fnv_words(words: list[int]) -> int:
    h = _FNV_BASIS
    for w in words:
        h = ((h ^ (w & 0xFF)) * _FNV_PRIME) & _MASK64
        h = ((h ^ ((w >> 8) & 0xFF)) * _FNV_PRIME) & _MASK64
        h = ((h ^ ((w >> 16) & 0xFF)) * _FNV_PRIME) & _MASK64
        h = ((h ^ (w >> 24)) * _FNV_PRIME) & _MASK64
    return h


def _signature_blob_for_mask(n: int, mask: int) -> bytes:
    ctx = _ctx(n)
    return ctx.pack(_sig_words(ctx, mask))


def _check_n(n: int) -> None:
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    if n > MAX_VERTICES:
        raise TooManyVerticesError(
            f"n = {n} exceeds the {MAX_VERTICES}-vertex limit"
        )


def _scan_chunk(args) -> list:
    """Scan one contiguous counter range; return [ (hash, first_mask,
    blob, masks), ... ] sorted.  Buckets are keyed by the builtin hash of
    the word tuple (process-local, order-irrelevant); the pinned 64-bit
    hash and byte form are computed once per distinct class at emit time.
    Lone classes are emitted too when other chunks exist, since their
    members may pair up across chunk borders."""
    n, base_mask, free, lo, hi, ignore_dangling, lone_chunk = args
    ctx = _ctx(n)
    direct = base_mask == 0 and len(free) == len(ctx.pairs)
    cover_masks = ctx.cover
    full = ctx.full_cover
    size = 1
    while size < 2 * (hi - lo):
        size <<= 1
    slot_mask = size - 1
    table: list = [None] * size
    sig = _sig_words
    for counter in range(lo, hi):
        if direct:
            mask = counter
        else:
            mask = base_mask
            c = counter
            for k in free:
                if not c:
                    break
                if c & 1:
                    mask |= 1 << k
                c >>= 1
        if ignore_dangling:
            covered = 0
            m = mask
            while m:
                b = m & -m
                covered |= cover_masks[b.bit_length() - 1]
                m ^= b
            if covered != full:
                continue
        words = tuple(sig(ctx, mask))
        slot = hash(words) & slot_mask
        chain = table[slot]
        if chain is None:
            table[slot] = [[words, [mask]]]
        else:
            for entry in chain:
                if entry[0] == words:
                    entry[1].append(mask)
                    break
            else:
                chain.append([words, [mask]])
    fnv = _fnv_words
    out = []
    for chain in table:
        if chain:
            for words, masks in chain:
                if lone_chunk and len(masks) < 2:
                    continue
                out.append((fnv(words), masks[0], ctx.pack(words), masks))
    out.sort(key=lambda e: (e[0], e[1]))
    return out


def _resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get("VPHT_JOBS", "1"))
    return max(1, jobs)


def collision_sets(
    n: int,
    base_edges=(),
    ignore_dangling: bool = False,
    jobs: int | None = None,
) -> list[CollisionSet]:
    """All signature classes with two or more members over the universe of
    simple vertical graphs on n vertices (optionally restricted to
    supersets of base_edges), ordered by hash then first member."""
    _check_n(n)
    base = make_vertical_graph(n, base_edges)
    base_mask = edges_to_mask(n, base.edges)
    pair_count = len(all_pairs(n))
    free = [k for k in range(pair_count) if not (base_mask >> k) & 1]
    total = 1 << len(free)
    jobs = min(_resolve_jobs(jobs), total)

    if jobs == 1:
        chunks = [_scan_chunk((n, base_mask, free, 0, total, ignore_dangling, True))]
    else:
        step, extra = divmod(total, jobs)
        ranges = []
        lo = 0
        for i in range(jobs):
            hi = lo + step + (1 if i < extra else 0)
            ranges.append((n, base_mask, free, lo, hi, ignore_dangling, False))
            lo = hi
        with Pool(processes=jobs) as pool:
            chunks = pool.map(_scan_chunk, ranges)

    out: list[CollisionSet] = []
    run_hash = None
    run: list = []  # [blob, masks] in first-arrival order

    def flush() -> None:
        for blob, masks in run:
            if len(masks) < 2:
                continue
            members = tuple(
                VerticalGraph(n, mask_to_edges(n, m)) for m in masks
            )
            out.append(
                CollisionSet(n, members, run_hash, signature_from_blob(n, blob))
            )

    for h, _first, blob, masks in heapq.merge(*chunks, key=lambda e: (e[0], e[1])):
        if h != run_hash:
            flush()
            run_hash = h
            run = []
        for entry in run:
            if entry[0] == blob:
                entry[1].extend(masks)
                break
        else:
            run.append([blob, masks])
    flush()
    return out


def colliding_graphs(g: VerticalGraph, ignore_dangling: bool = False) -> list[VerticalGraph]:
    """Every simple graph on g's vertices with g's signature, in
    enumeration order; g itself is always in its own class."""
    n = g.n
    ctx = _ctx(n)
    target = vpht_signature(g).blob
    if ignore_dangling:
        covered = set()
        for lo, hi in g.edges:
            covered.add(lo)
            covered.add(hi)
        if len(covered) != n:
            import warnings

            warnings.warn(
                "the query graph has an uncovered vertex, so no results "
                "will be returned",
                EmptyResultWarning,
                stacklevel=2,
            )
            return []
    out = []
    full = ctx.full_cover
    for mask in range(1 << len(ctx.pairs)):
        if ignore_dangling:
            covered = 0
            m = mask
            while m:
                b = m & -m
                covered |= ctx.cover[b.bit_length() - 1]
                m ^= b
            if covered != full:
                continue
        words = _sig_words(ctx, mask)
        if ctx.pack(words) == target:
            out.append(VerticalGraph(n, mask_to_edges(n, mask)))
    return out


def compute_metrics(s: CollisionSet, exclude_common: bool = False) -> CollisionSet:
    """Return the set with its shared quantities filled in; quantities that
    must agree across members are checked and a disagreement raises."""
    comps = {component_count(m) for m in s.members}
    edge_counts = {len(m.edges) for m in s.members}
    if len(comps) > 1 or len(edge_counts) > 1:
        raise MetricsInconsistentError(
            f"members disagree: components {sorted(comps)}, "
            f"edge counts {sorted(edge_counts)}"
        )
    components = comps.pop()
    cycle_count = edge_counts.pop() - s.n + components

    off = 0
    for d in (s.signature.up, s.signature.down):
        for points in (d.dim0, d.dim1):
            off += sum(1 for b, x in points if b != x)

    longest = 0
    nonpart = False
    members = s.members
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            p = minimal_partition(members[i], members[j], exclude_common)
            if p is None:
                nonpart = True
            elif p.lengths and p.lengths[0] > longest:
                longest = p.lengths[0]

    metrics = SetMetrics(components, cycle_count, off, longest, nonpart)
    return CollisionSet(s.n, s.members, s.signature_hash, s.signature, metrics)


def _metric_names() -> set:
    return {f.name for f in fields(SetMetrics)}


def filter_sort(
    sets,
    where: dict | None = None,
    key: str | None = None,
    descending: bool = False,
) -> list[CollisionSet]:
    """Filter on exact metric values, then sort by one metric; ties keep
    the enumeration order of each set's first member."""
    names = _metric_names()
    if key is not None and key not in names:
        raise UnknownMetricError(key)
    for k in where or {}:
        if k not in names:
            raise UnknownMetricError(k)
    picked = [
        s
        for s in sets
        if all(getattr(s.metrics, k) == v for k, v in (where or {}).items())
    ]
    picked.sort(key=lambda s: edges_to_mask(s.n, s.members[0].edges))
    if key is not None:
        picked.sort(key=lambda s: getattr(s.metrics, key), reverse=descending)
    return picked


def set_to_json(s: CollisionSet) -> dict:
    return {
        "n": s.n,
        "hash": f"0x{s.signature_hash:016x}",
        "members": [[list(e) for e in m.edges] for m in s.members],
        "metrics": None if s.metrics is None else asdict(s.metrics),
    }

"""Shared test graphs and hand-derived expected values.

The two six-vertex pairs below are the canonical exercise material:

* ``parallel_rungs`` / ``crossed_rungs``: two perfect matchings between the
  lower and upper vertex triples.  Their oriented union is a single
  alternating 6-cycle and their signatures are equal, so they demonstrate a
  genuine VPHT collision.
* ``shared_chord_a`` / ``shared_chord_b``: four-edge graphs sharing the
  chord (1,6).  They are a colliding pair whose signatures differ, which
  separates "colliding" from "indistinguishable".  b is the mirror image
  of a.

Expected diagrams were derived by hand with the elder rule and are frozen
here; `oracles.reduction_diagram` recomputes them independently in the
tests.
"""

from __future__ import annotations

from collections import Counter

INF = float("inf")


def parallel_rungs():
    from vpht.graphs import make_vertical_graph

    return make_vertical_graph(6, [(1, 4), (2, 5), (3, 6)])


def crossed_rungs():
    from vpht.graphs import make_vertical_graph

    return make_vertical_graph(6, [(3, 4), (2, 6), (1, 5)])


def shared_chord_a():
    from vpht.graphs import make_vertical_graph

    return make_vertical_graph(6, [(1, 3), (2, 6), (4, 5), (1, 6)])


def shared_chord_b():
    from vpht.graphs import make_vertical_graph

    return make_vertical_graph(6, [(2, 3), (4, 6), (1, 5), (1, 6)])


def triangle():
    from vpht.graphs import make_vertical_graph

    return make_vertical_graph(3, [(1, 2), (1, 3), (2, 3)])


# hand-derived verbose diagrams, as (dim0 multiset, dim1 multiset)

MATCHING_DIAGRAM = (
    Counter({(1, INF): 1, (2, INF): 1, (3, INF): 1, (4, 4): 1, (5, 5): 1, (6, 6): 1}),
    Counter(),
)
# both directions of both matching graphs equal MATCHING_DIAGRAM

SHARED_CHORD_A_UP = (
    Counter({(1, INF): 1, (2, 6): 1, (3, 3): 1, (4, INF): 1, (5, 5): 1, (6, 6): 1}),
    Counter(),
)
SHARED_CHORD_A_DOWN = (
    Counter({(1, INF): 1, (2, INF): 1, (3, 3): 1, (4, 6): 1, (5, 5): 1, (6, 6): 1}),
    Counter(),
)
SHARED_CHORD_B_UP = (
    Counter({(1, INF): 1, (2, INF): 1, (3, 3): 1, (4, 6): 1, (5, 5): 1, (6, 6): 1}),
    Counter(),
)
SHARED_CHORD_B_DOWN = (
    Counter({(1, INF): 1, (2, 6): 1, (3, 3): 1, (4, INF): 1, (5, 5): 1, (6, 6): 1}),
    Counter(),
)

TRIANGLE_DIAGRAM = (
    Counter({(1, INF): 1, (2, 2): 1, (3, 3): 1}),
    Counter({(3, INF): 1}),
)

# sweep-order edge lists ((upper, lower) as a vertex pair, birth height)

PARALLEL_RUNGS_UP_ORDER = [((4, 1), 4), ((5, 2), 5), ((6, 3), 6)]
SHARED_CHORD_A_UP_ORDER = [((3, 1), 3), ((5, 4), 5), ((6, 2), 6), ((6, 1), 6)]
SHARED_CHORD_B_UP_ORDER = [((3, 2), 3), ((5, 1), 5), ((6, 4), 6), ((6, 1), 6)]

# the unique alternating cycle of the matching pair's union
MATCHING_SIX_CYCLE = (
    (1, 4, "up"),
    (4, 3, "down"),
    (3, 6, "up"),
    (6, 2, "down"),
    (2, 5, "up"),
    (5, 1, "down"),
)


def diagram_multisets(diagram):
    """VerboseDiagram -> (Counter of dim0 points, Counter of dim1 points)."""
    return Counter(diagram.dim0), Counter(diagram.dim1)


def shuffle_within_birth_levels(edge_order, rng):
    """Permute a filtration's edges within equal-birth runs.

    Any such permutation is another compatible index order, so the verbose
    diagram must not change.  ``edge_order`` is a sequence of (edge, birth)
    entries sorted by birth; returns a tuple in the same format.
    """
    by_birth: dict = {}
    for entry in edge_order:
        by_birth.setdefault(entry[1], []).append(entry)
    out = []
    for birth in sorted(by_birth):
        group = by_birth[birth][:]
        rng.shuffle(group)
        out.extend(group)
    return tuple(out)

"""Canonical connected graphs built by adding d edges to a star.

Two families are built on n vertices, both starting from the star with
center 0 and leaves 1..n-1 and both adding exactly d edges among leaves:

* hub fill: leaf 1 is connected to every other leaf, then leaf 2 to every
  remaining one, and so on, each round saturating one more vertex to full
  degree n-1. The degree sequence has a closed form driven by the split of
  d into completed rounds plus a partial round.
* clique fill: the leaves 1, 2, 3, ... grow a complete subgraph; edge
  number d lands inside the clique on the first min(m, ...) leaves. The
  two families agree for d <= 2 and diverge from d = 3 on.

For negative d (degree total below 2(n-1)) the companion object is an
incomplete star: a star on n+d vertices padded with isolated vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfRangeError
from .graphs import SimpleGraph, add_edge
from .orders import DegreeSequence


def max_added_edges(n: int) -> int:
    """Largest d: the complete graph is the star plus (n-1)(n-2)/2 edges."""
    return (n - 1) * (n - 2) // 2


def _check_range(n: int, d: int) -> None:
    if n < 2:
        raise OutOfRangeError(f"need at least 2 vertices, got n={n}")
    if not 0 <= d <= max_added_edges(n):
        raise OutOfRangeError(f"d={d} outside 0..{max_added_edges(n)} for n={n}")


@dataclass(frozen=True)
class HubFillSplit:
    """Decomposition of d into saturation rounds for the hub-fill family.

    full_count is the number of vertices already at full degree n-1 and
    partial_count the number of edges the next hub has added so far, so
    d = sum of the completed round lengths + partial_count. At the top
    value d = (n-1)(n-2)/2 the split is (n-1, 0), which still yields the
    complete graph's sequence.
    """

    n: int
    d: int
    full_count: int
    partial_count: int


def hub_fill_split(n: int, d: int) -> HubFillSplit:
    """Unique (full_count, partial_count) with the round-length constraint.

    Round r (r >= 2) has length n - r, so full_count is the largest i with
    sum over k = 2..i of (n - k) at most d, and partial_count the remainder,
    which then lies in 0..n-full_count-2 (except at the very top, where the
    remainder is 0 by construction).
    """
    _check_range(n, d)
    i = 1
    consumed = 0
    while i + 1 <= n - 1 and consumed + (n - (i + 1)) <= d:
        consumed += n - (i + 1)
        i += 1
    return HubFillSplit(n=n, d=d, full_count=i, partial_count=d - consumed)


def hub_fill_sequence(n: int, d: int) -> DegreeSequence:
    """Closed-form degree sequence of the hub-fill graph.

    With i = full_count and j = partial_count: i copies of n-1, then i+j,
    then j copies of i+1, then n-i-j-1 copies of i.
    """
    s = hub_fill_split(n, d)
    i, j = s.full_count, s.partial_count
    vals = [n - 1] * i + [i + j] + [i + 1] * j + [i] * (n - i - j - 1)
    return DegreeSequence(vals)


def build_hub_fill(n: int, d: int) -> SimpleGraph:
    """Star plus d edges: vertex 1 links to leaves 2.., then vertex 2, ..."""
    _check_range(n, d)
    g = SimpleGraph.from_edges(n, [(0, v) for v in range(1, n)])
    remaining = d
    hub = 1
    while remaining > 0:
        for target in range(hub + 1, n):
            if remaining == 0:
                break
            g = add_edge(g, hub, target)
            remaining -= 1
        hub += 1
    return g


def _clique_split(n: int, d: int) -> tuple[int, int]:
    """(m, r): complete graph on leaves 1..m plus r edges from leaf m+1."""
    m = 1
    while (m + 1) * m // 2 <= d:
        m += 1
    r = d - m * (m - 1) // 2
    return m, r


def clique_fill_sequence(n: int, d: int) -> DegreeSequence:
    """Degree sequence of the star with a growing leaf clique.

    Leaves 1..m form a complete subgraph and leaf m+1 has r partial edges
    into it, where d = m(m-1)/2 + r with 0 <= r <= m. Coincides with the
    hub-fill sequence for d <= 2.
    """
    _check_range(n, d)
    m, r = _clique_split(n, d)
    vals = [n - 1]
    vals += [m + 1] * r + [m] * (m - r)
    if r > 0:
        vals.append(1 + r)
    vals += [1] * (n - 1 - m - (1 if r > 0 else 0))
    return DegreeSequence(vals)


def build_clique_fill(n: int, d: int) -> SimpleGraph:
    _check_range(n, d)
    g = SimpleGraph.from_edges(n, [(0, v) for v in range(1, n)])
    m, r = _clique_split(n, d)
    for v in range(1, m + 1):
        for w in range(v + 1, m + 1):
            g = add_edge(g, v, w)
    for w in range(1, r + 1):
        g = add_edge(g, m + 1, w)
    return g


def incomplete_star(n: int, d: int) -> tuple[DegreeSequence, SimpleGraph]:
    """Companion object for degree totals below 2(n-1), i.e. d < 0.

    With a = n-1+d the sequence is (a, 1 x a, 0 x (n-a-1)) and the graph a
    star on a+1 vertices plus n-a-1 isolated vertices. a = 0 degenerates to
    the edgeless graph.
    """
    if n < 2:
        raise OutOfRangeError(f"need at least 2 vertices, got n={n}")
    if not -(n - 1) <= d <= -1:
        raise OutOfRangeError(f"d={d} outside {-(n - 1)}..-1 for n={n}")
    a = n - 1 + d
    seq = DegreeSequence([a] + [1] * a + [0] * (n - a - 1))
    g = SimpleGraph.from_edges(n, [(0, v) for v in range(1, a + 1)])
    return seq, g

"""Exhaustive degree-sequence posets of connected graphs with a fixed total.

For n vertices and degree total 2(n-1) + 2d we enumerate, two independent
ways, the set of degree sequences realized by connected graphs:

* graphs oracle: every labeled graph with exactly n-1+d edges, keeping the
  connected ones and collecting sorted degree sequences;
* partitions oracle: every positive non-increasing length-n sequence with
  the right total, keeping the ones passing the Erdős–Gallai test together
  with the connectivity-feasibility conditions (that filter IS the
  operational c-graphicality criterion, so agreement of the two oracles
  validates it against ground truth).

A mismatch raises OracleMismatchError and is always a bug, never a warning.
On top of the enumeration sit the maximal elements of the prefix-sum order,
the poset-based c-graphicality test, and checks that the maximal sets match
the canonical star-augmentation families at small d.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .constructions import clique_fill_sequence, hub_fill_sequence, max_added_edges
from .errors import (
    BadSumError,
    InternalInconsistencyError,
    MaximalCatalogMismatchError,
    OracleMismatchError,
    OutOfRangeError,
)
from .orders import DegreeSequence, format_sequence, majorized
from .realizability import erdos_gallai

# Sweeping every (n, d) pair below these caps finishes in minutes on a
# desktop; callers may override per call, at their own expense.
GRAPHS_ORACLE_MAX_N = 8
PARTITIONS_ORACLE_MAX_N = 12

ORACLES = ("graphs", "partitions", "both")


def bounded_partitions(
    total: int, length: int, max_part: int, min_part: int = 0
) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of `length` entries in [min_part, max_part]
    summing to `total`, in descending lexicographic order."""

    def rec(remaining: int, slots: int, cap: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield tuple(acc)
            return
        hi = min(cap, remaining - min_part * (slots - 1))
        lo = max(min_part, -(-remaining // slots))
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(remaining - v, slots - 1, v, acc)
            acc.pop()

    if length >= 1 and total >= 0:
        yield from rec(total, length, max_part, [])


def _connected_masks(adj: list[int], n: int) -> bool:
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        frontier = adj[v] & ~seen
        while frontier:
            bit = frontier & -frontier
            seen |= bit
            stack.append(bit.bit_length() - 1)
            frontier ^= bit
    return seen == (1 << n) - 1


def _check_nd(n: int, d: int, cap: int) -> None:
    if n < 2 or n > cap:
        raise OutOfRangeError(f"n={n} outside 2..{cap}")
    if not 0 <= d <= max_added_edges(n):
        raise OutOfRangeError(f"d={d} outside 0..{max_added_edges(n)} for n={n}")


@lru_cache(maxsize=None)
def _sequences_by_graphs(n: int, d: int) -> frozenset[DegreeSequence]:
    pairs = list(itertools.combinations(range(n), 2))
    m = n - 1 + d
    found: set[DegreeSequence] = set()
    for combo in itertools.combinations(pairs, m):
        deg = [0] * n
        adj = [0] * n
        for u, v in combo:
            deg[u] += 1
            deg[v] += 1
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if 0 in deg:
            continue
        if _connected_masks(adj, n):
            found.add(DegreeSequence(deg))
    return frozenset(found)


@lru_cache(maxsize=None)
def _sequences_by_partitions(n: int, d: int) -> frozenset[DegreeSequence]:
    total = 2 * (n - 1) + 2 * d
    found: set[DegreeSequence] = set()
    for part in bounded_partitions(total, n, max_part=n - 1, min_part=1):
        seq = DegreeSequence(part)
        if erdos_gallai(seq):
            found.add(seq)
    return frozenset(found)


def enumerate_connected_sequences(
    n: int, d: int, oracle: str = "both", *, max_n: int | None = None
) -> frozenset[DegreeSequence]:
    """Degree sequences of all connected n-vertex graphs with n-1+d edges.

    oracle selects the enumeration mechanism; "both" runs the two and
    insists on set equality.
    """
    if oracle not in ORACLES:
        raise ValueError(f"oracle must be one of {ORACLES}")
    graphs_cap = max(GRAPHS_ORACLE_MAX_N, max_n or 0)
    partitions_cap = max(PARTITIONS_ORACLE_MAX_N, max_n or 0)
    if oracle == "graphs":
        _check_nd(n, d, graphs_cap)
        return _sequences_by_graphs(n, d)
    if oracle == "partitions":
        _check_nd(n, d, partitions_cap)
        return _sequences_by_partitions(n, d)
    _check_nd(n, d, graphs_cap)
    by_graphs = _sequences_by_graphs(n, d)
    by_partitions = _sequences_by_partitions(n, d)
    if by_graphs != by_partitions:
        only_g = {format_sequence(s) for s in by_graphs - by_partitions}
        only_p = {format_sequence(s) for s in by_partitions - by_graphs}
        raise OracleMismatchError(
            f"n={n} d={d}: graphs-only {sorted(only_g)}, partitions-only {sorted(only_p)}"
        )
    return by_graphs


@dataclass(frozen=True)
class MaximalSetReport:
    """Image of the connected-graph poset plus its maximal elements.

    oracle_agreement records that both oracles ran and produced identical
    images (a mismatch would have raised instead of producing a report).
    """

    n: int
    d: int
    all_sequences: frozenset[DegreeSequence]
    maximal: frozenset[DegreeSequence]
    oracle_agreement: bool

    def sorted_maximal(self) -> list[DegreeSequence]:
        return sorted(self.maximal, reverse=True)

    def sorted_all(self) -> list[DegreeSequence]:
        return sorted(self.all_sequences, reverse=True)

    def format_text(self, full: bool = False) -> str:
        lines = [
            f"n={self.n} d={self.d} image={len(self.all_sequences)} "
            f"maximal={len(self.maximal)} "
            f"oracle_agreement={'yes' if self.oracle_agreement else 'unchecked'}"
        ]
        lines.extend(format_sequence(s) for s in self.sorted_maximal())
        if full:
            lines.append("# full image")
            lines.extend(format_sequence(s) for s in self.sorted_all())
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "all_sequences": [list(s) for s in self.sorted_all()],
            "maximal": [list(s) for s in self.sorted_maximal()],
            "oracle_agreement": self.oracle_agreement,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "MaximalSetReport":
        return cls(
            n=data["n"],
            d=data["d"],
            all_sequences=frozenset(DegreeSequence(s) for s in data["all_sequences"]),
            maximal=frozenset(DegreeSequence(s) for s in data["maximal"]),
            oracle_agreement=data["oracle_agreement"],
        )


def maximal_elements(
    n: int, d: int, oracle: str = "both", *, max_n: int | None = None
) -> MaximalSetReport:
    """Compute the maximal elements of the enumerated image under <=.

    Every sequence of the image must be dominated by some maximal element;
    that is rechecked and a failure is a bug.
    """
    seqs = enumerate_connected_sequences(n, d, oracle, max_n=max_n)
    maximal = frozenset(
        s for s in seqs if not any(majorized(s, t) and s != t for t in seqs)
    )
    for s in seqs:
        if not any(majorized(s, m) for m in maximal):
            raise InternalInconsistencyError(
                f"{format_sequence(s)} not dominated by any maximal element"
            )
    return MaximalSetReport(
        n=n,
        d=d,
        all_sequences=seqs,
        maximal=maximal,
        oracle_agreement=(oracle == "both"),
    )


def is_c_graphical_poset(x: DegreeSequence, oracle: str = "both") -> bool:
    """Ground-truth c-graphicality: dominated by a maximal element.

    Requires an even total and positive entries. A total too small (or too
    large) for any connected graph on len(x) vertices simply yields False.
    """
    x = DegreeSequence(x)
    n = len(x)
    s = sum(x)
    if s % 2:
        raise BadSumError(f"total {s} is odd")
    if x[-1] < 1:
        raise BadSumError("poset test needs positive entries")
    d = (s - 2 * (n - 1)) // 2
    if d < 0 or d > max_added_edges(n):
        return False
    report = maximal_elements(n, d, oracle)
    return any(majorized(x, y) for y in report.maximal)


def maximal_heads_full(n: int, d: int, oracle: str = "both") -> bool:
    """True iff every maximal element starts with the full degree n-1."""
    report = maximal_elements(n, d, oracle)
    return all(s[0] == n - 1 for s in report.maximal)


@dataclass(frozen=True)
class CatalogEntry:
    d: int
    expected: tuple[DegreeSequence, ...]
    computed: tuple[DegreeSequence, ...]
    relation: str  # "exact" or "superset"


def verify_maximal_catalog(n: int, oracle: str = "both") -> dict[int, CatalogEntry]:
    """Check the maximal sets against the two canonical families for d <= 5.

    d = 0, 1, 2: the hub fill alone; d = 3, 4: hub fill plus clique fill;
    d = 5: both families are maximal, and from n = 7 on the maximal set is
    strictly larger (at n = 6 the enumerated maximal set is exactly the
    pair, so strictness is only asserted for n >= 7).
    """
    if n < 6:
        raise OutOfRangeError(f"catalog check needs n >= 6, got {n}")
    entries: dict[int, CatalogEntry] = {}
    for d in range(0, 6):
        report = maximal_elements(n, d, oracle)
        expected = {hub_fill_sequence(n, d)}
        if d >= 3:
            expected.add(clique_fill_sequence(n, d))
        if d <= 4:
            ok = report.maximal == frozenset(expected)
            relation = "exact"
        else:
            ok = expected <= report.maximal
            if n >= 7:
                ok = ok and len(report.maximal) > len(expected)
            relation = "superset"
        if not ok:
            raise MaximalCatalogMismatchError(d, report.maximal, expected)
        entries[d] = CatalogEntry(
            d=d,
            expected=tuple(sorted(expected, reverse=True)),
            computed=tuple(report.sorted_maximal()),
            relation=relation,
        )
    return entries

"""Graphicality tests, realizations, reductions, and order-based rewiring.

The classical Erdős–Gallai inequalities and the Havel–Hakimi reduction
decide whether a sequence is graphical; the two must agree everywhere and
the test suite sweeps them against each other exhaustively at small sizes.
On top of those sit a generalized reduction (any rank, any number of
removed links, in the Wang–Kleitman style), a faster reduce-to-constant
strategy, a majorization-based non-graphicality witness, and the
constructive pipeline that turns a dominating connected realization into a
realization of any dominated sequence by rewiring one unit transfer at a
time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .constructions import hub_fill_sequence, max_added_edges
from .errors import (
    BadCountError,
    BadRankError,
    BadSumError,
    HeadTooLargeError,
    InternalInconsistencyError,
    NoPathError,
    NotCGraphicalError,
    NotGraphicalError,
    PreconditionViolatedError,
    UnderflowError,
)
from .graphs import (
    SimpleGraph,
    add_edge,
    component_labels,
    degree_sequence,
    find_path,
    is_connected,
    remove_edge,
    two_swap,
)
from .orders import (
    DegreeSequence,
    decompose_into_basic_transfers,
    format_sequence,
    majorized,
)


# -- verdicts and traces -----------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    before: DegreeSequence
    rule: str
    after: DegreeSequence

    def to_dict(self) -> dict:
        return {"before": list(self.before), "rule": self.rule, "after": list(self.after)}

    @classmethod
    def from_dict(cls, data: dict) -> "TraceStep":
        return cls(
            before=DegreeSequence(data["before"]),
            rule=data["rule"],
            after=DegreeSequence(data["after"]),
        )


@dataclass(frozen=True)
class ReductionTrace:
    """Ordered reduction steps plus the terminal outcome description."""

    steps: tuple[TraceStep, ...]
    outcome: str

    def to_dict(self) -> dict:
        return {
            "kind": "trace",
            "steps": [s.to_dict() for s in self.steps],
            "outcome": self.outcome,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReductionTrace":
        return cls(
            steps=tuple(TraceStep.from_dict(s) for s in data["steps"]),
            outcome=data["outcome"],
        )


@dataclass(frozen=True)
class NonGraphicalWitness:
    """A canonical hub-fill sequence strictly below the tested sequence.

    Any sequence strictly dominating the hub-fill sequence with the same
    total cannot be graphical, so the witness certifies the negative
    verdict.
    """

    d: int
    witness: DegreeSequence

    def to_dict(self) -> dict:
        return {"kind": "witness", "d": self.d, "witness": list(self.witness)}

    @classmethod
    def from_dict(cls, data: dict) -> "NonGraphicalWitness":
        return cls(d=data["d"], witness=DegreeSequence(data["witness"]))


@dataclass(frozen=True)
class RealizationCertificate:
    """Edge list of a witnessing realization."""

    n: int
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "RealizationCertificate":
        return cls(n=g.n, edges=tuple(g.sorted_edges()))

    def to_dict(self) -> dict:
        return {"kind": "realization", "n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "RealizationCertificate":
        return cls(n=data["n"], edges=tuple((e[0], e[1]) for e in data["edges"]))


Certificate = Union[ReductionTrace, NonGraphicalWitness, RealizationCertificate]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a graphicality question, with the deciding method.

    c_graphical is None when the question was about plain graphicality.
    A True c_graphical always comes with graphical=True.
    """

    sequence: DegreeSequence
    graphical: bool
    c_graphical: Optional[bool]
    method: str
    certificate: Optional[Certificate] = None

    def __post_init__(self) -> None:
        if self.c_graphical and not self.graphical:
            raise ValueError("c-graphical implies graphical")

    def to_dict(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "graphical": self.graphical,
            "c_graphical": self.c_graphical,
            "method": self.method,
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Verdict":
        cert = data.get("certificate")
        parsed: Optional[Certificate] = None
        if cert is not None:
            parsed = {
                "trace": ReductionTrace.from_dict,
                "witness": NonGraphicalWitness.from_dict,
                "realization": RealizationCertificate.from_dict,
            }[cert["kind"]](cert)
        return cls(
            sequence=DegreeSequence(data["sequence"]),
            graphical=data["graphical"],
            c_graphical=data["c_graphical"],
            method=data["method"],
            certificate=parsed,
        )


# -- graphicality tests --------------------------------------------------


def erdos_gallai(x: DegreeSequence) -> bool:
    """Even total plus the N prefix inequalities, all in exact integers."""
    x = DegreeSequence(x)
    n = len(x)
    if sum(x) % 2:
        return False
    prefix = 0
    for k in range(1, n + 1):
        prefix += x[k - 1]
        tail = sum(min(v, k) for v in x[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def hh_reduce(x: DegreeSequence) -> DegreeSequence:
    """Drop the head h and subtract one from the next h entries.

    The result has length N-1 and is re-sorted. Raises HeadTooLargeError
    when h > N-1 and UnderflowError when fewer than h of the remaining
    entries are positive; both conditions imply the input is not graphical.
    """
    x = DegreeSequence(x)
    n = len(x)
    h = x[0]
    if h > n - 1:
        raise HeadTooLargeError(f"head {h} exceeds {n - 1}")
    if n == 1:
        raise ValueError("cannot reduce a single-entry sequence")
    if h > 0 and x[h] == 0:
        raise UnderflowError(f"only {sum(1 for v in x[1:] if v > 0)} positive entries for head {h}")
    vals = [x[idx] - 1 if idx <= h else x[idx] for idx in range(1, n)]
    return DegreeSequence(vals)


def havel_hakimi_trace(x: DegreeSequence) -> tuple[bool, ReductionTrace]:
    """Iterate the head reduction to a verdict, recording every step."""
    cur = DegreeSequence(x)
    steps: list[TraceStep] = []
    while True:
        n = len(cur)
        if all(v == 0 for v in cur):
            return True, ReductionTrace(tuple(steps), "all-zero")
        if cur[0] > n - 1:
            return False, ReductionTrace(tuple(steps), f"reject: head {cur[0]} exceeds {n - 1}")
        try:
            nxt = hh_reduce(cur)
        except UnderflowError:
            return False, ReductionTrace(
                tuple(steps), f"reject: not enough positive entries for head {cur[0]}"
            )
        steps.append(TraceStep(cur, "hh", nxt))
        cur = nxt


def havel_hakimi(x: DegreeSequence) -> bool:
    ok, _ = havel_hakimi_trace(x)
    return ok


def generalized_reduce(x: DegreeSequence, k: int, n_links: int) -> DegreeSequence:
    """Lower rank k by n_links and subtract one from the n_links largest others.

    Keeps the vertex (so the result has length N and may contain a zero when
    n_links equals the rank-k value) and re-sorts. Graphicality is preserved
    in both directions. Ties are broken leftmost, which does not affect the
    resulting multiset.
    """
    x = DegreeSequence(x)
    n = len(x)
    if not 1 <= k <= n:
        raise BadRankError(f"rank k={k} outside 1..{n}")
    if not 1 <= n_links <= x[k - 1]:
        raise BadCountError(f"n={n_links} outside 1..{x[k - 1]} for rank {k}")
    if n_links > n - 1:
        raise BadCountError(f"n={n_links} exceeds the {n - 1} other entries")
    others = [idx for idx in range(n) if idx != k - 1]
    top = others[:n_links]
    if any(x[idx] == 0 for idx in top):
        raise UnderflowError("a targeted entry is already zero")
    vals = list(x)
    vals[k - 1] -= n_links
    for idx in top:
        vals[idx] -= 1
    return DegreeSequence(vals)


def reduce_to_constant(x: DegreeSequence) -> Verdict:
    """Drive the sequence to a constant with generalized head reductions.

    Each step reduces rank 1 by n = min(x_1 - x_N, N-1); a constant block
    (a,...,a) of length N is graphical iff a <= N-1 and N*a is even, which
    often ends the run in far fewer steps than the head reduction chain.

    All rejections (oversized head, underflow, odd N*a) are sound
    certificates of non-graphicality, and every graphical input is
    accepted, because each reduction step preserves graphicality in the
    forward direction. The reverse direction of a partial head reduction
    is NOT an equivalence, though ((3,3,3,1) reduces to the graphical
    (2,2,1,1) but is itself not graphical: re-attaching the removed links
    collides with existing edges), so a constant-rule accept is confirmed
    against the exact inequalities and overridden when refuted; the trace
    outcome records which rule decided.
    """
    x = DegreeSequence(x)
    steps: list[TraceStep] = []
    cur = x
    while True:
        n = len(cur)
        if cur[0] > n - 1:
            trace = ReductionTrace(tuple(steps), f"reject: head {cur[0]} exceeds {n - 1}")
            return Verdict(x, False, None, "constant-reduction", trace)
        if cur[0] == cur[-1]:
            a = cur[0]
            if (n * a) % 2:
                trace = ReductionTrace(
                    tuple(steps), f"constant a={a}, N*a={n * a} odd: not graphical"
                )
                return Verdict(x, False, None, "constant-reduction", trace)
            if not erdos_gallai(x):
                trace = ReductionTrace(
                    tuple(steps),
                    f"constant a={a}, N*a={n * a} even, but exact inequalities "
                    "refute graphicality (partial reductions are one-way)",
                )
                return Verdict(x, False, None, "constant-reduction", trace)
            trace = ReductionTrace(
                tuple(steps), f"constant a={a}, N*a={n * a} even, a<={n - 1}"
            )
            return Verdict(x, True, None, "constant-reduction", trace)
        n_links = min(cur[0] - cur[-1], n - 1)
        try:
            nxt = generalized_reduce(cur, 1, n_links)
        except UnderflowError:
            trace = ReductionTrace(
                tuple(steps), f"reject: not enough positive entries for head {cur[0]}"
            )
            return Verdict(x, False, None, "constant-reduction", trace)
        steps.append(TraceStep(cur, f"reduce(k=1,n={n_links})", nxt))
        cur = nxt


def non_graphical_certificate(x: DegreeSequence) -> Optional[NonGraphicalWitness]:
    """Witness of non-graphicality by strict domination over the hub fill.

    Computes d from the total, builds the canonical hub-fill sequence for
    that total, and returns a witness iff it is strictly below x in the
    prefix-sum order. Returns None (inconclusive) otherwise.
    """
    x = DegreeSequence(x)
    n = len(x)
    s = sum(x)
    if s % 2:
        raise BadSumError(f"total {s} is odd")
    d = (s - 2 * (n - 1)) // 2
    if d < 0 or d > max_added_edges(n):
        raise BadSumError(f"total {s} gives d={d} outside 0..{max_added_edges(n)}")
    w = hub_fill_sequence(n, d)
    if majorized(w, x) and w != x:
        return NonGraphicalWitness(d=d, witness=w)
    return None


def is_c_graphical(x: DegreeSequence) -> bool:
    """Operational test: graphical, all entries positive, total >= 2(N-1).

    A single vertex of degree zero is the one legal all-alone case. The
    enumeration module cross-validates this criterion against the
    ground-truth poset characterization at small sizes.
    """
    x = DegreeSequence(x)
    n = len(x)
    if n == 1:
        return x[0] == 0
    return x[-1] >= 1 and sum(x) >= 2 * (n - 1) and erdos_gallai(x)


# -- realization construction ------------------------------------------------


def realize(x: DegreeSequence) -> SimpleGraph:
    """Greedy head-first realization; vertex v gets the rank v+1 degree."""
    x = DegreeSequence(x)
    if not erdos_gallai(x):
        raise NotGraphicalError(f"{format_sequence(x)} is not graphical")
    n = len(x)
    residual = list(x)
    edges: set[tuple[int, int]] = set()
    while True:
        order = sorted(range(n), key=lambda v: (-residual[v], v))
        u = order[0]
        d = residual[u]
        if d == 0:
            break
        targets = [v for v in order[1:] if residual[v] > 0][:d]
        if len(targets) < d:
            raise InternalInconsistencyError("greedy realization ran out of targets")
        for v in targets:
            edges.add((u, v) if u < v else (v, u))
            residual[v] -= 1
        residual[u] = 0
    return SimpleGraph(n, frozenset(edges))


def _first_cycle_edge(g: SimpleGraph) -> tuple[int, int]:
    """Lexicographically first non-bridge edge; exists whenever some
    component carries a cycle."""
    for u, v in g.sorted_edges():
        h = remove_edge(g, u, v)
        try:
            find_path(h, u, v)
        except NoPathError:
            continue
        return (u, v)
    raise InternalInconsistencyError("no cycle edge in a graph that must have one")


def realize_connected(x: DegreeSequence) -> SimpleGraph:
    """Connected realization via degree-preserving swaps.

    Starts from the greedy realization and repeatedly swaps a cycle edge
    against the first edge of another component, which merges components
    without touching any degree. Feasibility is exactly the operational
    c-graphicality test.
    """
    x = DegreeSequence(x)
    if not is_c_graphical(x):
        raise NotCGraphicalError(f"{format_sequence(x)} is not c-graphical")
    g = realize(x)
    while not is_connected(g):
        cyc = _first_cycle_edge(g)
        labels = component_labels(g)
        cid = labels[cyc[0]]
        cross = next(e for e in g.sorted_edges() if labels[e[0]] != cid)
        g = two_swap(g, cyc, cross)
    return g


# -- order-driven rewiring ---------------------------------------------------


def ranked_vertices(g: SimpleGraph) -> tuple[int, ...]:
    """Vertices sorted by descending degree, index as tiebreak.

    Position r-1 of the result is "the vertex at rank r" of the sorted
    degree sequence.
    """
    return tuple(sorted(range(g.n), key=lambda v: (-g.degree(v), v)))


def apply_inverse_transfer(g: SimpleGraph, i: int, j: int) -> SimpleGraph:
    """Rewire g so its degree sequence loses one unit at rank i, gains at rank j.

    If g realizes X' and X' arises from X by a unit transfer moving rank j
    to rank i (i < j), the result realizes X. The pivot k is the smallest
    vertex adjacent to the rank-i vertex, not adjacent to the rank-j
    vertex, and (in the connected case) off the shortest path between
    them; moving the edge from (i,k) to (j,k) preserves connectivity.
    """
    n = g.n
    if not (1 <= i <= n and 1 <= j <= n) or not i < j:
        raise PreconditionViolatedError(f"need ranks 1 <= i < j <= {n}, got i={i}, j={j}")
    ranks = ranked_vertices(g)
    degs = [g.degree(v) for v in ranks]
    target = list(degs)
    target[i - 1] -= 1
    target[j - 1] += 1
    if any(target[k] < target[k + 1] for k in range(n - 1)):
        raise PreconditionViolatedError(
            "inverse transfer would not produce a non-increasing sequence"
        )
    vi, vj = ranks[i - 1], ranks[j - 1]
    connected = is_connected(g)
    if connected:
        excluded = set(find_path(g, vi, vj))
    else:
        excluded = {vi, vj}
    adj_j = set(g.neighbors(vj))
    pivot = None
    for k in g.neighbors(vi):
        if k != vj and k not in adj_j and k not in excluded:
            pivot = k
            break
    if pivot is None:
        raise InternalInconsistencyError(
            f"no rewiring pivot for ranks {i},{j}; this contradicts the existence argument"
        )
    h = add_edge(remove_edge(g, vi, pivot), vj, pivot)
    if connected and not is_connected(h):
        raise InternalInconsistencyError("rewired graph lost connectivity")
    return h


def realize_via_domination(x: DegreeSequence, g_prime: SimpleGraph) -> SimpleGraph:
    """Realize x from a realization of a dominating equal-sum sequence.

    Decomposes x <= degree_sequence(g_prime) into unit transfers, then
    undoes them on the graph from the last to the first. The result has
    degree sequence exactly x and is connected whenever g_prime is.
    """
    x = DegreeSequence(x)
    y = degree_sequence(g_prime)
    chain = decompose_into_basic_transfers(x, y)
    g = g_prime
    for t in reversed(chain.steps):
        g = apply_inverse_transfer(g, t.to_rank, t.from_rank)
    if degree_sequence(g) != x:
        raise InternalInconsistencyError("domination pipeline produced wrong degrees")
    return g

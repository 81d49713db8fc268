"""Integer sequences, majorization orders, Lorenz curves, unit transfers.

Two partial orders live here. The prefix-sum (generalized) order compares
raw running totals and does not require equal sums. The Lorenz order
compares normalized running totals, i.e. the Lorenz curves of the two
sequences; on equal-sum pairs the two orders coincide. All comparisons are
exact: ratios are decided by integer cross-multiplication and curves are
stored as Fractions, never floats.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    IndexOutOfRangeError,
    LengthMismatchError,
    NotMajorizedError,
    OrderViolatedError,
    SumMismatchError,
    UnderflowError,
    UnknownFunctionError,
    ZeroSumError,
)


class DegreeSequence(tuple):
    """Non-increasing tuple of non-negative integers.

    Construction accepts any iterable of integers and sorts it in
    non-increasing order, so every DegreeSequence is canonical. Zero
    entries are legal and stand for isolated vertices; operations that
    need strictly positive entries say so explicitly.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int]) -> "DegreeSequence":
        vals = sorted((int(v) for v in values), reverse=True)
        if not vals:
            raise ValueError("a degree sequence must have at least one entry")
        if vals[-1] < 0:
            raise ValueError("degree sequence entries must be non-negative")
        return super().__new__(cls, vals)

    @property
    def total(self) -> int:
        return sum(self)

    def prefix_sums(self) -> tuple[int, ...]:
        """Running totals (s_1, s_1+s_2, ...), length N."""
        out = []
        acc = 0
        for v in self:
            acc += v
            out.append(acc)
        return tuple(out)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"DegreeSequence({','.join(map(str, self))})"


def parse_sequence(text: str) -> tuple[DegreeSequence, bool]:
    """Parse a comma-separated integer literal like ``"5,4,4,3,3,3"``.

    Returns the (descending-sorted) sequence and a flag telling whether the
    input was already sorted, so callers can warn about reordering.
    """
    parts = [p.strip() for p in text.strip().strip('"').split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"cannot parse sequence literal {text!r}")
    try:
        raw = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"cannot parse sequence literal {text!r}") from exc
    if any(v < 0 for v in raw):
        raise ValueError("sequence entries must be non-negative")
    seq = DegreeSequence(raw)
    return seq, list(seq) == raw


def format_sequence(seq: Iterable[int]) -> str:
    return ",".join(str(v) for v in seq)


# -- order relations ------------------------------------------------------


def majorized(x: DegreeSequence, y: DegreeSequence) -> bool:
    """True iff x is below y in the prefix-sum order (x <= y).

    Every running total of x must be at most the corresponding running
    total of y. Totals need not agree.
    """
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    ax = ay = 0
    for vx, vy in zip(x, y):
        ax += vx
        ay += vy
        if ax > ay:
            return False
    return True


def lorenz_majorized(x: DegreeSequence, y: DegreeSequence) -> bool:
    """True iff the Lorenz curve of x lies below (or on) that of y.

    Curves are compared at the shared abscissas k/N by exact
    cross-multiplication, so unequal totals are fine as long as both are
    positive. Endpoints agree automatically.
    """
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    sx, sy = sum(x), sum(y)
    if sx <= 0 or sy <= 0:
        raise ZeroSumError("Lorenz comparison needs positive totals")
    ax = ay = 0
    for vx, vy in zip(x[:-1], y[:-1]):
        ax += vx
        ay += vy
        if ax * sy > ay * sx:
            return False
    return True


class Comparison(enum.Enum):
    LESS = "Less"
    GREATER = "Greater"
    EQUAL = "Equal"
    INCOMPARABLE = "Incomparable"


def compare(x: DegreeSequence, y: DegreeSequence, order: str = "generalized") -> Comparison:
    """Four-way verdict for x against y under the chosen order.

    In the Lorenz order, distinct sequences can share a normalized curve
    (any two proportional sequences do); such pairs compare Equal because
    the order's elements are the curves themselves. Under the generalized
    order Equal occurs exactly when the sequences coincide.
    """
    if order == "generalized":
        le, ge = majorized(x, y), majorized(y, x)
    elif order == "lorenz":
        le, ge = lorenz_majorized(x, y), lorenz_majorized(y, x)
    else:
        raise ValueError(f"unknown order {order!r}")
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS
    if ge:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


# -- Lorenz curves ---------------------------------------------------------


@dataclass(frozen=True)
class LorenzCurve:
    """Polygonal curve from (0,0) to (1,1) through (k/N, prefix_k/total)."""

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        if self.points[0] != (Fraction(0), Fraction(0)):
            raise ValueError("Lorenz curve must start at the origin")
        if self.points[-1] != (Fraction(1), Fraction(1)):
            raise ValueError("Lorenz curve must end at (1,1)")
        ys = [p[1] for p in self.points]
        if any(b < a for a, b in zip(ys, ys[1:])):
            raise ValueError("Lorenz ordinates must be non-decreasing")

    @property
    def ordinates(self) -> tuple[Fraction, ...]:
        return tuple(p[1] for p in self.points)

    def to_csv(self) -> str:
        """CSV rows with fractions rendered strictly as p/q."""
        lines = ["x,y"]
        for fx, fy in self.points:
            lines.append(
                f"{fx.numerator}/{fx.denominator},{fy.numerator}/{fy.denominator}"
            )
        return "\n".join(lines) + "\n"


def lorenz_curve(x: DegreeSequence) -> LorenzCurve:
    """Exact Lorenz curve of x; requires a positive total."""
    total = sum(x)
    if total <= 0:
        raise ZeroSumError("Lorenz curve needs a positive total")
    n = len(x)
    pts = [(Fraction(0), Fraction(0))]
    acc = 0
    for k, v in enumerate(x, start=1):
        acc += v
        pts.append((Fraction(k, n), Fraction(acc, total)))
    return LorenzCurve(tuple(pts))


def nonnormalized_lorenz_points(x: DegreeSequence) -> tuple[tuple[int, int], ...]:
    """Integer points (j, sum of the j largest entries) for j = 0..N."""
    pts = [(0, 0)]
    acc = 0
    for j, v in enumerate(x, start=1):
        acc += v
        pts.append((j, acc))
    return tuple(pts)


# -- unit transfers --------------------------------------------------------


@dataclass(frozen=True)
class BasicTransfer:
    """Move one unit from rank ``from_rank`` up to rank ``to_rank``.

    Ranks are 1-based positions in the sorted sequence, with
    to_rank < from_rank. The amount is always a single unit; a transfer of
    h units is expressed as h consecutive unit transfers.
    """

    to_rank: int
    from_rank: int

    def __post_init__(self) -> None:
        if self.to_rank < 1 or self.from_rank < 1:
            raise ValueError("ranks are 1-based")
        if not self.to_rank < self.from_rank:
            raise ValueError("transfer must move a unit to a strictly higher rank")


def apply_basic_transfer(x: DegreeSequence, t: BasicTransfer) -> DegreeSequence:
    """Apply one unit transfer, preserving sortedness and the total."""
    n = len(x)
    if t.from_rank > n:
        raise IndexOutOfRangeError(f"from_rank {t.from_rank} exceeds length {n}")
    i, j = t.to_rank - 1, t.from_rank - 1
    if x[j] == 0:
        raise UnderflowError(f"rank {t.from_rank} is zero; nothing to move")
    if i > 0 and x[i - 1] < x[i] + 1:
        raise OrderViolatedError(
            f"raising rank {t.to_rank} would exceed rank {t.to_rank - 1}"
        )
    if j < n - 1 and x[j] - 1 < x[j + 1]:
        raise OrderViolatedError(
            f"lowering rank {t.from_rank} would fall below rank {t.from_rank + 1}"
        )
    vals = list(x)
    vals[i] += 1
    vals[j] -= 1
    return DegreeSequence(vals)


@dataclass(frozen=True)
class TransferChain:
    """A start sequence plus the unit transfers leading to a target."""

    start: DegreeSequence
    steps: tuple[BasicTransfer, ...]

    def replay(self) -> list[DegreeSequence]:
        """All intermediate sequences including start and end."""
        out = [self.start]
        for t in self.steps:
            out.append(apply_basic_transfer(out[-1], t))
        return out

    @property
    def end(self) -> DegreeSequence:
        return self.replay()[-1]


def decompose_into_basic_transfers(x: DegreeSequence, y: DegreeSequence) -> TransferChain:
    """Write y as x plus a chain of unit transfers.

    Requires equal totals and x <= y in the prefix-sum order. Each round
    finds the first rank i whose running total still falls short of the
    target, the first later rank j where the two running totals agree, and
    moves one unit from j to i. Every intermediate stays sorted and sits
    between x and y in the order, and the resulting chain has the minimum
    possible number of unit transfers.
    """
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    if sum(x) != sum(y):
        raise SumMismatchError(f"totals differ: {sum(x)} vs {sum(y)}")
    if not majorized(x, y):
        raise NotMajorizedError(f"{format_sequence(x)} is not below {format_sequence(y)}")
    n = len(x)
    cur = list(x)
    steps: list[BasicTransfer] = []
    while True:
        deficits = []
        ax = ay = 0
        for k in range(n):
            ax += cur[k]
            ay += y[k]
            deficits.append(ay - ax)
        i = next((k for k in range(n) if deficits[k] > 0), None)
        if i is None:
            break
        j = next(k for k in range(i + 1, n) if deficits[k] == 0)
        cur[i] += 1
        cur[j] -= 1
        steps.append(BasicTransfer(to_rank=i + 1, from_rank=j + 1))
    return TransferChain(start=DegreeSequence(x), steps=tuple(steps))


def minimum_transfer_count(x: DegreeSequence, y: DegreeSequence) -> int:
    """Independent count of unit transfers needed to climb from x to y.

    A transfer from rank j to rank i raises the running totals at
    positions i..j-1 by one each, so a decomposition is an interval cover
    of the deficit profile D(k) = prefix_y(k) - prefix_x(k). The minimum
    number of intervals is the total ascent sum(max(0, D(k) - D(k-1))).
    """
    if len(x) != len(y):
        raise LengthMismatchError(f"lengths differ: {len(x)} vs {len(y)}")
    if sum(x) != sum(y):
        raise SumMismatchError(f"totals differ: {sum(x)} vs {sum(y)}")
    px, py = x.prefix_sums(), DegreeSequence(y).prefix_sums()
    deficits = [b - a for a, b in zip(px, py)]
    prev = 0
    count = 0
    for dk in deficits:
        if dk > prev:
            count += dk - prev
        prev = dk
    return count


# -- auxiliary exact functionals -------------------------------------------


def min_tail_sum(x: DegreeSequence, k: int) -> int:
    """sum over j = k+1..N of min(x_j, k); zero when k = N."""
    n = len(x)
    if not 1 <= k <= n:
        raise IndexOutOfRangeError(f"k={k} outside 1..{n}")
    return sum(min(v, k) for v in x[k:])


_HINGE_RE = re.compile(r"^hinge\((-?\d+)\)$")

CONVEX_FUNCTION_NAMES = ("square", "cube", "hinge(c)")


def convex_sum(x: DegreeSequence, phi: str) -> int:
    """Exact sum of a built-in convex function over the entries.

    phi is one of "square", "cube" (convex on the non-negative entries we
    allow), or "hinge(c)" meaning max(t - c, 0) for an integer c.
    """
    if phi == "square":
        return sum(v * v for v in x)
    if phi == "cube":
        return sum(v * v * v for v in x)
    m = _HINGE_RE.match(phi.replace(" ", ""))
    if m:
        c = int(m.group(1))
        return sum(max(v - c, 0) for v in x)
    raise UnknownFunctionError(
        f"unknown convex function {phi!r}; expected one of {CONVEX_FUNCTION_NAMES}"
    )


def iter_hinges(x: DegreeSequence) -> Iterator[str]:
    """Hinge identifiers covering the value range of x (for property sweeps)."""
    for c in range(0, max(x) + 1):
        yield f"hinge({c})"

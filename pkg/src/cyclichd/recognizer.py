"""Polynomial-time recognition of cyclic hyper degrees.

A sequence w of n non-negative degrees is a cyclic hyper degree exactly
when some window length N in [1, 2^n] and some bijection pi from columns
to coordinates put every degree inside its column's attainable window-sum
interval: w[pi(i)] in range_of(i, N, n) for all i.  The edges of the
realizing hypergraph are then N consecutive rows of a column-shifted bit
table (see the witness module).

Two facts make the decision polynomial in n even though N can be as large
as 2^n:

  * only window lengths of the form 2*w_j + {-1, 0, 1} can possibly work,
    because column 1 alternates 0101... and forces its coordinate's degree
    to be floor(N/2) or ceil(N/2);
  * for a fixed N, a valid bijection is a perfect matching in the bipartite
    graph (columns) x (coordinates) with an edge when the degree lies in the
    column's interval.

Sorting the degrees once makes every column's compatible coordinates a
contiguous run of sorted positions, so the matching runs on index ranges
and never materializes an n x n adjacency structure: the whole decision
costs O(n^2 log n)-ish big-integer operations and handles n in the
hundreds with 2^(n-1)-sized degrees.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DomainError, ValidationError
from .ranges import _bounds


@dataclass(frozen=True)
class DegreeSequence:
    """Vertex degrees w_1..w_n; arbitrary-precision non-negative integers."""

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) == 0:
            raise ValidationError("degree sequence must be non-empty")
        for v in self.entries:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"degree {v!r} is not an integer")
            if v < 0:
                raise ValidationError(f"degree {v} is negative")

    @property
    def n(self) -> int:
        return len(self.entries)

    def within_entry_bound(self) -> bool:
        """Each entry at most 2^(n-1), the largest degree a vertex of a
        simple hypergraph on n vertices can have."""
        cap = 1 << (self.n - 1)
        return all(v <= cap for v in self.entries)


@dataclass(frozen=True)
class Assignment:
    """Accepting certificate skeleton: a window length N and the bijection
    sending column i to coordinate perm[i-1] (0-based coordinate index)."""

    N: int
    perm: tuple[int, ...]


def candidate_lengths(w: DegreeSequence) -> list[int]:
    """Window lengths that could realize w: {2*w_j - 1, 2*w_j, 2*w_j + 1}
    over all j, clipped to [1, 2^n], deduplicated, ascending.

    Raises ValidationError when some degree exceeds 2^(n-1), since no
    window length can attain such a sum.
    """
    if not w.within_entry_bound():
        cap = 1 << (w.n - 1)
        raise ValidationError(f"some degree exceeds the entry bound {cap}")
    top = 1 << w.n
    out: set[int] = set()
    for v in w.entries:
        for N in (2 * v - 1, 2 * v, 2 * v + 1):
            if 1 <= N <= top:
                out.add(N)
    return sorted(out)


def perfect_matching(
    adjacency: Sequence[Iterable[int]],
    num_right: int,
    order: Sequence[int] | None = None,
) -> list[int] | None:
    """Kuhn's augmenting-path search for a perfect matching.

    adjacency[u] iterates the right-side neighbours of left vertex u (any
    iterable; `range` objects keep segment adjacency implicit).  Left
    vertices are processed in `order` (default 0..len-1); since augmenting
    never unmatches an already matched left vertex, the search can abort on
    the first left vertex that fails to augment.  Returns match_left, or
    None when no perfect matching exists.
    """
    n_left = len(adjacency)
    match_left = [-1] * n_left
    match_right = [-1] * num_right

    def augment(u: int, visited: bytearray) -> bool:
        for v in adjacency[u]:
            if visited[v]:
                continue
            visited[v] = 1
            w = match_right[v]
            if w < 0 or augment(w, visited):
                match_right[v] = u
                match_left[u] = v
                return True
        return False

    for u in order if order is not None else range(n_left):
        if not augment(u, bytearray(num_right)):
            return None
    return match_left


def feasible(w: DegreeSequence, N: int) -> Assignment | None:
    """Search for a bijection placing every degree in its column's interval
    for window length N; None when no perfect matching exists.

    Degrees are matched in sorted order, so each column's compatible
    coordinates form one contiguous run of sorted positions, found by
    bisection and kept as a `range`.  Tighter columns are matched first,
    which keeps augmenting paths short; any column with an empty run
    refutes N immediately.
    """
    n = w.n
    if not 1 <= N <= (1 << n):
        raise DomainError(f"window length {N} outside [1, {1 << n}]")
    by_value = sorted(range(n), key=lambda j: w.entries[j])
    vals = [w.entries[j] for j in by_value]
    segments: list[range] = []
    for b in range(n):
        lo, hi = _bounds(b + 1, N)
        a = bisect_left(vals, lo)
        c = bisect_right(vals, hi)
        if a >= c:
            return None
        segments.append(range(a, c))
    col_order = sorted(range(n), key=lambda b: len(segments[b]))
    matched = perfect_matching(segments, n, order=col_order)
    if matched is None:
        return None
    perm = tuple(by_value[matched[b]] for b in range(n))
    return Assignment(N=N, perm=perm)


def recognize(w: DegreeSequence) -> Assignment | None:
    """Decide whether w is a cyclic hyper degree.

    Returns the assignment for the smallest workable candidate length, or
    None when w is not a cyclic hyper degree.  Sequences with an entry
    above 2^(n-1) are rejected outright (no simple hypergraph on n vertices
    reaches such a degree, so no witness could exist).
    """
    if not w.within_entry_bound():
        return None
    for N in candidate_lengths(w):
        assignment = feasible(w, N)
        if assignment is not None:
            return assignment
    return None

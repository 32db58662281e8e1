"""Explicit hypergraph certificates for accepted degree sequences.

An accepting (N, perm) assignment fixes only that each degree lies in its
column's attainable interval.  This module upgrades it to a concrete
witness by choosing, per column i, a start offset s_i whose length-N
window sums to the assigned degree.  Edge k (0 <= k < N) is then the row
vector read with those offsets: vertex perm[i-1]+1 belongs to edge k iff
column i has a one at position (k + s_i) mod 2^n.  Rows of a shifted bit
table are pairwise distinct, so the N edges form a simple hypergraph whose
degree sequence is exactly w.

verify_witness rechecks all of that from scratch (window sums by prefix
counts, and for materializable N also edge distinctness and per-vertex
degrees); it shares no code path with solve_start's search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bittable import BitColumn
from .errors import CapacityError, DomainError
from .ranges import _bounds
from .recognizer import Assignment, DegreeSequence

DEFAULT_EDGE_CAP = 1 << 20
_PACK_LIMIT = 62  # int64 materialization; larger orders fall back to big ints


@dataclass(frozen=True)
class Witness:
    """Certificate (n, N, perm, starts): column i, read cyclically from
    0-based offset starts[i-1] for N rows, sums to the degree of coordinate
    perm[i-1].

    Construction performs no checking: verify_witness is the validator, and
    it must be able to receive (and reject) malformed certificates.
    """

    n: int
    N: int
    perm: tuple[int, ...]
    starts: tuple[int, ...]


def solve_start(i: int, N: int, v: int, n: int) -> int:
    """Smallest start s in [0, 2^(i-1)] whose length-N window of column i
    sums to v; v must lie in the column's attainable interval.

    Write N = q*2^i + r.  For r = 0 every window sums to q*2^(i-1), so
    s = 0.  Otherwise the window sum is nondecreasing in s on [0, 2^(i-1)]
    and moves by at most 1 per step, sweeping the whole interval, so the
    smallest s with sum >= v has sum exactly v; binary search finds it in
    O(i) big-integer operations.
    """
    col = BitColumn(i, n)
    lo_v, hi_v = _bounds(i, N)
    if not 1 <= N <= col.length:
        raise DomainError(f"window length {N} outside [1, {col.length}]")
    if not lo_v <= v <= hi_v:
        raise DomainError(f"target {v} outside attainable interval [{lo_v}, {hi_v}]")
    half = 1 << (i - 1)
    if N & ((half << 1) - 1) == 0:
        return 0
    lo_s, hi_s = 0, half
    while lo_s < hi_s:
        mid = (lo_s + hi_s) >> 1
        if col.contiguous_sum(mid, N) >= v:
            hi_s = mid
        else:
            lo_s = mid + 1
    return lo_s


def build_witness(w: DegreeSequence, assignment: Assignment) -> Witness:
    """Canonical witness for an accepting assignment: per-column smallest
    start offsets for the assigned degrees."""
    n = w.n
    starts = tuple(
        solve_start(b + 1, assignment.N, w.entries[assignment.perm[b]], n)
        for b in range(n)
    )
    return Witness(n=n, N=assignment.N, perm=assignment.perm, starts=starts)


def materialize_edges(wit: Witness, cap: int = DEFAULT_EDGE_CAP) -> list[int]:
    """The N hyperedges as vertex bitmasks (bit v-1 set iff vertex v is in
    the edge).  Edge k takes column i's bit at position (k + starts[i-1])
    mod 2^n and places it at vertex perm[i-1] + 1.

    Raises CapacityError for N > cap; the witness itself stays valid, only
    the explicit edge list is refused.
    """
    n, N = wit.n, wit.N
    if n < 1 or len(wit.perm) != n or len(wit.starts) != n:
        raise DomainError("witness fields are inconsistent")
    if not 1 <= N <= (1 << n):
        raise DomainError(f"window length {N} outside [1, {1 << n}]")
    if N > cap:
        raise CapacityError(f"{N} edges exceed the materialization cap {cap}")
    if n <= _PACK_LIMIT:
        return [int(e) for e in _edges_packed(wit)]
    mask = (1 << n) - 1
    out = [0] * N
    for b, s in enumerate(wit.starts):
        vbit = 1 << wit.perm[b]
        for k in range(N):
            if ((k + s) & mask) >> b & 1:
                out[k] |= vbit
    return out


def _edges_packed(wit: Witness) -> np.ndarray:
    # int64 edge masks; requires n <= _PACK_LIMIT so k + s < 2^63
    mask = (1 << wit.n) - 1
    k = np.arange(wit.N, dtype=np.int64)
    edges = np.zeros(wit.N, dtype=np.int64)
    for b, s in enumerate(wit.starts):
        bits = (((k + s) & mask) >> b) & 1
        edges |= bits << np.int64(wit.perm[b])
    return edges


def edge_vertices(mask: int) -> list[int]:
    """Sorted 1-based vertex list of an edge bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def verify_witness(
    w: DegreeSequence, wit: Witness, cap: int = DEFAULT_EDGE_CAP
) -> bool:
    """Recheck a certificate from scratch; False on any defect, never raises.

    Checks: consistent shape, N in [1, 2^n], perm a bijection, starts in
    range, and every column's window sum equal to its assigned degree.
    When N <= cap the edges are also materialized and required to be
    pairwise distinct with per-vertex counts exactly w.
    """
    n = w.n
    if wit.n != n:
        return False
    if not isinstance(wit.N, int) or not 1 <= wit.N <= (1 << n):
        return False
    if len(wit.perm) != n or sorted(wit.perm) != list(range(n)):
        return False
    if len(wit.starts) != n:
        return False
    top = 1 << n
    if any(not 0 <= s < top for s in wit.starts):
        return False
    for b in range(n):
        col = BitColumn(b + 1, n)
        if col.contiguous_sum(wit.starts[b], wit.N) != w.entries[wit.perm[b]]:
            return False
    if wit.N > cap:
        return True
    if n <= _PACK_LIMIT:
        edges = _edges_packed(wit)
        if np.unique(edges).size != wit.N:
            return False
        for v in range(n):
            if int(((edges >> np.int64(v)) & 1).sum()) != w.entries[v]:
                return False
    else:
        listed = materialize_edges(wit, cap)
        if len(set(listed)) != wit.N:
            return False
        for v in range(n):
            if sum((e >> v) & 1 for e in listed) != w.entries[v]:
                return False
    return True

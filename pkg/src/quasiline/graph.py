"""Immutable simple undirected graphs with bitset adjacency rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``u`` and ``v`` are
adjacent, so neighbourhood intersections and clique tests are single
big-int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from quasiline.errors import PreconditionError, VertexRangeError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n: int, rows: Iterable[int] = ()) -> None:
        rows = tuple(rows) if rows else (0,) * n
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise VertexRangeError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise PreconditionError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not rows[u] >> v & 1:
                    raise PreconditionError(f"adjacency is not symmetric at ({v}, {u})")
        self._n = n
        self._rows = rows

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Skips validation; callers guarantee symmetric, irreflexive rows.
        g = object.__new__(cls)
        g._n = n
        g._rows = rows
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self._n:
            raise VertexRangeError(f"vertex {v!r} outside 0..{self._n - 1}")

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self._rows):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self._rows) // 2

    def is_clique(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if (self._rows[v] | 1 << v) & mask != mask:
                return False
        return True

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self.edges())})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(g.rows)))


def neighborhood(g: Graph, v: int) -> frozenset[int]:
    g.check_vertex(v)
    return frozenset(iter_bits(g.rows[v]))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices`` plus the order-preserving old->new label map."""
    members = sorted(set(vertices))
    for v in members:
        g.check_vertex(v)
    label = {old: new for new, old in enumerate(members)}
    rows = g.rows
    keep = mask_of(members)
    sub = []
    for old in members:
        r = 0
        for u in iter_bits(rows[old] & keep):
            r |= 1 << label[u]
        sub.append(r)
    return Graph._trusted(len(members), tuple(sub)), label

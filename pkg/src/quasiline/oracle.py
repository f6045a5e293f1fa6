"""Brute-force ground truth and graph generators.

Nothing here uses complement colouring or breadth-first search, so the
results are an independent check on the recognition module.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from quasiline.errors import CapacityError
from quasiline.graph import Graph, iter_bits, mask_of
from quasiline.recognition import OddAntiholeWitness, TwoCliqueCover, canonical_cycle

MAX_COVER_N = 24
MAX_ANTIHOLE_N = 16
MAX_ENUMERATE_N = 7


def _cliques_containing(rows: tuple[int, ...], v: int) -> Iterator[int]:
    """Every clique (as a bitmask) that contains ``v``."""
    stack = [(1 << v, rows[v])]
    while stack:
        clique, cand = stack.pop()
        yield clique
        for x in iter_bits(cand):
            # only extend with higher-numbered candidates so each clique appears once
            stack.append((clique | 1 << x, cand & rows[x] & ~((2 << x) - 1)))


def brute_two_clique_cover(g: Graph) -> TwoCliqueCover | None:
    """First valid split by side1 bitmask, with vertex 0 on side1.

    Bipartitions whose side1 is not a clique fail outright, so only cliques
    through vertex 0 are tried as side1; the rest of the graph must then be
    a clique as well.
    """
    n = g.n
    if n > MAX_COVER_N:
        raise CapacityError(f"brute_two_clique_cover supports n <= {MAX_COVER_N}, got {n}")
    if n == 0:
        return TwoCliqueCover((), ())
    rows = g.rows
    full = g.full_mask
    best = None
    for side1 in _cliques_containing(rows, 0):
        if best is not None and side1 >= best:
            continue
        side2 = full ^ side1
        if all((rows[v] | 1 << v) & side2 == side2 for v in iter_bits(side2)):
            best = side1
    if best is None:
        return None
    return TwoCliqueCover(tuple(iter_bits(best)), tuple(iter_bits(full ^ best)))


def _complement_cycle_order(rows: tuple[int, ...], subset: tuple[int, ...]) -> list[int] | None:
    """Walk the complement inside ``subset``; the order if it is one cycle through all of it."""
    m = mask_of(subset)
    for v in subset:
        if (~rows[v] & m & ~(1 << v)).bit_count() != 2:
            return None
    order = [subset[0]]
    prev = None
    while True:
        nb = ~rows[order[-1]] & m & ~(1 << order[-1])
        if prev is not None:
            nb &= ~(1 << prev)
        nxt = (nb & -nb).bit_length() - 1
        if nxt == order[0]:
            break
        prev = order[-1]
        order.append(nxt)
    return order if len(order) == len(subset) else None


def brute_find_odd_antihole(g: Graph) -> OddAntiholeWitness | None:
    """Smallest induced odd antihole: odd sizes ascending, lexicographic subsets within a size."""
    n = g.n
    if n > MAX_ANTIHOLE_N:
        raise CapacityError(f"brute_find_odd_antihole supports n <= {MAX_ANTIHOLE_N}, got {n}")
    rows = g.rows
    for k in range(3, n + 1, 2):
        for subset in combinations(range(n), k):
            order = _complement_cycle_order(rows, subset)
            if order is not None:
                return OddAntiholeWitness(canonical_cycle(order))
    return None


def brute_shortest_odd_cycle(g: Graph) -> int | None:
    """Odd girth of the complement from closed walks: the least odd k with a closed k-walk."""
    n = g.n
    full = g.full_mask
    comp = [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)]
    reach = [1 << v for v in range(n)]
    for k in range(1, n + 1):
        reach = [_step(comp, r) for r in reach]
        if k % 2 and any(reach[v] >> v & 1 for v in range(n)):
            return k
    return None


def _step(comp: list[int], frontier: int) -> int:
    out = 0
    for x in iter_bits(frontier):
        out |= comp[x]
    return out


def enumerate_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices; bit i of the counter is the i-th pair in lex order."""
    limit = MAX_ENUMERATE_N if allow_large else 6
    if n > limit:
        raise CapacityError(f"enumerate_graphs supports n <= {limit}, got {n}")
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        rows = [0] * n
        for i in iter_bits(code):
            u, v = pairs[i]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph._trusted(n, tuple(rows))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p) from Python's MT19937 ``random.Random(seed)``.

    Pairs (i, j), i < j, are visited in lexicographic order and each becomes
    an edge when ``random()`` < p.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rng = random.Random(seed)
    draw = rng.random
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if draw() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def line_graph(g: Graph) -> Graph:
    edges = list(g.edges())
    at: dict[int, int] = {}
    for idx, (u, v) in enumerate(edges):
        at[u] = at.get(u, 0) | 1 << idx
        at[v] = at.get(v, 0) | 1 << idx
    rows = tuple((at[u] | at[v]) ^ (1 << idx) for idx, (u, v) in enumerate(edges))
    return Graph._trusted(len(edges), rows)

"""Certified recognition of two-clique graphs and quasi-line graphs.

A graph is a union of two cliques exactly when its complement is bipartite,
and the obstruction is an odd cycle of the complement. A *shortest* odd cycle
has no chords, so it induces an odd antihole in the original graph and
serves as a checkable witness.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from quasiline.errors import CompleteGraphError, PreconditionError, VertexRangeError
from quasiline.graph import Graph, induced_subgraph, iter_bits, mask_of


@dataclass(frozen=True)
class TwoCliqueCover:
    side1: tuple[int, ...]
    side2: tuple[int, ...]

    @classmethod
    def of(cls, side1: Iterable[int], side2: Iterable[int]) -> "TwoCliqueCover":
        return cls(tuple(sorted(side1)), tuple(sorted(side2)))


@dataclass(frozen=True)
class OddAntiholeWitness:
    """Vertices in cycle order of the complement: consecutive ones are non-adjacent."""

    cycle_order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.cycle_order)


@dataclass(frozen=True)
class QuasiLineCertificate:
    per_vertex: dict[int, TwoCliqueCover]


@dataclass(frozen=True)
class QuasiLineObstruction:
    apex: int
    witness: OddAntiholeWitness


@dataclass(frozen=True)
class Lemma1Partition:
    v: int
    w: int
    B: frozenset[int]
    C: frozenset[int]
    A1: frozenset[int]
    A2: frozenset[int]
    A3: frozenset[int]


@dataclass(frozen=True)
class ForbiddenInduced:
    """An induced 3K1 (``kind='3K1'``) or C5 (``kind='C5'``, vertices in cycle order)."""

    kind: str
    vertices: tuple[int, ...]


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the minimum vertex, heading towards its smaller neighbour."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    if k > 2 and fwd[-1] < fwd[1]:
        return (fwd[0],) + fwd[:0:-1]
    return fwd


def _complement_rows(rows: Sequence[int], within: int) -> list[int]:
    return [(~rows[v] & within) ^ (1 << v) if within >> v & 1 else 0 for v in range(len(rows))]


def _two_color(comp: Sequence[int], within: int) -> tuple[list[tuple[int, int]], int]:
    """Breadth-first 2-colouring of the complement restricted to ``within``.

    Returns per-component (colour-0 mask, colour-1 mask) in order of minimum
    vertex, and the union of components that contain an odd cycle.
    """
    parts = []
    conflicted = 0
    unseen = within
    while unseen:
        root = (unseen & -unseen).bit_length() - 1
        side = [1 << root, 0]
        unseen ^= 1 << root
        frontier = 1 << root
        colour = 0
        odd = False
        while frontier:
            nxt = 0
            for x in iter_bits(frontier):
                nb = comp[x]
                if nb & side[colour]:
                    odd = True
                nxt |= nb & unseen
            unseen &= ~nxt
            colour ^= 1
            side[colour] |= nxt
            frontier = nxt
        parts.append((side[0], side[1]))
        if odd:
            conflicted |= side[0] | side[1]
    return parts, conflicted


def _shortest_odd_cycle(comp: Sequence[int], roots: int) -> list[int]:
    """A shortest odd cycle of the complement among cycles through ``roots``.

    Breadth-first search from each root; an edge inside one layer at depth d
    closes an odd walk of length 2d+1 through the root. The smallest such
    length over all roots is the odd girth, and a walk that attains it is a
    simple cycle.
    """
    best: tuple[int, int, int, dict[int, int]] | None = None
    best_len = None
    for r in iter_bits(roots):
        parent = {r: -1}
        level = 1 << r
        seen = level
        depth = 0
        while level and (best_len is None or 2 * depth + 1 < best_len):
            hit = None
            for x in iter_bits(level):
                inside = comp[x] & level
                if inside:
                    hit = (x, (inside & -inside).bit_length() - 1)
                    break
            if hit is not None:
                best_len = 2 * depth + 1
                best = (r, hit[0], hit[1], parent)
                break
            nxt = 0
            for x in iter_bits(level):
                new = comp[x] & ~seen & ~nxt
                for y in iter_bits(new):
                    parent[y] = x
                nxt |= new
            seen |= nxt
            level = nxt
            depth += 1
        if best_len == 3:
            break
    if best is None:
        raise AssertionError("no odd cycle through the given roots")
    r, x, y, parent = best
    return _close_cycle(parent, x, y)


def _close_cycle(parent: dict[int, int], x: int, y: int) -> list[int]:
    px = [x]
    while parent[px[-1]] != -1:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] != -1:
        py.append(parent[py[-1]])
    # root .. x, then y .. child-of-root
    return px[::-1] + py[:-1]


def two_clique_cover(g: Graph) -> TwoCliqueCover | OddAntiholeWitness:
    """Partition ``g`` into two cliques, or return an induced odd antihole."""
    within = g.full_mask
    comp = _complement_rows(g.rows, within)
    parts, conflicted = _two_color(comp, within)
    if conflicted:
        return OddAntiholeWitness(canonical_cycle(_shortest_odd_cycle(comp, conflicted)))
    s1 = s2 = 0
    for a, b in parts:
        s1 |= a
        s2 |= b
    return TwoCliqueCover(tuple(iter_bits(s1)), tuple(iter_bits(s2)))


def _check_labels(g: Graph, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise VertexRangeError(f"vertex {v!r} outside 0..{g.n - 1}")


def _cover_problem(g: Graph, cover: TwoCliqueCover, universe: int) -> str | None:
    s1, s2 = mask_of(cover.side1), mask_of(cover.side2)
    if len(cover.side1) + len(cover.side2) != (s1 | s2).bit_count() or s1 & s2:
        return "sides overlap or repeat a vertex"
    if s1 | s2 != universe:
        return "sides do not cover the vertex set"
    if not g.is_clique(s1):
        return "side1 is not a clique"
    if not g.is_clique(s2):
        return "side2 is not a clique"
    return None


def verify_two_clique_cover(g: Graph, cover: TwoCliqueCover) -> bool:
    _check_labels(g, cover.side1)
    _check_labels(g, cover.side2)
    return _cover_problem(g, cover, g.full_mask) is None


def verify_antihole(g: Graph, w: OddAntiholeWitness) -> bool:
    order = w.cycle_order
    _check_labels(g, order)
    k = len(order)
    if k < 3 or k % 2 == 0 or len(set(order)) != k:
        return False
    inside = mask_of(order)
    rows = g.rows
    for i, v in enumerate(order):
        expect = inside ^ (1 << v) ^ (1 << order[i - 1]) ^ (1 << order[(i + 1) % k])
        if k == 3:
            expect = 0
        if rows[v] & inside != expect:
            return False
    return True


def verify_quasi_line_certificate(g: Graph, cert: QuasiLineCertificate) -> bool:
    if set(cert.per_vertex) != set(range(g.n)):
        return False
    for v, cover in cert.per_vertex.items():
        _check_labels(g, cover.side1)
        _check_labels(g, cover.side2)
        if _cover_problem(g, cover, g.rows[v]) is not None:
            return False
    return True


def verify_quasi_line_obstruction(g: Graph, obs: QuasiLineObstruction) -> bool:
    _check_labels(g, [obs.apex])
    if not verify_antihole(g, obs.witness):
        return False
    return mask_of(obs.witness.cycle_order) & ~g.rows[obs.apex] == 0


def _neighbourhood_verdict(g: Graph, v: int) -> TwoCliqueCover | OddAntiholeWitness:
    members = list(iter_bits(g.rows[v]))
    sub, _ = induced_subgraph(g, members)
    res = two_clique_cover(sub)
    if isinstance(res, OddAntiholeWitness):
        return OddAntiholeWitness(tuple(members[i] for i in res.cycle_order))
    return TwoCliqueCover(
        tuple(members[i] for i in res.side1), tuple(members[i] for i in res.side2)
    )


def _verdict_chunk(args: tuple[Graph, list[int]]) -> list[TwoCliqueCover | OddAntiholeWitness]:
    g, vertices = args
    out = []
    for v in vertices:
        res = _neighbourhood_verdict(g, v)
        out.append(res)
        if isinstance(res, OddAntiholeWitness):
            break
    return out


def quasi_line(
    g: Graph, parallel: bool = False, workers: int | None = None
) -> QuasiLineCertificate | QuasiLineObstruction:
    """Cover every neighbourhood by two cliques, or report the smallest failing apex.

    With ``parallel`` the neighbourhoods are checked in worker processes;
    the result is identical to the sequential one.
    """
    if parallel and g.n > 1:
        chunks = _split(list(range(g.n)), workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verdict_chunk, [(g, c) for c in chunks]))
        per_vertex = {}
        for chunk, res in zip(chunks, results):
            for v, r in zip(chunk, res):
                if isinstance(r, OddAntiholeWitness):
                    # chunks are contiguous and ordered, so the first failure seen is the smallest
                    return QuasiLineObstruction(v, r)
                per_vertex[v] = r
        return QuasiLineCertificate(per_vertex)

    per_vertex = {}
    for v in range(g.n):
        res = _neighbourhood_verdict(g, v)
        if isinstance(res, OddAntiholeWitness):
            return QuasiLineObstruction(v, res)
        per_vertex[v] = res
    return QuasiLineCertificate(per_vertex)


def _split(items: list[int], workers: int | None) -> list[list[int]]:
    k = max(1, min(len(items), (workers or os.cpu_count() or 1) * 4))
    size = -(-len(items) // k)
    return [items[i : i + size] for i in range(0, len(items), size)]


def _extend(
    rows: Sequence[int], active: int, u: int, s1: int, s2: int
) -> tuple[int, int] | list[int]:
    """Add ``u`` to the cover (s1, s2) of ``active - {u}``.

    Layers are the breadth-first levels from ``u`` in the complement: level 1
    holds the non-neighbours of ``u``, level j those non-adjacent to some
    vertex of level j-1. Even levels join ``u``, odd levels form the other
    side, and vertices outside ``u``'s complement component keep their side.
    Returns the new side masks, or a witness cycle starting at ``u``.
    """
    comp = [0] * len(rows)
    for v in iter_bits(active):
        comp[v] = (~rows[v] & active) ^ (1 << v)
    parent = {u: -1}
    level = 1 << u
    seen = level
    layers = [level]
    while level:
        for x in iter_bits(level):
            inside = comp[x] & level
            if inside:
                # prior cover is valid, so every odd cycle passes through u
                return _close_cycle(parent, x, (inside & -inside).bit_length() - 1)
        nxt = 0
        for x in iter_bits(level):
            new = comp[x] & ~seen & ~nxt
            for y in iter_bits(new):
                parent[y] = x
            nxt |= new
        seen |= nxt
        level = nxt
        if level:
            layers.append(level)
    even = odd = 0
    for j, layer in enumerate(layers):
        if j % 2:
            odd |= layer
        else:
            even |= layer
    return even | (s1 & ~seen), odd | (s2 & ~seen)


def _prior_problem(rows: Sequence[int], active: int, u: int, s1: int, s2: int) -> str | None:
    if s1 & s2:
        return "prior sides overlap"
    if (s1 | s2) != active & ~(1 << u):
        return "prior sides do not partition V - u"
    for name, side in (("side1", s1), ("side2", s2)):
        for v in iter_bits(side):
            if (rows[v] | 1 << v) & side != side:
                return f"prior {name} is not a clique"
    return None


def extend_cover(
    g: Graph, u: int, prior: TwoCliqueCover
) -> TwoCliqueCover | OddAntiholeWitness:
    """Extend a two-clique cover of ``g - u`` to ``g``, or find an antihole through ``u``."""
    g.check_vertex(u)
    _check_labels(g, prior.side1)
    _check_labels(g, prior.side2)
    s1, s2 = mask_of(prior.side1), mask_of(prior.side2)
    problem = _prior_problem(g.rows, g.full_mask, u, s1, s2)
    if problem is None and len(prior.side1) + len(prior.side2) != (s1 | s2).bit_count():
        problem = "prior sides repeat a vertex"
    if problem:
        raise PreconditionError(problem)
    res = _extend(g.rows, g.full_mask, u, s1, s2)
    if isinstance(res, list):
        return OddAntiholeWitness(tuple(res))
    return TwoCliqueCover(tuple(iter_bits(res[0])), tuple(iter_bits(res[1])))


def incremental_cover(g: Graph, order: Sequence[int]) -> TwoCliqueCover | OddAntiholeWitness:
    """Insert vertices one at a time in ``order``, extending the cover at each step.

    Stops at the first witness; it is an induced antihole of ``g`` as well,
    since it lives in an induced subgraph.
    """
    if sorted(order) != list(range(g.n)):
        raise PreconditionError("order must be a permutation of the vertices")
    rows = g.rows
    active = s1 = s2 = 0
    for u in order:
        active |= 1 << u
        res = _extend(rows, active, u, s1, s2)
        if isinstance(res, list):
            return OddAntiholeWitness(tuple(res))
        s1, s2 = res
    return TwoCliqueCover(tuple(iter_bits(s1)), tuple(iter_bits(s2)))


def check_3k1_c5_free(g: Graph) -> ForbiddenInduced | None:
    """First induced 3K1 (lexicographic triples), else first induced C5, else None."""
    rows = g.rows
    for a, b, c in combinations(range(g.n), 3):
        if not (rows[a] >> b & 1 or rows[a] >> c & 1 or rows[b] >> c & 1):
            return ForbiddenInduced("3K1", (a, b, c))
    for five in combinations(range(g.n), 5):
        m = mask_of(five)
        if all((rows[v] & m).bit_count() == 2 for v in five):
            # 2-regular on five vertices is necessarily a single 5-cycle
            order = [five[0]]
            prev = -1
            while len(order) < 5:
                nb = rows[order[-1]] & m & ~(1 << prev if prev >= 0 else 0)
                nxt = (nb & -nb).bit_length() - 1
                prev = order[-1]
                order.append(nxt)
            return ForbiddenInduced("C5", canonical_cycle(order))
    return None


def lemma1_partition(g: Graph, v: int, w: int) -> Lemma1Partition:
    """Split a {3K1, C5}-free graph around the non-adjacent pair (v, w)."""
    g.check_vertex(v)
    g.check_vertex(w)
    if v == w:
        raise PreconditionError("v and w must be distinct")
    if g.num_edges == g.n * (g.n - 1) // 2:
        raise CompleteGraphError("case 1 of Lemma 1: G is complete")
    if g.adjacent(v, w):
        raise PreconditionError(f"v={v} and w={w} are adjacent")
    bad = check_3k1_c5_free(g)
    if bad is not None:
        raise PreconditionError(f"graph contains an induced {bad.kind}", witness=bad.vertices)

    rows = g.rows
    nv, nw = rows[v], rows[w]
    B = nv & ~nw & ~(1 << w)
    C = nw & ~nv & ~(1 << v)
    both = nv & nw
    A1 = A2 = 0
    for a in iter_bits(both):
        if C & ~rows[a]:
            A1 |= 1 << a
        elif B & ~rows[a]:
            A2 |= 1 << a
    A3 = g.full_mask & ~(1 << v | 1 << w | B | C | A1 | A2)

    def fs(m: int) -> frozenset[int]:
        return frozenset(iter_bits(m))

    return Lemma1Partition(v, w, fs(B), fs(C), fs(A1), fs(A2), fs(A3))

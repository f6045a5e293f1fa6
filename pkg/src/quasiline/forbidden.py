"""Pattern graphs and induced-subgraph search.

Pattern expressions::

    claw | w6 | cor2 | antihole(K) | cycle(K) | path(K) | complete(K)
         | empty(K) | join(E,E) | union(E,E)

``join`` makes every vertex of the left operand adjacent to every vertex
of the right one; ``union`` places them side by side. In both, the left
operand's vertices come first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from quasiline.errors import PatternError
from quasiline.graph import Graph, complement, iter_bits
from quasiline.recognition import QuasiLineCertificate, quasi_line

_SIZED_MIN = {"antihole": 3, "cycle": 3, "path": 1, "complete": 1, "empty": 1}
_NAMED = ("claw", "w6", "corollary2_graph")


@dataclass(frozen=True)
class Pattern:
    kind: str
    k: int | None = None
    parts: tuple["Pattern", ...] = ()

    def __str__(self) -> str:
        if self.kind in _NAMED:
            return self.kind
        if self.k is not None:
            return f"{self.kind}({self.k})"
        left, right = self.parts
        name = "union" if self.kind == "disjoint_union" else self.kind
        return f"{name}({left},{right})"


def claw() -> Pattern:
    return Pattern("claw")


def w6() -> Pattern:
    return Pattern("w6")


def corollary2_graph() -> Pattern:
    return Pattern("corollary2_graph")


def sized(kind: str, k: int) -> Pattern:
    if kind not in _SIZED_MIN:
        raise PatternError(f"unknown pattern family {kind!r}")
    if k < _SIZED_MIN[kind]:
        raise PatternError(f"{kind} needs k >= {_SIZED_MIN[kind]}, got {k}")
    if kind == "antihole" and k % 2 == 0:
        raise PatternError(f"antihole needs odd k, got {k}")
    return Pattern(kind, k)


def join(a: Pattern, b: Pattern) -> Pattern:
    return Pattern("join", parts=(a, b))


def disjoint_union(a: Pattern, b: Pattern) -> Pattern:
    return Pattern("disjoint_union", parts=(a, b))


def _expand(p: Pattern) -> Pattern:
    if p.kind == "claw":
        return join(sized("empty", 1), sized("empty", 3))
    if p.kind == "w6":
        return join(sized("empty", 1), sized("cycle", 5))
    if p.kind == "corollary2_graph":
        inner = join(sized("empty", 2), disjoint_union(sized("complete", 2), sized("complete", 1)))
        return join(sized("empty", 1), inner)
    return p


def build_pattern(p: Pattern) -> Graph:
    p = _expand(p)
    if p.kind in _SIZED_MIN:
        k = p.k
        sized(p.kind, k)  # re-validate hand-built Pattern values
        if p.kind == "empty":
            return Graph(k)
        if p.kind == "complete":
            return complement(Graph(k))
        if p.kind == "path":
            return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
        cycle = Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])
        return cycle if p.kind == "cycle" else complement(cycle)
    if p.kind in ("join", "disjoint_union"):
        a, b = (build_pattern(q) for q in p.parts)
        na = a.n
        rows = list(a.rows) + [r << na for r in b.rows]
        if p.kind == "join":
            left, right = (1 << na) - 1, ((1 << b.n) - 1) << na
            rows = [r | right for r in rows[:na]] + [r | left for r in rows[na:]]
        return Graph._trusted(na + b.n, tuple(rows))
    raise PatternError(f"unknown pattern kind {p.kind!r}")


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|([(),]))")


def parse_pattern(expr: str) -> Pattern:
    tokens = []
    pos = 0
    expr = expr.strip()
    while pos < len(expr):
        m = _TOKEN.match(expr, pos)
        if not m or m.end() == pos:
            raise PatternError(f"unexpected character {expr[pos]!r} at {pos} in {expr!r}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
        while pos < len(expr) and expr[pos].isspace():
            pos += 1

    def take(i: int, want: str | None = None) -> tuple[str, int]:
        if i >= len(tokens):
            raise PatternError(f"unexpected end of pattern {expr!r}")
        if want is not None and tokens[i] != want:
            raise PatternError(f"expected {want!r}, got {tokens[i]!r} in {expr!r}")
        return tokens[i], i + 1

    def node(i: int) -> tuple[Pattern, int]:
        name, i = take(i)
        key = name.lower()
        if key == "claw":
            return claw(), i
        if key == "w6":
            return w6(), i
        if key in ("cor2", "corollary2_graph"):
            return corollary2_graph(), i
        if key in _SIZED_MIN:
            _, i = take(i, "(")
            num, i = take(i)
            if not num.isdigit():
                raise PatternError(f"{key} expects an integer, got {num!r}")
            _, i = take(i, ")")
            return sized(key, int(num)), i
        if key in ("join", "union"):
            _, i = take(i, "(")
            a, i = node(i)
            _, i = take(i, ",")
            b, i = node(i)
            _, i = take(i, ")")
            return (join(a, b) if key == "join" else disjoint_union(a, b)), i
        raise PatternError(f"unknown pattern {name!r}")

    p, end = node(0)
    if end != len(tokens):
        raise PatternError(f"trailing input after pattern in {expr!r}")
    return p


def _search_order(pattern: Graph) -> list[int]:
    """Static order: each next vertex has the most already-placed neighbours."""
    rows = pattern.rows
    left = set(range(pattern.n))
    placed = 0
    order = []
    while left:
        v = max(left, key=lambda x: ((rows[x] & placed).bit_count(), rows[x].bit_count(), -x))
        order.append(v)
        placed |= 1 << v
        left.remove(v)
    return order


def find_induced(host: Graph, pattern: Graph) -> tuple[int, ...] | None:
    """Induced embedding of ``pattern`` into ``host`` as a tuple indexed by pattern vertex.

    Candidates are tried in ascending host order along a fixed pattern
    order, so the result is the lexicographically least embedding under
    that order.
    """
    k = pattern.n
    if k == 0:
        return ()
    if k > host.n:
        return None
    hrows, prows = host.rows, pattern.rows
    full = host.full_mask
    order = _search_order(pattern)
    hdeg = [r.bit_count() for r in hrows]
    hnon = [host.n - 1 - d for d in hdeg]
    pdeg = [r.bit_count() for r in prows]
    pnon = [k - 1 - d for d in pdeg]
    # fixed per-position degree filters
    base = []
    for p in order:
        m = 0
        for h in range(host.n):
            if hdeg[h] >= pdeg[p] and hnon[h] >= pnon[p]:
                m |= 1 << h
        base.append(m)
    # earlier positions that are pattern neighbours / non-neighbours of each position
    earlier = []
    for i, p in enumerate(order):
        earlier.append([(j, bool(prows[p] >> order[j] & 1)) for j in range(i)])

    image = [0] * k

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        m = base[i] & ~used
        for j, adj in earlier[i]:
            h = image[j]
            m &= hrows[h] if adj else full ^ hrows[h] ^ (1 << h)
            if not m:
                return False
        for h in iter_bits(m):
            image[i] = h
            if extend(i + 1, used | 1 << h):
                return True
        return False

    if not extend(0, 0):
        return None
    out = [0] * k
    for pos, p in enumerate(order):
        out[p] = image[pos]
    return tuple(out)


def verify_embedding(host: Graph, pattern: Graph, embedding: Sequence[int]) -> bool:
    if len(embedding) != pattern.n or len(set(embedding)) != pattern.n:
        return False
    for h in embedding:
        host.check_vertex(h)
    for a in range(pattern.n):
        for b in range(a + 1, pattern.n):
            if pattern.adjacent(a, b) != host.adjacent(embedding[a], embedding[b]):
                return False
    return True


@dataclass(frozen=True)
class Corollary2Report:
    found: list[tuple[Pattern, tuple[int, ...]]]
    implied_quasi_line: bool


COROLLARY2_PATTERNS = (claw(), w6(), corollary2_graph())


def corollary2_check(g: Graph) -> Corollary2Report:
    """Search for the claw, the 6-vertex wheel and K1 + (2K1 + (K2 u K1)), in that order.

    If none of them occurs the graph is quasi-line.
    """
    found = []
    for p in COROLLARY2_PATTERNS:
        emb = find_induced(g, build_pattern(p))
        if emb is not None:
            found.append((p, emb))
    return Corollary2Report(found, not found)


def corollary2_consistent(g: Graph) -> bool:
    """False only if the three patterns are absent yet ``quasi_line`` finds an obstruction."""
    report = corollary2_check(g)
    return not report.implied_quasi_line or isinstance(quasi_line(g), QuasiLineCertificate)

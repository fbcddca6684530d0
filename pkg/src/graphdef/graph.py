"""Immutable simple graphs with integer bitrow adjacency.

Row ``adj[v]`` is a Python int whose bit ``w`` is set iff ``vw`` is an edge.
Python ints are arbitrary precision, so graphs beyond 64 vertices work with
the same code path (just slower).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import GraphInputError, SizeLimitError

BANDWIDTH_LIMIT = 16


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    clique_mark: frozenset[int] = field(default_factory=frozenset)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabelled 0..k-1 in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            rows.append(mask_of(index[w] for w in iter_bits(self.adj[v]) if w in index))
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            rows[perm[v]] = mask_of(perm[w] for w in iter_bits(row))
        return Graph(self.n, tuple(rows), frozenset(perm[v] for v in self.clique_mark))

    def check_invariants(self) -> None:
        if len(self.adj) != self.n:
            raise GraphInputError("row count differs from n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"row {v} references a vertex >= n")
            if row >> v & 1:
                raise GraphInputError(f"self-loop at {v}")
            for w in iter_bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency {v}-{w}")
        for v in self.clique_mark:
            if self.adj[v] | (1 << v) != full:
                raise GraphInputError(f"marked clique vertex {v} is not universal")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges}, edges={self.edges()})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on ``range(n)`` with the given edges; duplicates are merged."""
    if n < 0:
        raise GraphInputError("negative vertex count")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge {u}-{v} out of range for n={n}")
        if u == v:
            raise GraphInputError(f"self-loop at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(s: int) -> Graph:
    """K_{1,s} with centre 0."""
    return complete_bipartite(1, s)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


def join(g: Graph, t: int) -> Graph:
    """G*K_t: add ``t`` mutually adjacent vertices joined to every vertex of G.

    The new vertices get labels n..n+t-1 and are recorded in ``clique_mark``
    together with any vertices already marked in ``g``.
    """
    if t < 0:
        raise GraphInputError("t must be non-negative")
    if t == 0:
        return g
    n = g.n
    total = n + t
    full = (1 << total) - 1
    new_bits = full ^ ((1 << n) - 1)
    rows = [row | new_bits for row in g.adj]
    rows.extend(full ^ (1 << v) for v in range(n, total))
    return Graph(total, tuple(rows), g.clique_mark | frozenset(range(n, total)))


def twin_classes(g: Graph) -> list[int]:
    """Mask of strictly lower-indexed twins for each vertex.

    Two vertices are twins when they have the same neighbours apart from each
    other; swapping them is an automorphism. Searches use these masks to
    pick only the lowest free member of a twin class.
    """
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    lower = [0] * g.n
    for v, row in enumerate(g.adj):
        bit = 1 << v
        for key, table in ((row, by_open), (row | bit, by_closed)):
            seen = table.get(key, 0)
            lower[v] |= seen
            table[key] = seen | bit
    return lower


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def independence_number(g: Graph) -> int:
    """Exact alpha(G) by branch and bound over bitrows."""
    return _max_independent(g.adj, (1 << g.n) - 1)


def _max_independent(adj: Sequence[int], cand: int) -> int:
    size = 0
    # Vertices of degree <= 1 inside cand can always be taken greedily.
    while True:
        progressed = False
        for v in iter_bits(cand):
            nb = adj[v] & cand
            if nb.bit_count() <= 1:
                cand &= ~(nb | (1 << v))
                size += 1
                progressed = True
                break
        if not progressed:
            break
    if not cand:
        return size
    v = max(iter_bits(cand), key=lambda u: (adj[u] & cand).bit_count())
    with_v = _max_independent(adj, cand & ~(adj[v] | (1 << v)))
    without_v = _max_independent(adj, cand & ~(1 << v))
    return size + max(1 + with_v, without_v)


def clique_number(g: Graph) -> int:
    return independence_number(g.complement())


def maximum_independent_set(g: Graph) -> list[int]:
    """A maximum independent set, lexicographically least among maxima."""
    target = independence_number(g)
    chosen: list[int] = []
    cand = (1 << g.n) - 1
    for v in range(g.n):
        if not cand >> v & 1:
            continue
        rest = cand & ~(g.adj[v] | (1 << v)) & ~((1 << (v + 1)) - 1)
        if 1 + len(chosen) + _max_independent(g.adj, rest) == target:
            chosen.append(v)
            cand = rest
        else:
            cand &= ~(1 << v)
    return chosen


def is_bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """Return a two-colouring (part of vertex 0 first) or None for odd cycles."""
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in iter_bits(g.adj[v]):
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return [v for v in range(g.n) if colour[v] == 0], [v for v in range(g.n) if colour[v] == 1]


def bandwidth_at_most(g: Graph, b: int) -> tuple[int, ...] | None:
    """Find a labelling ``label[v]`` in 1..n with ``|label[u]-label[v]| <= b`` on edges.

    Exact backtracking over orderings; a vertex leaving the width-``b``
    window must already have all its neighbours placed.
    """
    n = g.n
    if n > BANDWIDTH_LIMIT:
        raise SizeLimitError(f"exact bandwidth limited to n <= {BANDWIDTH_LIMIT}")
    if b < 0:
        return None
    if n == 0:
        return ()
    if b >= n - 1 or g.num_edges == 0:
        return tuple(range(1, n + 1))
    adj = g.adj
    if max(g.degrees()) > 2 * b:
        return None
    order: list[int] = []
    failed: set[tuple[int, tuple[int, ...]]] = set()

    def extend(placed: int) -> bool:
        p = len(order)
        if p == n:
            return True
        key = (placed, tuple(order[-b:]))
        if key in failed:
            return False
        window = mask_of(order[max(0, p - b):])
        for w in range(n):
            if placed >> w & 1:
                continue
            # every placed neighbour of w must sit within distance b
            if adj[w] & placed & ~window:
                continue
            now = placed | (1 << w)
            if p - b >= 0 and adj[order[p - b]] & ~now:
                continue
            order.append(w)
            if extend(now):
                return True
            order.pop()
        failed.add(key)
        return False

    if not extend(0):
        return None
    label = [0] * n
    for pos, v in enumerate(order):
        label[v] = pos + 1
    return tuple(label)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-decreasingly, d_1 <= ... <= d_n."""
    return tuple(sorted(g.degrees()))


def saturated(g: Graph, v: int) -> Graph:
    """Copy of ``g`` with ``v`` joined to every other vertex."""
    full = (1 << g.n) - 1
    rows = list(g.adj)
    rows[v] = full ^ (1 << v)
    bit = 1 << v
    for w in range(g.n):
        if w != v:
            rows[w] |= bit
    return Graph(g.n, tuple(rows), g.clique_mark)


def parse_adjlist(text: str) -> Graph:
    """Parse the fixture format: first line ``n``, then one ``u v`` edge per line.

    Blank lines and ``#`` comments are ignored.
    """
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphInputError("empty adjacency list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphInputError(f"bad adjacency list: {exc}") from None
    return build(n, edges)


def emit_adjlist(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"


def cliques_containing(g: Graph, vertices: Sequence[int], size: int) -> Iterator[tuple[int, ...]]:
    """All cliques of exactly ``size`` vertices that contain ``vertices``."""
    base = mask_of(vertices)
    common = (1 << g.n) - 1
    for v in vertices:
        common &= g.adj[v]
    common &= ~base
    extra = size - len(vertices)
    if extra < 0:
        return
    for combo in combinations(iter_bits(common), extra):
        if all(g.adj[a] >> b & 1 for a, b in combinations(combo, 2)):
            yield tuple(sorted((*vertices, *combo)))

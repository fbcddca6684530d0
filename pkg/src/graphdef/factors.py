"""Exact decision procedures for K_r-factors, H-factors and Hamilton cycles.

Every search returns a :class:`FactorCertificate` or ``None``. Searches are
deterministic: they always branch on the lowest-index uncovered vertex and
try candidates in ascending order. Two reductions keep them fast on joins,
where the K_t vertices are all interchangeable:

* twin symmetry: among free vertices with identical neighbourhoods only the
  lowest one is tried in any given role;
* failure memo: an uncovered set that once failed fails again.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import GraphInputError
from .graph import (
    Graph,
    independence_number,
    is_connected,
    iter_bits,
    mask_of,
    twin_classes,
)

KR = "K_r"
H_TILE = "H"
HAMILTON = "hamilton_cycle"


@dataclass(frozen=True)
class FactorCertificate:
    """Vertex-disjoint tiles covering the graph.

    For ``K_r`` tiles are sorted vertex tuples. For ``H`` tile ``i`` lists the
    image of H's vertices 0..|H|-1 in order. A Hamilton cycle is one tile
    holding the cyclic vertex sequence.
    """

    tiles: tuple[tuple[int, ...], ...]
    kind: str

    def to_json(self) -> str:
        return json.dumps({"kind": self.kind, "tiles": [list(t) for t in self.tiles]})

    @classmethod
    def from_json(cls, text: str) -> FactorCertificate:
        data = json.loads(text)
        return cls(tuple(tuple(t) for t in data["tiles"]), data["kind"])

    def tile_of(self, v: int) -> tuple[int, ...]:
        for tile in self.tiles:
            if v in tile:
                return tile
        raise KeyError(v)


def _free_cliques(
    adj: Sequence[int], lower_twin: Sequence[int], cand: int, size: int, free: int, chosen: int
) -> Iterator[int]:
    """Masks of ``size``-cliques drawn from ``cand``, ascending, twin-reduced."""
    if size == 0:
        yield chosen
        return
    while cand:
        if cand.bit_count() < size:
            return
        low = cand & -cand
        cand ^= low
        w = low.bit_length() - 1
        if lower_twin[w] & free & ~chosen:
            continue
        yield from _free_cliques(adj, lower_twin, cand & adj[w], size - 1, free, chosen | low)


def kr_factor(g: Graph, r: int) -> FactorCertificate | None:
    """Partition V(G) into r-cliques, or return None when impossible."""
    if r < 2:
        raise ValueError("r must be at least 2")
    n = g.n
    if n % r:
        return None
    adj = g.adj
    lower_twin = twin_classes(g)
    failed: set[int] = set()
    need = r - 1

    def solve(free: int) -> list[int] | None:
        if not free:
            return []
        if free in failed:
            return None
        for w in iter_bits(free):
            if (adj[w] & free).bit_count() < need:
                failed.add(free)
                return None
        low = free & -free
        v = low.bit_length() - 1
        rest = free ^ low
        for clique in _free_cliques(adj, lower_twin, adj[v] & rest, need, rest, 0):
            sub = solve(rest & ~clique)
            if sub is not None:
                sub.append(clique | low)
                return sub
        failed.add(free)
        return None

    found = solve((1 << n) - 1)
    if found is None:
        return None
    tiles = sorted(tuple(iter_bits(m)) for m in found)
    return FactorCertificate(tuple(tiles), KR)


def _embedding_order(h: Graph, first: int) -> list[int]:
    """Order H's vertices so each one has as many earlier neighbours as possible."""
    order = [first]
    placed = 1 << first
    while len(order) < h.n:
        best = max(
            (v for v in range(h.n) if not placed >> v & 1),
            key=lambda v: ((h.adj[v] & placed).bit_count(), h.adj[v].bit_count(), -v),
        )
        order.append(best)
        placed |= 1 << best
    return order


def embeddings(
    h: Graph,
    g: Graph,
    allowed: int,
    anchor: tuple[int, int] | None = None,
    lower_twin: Sequence[int] | None = None,
    first: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Injective maps V(H) -> allowed vertices of G preserving H's edges.

    ``anchor=(h_vertex, g_vertex)`` pins one image. Images are yielded as a
    tuple indexed by H's vertices. Free twins of G are tried lowest first, so
    only one representative of each twin-swap class is produced.
    """
    if h.n == 0:
        yield ()
        return
    if lower_twin is None:
        lower_twin = twin_classes(g)
    if anchor is not None:
        first = anchor[0]
    order = _embedding_order(h, first if first is not None else 0)
    hdeg = [h.degree(v) for v in range(h.n)]
    image = [-1] * h.n
    gadj = g.adj
    hadj = h.adj

    def extend(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == len(order):
            yield tuple(image)
            return
        a = order[i]
        if i == 0 and anchor is not None:
            cand = (1 << anchor[1]) & allowed
        else:
            cand = allowed & ~used
            for b in iter_bits(hadj[a]):
                if image[b] >= 0:
                    cand &= gadj[image[b]]
        avail = allowed & ~used
        for w in iter_bits(cand):
            if (gadj[w] & allowed).bit_count() < hdeg[a]:
                continue
            if not (i == 0 and anchor is not None) and lower_twin[w] & avail:
                continue
            image[a] = w
            yield from extend(i + 1, used | (1 << w))
            image[a] = -1

    yield from extend(0, 0)


def find_spanning_copy(h: Graph, g: Graph) -> tuple[int, ...] | None:
    """A copy of H in G using every vertex of G (requires |H| = |G|)."""
    if h.n != g.n or h.num_edges > g.num_edges:
        return None
    hd = sorted(h.degrees(), reverse=True)
    gd = sorted(g.degrees(), reverse=True)
    if any(a > b for a, b in zip(hd, gd)):
        return None
    first = max(range(h.n), key=lambda v: (h.degree(v), -v)) if h.n else None
    return next(embeddings(h, g, (1 << g.n) - 1, first=first), None)


def h_factor(g: Graph, h: Graph) -> FactorCertificate | None:
    """Perfect H-tiling of G, each tile being any copy of H (not necessarily induced)."""
    k = h.n
    if k < 1:
        raise ValueError("H must have at least one vertex")
    if g.n % k:
        return None
    lower_twin = twin_classes(g)
    h_lower = twin_classes(h)
    anchors = [a for a in range(k) if not h_lower[a]]
    need = h.min_degree()
    adj = g.adj
    failed: set[int] = set()

    def solve(free: int) -> list[tuple[int, ...]] | None:
        if not free:
            return []
        if free in failed:
            return None
        if need and any((adj[w] & free).bit_count() < need for w in iter_bits(free)):
            failed.add(free)
            return None
        low = free & -free
        v = low.bit_length() - 1
        tried: set[int] = set()
        for a in anchors:
            for emb in embeddings(h, g, free, anchor=(a, v), lower_twin=lower_twin):
                m = mask_of(emb)
                if m in tried:
                    continue
                tried.add(m)
                sub = solve(free & ~m)
                if sub is not None:
                    sub.append(emb)
                    return sub
        failed.add(free)
        return None

    found = solve((1 << g.n) - 1)
    if found is None:
        return None
    return FactorCertificate(tuple(sorted(found, key=min)), H_TILE)


def hamilton_cycle(g: Graph) -> FactorCertificate | None:
    """Hamilton cycle starting at vertex 0, or None.

    Cut-offs before search: a vertex of degree < 2, disconnection, or an
    independent set larger than n/2. During search every unvisited vertex
    must keep two usable neighbours, and failed (visited set, endpoint)
    states are memoised.
    """
    n = g.n
    if n < 3:
        raise GraphInputError("Hamilton cycles need at least 3 vertices")
    adj = g.adj
    if any(row.bit_count() < 2 for row in adj):
        return None
    if not is_connected(g):
        return None
    if 2 * independence_number(g) > n:
        return None
    full = (1 << n) - 1
    lower_twin = twin_classes(g)
    start = 0
    path = [start]
    failed: set[tuple[int, int]] = set()

    def extend(visited: int, last: int) -> bool:
        if visited == full:
            return bool(adj[last] & 1)
        if (visited, last) in failed:
            return False
        rem = full & ~visited
        if not adj[start] & rem:
            failed.add((visited, last))
            return False
        ends = rem | (1 << last) | 1
        for w in iter_bits(rem):
            if (adj[w] & ends).bit_count() < 2:
                failed.add((visited, last))
                return False
        for w in iter_bits(adj[last] & rem):
            if lower_twin[w] & rem:
                continue
            path.append(w)
            if extend(visited | (1 << w), w):
                return True
            path.pop()
        failed.add((visited, last))
        return False

    if not extend(1, start):
        return None
    return FactorCertificate((tuple(path),), HAMILTON)


def hajnal_szemeredi_guarantee(g: Graph, r: int) -> bool:
    """True iff r | n and delta(G) >= (1 - 1/r) n, which forces a K_r-factor."""
    if r < 2:
        raise ValueError("r must be at least 2")
    n = g.n
    if n % r:
        return False
    return r * g.min_degree() >= (r - 1) * n


def degree_sequence_condition(g: Graph, gamma: Fraction | int | str) -> bool:
    """Check d_i >= i + gamma*n for every 1 <= i < n/2 on the sorted degrees."""
    gamma = Fraction(gamma)
    n = g.n
    degrees = sorted(g.degrees())
    slack = gamma * n
    i = 1
    while 2 * i < n:
        if degrees[i - 1] < i + slack:
            return False
        i += 1
    return True

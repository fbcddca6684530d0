"""Independent validation of factor certificates.

Works from an explicit edge set and never calls into the search code, so a
solver bug cannot hide behind a matching checker bug.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph


def _edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges()}


def _covers_exactly(n: int, tiles) -> bool:
    seen: list[int] = []
    for tile in tiles:
        seen.extend(tile)
    return sorted(seen) == list(range(n))


def validate_kr_factor(g: Graph, tiles, r: int) -> bool:
    if not _covers_exactly(g.n, tiles):
        return False
    edges = _edge_set(g)
    for tile in tiles:
        if len(tile) != r:
            return False
        for a, b in combinations(tile, 2):
            if frozenset((a, b)) not in edges:
                return False
    return True


def validate_h_factor(g: Graph, tiles, h: Graph) -> bool:
    """Each tile maps H's vertex i to ``tile[i]``; H's edges must be edges of G."""
    if not _covers_exactly(g.n, tiles):
        return False
    edges = _edge_set(g)
    h_edges = h.edges()
    for tile in tiles:
        if len(tile) != h.n:
            return False
        for a, b in h_edges:
            if frozenset((tile[a], tile[b])) not in edges:
                return False
    return True


def validate_hamilton_cycle(g: Graph, sequence) -> bool:
    n = g.n
    if n < 3 or sorted(sequence) != list(range(n)):
        return False
    edges = _edge_set(g)
    return all(frozenset((sequence[i], sequence[(i + 1) % n])) in edges for i in range(n))


def validate_spanning_copy(g: Graph, image, h: Graph) -> bool:
    return validate_h_factor(g, [tuple(image)], h)

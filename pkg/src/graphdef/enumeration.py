"""Enumeration of all labelled graphs on n vertices, with optional iso-dedup.

Graph number ``m`` has edge ``ij`` (i < j) iff bit ``j(j-1)/2 + i`` of ``m`` is
set, the same pair order graph6 uses. Index ranges can therefore be split
across workers without coordination.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

from .graph import Graph

ISO_DEDUP_LIMIT = 8


def pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple((i, j) for j in range(1, n) for i in range(j))


def graph_from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    for idx, (i, j) in enumerate(pairs(n)):
        if mask >> idx & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def mask_from_graph(g: Graph) -> int:
    m = 0
    for i, j in g.edges():
        m |= 1 << pair_index(i, j)
    return m


def _refined_colours(n: int, edge_list: list[tuple[int, int]]) -> list[int]:
    """Colour refinement started from degrees; colours are ranks, ordered by degree first."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for i, j in edge_list:
        nbrs[i].append(j)
        nbrs[j].append(i)
    colour = [len(nb) for nb in nbrs]
    while True:
        keys = [(colour[v], tuple(sorted(colour[w] for w in nbrs[v]))) for v in range(n)]
        rank = {k: idx for idx, k in enumerate(sorted(set(keys)))}
        new = [rank[k] for k in keys]
        if len(rank) == len(set(colour)):
            return new
        colour = new


def _class_respecting_perms(colours: list[int]) -> Iterator[list[int]]:
    """Relabellings that send vertices to positions sorted by colour.

    Only permutations within colour classes vary, which keeps the candidate
    set an isomorphism invariant while cutting its size.
    """
    n = len(colours)
    blocks: dict[int, list[int]] = {}
    for v in range(n):
        blocks.setdefault(colours[v], []).append(v)
    ordered = [blocks[c] for c in sorted(blocks)]
    offsets = []
    pos = 0
    for blk in ordered:
        offsets.append(pos)
        pos += len(blk)
    for choice in product(*(permutations(blk) for blk in ordered)):
        perm = [0] * n
        for start, blk in zip(offsets, choice):
            for k, v in enumerate(blk):
                perm[v] = start + k
        yield perm


@lru_cache(maxsize=None)
def _pair_bits(n: int) -> tuple[tuple[int, ...], ...]:
    """bits[a][b] = 1 << pair_index(a, b) for a != b."""
    return tuple(
        tuple(0 if a == b else 1 << pair_index(min(a, b), max(a, b)) for b in range(n))
        for a in range(n)
    )


def _relabelled(bits, edge_list, perm) -> int:
    m = 0
    for i, j in edge_list:
        m |= bits[perm[i]][perm[j]]
    return m


def canonical_mask(n: int, mask: int) -> int:
    """Minimum edge mask over relabellings that sort vertices by refined colour."""
    edge_list = [p for idx, p in enumerate(pairs(n)) if mask >> idx & 1]
    bits = _pair_bits(n)
    return min(
        (_relabelled(bits, edge_list, perm)
         for perm in _class_respecting_perms(_refined_colours(n, edge_list))),
        default=0,
    )


def canonical_form(g: Graph) -> int:
    return canonical_mask(g.n, mask_from_graph(g))


@lru_cache(maxsize=None)
def _incidence_masks(n: int) -> tuple[int, ...]:
    """For each vertex, the mask of pair indices incident to it."""
    rows = [0] * n
    for idx, (i, j) in enumerate(pairs(n)):
        rows[i] |= 1 << idx
        rows[j] |= 1 << idx
    return tuple(rows)


def is_canonical(n: int, mask: int) -> bool:
    """Whether ``mask`` equals :func:`canonical_mask` of itself."""
    # canonical relabellings sort vertices by degree, so degrees must ascend
    prev = -1
    for row in _incidence_masks(n):
        d = (mask & row).bit_count()
        if d < prev:
            return False
        prev = d
    edge_list = [p for idx, p in enumerate(pairs(n)) if mask >> idx & 1]
    colours = _refined_colours(n, edge_list)
    # and so must refined colours, else the identity is not a candidate
    if any(colours[v] > colours[v + 1] for v in range(n - 1)):
        return False
    bits = _pair_bits(n)
    for perm in _class_respecting_perms(colours):
        if _relabelled(bits, edge_list, perm) < mask:
            return False
    return True


def enumerate_masks(
    n: int, iso_dedup: bool = False, start: int = 0, stop: int | None = None
) -> Iterator[int]:
    """Edge masks of all labelled graphs in ``[start, stop)``.

    With ``iso_dedup`` only masks equal to their own canonical form are kept,
    one per isomorphism class.
    """
    total = 1 << (n * (n - 1) // 2)
    stop = total if stop is None else min(stop, total)
    if iso_dedup and n > ISO_DEDUP_LIMIT:
        raise ValueError(f"iso-dedup supported for n <= {ISO_DEDUP_LIMIT}")
    for m in range(start, stop):
        if iso_dedup and not is_canonical(n, m):
            continue
        yield m


def enumerate_graphs(
    n: int, iso_dedup: bool = False, start: int = 0, stop: int | None = None
) -> Iterator[Graph]:
    for m in enumerate_masks(n, iso_dedup, start, stop):
        yield graph_from_mask(n, m)


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)

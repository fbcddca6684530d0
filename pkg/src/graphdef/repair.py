"""Executable forms of the two vertex-modification tricks behind the K_r bound.

Both take a K_r-factor of a modified join G'*K_t and rebuild a K_r-factor
of G*K_t. Choices left open by the arguments ("any u", "any injection") are
made by lowest index so results are deterministic.

Joins follow :func:`graphdef.graph.join`: G occupies 0..n-1 and the clique
K_t occupies n..n+t-1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certify import validate_kr_factor
from .errors import ContractError
from .factors import KR, FactorCertificate
from .graph import Graph, iter_bits, join, mask_of, saturated


def saturate_vertex(g: Graph, v: int) -> Graph:
    """Add every missing edge at ``v`` so that d(v) = n - 1."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph")
    return saturated(g, v)


def _certificate(tiles) -> FactorCertificate:
    return FactorCertificate(tuple(sorted(tuple(sorted(t)) for t in tiles)), KR)


def _tile_size(cert: FactorCertificate) -> int:
    sizes = {len(t) for t in cert.tiles}
    if len(sizes) != 1:
        raise ContractError("certificate tiles have differing sizes")
    return sizes.pop()


def rewire_factor_vertex(
    g: Graph, t: int, v: int, t_prime: FactorCertificate
) -> FactorCertificate:
    return rewire_vertex_with_case(g, t, v, t_prime)[0]


def rewire_vertex_with_case(
    g: Graph, t: int, v: int, t_prime: FactorCertificate
) -> tuple[FactorCertificate, str]:
    """Turn a K_r-factor of saturate_vertex(G, v)*K_t into one of G*K_t.

    Three cases: the tile of v already lives in G*K_t; some tile sits inside
    K_t and trades a vertex with v's tile; otherwise a counting argument
    supplies a tile meeting K_t made only of v's neighbours, which trades
    instead. Requires d_G(v) > n - 1 - ceil((t+1)/(r-1)).

    The second element names the case used: ``"a"``, ``"b"`` or ``"c"``.
    """
    n = g.n
    r = _tile_size(t_prime)
    target = join(g, t)
    if not validate_kr_factor(join(saturate_vertex(g, v), t), t_prime.tiles, r):
        raise ContractError("T' is not a K_r-factor of G'*K_t")
    k = -(-(t + 1) // (r - 1))
    if not g.degree(v) > n - 1 - k:
        raise ContractError(f"d_G({v}) = {g.degree(v)} is outside the degree window")

    tiles = [tuple(tile) for tile in t_prime.tiles]
    clique_mask = ((1 << (n + t)) - 1) ^ ((1 << n) - 1)
    closed_v = target.adj[v] | (1 << v)
    kv = next(tile for tile in tiles if v in tile)
    if mask_of(kv) & ~closed_v == 0:
        return _certificate(tiles), "a"

    def swap(other: tuple[int, ...], u: int) -> FactorCertificate:
        rest = [tile for tile in tiles if tile != kv and tile != other]
        new_v_tile = tuple(w for w in kv if w != v) + (u,)
        new_other = tuple(w for w in other if w != u) + (v,)
        return _certificate(rest + [new_v_tile, new_other])

    inside = [tile for tile in tiles if mask_of(tile) & ~clique_mask == 0]
    if inside:
        other = min(inside, key=min)
        return swap(other, min(other)), "b"

    good = [
        tile
        for tile in tiles
        if tile != kv and mask_of(tile) & clique_mask and mask_of(tile) & ~closed_v == 0
    ]
    if not good:
        raise ContractError("no neighbour-only tile meets K_t; the counting argument failed")
    other = min(good, key=min)
    u = min(w for w in other if clique_mask >> w & 1)
    return swap(other, u), "c"


@dataclass(frozen=True)
class CliqueContext:
    """Clique Q around the edge xy used by the edge transform."""

    q: tuple[int, ...]
    x: int
    y: int
    r: int

    @property
    def ell(self) -> int:
        return len(self.q)


def max_clique_through(g: Graph, x: int, y: int) -> tuple[int, ...]:
    """Lexicographically least maximum-size clique containing x and y."""
    best: tuple[int, ...] = tuple(sorted((x, y)))
    common = g.adj[x] & g.adj[y]

    def grow(chosen: list[int], cand: int) -> None:
        nonlocal best
        if len(chosen) + cand.bit_count() + 2 < len(best):
            return
        clique = tuple(sorted(chosen + [x, y]))
        if len(clique) > len(best) or (len(clique) == len(best) and clique < best):
            best = clique
        for w in iter_bits(cand):
            grow(chosen + [w], cand & g.adj[w] & ~((1 << (w + 1)) - 1))

    grow([], common)
    return best


def edge_in_kr(g: Graph, x: int, y: int, r: int) -> bool:
    return len(max_clique_through(g, x, y)) >= r


def edge_lemma_transform(g: Graph, x: int, y: int, r: int) -> tuple[Graph, CliqueContext]:
    """Cut x off from everything outside Q, then saturate every vertex of Q - x.

    Requires xy to be an edge lying in no K_r. Afterwards d(y) = n - 1,
    Q is still a clique and e(G') >= e(G).
    """
    if not g.has_edge(x, y):
        raise ContractError(f"{x}{y} is not an edge")
    q = max_clique_through(g, x, y)
    if len(q) >= r:
        raise ContractError(f"{x}{y} lies in a K_{r}")
    n = g.n
    full = (1 << n) - 1
    q_mask = mask_of(q)
    rows = list(g.adj)
    for w in iter_bits(rows[x] & ~q_mask):
        rows[x] &= ~(1 << w)
        rows[w] &= ~(1 << x)
    for u in q:
        if u == x:
            continue
        rows[u] = full ^ (1 << u)
        for w in range(n):
            if w != u:
                rows[w] |= 1 << u
    return Graph(n, tuple(rows)), CliqueContext(q, x, y, r)


def clique_injection(n: int, ctx: CliqueContext, t_prime: FactorCertificate) -> dict[int, int]:
    """Ascending injection from Q - V(K^x) into the K_t vertices of K^x."""
    kx = t_prime.tile_of(ctx.x)
    domain = sorted(set(ctx.q) - set(kx))
    codomain = sorted(w for w in kx if w >= n)
    if len(domain) > len(codomain):
        raise ContractError(
            f"|Q - K^x| = {len(domain)} exceeds s = {len(codomain)}; needs ell <= r"
        )
    return dict(zip(domain, codomain))


def rewire_factor_clique(
    g_prime: Graph, t: int, ctx: CliqueContext, t_prime: FactorCertificate
) -> FactorCertificate:
    """Rebuild a K_r-factor of G'*K_t that uses no edge between Q and the rest of G'.

    Such a factor is also a factor of the original G*K_t.
    """
    n = g_prime.n
    r = _tile_size(t_prime)
    if r != ctx.r:
        raise ContractError("certificate tile size differs from context r")
    if not validate_kr_factor(join(g_prime, t), t_prime.tiles, r):
        raise ContractError("T' is not a K_r-factor of G'*K_t")
    kx = t_prime.tile_of(ctx.x)
    if any(w < n and w not in ctx.q for w in kx):
        raise ContractError("tile of x leaves Q in G'")
    f = clique_injection(n, ctx, t_prime)
    q_set = set(ctx.q)
    tiles = []
    for tile in t_prime.tiles:
        if tile == kx:
            continue
        tiles.append(tuple(f.get(w, w) if w in q_set else w for w in tile))
    leftover = [w for w in kx if w >= n and w not in f.values()]
    tiles.append(tuple(ctx.q) + tuple(leftover))
    return _certificate(tiles)

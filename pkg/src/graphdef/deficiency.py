"""def(G): the least t >= 0 such that G*K_t has a given spanning property."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SizeLimitError
from .factors import h_factor, hamilton_cycle, kr_factor
from .graph import Graph, is_bipartite, join

MAX_JOIN_ORDER = 64


@dataclass(frozen=True)
class KrFactor:
    r: int


@dataclass(frozen=True)
class HFactor:
    h: Graph


@dataclass(frozen=True)
class Hamiltonicity:
    pass


Property = KrFactor | HFactor | Hamiltonicity


@dataclass(frozen=True)
class DeficiencyQuery:
    prop: Property
    graph: Graph
    t_cap: int | None = None

    def __post_init__(self) -> None:
        if isinstance(self.prop, KrFactor) and self.prop.r < 3:
            raise ValueError("K_r-factor deficiency needs r >= 3")
        if isinstance(self.prop, HFactor) and self.prop.h.n < 1:
            raise ValueError("H must have at least one vertex")
        if self.t_cap is not None and self.t_cap < 0:
            raise ValueError("t_cap must be non-negative")


def has_property(prop: Property, g: Graph) -> bool:
    if isinstance(prop, KrFactor):
        return kr_factor(g, prop.r) is not None
    if isinstance(prop, HFactor):
        return h_factor(g, prop.h) is not None
    if g.n < 3:
        return False
    return hamilton_cycle(g) is not None


def default_t_cap(prop: Property, n: int) -> int:
    """A t at which G*K_t has the property whatever G is.

    K_r: (r-1)n, where each vertex of G takes r-1 clique partners.
    Hamiltonicity: n (each vertex of G sits between two clique vertices),
    raised to 3 - n for tiny graphs. Bipartite H: the first t >= n-1 with
    |H| | n+t (smaller colour classes go into K_t). Other H: (|H|-1)n.
    """
    if isinstance(prop, KrFactor):
        return (prop.r - 1) * n
    if isinstance(prop, Hamiltonicity):
        return max(n, 3 - n)
    k = prop.h.n
    if is_bipartite(prop.h) is not None:
        t = max(n - 1, 0)
        while (n + t) % k:
            t += 1
        return t
    return (k - 1) * n


def _candidate_ts(prop: Property, n: int, cap: int) -> range:
    if isinstance(prop, KrFactor):
        return range((-n) % prop.r, cap + 1, prop.r)
    if isinstance(prop, HFactor):
        return range((-n) % prop.h.n, cap + 1, prop.h.n)
    return range(0, cap + 1)


def deficiency_monotone_step(q: DeficiencyQuery, t: int) -> bool:
    """Whether G*K_t has a K_r-factor.

    Yes at t implies yes at t + r: the r extra clique vertices form one more
    tile. This is what lets :func:`deficiency` stop at the first success.
    """
    if not isinstance(q.prop, KrFactor):
        raise ValueError("monotone step is defined for K_r-factors")
    return kr_factor(join(q.graph, t), q.prop.r) is not None


def deficiency(q: DeficiencyQuery) -> int:
    """Scan t upwards (within the residue class for factors) and stop at the first success."""
    n = q.graph.n
    cap = default_t_cap(q.prop, n) if q.t_cap is None else q.t_cap
    for t in _candidate_ts(q.prop, n, cap):
        if n + t > MAX_JOIN_ORDER:
            raise SizeLimitError(f"G*K_{t} has {n + t} vertices, above the limit {MAX_JOIN_ORDER}")
        if has_property(q.prop, join(q.graph, t)):
            return t
    raise SizeLimitError(f"no t <= {cap} gives the property")

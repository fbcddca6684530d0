"""Extremal graphs for the K_r-factor, bandwidth and star-factor deficiency problems.

Vertex placement is fixed so certificates are reproducible: the removed
clique A (or the isolated set B) comes first, then the dominating set C,
then the rest of the clique.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import ParameterError
from .graph import Graph, independence_number


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class RFactorParams:
    """(n, t, r) for the K_r-factor problem, with derived k and q."""

    n: int
    t: int
    r: int

    @property
    def k(self) -> int:
        return _ceil_div(self.t + 1, self.r - 1)

    @property
    def q(self) -> int:
        return self.t % (self.r - 1)

    @property
    def c(self) -> int:
        """Size of the dominating set C in the second construction."""
        return self.r - 2 - self.q

    def problems(self) -> list[str]:
        n, t, r = self.n, self.t, self.r
        out = []
        if r < 3:
            out.append("r >= 3 required")
        if n < 2:
            out.append("n >= 2 required")
        if t < 0:
            out.append("t >= 0 required")
        if r >= 2 and t >= (r - 1) * n:
            out.append("t < (r-1)n required")
        if r >= 1 and (n + t) % r:
            out.append("r | n+t required")
        return out

    @property
    def valid(self) -> bool:
        return not self.problems()

    def check(self) -> None:
        issues = self.problems()
        if issues:
            raise ParameterError(f"{self}: " + "; ".join(issues))

    def as_dict(self) -> dict[str, int]:
        return {"n": self.n, "t": self.t, "r": self.r}


def valid_t_values(n: int, r: int) -> list[int]:
    """All t with 0 <= t < (r-1)n and r | n+t."""
    return [t for t in range(0, (r - 1) * n) if (n + t) % r == 0]


def _remove_clique(n: int, a: int) -> Graph:
    """K_n with the edges among vertices 0..a-1 deleted."""
    full = (1 << n) - 1
    a_mask = (1 << a) - 1
    rows = []
    for v in range(n):
        row = full ^ (1 << v)
        if v < a:
            row &= ~a_mask
        rows.append(row)
    return Graph(n, tuple(rows))


def ex1_factor(p: RFactorParams) -> Graph:
    """K_n minus the edges of a clique on (n+t)/r + 1 vertices (vertices 0..a-1)."""
    p.check()
    return _remove_clique(p.n, (p.n + p.t) // p.r + 1)


def ex2_factor(p: RFactorParams) -> Graph:
    """Isolated set B (0..k-1) plus a clique on the rest, with C dominating everything."""
    p.check()
    k, c, n = p.k, p.c, p.n
    if k + c > n:
        raise ParameterError(f"{p}: |B| + |C| = {k + c} exceeds n")
    return _isolated_plus_clique(n, k, c)


def _isolated_plus_clique(n: int, b: int, c: int) -> Graph:
    full = (1 << n) - 1
    b_mask = (1 << b) - 1
    c_mask = ((1 << (b + c)) - 1) ^ b_mask
    rows = []
    for v in range(n):
        if v < b:
            row = c_mask
        elif v < b + c:
            row = full ^ (1 << v)
        else:
            row = (full ^ b_mask ^ (1 << v)) & full
        rows.append(row)
    return Graph(n, tuple(rows))


def ex1_band(n: int, t: int) -> Graph:
    """K_n minus the edges of a clique on ceil((n+t)/2) + 1 vertices."""
    half = _ceil_div(n + t, 2)
    if t < 0 or not half < n:
        raise ParameterError(f"ex1_band needs t >= 0 and ceil((n+t)/2) < n, got n={n}, t={t}")
    return _remove_clique(n, half + 1)


def ex2_band(n: int, t: int) -> Graph:
    """t isolated vertices (0..t-1) next to a clique on n - t vertices."""
    if not 0 <= t <= n:
        raise ParameterError(f"ex2_band needs 0 <= t <= n, got n={n}, t={t}")
    return _isolated_plus_clique(n, t, 0)


def ex_h_removed_size(n: int, t: int, alpha: int, order: int) -> int:
    num = alpha * (n + t)
    if num % order:
        raise ParameterError(f"alpha(H)(n+t)/|H| = {num}/{order} is not an integer")
    a = num // order + 1
    if a > n:
        raise ParameterError(f"removed clique of size {a} does not fit in n={n}")
    return a


def ex_h(n: int, t: int, h: Graph) -> Graph:
    """K_n minus a clique on alpha(H)(n+t)/|H| + 1 vertices."""
    if t < 0 or n < 1:
        raise ParameterError("need n >= 1 and t >= 0")
    a = ex_h_removed_size(n, t, independence_number(h), h.n)
    return _remove_clique(n, a)


def ex_h_prime(n: int, t: int, s: int) -> Graph:
    """ex_h for H = K_{1,s} plus the matching 01, 23, ... inside the removed set A."""
    if s < 1:
        raise ParameterError("s >= 1 required")
    if t < 0 or n < 1:
        raise ParameterError("need n >= 1 and t >= 0")
    a = ex_h_removed_size(n, t, s, s + 1)
    base = _remove_clique(n, a)
    rows = list(base.adj)
    for i in range(0, a - 1, 2):
        rows[i] |= 1 << (i + 1)
        rows[i + 1] |= 1 << i
    return Graph(n, tuple(rows))


def ex1_factor_edges(p: RFactorParams) -> int:
    return comb(p.n, 2) - comb((p.n + p.t) // p.r + 1, 2)


def ex2_factor_edges(p: RFactorParams) -> int:
    return comb(p.n, 2) - comb(p.k, 2) - p.k * (p.n - p.k - p.c)


def ex1_band_edges(n: int, t: int) -> int:
    return comb(n, 2) - comb(_ceil_div(n + t, 2) + 1, 2)


def ex2_band_edges(n: int, t: int) -> int:
    return comb(n, 2) - (t * (n - 1) - comb(t, 2))

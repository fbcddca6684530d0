"""Closed-form edge bounds and the auxiliary quantities used in their proofs.

Everything is exact: integers where the formula is integral, ``Fraction``
otherwise. Evaluators accept parameters outside a theorem's hypotheses and
report that through ``hypothesis_ok`` instead of raising, so sweeps can probe
the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .constructions import RFactorParams, _ceil_div

EX1 = "EX1"
EX2 = "EX2"

Number = int | Fraction


def _exact(x: Fraction | int) -> Number:
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def binom2(x: Fraction | int) -> Fraction:
    """x choose 2 for rational x."""
    x = Fraction(x)
    return x * (x - 1) / 2


@dataclass(frozen=True)
class BoundResult:
    value: Number
    side: str
    params: dict = field(default_factory=dict)
    hypothesis_ok: bool = True
    terms: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        def enc(v):
            return v if isinstance(v, int) else str(v)

        return {
            "value": enc(self.value),
            "side": self.side,
            "params": {k: enc(v) for k, v in self.params.items()},
            "hypothesis_ok": self.hypothesis_ok,
            "terms": {k: enc(v) for k, v in self.terms.items()},
        }


def kr_terms(p: RFactorParams) -> tuple[Number, Number]:
    """The two terms of the K_r-factor bound (EX1 side, EX2 side)."""
    n, t, r = p.n, p.t, p.r
    first = comb(n, 2) - binom2(Fraction(n + t, r) + 1)
    second = comb(n, 2) - comb(p.k, 2) - p.k * (n - p.k - p.c)
    return _exact(first), _exact(second)


def kr_bound(p: RFactorParams) -> BoundResult:
    """Largest e(G) with G*K_t free of a K_r-factor; ties are reported as EX1."""
    first, second = kr_terms(p)
    side = EX1 if first >= second else EX2
    return BoundResult(
        value=max(first, second),
        side=side,
        params={**p.as_dict(), "k": p.k, "q": p.q},
        hypothesis_ok=p.valid,
        terms={EX1: first, EX2: second},
    )


def triangle_bound(n: int, t: int) -> BoundResult:
    """The K_3-factor bound valid for t <= n/1000 and n large."""
    k = _ceil_div(t + 1, 2)
    tail = k * (n - k) if t % 2 else k * (n - k - 1)
    value = comb(n, 2) - comb(k, 2) - tail
    ok = (n + t) % 3 == 0 and 0 <= 1000 * t <= n
    return BoundResult(value, EX2, {"n": n, "t": t, "k": k}, ok, {EX2: value})


def hamilton_bound(n: int, t: int) -> BoundResult:
    """Largest e(G) with G*K_t non-Hamiltonian, piecewise in the parity of n+t."""
    missing_ex2 = t * (n - 1) - comb(t, 2)
    if (n + t) % 2 == 0:
        cut = n + 4
        missing_ex1 = comb((n + t + 2) // 2, 2) - 1
    else:
        cut = n + 1
        missing_ex1 = comb((n + t + 1) // 2, 2)
    if 5 * t <= cut:
        value, side = comb(n, 2) - missing_ex2, EX2
    else:
        value, side = comb(n, 2) - missing_ex1, EX1
    ok = n >= 1 and t >= 0 and n + t >= 3
    return BoundResult(
        value,
        side,
        {"n": n, "t": t},
        ok,
        {EX1: comb(n, 2) - missing_ex1, EX2: comb(n, 2) - missing_ex2},
    )


def bandwidth_bound(n: int, t: int, eps: Fraction | int | str) -> BoundResult:
    """Edge bound for bipartite bounded-degree small-bandwidth spanning graphs."""
    eps = Fraction(eps)
    slack = eps * n * n
    ex2_term = comb(n, 2) - (t * (n - 1) - comb(t, 2) - slack)
    ex1_term = comb(n, 2) - (comb(_ceil_div(n + t, 2) + 1, 2) - slack)
    if 5 * t <= n:
        value, side = ex2_term, EX2
    else:
        value, side = ex1_term, EX1
    return BoundResult(
        _exact(value),
        side,
        {"n": n, "t": t, "eps": _exact(eps)},
        eps > 0 and t >= 0,
        {EX1: _exact(ex1_term), EX2: _exact(ex2_term)},
    )


@dataclass(frozen=True)
class TechnicalQuantities:
    g: Fraction
    f1: Fraction
    f2: Fraction


def technical_quantities(n: int, r: int) -> TechnicalQuantities:
    """g = n - r - n/r, f1 = n(r-1)/(2r^2-2r+1) - r, f2 = n(r-1) - r^2."""
    g = n - r - Fraction(n, r)
    f1 = Fraction(n * (r - 1), 2 * r * r - 2 * r + 1) - r
    f2 = Fraction(n * (r - 1) - r * r)
    return TechnicalQuantities(g, f1, f2)


def proof_quadratic(i: int | Fraction, n: int, t: int, gamma: Fraction | int | str) -> Fraction:
    """Lower bound on missing edges of G*K_t given d_i < i + gamma(n+t).

    f(i) = i((1 - 2 gamma)(n + t) - i) - C(i, 2), concave in i.
    """
    gamma = Fraction(gamma)
    i = Fraction(i)
    return i * ((1 - 2 * gamma) * (n + t) - i) - binom2(i)


def ex1_dominance_threshold(n: int, r: int) -> Fraction:
    """((r-1)n - r^2) / (2r^2 - 2r + 1).

    When (r-1) | (t+1) and t+1 < (r-1)(n-1), the EX1 term of the K_r bound is
    at most the EX2 term exactly when t is at most this value.
    """
    return Fraction((r - 1) * n - r * r, 2 * r * r - 2 * r + 1)

"""Exhaustive desk-scale verification of the edge bounds and their extremal graphs.

Each sweep returns a :class:`VerificationReport`. Work is split into index
ranges of the labelled-graph enumeration, so a process pool can share it;
counterexample lists are sorted before reporting, so the worker count
changes only the elapsed time.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from . import bounds
from .certify import validate_kr_factor
from .constructions import (
    RFactorParams,
    ex1_band,
    ex1_band_edges,
    ex1_factor,
    ex1_factor_edges,
    ex2_band,
    ex2_band_edges,
    ex2_factor,
    ex2_factor_edges,
    valid_t_values,
)
from .enumeration import is_canonical, graph_count, graph_from_mask
from .errors import ContractError, ParameterError, SizeLimitError
from .factors import KR, FactorCertificate, find_spanning_copy, hamilton_cycle, kr_factor
from .graph import Graph, build, cycle, independence_number, is_bipartite, join, mask_of
from .graph6 import emit_graph6
from . import repair

KR_LABELLED_LIMIT = 7
HAMILTON_LIMIT = 7
HCLASS_LIMIT = 12
CHUNK = 4096

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "VerificationReport",
    "type": "object",
    "required": ["task", "params", "graphs_checked", "counterexamples", "elapsed", "verdict"],
    "properties": {
        "task": {"type": "string"},
        "params": {"type": "object"},
        "graphs_checked": {"type": "integer", "minimum": 0},
        "counterexamples": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind"],
                "properties": {"kind": {"type": "string"}, "g6": {"type": "string"}},
            },
        },
        "elapsed": {"type": "number", "minimum": 0},
        "verdict": {"enum": ["pass", "fail"]},
        "details": {"type": "object"},
    },
    "additionalProperties": False,
}


@dataclass
class VerificationReport:
    task: str
    params: dict
    graphs_checked: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "fail" if self.counterexamples else "pass"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "task": self.task,
            "params": self.params,
            "graphs_checked": self.graphs_checked,
            "counterexamples": sorted(self.counterexamples, key=_cx_key),
            "elapsed": round(self.elapsed, 6) if timing else 0.0,
            "verdict": self.verdict,
            "details": self.details,
        }
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        rep = cls(
            task=data["task"],
            params=data["params"],
            graphs_checked=data["graphs_checked"],
            counterexamples=list(data["counterexamples"]),
            elapsed=data["elapsed"],
            details=data.get("details", {}),
        )
        if rep.verdict != data["verdict"]:
            raise ValueError("verdict inconsistent with counterexamples")
        return rep


def _cx_key(cx: dict) -> str:
    return json.dumps(cx, sort_keys=True)


def _map(func: Callable, tasks: list, threads: int) -> Iterable:
    if threads <= 1 or len(tasks) <= 1:
        return map(func, tasks)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, tasks))


def _ranges(n: int, threads: int) -> list[tuple[int, int]]:
    total = graph_count(n)
    if threads <= 1:
        return [(0, total)]
    return [(lo, min(lo + CHUNK, total)) for lo in range(0, total, CHUNK)]


# ---------------------------------------------------------------------------
# K_r-factor bound


def _kr_chunk(task: tuple) -> tuple[int, list[int]]:
    n, t, r, bound, lo, hi, iso = task
    checked = 0
    bad = []
    for m in range(lo, hi):
        if m.bit_count() <= bound:
            continue
        if iso and not is_canonical(n, m):
            continue
        checked += 1
        if kr_factor(join(graph_from_mask(n, m), t), r) is None:
            bad.append(m)
    return checked, bad


def verify_kr_theorem(
    n_max: int,
    r: int,
    iso_dedup: bool = False,
    threads: int = 1,
    n_min: int = 2,
    sharpness: bool = True,
) -> VerificationReport:
    """Every G with e(G) above the bound has a K_r-factor in G*K_t.

    Also checks that both extremal graphs joined with K_t have no K_r-factor
    and that their edge counts match the closed forms.
    """
    if n_max > KR_LABELLED_LIMIT and not iso_dedup:
        raise SizeLimitError(f"labelled K_r sweeps limited to n <= {KR_LABELLED_LIMIT}")
    start = time.perf_counter()
    report = VerificationReport(
        "kr", {"n_min": n_min, "n_max": n_max, "r": r, "iso_dedup": iso_dedup}
    )
    cases = []
    for n in range(n_min, n_max + 1):
        for t in valid_t_values(n, r):
            p = RFactorParams(n, t, r)
            bound = bounds.kr_bound(p).value
            tasks = [(n, t, r, bound, lo, hi, iso_dedup) for lo, hi in _ranges(n, threads)]
            checked = 0
            for c, bad in _map(_kr_chunk, tasks, threads):
                checked += c
                for m in bad:
                    g = graph_from_mask(n, m)
                    report.counterexamples.append(
                        {"kind": "bound", "g6": emit_graph6(g), "n": n, "t": t, "r": r,
                         "edges": g.num_edges, "bound": bound}
                    )
            report.graphs_checked += checked
            cases.append({"n": n, "t": t, "bound": bound, "checked": checked})
            if sharpness:
                report.graphs_checked += _kr_sharpness(p, report.counterexamples)
    report.details = {"cases": cases}
    report.elapsed = time.perf_counter() - start
    return report


def _kr_sharpness(p: RFactorParams, out: list[dict]) -> int:
    checked = 0
    for name, build_fn, formula in (
        ("EX1", ex1_factor, ex1_factor_edges),
        ("EX2", ex2_factor, ex2_factor_edges),
    ):
        try:
            g = build_fn(p)
        except ParameterError:
            continue
        checked += 1
        base = {"g6": emit_graph6(g), **p.as_dict()}
        if g.num_edges != formula(p):
            out.append({"kind": f"edges-{name}", **base, "edges": g.num_edges})
        if kr_factor(join(g, p.t), p.r) is not None:
            out.append({"kind": f"sharpness-{name}", **base})
    return checked


# ---------------------------------------------------------------------------
# Hamiltonicity bound


def _ham_chunk(task: tuple) -> tuple[int, list[int]]:
    n, t, bound, lo, hi, iso = task
    checked = 0
    bad = []
    for m in range(lo, hi):
        if m.bit_count() <= bound:
            continue
        if iso and not is_canonical(n, m):
            continue
        checked += 1
        if hamilton_cycle(join(graph_from_mask(n, m), t)) is None:
            bad.append(m)
    return checked, bad


def in_h1(h: Graph) -> bool:
    """Bipartite with independence number exactly ceil(|H|/2)."""
    return is_bipartite(h) is not None and independence_number(h) == -(-h.n // 2)


def has_tripartition(h: Graph, n: int, t: int) -> bool:
    """V(H) = A + B + C with |A| = n-t, |B| = |C| = t and N(C) inside B."""
    if h.n != n + t or t > n:
        return False
    for c in combinations(range(h.n), t):
        c_mask = mask_of(c)
        nbrs = 0
        for v in c:
            nbrs |= h.adj[v]
        if nbrs & c_mask:
            continue
        if nbrs.bit_count() <= t:
            return True
    return False


def in_h2(h: Graph, n: int, t: int) -> bool:
    return is_bipartite(h) is not None and h.n == n + t and not has_tripartition(h, n, t)


def verify_hamilton_theorem(
    n_max: int, iso_dedup: bool = False, threads: int = 1, n_min: int = 1
) -> VerificationReport:
    """Every G with e(G) above the bound has a Hamiltonian join G*K_t (0 <= t <= n)."""
    if n_max > HAMILTON_LIMIT and not iso_dedup:
        raise SizeLimitError(f"labelled Hamilton sweeps limited to n <= {HAMILTON_LIMIT}")
    start = time.perf_counter()
    report = VerificationReport("hamilton", {"n_min": n_min, "n_max": n_max, "iso_dedup": iso_dedup})
    cases = []
    for n in range(n_min, n_max + 1):
        for t in range(0, n + 1):
            if n + t < 3:
                continue
            res = bounds.hamilton_bound(n, t)
            tasks = [(n, t, res.value, lo, hi, iso_dedup) for lo, hi in _ranges(n, threads)]
            checked = 0
            for c, bad in _map(_ham_chunk, tasks, threads):
                checked += c
                for m in bad:
                    g = graph_from_mask(n, m)
                    report.counterexamples.append(
                        {"kind": "bound", "g6": emit_graph6(g), "n": n, "t": t,
                         "edges": g.num_edges, "bound": res.value}
                    )
            report.graphs_checked += checked
            sharp = _hamilton_sharpness(n, t, report.counterexamples)
            report.graphs_checked += len(sharp)
            cases.append({"n": n, "t": t, "bound": res.value, "branch": res.side,
                          "checked": checked, "sharpness": sharp})
    report.details = {"cases": cases}
    report.elapsed = time.perf_counter() - start
    return report


def _hamilton_sharpness(n: int, t: int, out: list[dict]) -> list[str]:
    """Check the bandwidth constructions wherever the Hamilton cycle is in their class."""
    done = []
    ham = cycle(n + t)
    if in_h1(ham):
        try:
            g = ex1_band(n, t)
        except ParameterError:
            g = None
        if g is not None:
            done.append("EX1")
            if g.num_edges != ex1_band_edges(n, t):
                out.append({"kind": "edges-EX1", "g6": emit_graph6(g), "n": n, "t": t})
            if hamilton_cycle(join(g, t)) is not None:
                out.append({"kind": "sharpness-EX1", "g6": emit_graph6(g), "n": n, "t": t})
    if t <= n and in_h2(ham, n, t):
        g = ex2_band(n, t)
        done.append("EX2")
        if g.num_edges != ex2_band_edges(n, t):
            out.append({"kind": "edges-EX2", "g6": emit_graph6(g), "n": n, "t": t})
        if hamilton_cycle(join(g, t)) is not None:
            out.append({"kind": "sharpness-EX2", "g6": emit_graph6(g), "n": n, "t": t})
    return done


# ---------------------------------------------------------------------------
# Bipartite classes H_1 / H_2


def verify_h_classes(n: int, t: int, h: Graph) -> VerificationReport:
    """No spanning copy of H in EX_1(n,t)*K_t when H is in H_1, and likewise for H_2/EX_2."""
    if n + t > HCLASS_LIMIT:
        raise SizeLimitError(f"class verification limited to n + t <= {HCLASS_LIMIT}")
    if h.n != n + t:
        raise ParameterError(f"H has {h.n} vertices, expected n + t = {n + t}")
    start = time.perf_counter()
    report = VerificationReport("hclasses", {"n": n, "t": t, "h_g6": emit_graph6(h)})
    member = {"H1": in_h1(h), "H2": in_h2(h, n, t)}
    if not any(member.values()):
        raise ParameterError("H lies in neither H_1 nor H_2")
    checked = []
    for name, in_class, build_fn in (("H1", member["H1"], ex1_band), ("H2", member["H2"], ex2_band)):
        if not in_class:
            continue
        try:
            g = join(build_fn(n, t), t)
        except ParameterError:
            continue
        report.graphs_checked += 1
        checked.append(name)
        image = find_spanning_copy(h, g)
        if image is not None:
            report.counterexamples.append(
                {"kind": f"contains-{name}", "g6": emit_graph6(g), "n": n, "t": t,
                 "image": list(image)}
            )
    report.details = {"membership": member, "checked": checked}
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Technical lemma (pure integer arithmetic)


def lemma43_hypotheses(n: int, t: int, r: int) -> bool:
    return (
        n >= 3
        and r >= 3
        and t >= 0
        and (t + 1) % (r - 1) == 0
        and (n + t) % r == 0
        and t + 1 < (r - 1) * (n - 1)
    )


def verify_lemma43(n_max: int, r_max: int) -> VerificationReport:
    """Sweep the lemma's parameter triples and every identity its proof relies on."""
    start = time.perf_counter()
    report = VerificationReport("lemma43", {"n_max": n_max, "r_max": r_max})
    bad = report.counterexamples
    triples = 0
    for r in range(3, r_max + 1):
        for n in range(3, n_max + 1):
            tq = bounds.technical_quantities(n, r)
            if tq.f1 > tq.g:
                bad.append({"kind": "f1>g", "n": n, "r": r})
            for t in range((r - 1) * n):
                if not lemma43_hypotheses(n, t, r):
                    continue
                triples += 1
                small = RFactorParams(n - 1, t + 1, r)
                big = RFactorParams(n, t, r)
                e1s, e2s = ex1_factor_edges(small), ex2_factor_edges(small)
                e2b = ex2_factor_edges(big)
                claim = e2s + (n - 1) <= e2b
                case = {"n": n, "t": t, "r": r}
                if e1s < e2s and not claim:
                    bad.append({"kind": "implication", **case})
                if claim != (t <= tq.g):
                    bad.append({"kind": "g-equivalence", **case})
                if (e2s <= e1s) != (tq.f1 <= t <= tq.f2):
                    bad.append({"kind": "f-equivalence", **case})
                if t > tq.f2:
                    bad.append({"kind": "t>f2", **case})
                family = (r - 1) * (n - 1) - 1 - t
                if family % (r * (r - 1)) or family // (r * (r - 1)) < 1:
                    bad.append({"kind": "solution-family", **case})
    report.graphs_checked = triples
    report.elapsed = time.perf_counter() - start
    return report


# ---------------------------------------------------------------------------
# Randomised repair-transform soundness


def random_factor(g: Graph, r: int, rng: random.Random):
    """A K_r-factor found after a random relabelling, mapped back; None if none exists."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    cert = kr_factor(g.relabel(perm), r)
    if cert is None:
        return None
    inverse = [0] * g.n
    for v, p in enumerate(perm):
        inverse[p] = v
    tiles = sorted(tuple(sorted(inverse[w] for w in tile)) for tile in cert.tiles)
    return FactorCertificate(tuple(tiles), KR)


def _random_graph(n: int, rng: random.Random) -> Graph:
    p = rng.uniform(0.3, 0.95)
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def _pick_nt(rng: random.Random, r: int, n_max: int, t_max: int) -> tuple[int, int]:
    while True:
        n = rng.randint(2, n_max)
        ts = [t for t in range(t_max + 1) if (n + t) % r == 0]
        if ts:
            return n, rng.choice(ts)


def _vertex_instance(rng: random.Random, r: int, n_max: int, t_max: int):
    n, t = _pick_nt(rng, r, n_max, t_max)
    g = _random_graph(n, rng)
    v = rng.randrange(n)
    k = -(-(t + 1) // (r - 1))
    low = max(0, n - k)
    d = rng.randint(min(low, n - 1), n - 1)
    others = [w for w in range(n) if w != v]
    keep = set(rng.sample(others, d))
    edges = [(a, b) for a, b in g.edges() if v not in (a, b)]
    edges += [(v, w) for w in keep]
    g = build(n, edges)
    cert = random_factor(join(repair.saturate_vertex(g, v), t), r, rng)
    if cert is None:
        return None
    return g, t, v, cert


def _edge_instance(rng: random.Random, r: int, n_max: int, t_max: int):
    n, t = _pick_nt(rng, r, n_max, t_max)
    g = _random_graph(n, rng)
    free = [(x, y) for x, y in g.edges() if not repair.edge_in_kr(g, x, y, r)]
    if not free:
        return None
    x, y = rng.choice(free)
    if rng.random() < 0.5:
        x, y = y, x
    g2, ctx = repair.edge_lemma_transform(g, x, y, r)
    cert = random_factor(join(g2, t), r, rng)
    if cert is None:
        return None
    return g, g2, t, ctx, cert


def verify_repair(
    samples: int, seed: int = 0, r: int = 3, n_max: int = 10, t_max: int = 4
) -> VerificationReport:
    """Random instances of both rewiring procedures; outputs must validate on G*K_t."""
    start = time.perf_counter()
    rng = random.Random(seed)
    report = VerificationReport(
        "repair", {"samples": samples, "seed": seed, "r": r, "n_max": n_max, "t_max": t_max}
    )
    cases = {"a": 0, "b": 0, "c": 0}
    skipped = {"vertex": 0, "edge": 0}
    done = 0
    while done < samples:
        inst = _vertex_instance(rng, r, n_max, t_max)
        if inst is None:
            skipped["vertex"] += 1
            continue
        g, t, v, cert = inst
        done += 1
        try:
            out, case = repair.rewire_vertex_with_case(g, t, v, cert)
            cases[case] += 1
            if not validate_kr_factor(join(g, t), out.tiles, r):
                report.counterexamples.append(
                    {"kind": "vertex-invalid", "g6": emit_graph6(g), "t": t, "v": v,
                     "certificate": [list(x) for x in cert.tiles]}
                )
        except ContractError as exc:
            report.counterexamples.append(
                {"kind": "vertex-contract", "g6": emit_graph6(g), "t": t, "v": v,
                 "error": str(exc), "certificate": [list(x) for x in cert.tiles]}
            )
    edge_done = 0
    boundary_free = 0
    while edge_done < samples:
        inst = _edge_instance(rng, r, n_max, t_max)
        if inst is None:
            skipped["edge"] += 1
            continue
        g, g2, t, ctx, cert = inst
        edge_done += 1
        try:
            out = repair.rewire_factor_clique(g2, t, ctx, cert)
            ok = validate_kr_factor(join(g, t), out.tiles, r)
            q = set(ctx.q)
            crosses = any(
                (a in q) != (b in q) and a < g.n and b < g.n
                for tile in out.tiles for a, b in combinations(tile, 2)
            )
            if not crosses:
                boundary_free += 1
            if not ok or crosses:
                report.counterexamples.append(
                    {"kind": "edge-invalid", "g6": emit_graph6(g), "t": t, "x": ctx.x, "y": ctx.y,
                     "certificate": [list(x) for x in cert.tiles]}
                )
        except ContractError as exc:
            report.counterexamples.append(
                {"kind": "edge-contract", "g6": emit_graph6(g), "t": t, "x": ctx.x, "y": ctx.y,
                 "error": str(exc), "certificate": [list(x) for x in cert.tiles]}
            )
    report.graphs_checked = done + edge_done
    report.details = {"vertex_cases": cases, "skipped": skipped, "edge_boundary_free": boundary_free}
    report.elapsed = time.perf_counter() - start
    return report

"""Acceptance criteria 1-8, one PASS/FAIL line each.

Lines are printed with capture disabled so they show up in a plain
``pytest -v`` run.
"""

import time
from itertools import combinations, permutations

import pytest

from graphdef.bounds import technical_quantities
from graphdef.certify import validate_h_factor, validate_hamilton_cycle, validate_kr_factor
from graphdef.constructions import (
    RFactorParams,
    ex1_factor,
    ex1_factor_edges,
    ex2_factor,
    ex2_factor_edges,
    ex_h,
    ex_h_prime,
    ex_h_removed_size,
    valid_t_values,
)
from graphdef.enumeration import graph_count, graph_from_mask, pair_index, pairs
from graphdef.errors import ParameterError
from graphdef.factors import h_factor, hajnal_szemeredi_guarantee, hamilton_cycle, kr_factor
from graphdef.graph import Graph, join, star
from graphdef.verify import (
    verify_hamilton_theorem,
    verify_kr_theorem,
    verify_lemma43,
    verify_repair,
)
from oracles import kr_oracle


@pytest.fixture
def say(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")

    return emit


def test_criterion_1_kr_sweep(say):
    start = time.perf_counter()
    small = verify_kr_theorem(5, 3)
    t_small = time.perf_counter() - start
    start = time.perf_counter()
    six = verify_kr_theorem(6, 3, n_min=6)
    t_six = time.perf_counter() - start
    ok = small.passed and six.passed and t_small < 60 and t_six < 600
    say(1, ok, f"r=3 n<=5: {small.graphs_checked} graphs, {len(small.counterexamples)} "
               f"counterexamples, {t_small:.1f}s (<60s); n=6: {six.graphs_checked} graphs, "
               f"{len(six.counterexamples)} counterexamples, {t_six:.1f}s (<600s)")
    assert ok


def test_criterion_2_sharpness(say):
    checked = 0
    failures = []
    for r in (3, 4):
        for n in range(2, 16):
            for t in valid_t_values(n, r):
                if n + t > 15:
                    continue
                p = RFactorParams(n, t, r)
                for name, build_fn, formula in (
                    ("EX1", ex1_factor, ex1_factor_edges),
                    ("EX2", ex2_factor, ex2_factor_edges),
                ):
                    g = build_fn(p)
                    checked += 1
                    if g.num_edges != formula(p):
                        failures.append((name, n, t, r, "edges"))
                    if kr_factor(join(g, t), r) is not None:
                        failures.append((name, n, t, r, "factor"))
    ok = not failures and checked > 0
    say(2, ok, f"{checked} extremal graphs with n+t<=15, r in {{3,4}}; failures: {failures}")
    assert ok


def test_criterion_3_hamilton_sweep(say):
    start = time.perf_counter()
    rep = verify_hamilton_theorem(6)
    elapsed = time.perf_counter() - start
    sharp = sum(len(c["sharpness"]) for c in rep.details["cases"])
    ok = rep.passed and elapsed < 300 and sharp > 0
    say(3, ok, f"n<=6, t<=n: {rep.graphs_checked} graphs incl. {sharp} constructions, "
               f"{len(rep.counterexamples)} counterexamples, {elapsed:.1f}s (<300s)")
    assert ok


def test_criterion_4_lemma_arithmetic(say):
    start = time.perf_counter()
    rep = verify_lemma43(60, 8)
    f1_g = all(
        technical_quantities(n, r).f1 <= technical_quantities(n, r).g
        for r in range(3, 9)
        for n in range(3, 61)
    )
    elapsed = time.perf_counter() - start
    ok = rep.passed and f1_g and rep.graphs_checked > 0
    say(4, ok, f"n<=60, 3<=r<=8: {rep.graphs_checked} triples, implication/f1<=g/t>f2 "
               f"violations: {len(rep.counterexamples)}, {elapsed:.2f}s")
    assert ok


def test_criterion_5_repair_soundness(say):
    rep = verify_repair(10_000, seed=2026, r=3, n_max=10, t_max=4)
    d = rep.details
    ok = rep.passed and sum(d["vertex_cases"].values()) == 10_000 and d["edge_boundary_free"] == 10_000
    say(5, ok, f"10000 vertex + 10000 edge instances (n<=10, r=3, t<=4); cases {d['vertex_cases']}; "
               f"invalid or contract errors: {len(rep.counterexamples)}")
    assert ok


def _cycle_masks(n):
    """Edge masks of every Hamilton cycle of K_n, from all permutations fixing 0."""
    out = set()
    for perm in permutations(range(1, n)):
        seq = (0, *perm)
        m = 0
        for i in range(n):
            a, b = sorted((seq[i], seq[(i + 1) % n]))
            m |= 1 << pair_index(a, b)
        out.add(m)
    return out


def _superset_closure(masks, bits):
    """Bitset over all 2^bits masks marking supersets of some given mask."""
    total = 1 << bits
    field = 0
    for m in masks:
        field |= 1 << m
    for i in range(bits):
        step = 1 << i
        if step >= 8:
            chunk = step // 8
            pattern = (b"\x00" * chunk + b"\xff" * chunk) * (total // (16 * chunk))
        else:
            pattern = bytes([{1: 0xAA, 2: 0xCC, 4: 0xF0}[step]]) * (total // 8)
        field |= (field << step) & int.from_bytes(pattern, "little")
    return field


def test_criterion_6_oracle_equivalence(say):
    mismatches = []
    checked = 0
    for r in (2, 3):
        for n in range(1, 7):
            for m in range(graph_count(n)):
                g = graph_from_mask(n, m)
                edges = {frozenset(p) for idx, p in enumerate(pairs(n)) if m >> idx & 1}
                cert = kr_factor(g, r)
                checked += 1
                if (cert is not None) != kr_oracle(n, edges, r):
                    mismatches.append(("kr", r, n, m))
                elif cert is not None and not validate_kr_factor(g, cert.tiles, r):
                    mismatches.append(("kr-cert", r, n, m))
    ham_checked = 0
    for n in range(3, 8):
        bits = n * (n - 1) // 2
        hamiltonian = _superset_closure(_cycle_masks(n), bits)
        for m in range(1 << bits):
            cert = hamilton_cycle(graph_from_mask(n, m))
            ham_checked += 1
            if (cert is not None) != bool(hamiltonian >> m & 1):
                mismatches.append(("ham", n, m))
            elif cert is not None and not validate_hamilton_cycle(graph_from_mask(n, m), cert.tiles[0]):
                mismatches.append(("ham-cert", n, m))
    ok = not mismatches
    say(6, ok, f"kr (r=2,3, n<=6): {checked} labelled graphs; hamilton (n<=7): {ham_checked} "
               f"labelled graphs; mismatches: {mismatches[:5]}")
    assert ok


def _min_degree_graphs(n, min_deg):
    """All labelled graphs on n vertices with minimum degree >= min_deg.

    Built as complements of graphs with maximum degree <= n-1-min_deg.
    """
    cap = n - 1 - min_deg
    if cap < 0:
        return
    full = (1 << n) - 1
    all_pairs = list(combinations(range(n), 2))
    rows = [full ^ (1 << v) for v in range(n)]
    missing = [0] * n

    def rec(i):
        if i == len(all_pairs):
            yield Graph(n, tuple(rows))
            return
        yield from rec(i + 1)
        a, b = all_pairs[i]
        if missing[a] < cap and missing[b] < cap:
            missing[a] += 1
            missing[b] += 1
            rows[a] ^= 1 << b
            rows[b] ^= 1 << a
            yield from rec(i + 1)
            rows[a] ^= 1 << b
            rows[b] ^= 1 << a
            missing[a] -= 1
            missing[b] -= 1

    yield from rec(0)


def _min_degree_count_brute(n, min_deg):
    return sum(
        1 for m in range(graph_count(n)) if graph_from_mask(n, m).min_degree() >= min_deg
    )


def test_criterion_7_hajnal_szemeredi(say):
    failures = []
    counts = {}
    for r in (2, 3, 4):
        for n in range(3, 9):
            if n % r:
                continue
            min_deg = -(-(r - 1) * n // r)
            count = 0
            for g in _min_degree_graphs(n, min_deg):
                count += 1
                if not hajnal_szemeredi_guarantee(g, r):
                    failures.append(("predicate", r, n, g.edges()))
                cert = kr_factor(g, r)
                if cert is None or not validate_kr_factor(g, cert.tiles, r):
                    failures.append(("factor", r, n, g.edges()))
            if n <= 6 and count != _min_degree_count_brute(n, min_deg):
                failures.append(("enumeration", r, n, count))
            counts[(n, r)] = count
    ok = not failures
    total = sum(counts.values())
    say(7, ok, f"{total} labelled graphs with r|n, delta>=(1-1/r)n, n in 3..8, r in {{2,3,4}}; "
               f"per (n,r): {counts}; failures: {failures[:3]}")
    assert ok


def test_criterion_8_star_counterexample(say):
    s = 2
    h = star(s)
    cases = []
    failures = []
    for n in range(2, 13):
        for t in range(0, n + 1):
            try:
                a = ex_h_removed_size(n, t, s, s + 1)
            except ParameterError:
                continue
            base = ex_h(n, t, h)
            prime = ex_h_prime(n, t, s)
            cases.append((n, t))
            if prime.num_edges != base.num_edges + a // 2:
                failures.append(("edges", n, t))
            cert = h_factor(join(prime, t), h)
            if cert is not None:
                ok_cert = validate_h_factor(join(prime, t), cert.tiles, h)
                failures.append(("factor", n, t, ok_cert))
    ok = not failures and len(cases) >= 5
    say(8, ok, f"s=2, {len(cases)} valid (n,t) with n<=12: {cases}; failures: {failures}")
    assert ok

"""Verification harness: exhaustive small-graph scans and family cross-checks.

Every check returns a :class:`VerificationReport`.  Counterexamples carry
graph6 strings so they can be replayed with ``symbreak compute --graph6``.
"""

from __future__ import annotations

import os
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb, factorial, prod

from . import families as fam
from .autsearch import automorphism_generators
from .distinguishing import (DEFAULT_GROUP_CAP, automorphism_group, distinguishing_number,
                             group_motion, group_theta)
from .errors import GroupTooLarge, SearchBudgetExceeded, TooLarge
from .graph import Graph, components, disjoint_union, labeled_graphs, write_graph6
from .perm import Permutation, close_generators, cycle_count

SCAN_MAX_N = 7


@dataclass
class VerificationReport:
    check: str
    tested: int = 0
    skipped: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0
    summary: dict = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return len(self.counterexamples)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, g: Graph | None, detail: str):
        self.counterexamples.append({"graph6": write_graph6(g) if g is not None else "",
                                     "detail": detail})

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "tested": self.tested,
            "violations": self.violations,
            "skipped": self.skipped,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.summary:
            out["summary"] = self.summary
        return out


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SYMBREAK_THREADS", "1")))
    except ValueError:
        return 1


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _theta3_order_ok(n: int) -> bool:
    """Orders allowed for a threshold-3 graph: 3, or 2p for a prime p other than 3 and 5."""
    return n == 3 or (n % 2 == 0 and _is_prime(n // 2) and n // 2 not in (3, 5))


def check_graph(g: Graph, budget: int) -> tuple[list[str], int, int | None]:
    """Run the per-graph property checks; returns (failures, theta, D)."""
    n = g.n
    bad = []
    group = automorphism_group(g)
    res = group_theta(group)
    t = res.theta
    symmetric = res.witness is not None
    try:
        d = distinguishing_number(g, budget)
    except SearchBudgetExceeded:
        d = None
    if (t == 2) != (n == 2):
        bad.append(f"theta=2 iff n=2 fails: theta={t}, n={n}")
    if d is not None:
        full = (1 << n) - 1
        complete = all(r | (1 << u) == full for u, r in enumerate(g.rows))
        empty = g.num_edges() == 0
        if (t == d) != (not symmetric or complete or empty):
            bad.append(f"theta=D characterization fails: theta={t}, D={d}")
        if not d <= t <= n:
            bad.append(f"D <= theta <= n fails: D={d}, theta={t}, n={n}")
    elif not t <= n:
        bad.append(f"theta <= n fails: theta={t}")
    if symmetric:
        m = group_motion(group).motion
        if t < n - m + 2:
            bad.append(f"motion bound fails: theta={t}, n={n}, motion={m}")
        if not _is_prime(res.witness_order) or cycle_count(res.witness) + 1 != t:
            bad.append(f"witness {res.witness} does not have prime order")
    if t == 3 and not _theta3_order_ok(n):
        bad.append(f"theta=3 on {n} vertices")
    return bad, t, d


def _scan_chunk(args):
    n, start, stop, budget = args
    out = []
    for idx, g in enumerate(labeled_graphs(n)):
        if idx < start:
            continue
        if idx >= stop:
            break
        bad, t, d = check_graph(g, budget)
        out.append((idx, write_graph6(g), bad, t, d))
    return out


def scan_small_graphs(nmax: int = 6, budget: int = 10_000_000,
                      workers: int | None = None) -> VerificationReport:
    """Check the small-graph properties on every labeled graph with 1..nmax vertices.

    Checks: theta=2 iff n=2; theta=D iff asymmetric, complete or empty;
    theta >= n - motion + 2; the theta witness has prime order;
    D <= theta <= n; and theta=3 only on 3 or 2p (p prime, not 3 or 5) vertices.
    """
    if nmax > SCAN_MAX_N:
        raise TooLarge(f"labeled scan is limited to n <= {SCAN_MAX_N}")
    started = time.perf_counter()
    workers = workers or worker_count()
    rep = VerificationReport("small_graphs")
    histogram: dict[str, dict[str, int]] = {}
    theta3: dict[str, list[str]] = {}
    d_skipped = 0
    for n in range(1, nmax + 1):
        total = 1 << (n * (n - 1) // 2)
        step = max(1, -(-total // (workers * 4)))
        jobs = [(n, s, min(s + step, total), budget) for s in range(0, total, step)]
        if workers > 1 and total > 64:
            with ProcessPoolExecutor(workers) as pool:
                chunks = list(pool.map(_scan_chunk, jobs))
        else:
            chunks = [_scan_chunk(j) for j in jobs]
        rows = sorted((r for c in chunks for r in c), key=lambda r: r[0])
        hist = Counter()
        for _, g6, bad, t, d in rows:
            rep.tested += 1
            hist[t] += 1
            if d is None:
                d_skipped += 1
            if t == 3:
                theta3.setdefault(str(n), []).append(g6)
            for b in bad:
                rep.counterexamples.append({"graph6": g6, "detail": b})
        histogram[str(n)] = {str(k): v for k, v in sorted(hist.items())}
    rep.summary = {"theta_histogram": histogram, "theta3_graphs": theta3,
                   "dnum_skipped": d_skipped}
    rep.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return rep


def transposition_cycles(p: fam.JohnsonParams) -> tuple[bool, int]:
    """Whether the map induced by swapping 1 and 2 is an automorphism, and its cycle count."""
    g = fam.generalized_johnson(p)
    swap = Permutation((1, 0) + tuple(range(2, p.n)))
    alpha = fam.natural_action(swap, p)
    is_aut = all(g.has_edge(alpha(u), alpha(v)) for u, v in g.edges())
    return is_aut, cycle_count(alpha)


def johnson_cells(max_vertices: int):
    n = 4
    while comb(n, 2) <= max_vertices:
        for k in range(2, n // 2 + 1):
            if comb(n, k) > max_vertices:
                continue
            for i in range(1, k + 1):
                yield fam.JohnsonParams(n, k, i)
        n += 1


def verify_johnson_grid(max_vertices: int = 36, max_order: int = 50_000,
                        coloring_budget: int = 3000,
                        cap: int = DEFAULT_GROUP_CAP) -> VerificationReport:
    """Cross-check the closed forms for J(n,k,i) against enumeration.

    Cells whose Jones order exceeds ``max_order`` are not enumerated and count
    as skipped; Kneser graphs K(2k,k) are then priced as e copies of K_2 with
    the union formula.
    """
    started = time.perf_counter()
    rep = VerificationReport("johnson_grid")
    rows = []
    for p in johnson_cells(max_vertices):
        g = fam.generalized_johnson(p)
        row = {"n": p.n, "k": p.k, "i": p.i, "vertices": g.n, "case": fam.johnson_case(p),
               "aut_order": fam.johnson_aut_order(p), "theta": fam.johnson_theta(p),
               "dnum": fam.johnson_D(p)}
        expected_alpha = comb(p.n, p.k) - comb(p.n - 2, p.k - 1)
        is_aut, alpha_c = transposition_cycles(p)
        row["alpha_cycles"] = alpha_c
        if not is_aut or alpha_c != expected_alpha:
            rep.fail(g, f"J{(p.n, p.k, p.i)}: transposition map gives {alpha_c} cycles, "
                        f"expected {expected_alpha} (automorphism: {is_aut})")
        if row["aut_order"] > max_order or row["aut_order"] > cap:
            rep.skipped += 1
            row["enumerated"] = False
            if row["case"] == "g":
                e = g.n // 2
                comps = components(g)
                if len(comps) != e or any(len(c) != 2 for c in comps):
                    rep.fail(g, f"K({p.n},{p.k}) is not {e} copies of K_2")
                spec = fam.UnionSpec(tuple(fam.complete(2) for _ in range(e)))
                via_union = fam.union_theta(spec)
                row["theta_union"] = via_union
                if via_union != row["theta"]:
                    rep.fail(g, f"union pricing gives {via_union}, closed form {row['theta']}")
            rows.append(row)
            continue
        rep.tested += 1
        row["enumerated"] = True
        try:
            group = automorphism_group(g, cap)
        except GroupTooLarge:
            rep.fail(g, f"group larger than cap {cap}, expected {row['aut_order']}")
            rows.append(row)
            continue
        res = group_theta(group)
        row["aut_order_enum"] = len(group.elements)
        row["theta_enum"] = res.theta
        if row["aut_order_enum"] != row["aut_order"]:
            rep.fail(g, f"|Aut| = {row['aut_order_enum']}, Jones order {row['aut_order']}")
        if res.theta != row["theta"]:
            rep.fail(g, f"theta by enumeration {res.theta}, closed form {row['theta']}")
        try:
            d = distinguishing_number(g, coloring_budget)
            row["dnum_search"] = d
            if d != row["dnum"]:
                rep.fail(g, f"D by search {d}, closed form {row['dnum']}")
        except SearchBudgetExceeded:
            row["dnum_search"] = None
        rows.append(row)
    rep.summary = {"cells": rows}
    rep.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return rep


# Small connected components for random unions, paired with |Aut|.
def _union_pool():
    sym = [fam.complete(2), fam.path(3), fam.complete(3), fam.path(4),
           fam.complete_bipartite(1, 3), fam.cycle(4), fam.cycle(5), fam.complete(4)]
    asym = [fam.complete(1), fam.asymmetric_six(), fam.asymmetric_six_b(),
            fam.asymmetric_seven()]
    return [(g, close_generators(automorphism_generators(g).generators, degree=g.n).order)
            for g in sym], [(g, 1) for g in asym]


def _union_aut_order(picks, pool) -> int:
    counts = Counter(picks)
    return prod(pool[j][1] ** m * factorial(m) for j, m in counts.items())


def random_union(rng: random.Random, max_vertices: int = 14, max_order: int = 20_000):
    """A random multiset of pool components; returns (components, mode)."""
    sym, asym = _union_pool()
    pool = sym + asym
    while True:
        mode = rng.choice(["sym", "asym", "mixed"])
        choices = {"sym": range(len(sym)), "asym": range(len(sym), len(pool)),
                   "mixed": range(len(pool))}[mode]
        target = rng.randint(2, max_vertices)
        picks, size = [], 0
        for _ in range(12):
            j = rng.choice(list(choices))
            if size + pool[j][0].n <= target:
                picks.append(j)
                size += pool[j][0].n
        if len(picks) < 2 or _union_aut_order(picks, pool) > max_order:
            continue
        if mode == "mixed" and (all(j < len(sym) for j in picks) or
                                all(j >= len(sym) for j in picks)):
            continue
        picks.sort()
        return [pool[j][0] for j in picks], mode


def verify_union_random(trials: int = 100, seed: int = 1, max_vertices: int = 14,
                        max_order: int = 20_000) -> VerificationReport:
    """Compare the union formula with direct enumeration on random component multisets."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    started = time.perf_counter()
    rep = VerificationReport("union_random")
    rng = random.Random(seed)
    cases = Counter()
    for _ in range(trials):
        comps, _mode = random_union(rng, max_vertices, max_order)
        g = disjoint_union(comps)
        value, case = fam.union_theta_case(fam.UnionSpec(tuple(comps)))
        direct = group_theta(automorphism_group(g)).theta
        cases[case] += 1
        rep.tested += 1
        if value != direct:
            names = ", ".join(c.name or write_graph6(c) for c in comps)
            rep.fail(g, f"components [{names}]: formula {value} (case {case}), "
                        f"enumeration {direct}")
    rep.summary = {"cases": dict(sorted(cases.items())), "seed": seed}
    rep.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return rep


def verify_fixtures() -> VerificationReport:
    """Reported values for the named example graphs."""
    started = time.perf_counter()
    rep = VerificationReport("fixtures")
    facts = {}

    def expect(g, label, got, want):
        rep.tested += 1
        facts[label] = got
        if got != want:
            rep.fail(g, f"{label}: got {got}, expected {want}")

    def threshold(g):
        res = group_theta(automorphism_group(g))
        if res.witness is not None and not _is_prime(res.witness_order):
            rep.fail(g, f"{g.name}: witness order {res.witness_order} is not prime")
        return res

    g6 = fam.g6_graph()
    expect(g6, "theta(G6)", threshold(g6).theta, 5)

    g24 = fam.g24_graph()
    res = threshold(g24)
    expect(g24, "theta(G24)", res.theta, 17)
    expect(g24, "max cycle count(G24)", res.theta - 1, 16)

    fig = fam.theta3_fourteen()
    expect(fig, "|Aut(theta3_14)|", automorphism_group(fig).order, 7)
    expect(fig, "theta(theta3_14)", threshold(fig).theta, 3)

    pet = fam.petersen()
    expect(pet, "D(Petersen)", distinguishing_number(pet), 3)
    expect(pet, "theta(Petersen)", threshold(pet).theta, 8)

    alt = fam.g24_adjacent_graph()
    facts["theta(G24 with (1 2),(2 3),(3 4))"] = threshold(alt).theta
    rep.summary = facts
    rep.elapsed_ms = round((time.perf_counter() - started) * 1000)
    return rep


SUITES = {
    "small": scan_small_graphs,
    "johnson": verify_johnson_grid,
    "union": verify_union_random,
    "fixtures": verify_fixtures,
}

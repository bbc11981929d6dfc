"""The eleven acceptance criteria, each with its runtime bound.

Every test records one PASS/FAIL line; conftest prints them at the end of
the run.
"""
import random
import time
from math import comb

import pytest

from brauerheight import height as H
from brauerheight.bratteli import dimension_audit
from brauerheight.diagram import (Diagram, compose, eta, flip, identity, pair_partitions,
                                  propagating_number, random_pair_partition, sigma, tensor)
from brauerheight.exact import format_poly, root_multiset
from brauerheight.reptheory import (gram_matrix, ideal_check, index_set, index_set_recursive,
                                    restriction_check, semisimplicity_report)

RESULTS: dict[int, str] = {}


def record(k, ok, seconds, limit, detail=""):
    status = "PASS" if ok and seconds < limit else "FAIL"
    RESULTS[k] = f"criterion {k:2d}: {status}  ({seconds:.3f}s, limit {limit}s) {detail}".rstrip()
    assert ok, detail
    assert seconds < limit, f"took {seconds:.3f}s, limit {limit}s"


def test_01_composition_anchor():
    p = Diagram(1, 3, ((1, -2), (-1, -3)), 1)
    q = Diagram(3, 5, ((1, -5), (2, -4), (3, -1), (-2, -3)))
    want = Diagram(1, 5, ((1, -4), (-1, -5), (-2, -3)), 1)
    t = time.perf_counter()
    got = compose(p, q)
    dt = time.perf_counter() - t
    record(1, got == want and got.delta_exp == 1, dt, 0.001, f"got {got}")


def test_02_height_census():
    t = time.perf_counter()
    table = H.enumerate_by_height(3, 3, use_cache=False)
    dt = time.perf_counter() - t
    census = table.census()
    exact = all(r.exact for r in table.results.values())
    record(2, census == {-1: 5, 0: 6, 1: 4} and len(table.results) == 15 and exact, dt, 1,
           f"census {census}, all exact {exact}")


def test_03_coxeter_heights():
    t = time.perf_counter()
    bad = []
    for n in range(2, 7):
        for i in range(1, min(n - 1, 4) + 1):
            if H.partition_height(sigma(i, n)).value != i - 1:
                bad.append((i, n))
    for p in pair_partitions(3, 3):
        if H.partition_height(tensor(p, identity(1))).value != H.partition_height(p).value:
            bad.append(str(p))
    dt = time.perf_counter() - t
    record(3, not bad, dt, 10, f"mismatches {bad}" if bad else "sigma_i, i<=4, n<=6; p(x)1 on J(3,3)")


def test_04_closure_theorem():
    t = time.perf_counter()
    r3 = H.check_closure(None, 3)
    r4 = H.check_closure(None, 4)
    dt = time.perf_counter() - t
    bad = r3.violations + r4.violations
    record(4, not bad and r3.checked == 225 and r4.checked == 11025, dt, 300,
           f"{r3.checked}+{r4.checked} products, {len(bad)} violations")


def test_05_gram_anchor():
    printed = [["d", "1", "0", "1", "1", "1"], ["1", "d", "1", "1", "1", "0"],
               ["0", "1", "d", "1", "1", "1"], ["1", "1", "1", "d", "0", "1"],
               ["1", "1", "1", "0", "d", "1"], ["1", "0", "1", "1", "1", "d"]]
    t = time.perf_counter()
    g6 = gram_matrix(1, 4, 2, (2,)).matrix
    g4 = gram_matrix(0, 4, 2, (2,)).matrix
    g3 = gram_matrix(-1, 4, 2, (1,)).matrix
    roots = [sorted(root_multiset(g.det())) for g in (g3, g4, g6)]
    dt = time.perf_counter() - t
    ok = ([[format_poly(x) for x in row] for row in g6.row_lists()] == printed
          and g3 == g6.leading_block(3) and g4 == g6.leading_block(4)
          and roots[0] == sorted(["0", "sqrt(2)", "-sqrt(2)"])
          and roots[1] == sorted(["0", "1", "(-1+sqrt(17))/2", "(-1-sqrt(17))/2"])
          and roots[2] == sorted(["0", "0", "0", "-4", "2", "2"]))
    record(5, ok, dt, 10, f"roots {roots}")


def test_06_generic_semisimplicity():
    t = time.perf_counter()
    bad = []
    for l in (-1, 0, 1):
        for n in (2, 3, 4):
            rep = semisimplicity_report(l, n, generic=7)
            if not (rep.sum_of_squares == rep.algebra_dim and rep.generic_full_rank
                    and rep.drops_at_roots):
                bad.append((l, n))
    dt = time.perf_counter() - t
    record(6, not bad, dt, 60, f"failing (l,n) {bad}" if bad else "9 (l,n) pairs at delta=7")


def test_07_ideal_theorem():
    t = time.perf_counter()
    bad, ranks = [], {}
    for l in (-1, 0, 1):
        for n in (3, 4):
            for s in (1, 2):
                if 2 * s > n:
                    continue  # e_{3,2} does not exist
                rep = ideal_check(l, n, s)
                ranks[(l, n, s)] = rep.ranks
                if not rep.ok:
                    bad.append((l, n, s))
    dt = time.perf_counter() - t
    record(7, not bad, dt, 120, f"failing {bad}" if bad else f"{len(ranks)} cases, ranks equal")


def test_08_index_sets_and_dimensions():
    t = time.perf_counter()
    bad = []
    for l in (-1, 0, 1, 2, 3, 4):
        for n in range(0, 7):
            if index_set(l, n) != index_set_recursive(l, n):
                bad.append(("index", l, n))
    for n in range(1, 7):
        a = dimension_audit(-1, n)
        if not a.ok or a.basis_size != comb(2 * n, n) // (n + 1):
            bad.append(("catalan", n))
    for n in range(2, 6):
        a = dimension_audit(n - 2, n)
        if not a.ok or a.basis_size != len(pair_partitions(n, n)):
            bad.append(("brauer", n))
    for l in (0, 1, 2):
        for n in range(1, 6):
            if not dimension_audit(l, n).ok:
                bad.append(("walks", l, n))
    dt = time.perf_counter() - t
    record(8, not bad, dt, 300, f"failing {bad}" if bad else "")


def test_09_restriction_rules():
    t = time.perf_counter()
    bad, regimes = [], set()
    for l in (0, 1):
        for n in range(1, 5):
            for lab in index_set(l, n):
                rep = restriction_check(l, n, *lab)
                regimes.add(rep.regime)
                if not rep.ok:
                    bad.append((l, n, lab))
    dt = time.perf_counter() - t
    record(9, not bad and regimes == {"<", "=", ">"}, dt, 120,
           f"failing {bad}" if bad else f"regimes seen {sorted(regimes)}")


def test_10_blob_coincidence():
    t = time.perf_counter()
    counts, bad = {}, []
    for n in (2, 3, 4):
        rep = H.count_left_simple(n, 0)
        counts[n] = rep.count
        if rep.count != comb(2 * (n - 1), n - 1) or rep.disagreements:
            bad.append((n, rep.count, [(str(p), w) for p, w in rep.disagreements]))
    dt = time.perf_counter() - t
    record(10, not bad, dt, 120, f"counts {counts}" + (f", failures {bad}" if bad else ""))


def _random_arities(rng, k):
    out = [rng.randint(0, 4)]
    for _ in range(k - 1):
        nxt = rng.randint(0, 4)
        if (nxt + out[-1]) % 2:
            nxt = nxt + 1 if nxt < 4 else nxt - 1
        out.append(nxt)
    return out


def test_11_property_suites():
    samples = 10_000
    t = time.perf_counter()
    failures = {}
    rng = random.Random(20261014)

    def count(name, ok):
        if not ok:
            failures[name] = failures.get(name, 0) + 1

    for _ in range(samples):
        a, b, c, d = _random_arities(rng, 4)
        p, q, r = (random_pair_partition(x, y, rng) for x, y in ((a, b), (b, c), (c, d)))
        count("associativity", compose(compose(p, q), r) == compose(p, compose(q, r)))
    for _ in range(samples):
        a, b, c = _random_arities(rng, 3)
        x, y, z = _random_arities(rng, 3)
        p, r = random_pair_partition(a, b, rng), random_pair_partition(b, c, rng)
        q, s = random_pair_partition(x, y, rng), random_pair_partition(y, z, rng)
        count("interchange", compose(tensor(p, q), tensor(r, s)) == tensor(compose(p, r), compose(q, s)))
    for _ in range(samples):
        a, b, c = _random_arities(rng, 3)
        p, q = random_pair_partition(a, b, rng).scaled(rng.randint(0, 2)), random_pair_partition(b, c, rng)
        count("flip", flip(compose(p, q)) == compose(flip(q), flip(p)) and flip(flip(p)) == p)
    for _ in range(samples):
        a, b = _random_arities(rng, 2)
        p = random_pair_partition(a, b, rng)
        count("regularity", compose(compose(p, flip(p)), p).unscaled == p)
    for _ in range(samples):
        a, b, c = _random_arities(rng, 3)
        p, q = random_pair_partition(a, b, rng), random_pair_partition(b, c, rng)
        count("bottleneck", propagating_number(compose(p, q))
              <= min(propagating_number(p), propagating_number(q)))
    j33 = pair_partitions(3, 3)
    for _ in range(samples):
        p = rng.choice(j33)
        count("eta", H.height(eta(p)) == H.height(p))
    dt = time.perf_counter() - t
    record(11, not failures, dt, 300, f"6 suites x {samples} samples, violations {failures}")

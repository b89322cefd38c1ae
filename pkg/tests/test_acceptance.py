"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import io
import json
import math
import random
import time
from fractions import Fraction
from itertools import combinations

import pytest

from hessberg.apolarity import betti_numbers
from hessberg.charts import (chart_polynomials, conjugate_line, eliminate_w0, make_regular_element)
from hessberg.cli import run
from hessberg.cohomology import (bwb_classify, check_rho_wall, chi_line_bundle, hilbert_polynomial,
                                 integrate_degree)
from hessberg.errors import HessbergError
from hessberg.hessenberg import HessenbergSpace, enumerate_hessenberg_spaces, full_space, minimal_space
from hessberg.polyring import Polynomial
from hessberg.rootsys import Root, Weight, build_root_system
from hessberg.volume import volume, volume_localization, volume_polynomial

from conftest import RANK_LE_3, system


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail
    return emit


def subsets(n):
    for k in range(n + 1):
        yield from combinations(range(n), k)


def test_c01_volume_three_both_methods(report):
    start = time.perf_counter()
    out, err = io.StringIO(), io.StringIO()
    code = run(["volume", "--type", "A2", "--hfun", "2,3", "--weight", "1,1", "--method", "both"],
               stdout=out, stderr=err)
    elapsed = time.perf_counter() - start
    vals = json.loads(out.getvalue())["volume"] if code == 0 else {}
    ok = code == 0 and vals == {"deriv": "3", "local": "3"} and elapsed < 1.0
    report(1, ok, f"Vol(A2, Peterson, rho) = {vals} in {elapsed:.3f}s (< 1s)")


def test_c02_full_flag_polynomial(report):
    rs = system("A2")
    p = volume_polynomial(rs, full_space(rs)).p_h
    a1, a2 = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    want = a1 * a2 * (a1 + a2) * Fraction(1, 2)
    report(2, p == want, f"P_g = {p.to_string(['a1', 'a2'])}")


def test_c03_chart_generator(report):
    rs = system("A2")
    x = make_regular_element(rs, {0})
    gens = chart_polynomials(x, minimal_space(rs), rs.weyl_group().longest)
    got = gens.generators[Root((1, 1))]
    v = x.semisimple_values[1]
    t1, t2, t3 = (Polynomial.variable(3, i) for i in range(3))
    want = t3 * v + t1 - t1 * t2 * v
    names = ["t1", "t2", "t3"]
    ok = got == want and got.to_string(names) == want.to_string(names)
    report(3, ok, f"f = {got.to_string(names)} with mu1 - mu2 = {v}")


def test_c04_cross_formula_battery(report):
    start = time.perf_counter()
    rng = random.Random(2024)
    checked, bad = 0, []
    for label in ["A1", "A2", "A3", "B2", "G2"]:
        rs = system(label)
        weights = [Weight(tuple(rng.randint(1, 5) for _ in range(rs.rank))) for _ in range(5)]
        for h in enumerate_hessenberg_spaces(rs):
            vp = volume_polynomial(rs, h)
            for lam in weights:
                d = volume(vp, lam)
                loc = volume_localization(rs, h, lam)
                deg = integrate_degree(rs, h, lam, cross_check=False)
                checked += 1
                if not (d == loc and deg == math.factorial(h.dimension) * d):
                    bad.append((label, h.describe(), lam))
    elapsed = time.perf_counter() - start
    report(4, not bad and elapsed < 300, f"{checked} (H, lambda) triples, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c05_chi_structure_sheaf(report):
    checked, bad = 0, []
    for label in RANK_LE_3:
        rs = system(label)
        for h in enumerate_hessenberg_spaces(rs):
            checked += 1
            if chi_line_bundle(rs, h, (0,) * rs.rank) != 1:
                bad.append((label, h.describe()))
    report(5, not bad, f"chi(O) = 1 on {checked} spaces of rank <= 3, failures {bad}")


def test_c06_bwb_oracle(report):
    checked, bad = 0, []
    for k, label in enumerate(RANK_LE_3):
        rs = system(label)
        full = full_space(rs)
        rng = random.Random(600 + k)
        for _ in range(100):
            lam = Weight(tuple(rng.randint(-5, 5) for _ in range(rs.rank)))
            res = bwb_classify(rs, lam)
            checked += 1
            if chi_line_bundle(rs, full, lam) != res.euler_characteristic:
                bad.append((label, lam))
    report(6, not bad, f"{checked} weights, {len(bad)} disagreements with Borel-Weil-Bott")


def test_c07_wall_scan(report):
    labels = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4"]
    sets, chis, bad = 0, 0, []
    for label in labels:
        rs = system(label)
        nonsimple = [r for r in rs.positive_roots if r.height >= 2]
        for p in (1, 2):
            for gammas in combinations(nonsimple, p):
                a = check_rho_wall(rs, gammas)
                v = tuple(x - sum(g[j] for g in gammas) for j, x in enumerate(rs.rho))
                sets += 1
                if rs.inner(a, v) != 0:
                    bad.append((label, gammas))
                if rs.rank <= 3:
                    total = Root(-sum(g[j] for g in gammas) for j in range(rs.rank))
                    chis += 1
                    if chi_line_bundle(rs, full_space(rs), total) != 0:
                        bad.append((label, gammas, "chi"))
    report(7, not bad, f"{sets} root sets with a wall witness, {chis} vanishing chi(G/B, L_-gamma), "
                       f"failures {bad}")


def test_c08_height_injection(report):
    labels = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "G2", "F4"]
    bad = []
    for label in labels:
        rs = system(label)
        try:
            rs.height_injection.check(rs)
        except HessbergError as exc:
            bad.append((label, str(exc)))
    report(8, not bad, f"height-lowering injection checked for {', '.join(labels)}; failures {bad}")


def test_c09_elimination(report):
    count, bad = 0, []
    for n in (2, 3, 4):
        rs = system(f"A{n - 1}")
        w0 = rs.weyl_group().longest
        for j_set in subsets(rs.rank):
            x = make_regular_element(rs, j_set)
            for h in enumerate_hessenberg_spaces(rs):
                rep = eliminate_w0(chart_polynomials(x, h, w0), x)
                count += 1
                if not rep.success or len(rep.free_variables) != h.dimension:
                    bad.append((n, j_set, h.describe(), rep.message))
    report(9, not bad, f"{count} (J, H) charts at w0 reduce to polynomial rings, failures {bad}")


def test_c10_conjugation(report):
    count, bad = 0, []
    for n in (2, 3, 4):
        rs = system(f"A{n - 1}")
        for j_set in subsets(rs.rank):
            x = make_regular_element(rs, j_set)
            for t in (Fraction(1), Fraction(2), Fraction(-1), Fraction(7, 3)):
                count += 1
                try:
                    conjugate_line(x, t)
                except HessbergError as exc:
                    bad.append((n, j_set, t, str(exc)))
    report(10, not bad, f"Ad(g) x(t) = t x_J verified exactly in {count - len(bad)} of {count} cases")


def test_c11_apolarity(report):
    problems = []
    for label in RANK_LE_3:
        rs = system(label)
        if betti_numbers(rs, full_space(rs)).betti != tuple(rs.weyl_group().length_histogram()):
            problems.append((label, "weyl series"))
        for h in enumerate_hessenberg_spaces(rs):
            b = betti_numbers(rs, h)
            if not (b.palindromic and b.betti[0] == 1 and b.betti[-1] == 1):
                problems.append((label, h.describe(), b.betti))
    a2 = system("A2")
    if betti_numbers(a2, full_space(a2)).betti != (1, 2, 2, 1):
        problems.append("A2 full")
    if betti_numbers(a2, minimal_space(a2)).betti != (1, 2, 1):
        problems.append("A2 Peterson")
    report(11, not problems, f"Betti numbers checked for rank <= 3, problems {problems}")


def test_c12_hilbert(report):
    rs = system("A2")
    p = hilbert_polynomial(rs, minimal_space(rs), rs.rho_weight)
    ok = p.coefficients == (1, 3, 3) and p(1) == 7
    rng = random.Random(12)
    tested = 0
    for label in RANK_LE_3:
        r = system(label)
        for h in enumerate_hessenberg_spaces(r):
            for lam in (r.rho_weight, Weight(tuple(rng.randint(1, 3) for _ in range(r.rank)))):
                q = hilbert_polynomial(r, h, lam)
                tested += 1
                ok = ok and q.coefficients[0] == 1 and q.leading_coefficient == volume(volume_polynomial(r, h), lam)
    report(12, ok, f"A2 Peterson: {p.to_string()}, value {p(1)} at m = 1; {tested} (H, lambda) pairs checked")


def test_c13_metric_independence(report):
    diffs = []
    count = 0
    for label in ["A2", "B2", "G2", "A3"]:
        base = system(label)
        lam = Weight(tuple(range(1, base.rank + 1)))
        for scale in (Fraction(2), Fraction(1, 3)):
            rs = build_root_system(label, scale)
            for h0 in enumerate_hessenberg_spaces(base):
                h = HessenbergSpace(rs, h0.root_set)
                pairs = [
                    (volume(volume_polynomial(rs, h), lam), volume(volume_polynomial(base, h0), lam)),
                    (volume_localization(rs, h, lam), volume_localization(base, h0, lam)),
                    (integrate_degree(rs, h, lam), integrate_degree(base, h0, lam)),
                    (chi_line_bundle(rs, h, lam), chi_line_bundle(base, h0, lam)),
                    (betti_numbers(rs, h), betti_numbers(base, h0)),
                ]
                count += 1
                diffs += [(label, scale, h0.describe()) for a, b in pairs if a != b]
    report(13, not diffs, f"{count} (system, scale, H) cases unchanged under scales 2 and 1/3, diffs {diffs}")

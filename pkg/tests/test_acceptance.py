"""End-to-end acceptance criteria.

Every check here is exact integer arithmetic; there are no tolerances to
tune.  Each test prints one PASS line (run with ``pytest -s`` to see them
as they complete).
"""

import itertools
import random

from braidutil import braid_closure_gauss_code, random_knot_braids
from vknot.arrows import (
    ascending_polynomial,
    conway_pairing,
    conway_set,
    descending_polynomial,
)
from vknot.catalog import find_entry
from vknot.determinant import (
    coloring_matrix,
    determinant,
    mock_det,
    parse_int_matrix,
    skein_block_check,
)
from vknot.diagram import (
    basepoint_positions,
    is_mod_p_numberable,
    parse_gauss_code,
    warping_degree,
)
from vknot.enumeration import enumerate_all_diagrams
from vknot.oracle import conway_polynomial
from vknot.verify import SweepConfig, run_check

MOCK_SEIFERT_687 = "-2 -1 0 0\n-1 2 1 0\n0 -1 0 1\n0 0 1 2"
MATRIX_490 = [(1, -1, 0, 0), (1, 0, 0, -1), (2, 0, -1, -1), (2, -1, -1, 0)]


def _report(criterion, message):
    print("PASS criterion %d: %s" % (criterion, message))


def test_criterion_01_table_knot_490_matrix():
    G = find_entry("4.90").diagram()
    B = coloring_matrix(G)
    target = sorted(MATRIX_490)
    assert any(
        sorted(tuple(row[j] for j in perm) for row in B.entries) == target
        for perm in itertools.permutations(range(4))
    ), "coloring matrix differs from the published one"
    assert determinant(G) == 1
    _report(1, "4.90 coloring matrix matches up to permutation; det = 1")


def test_criterion_02_table_knot_687548():
    entry = find_entry("6.87548")
    G = entry.diagram()
    for based in basepoint_positions(G):
        assert conway_pairing(based, 2, "ascending") == -2
        assert conway_pairing(based, 2, "descending") == -2
    assert mock_det(parse_int_matrix(MOCK_SEIFERT_687)) == 1
    det = determinant(G)
    assert det == 1
    v2_mod2 = conway_pairing(G, 2, "ascending") % 2
    assert v2_mod2 == 0 and det % 8 in (1, 7)
    _report(2, "6.87548: z^2 coefficient -2 at every basepoint; mock det 1; class +-1 mod 8")


def test_criterion_03_classical_sanity():
    trefoil = find_entry("trefoil").diagram()
    fig8 = find_entry("figure-eight").diagram()
    unknot = find_entry("unknot").diagram()
    assert determinant(trefoil) == 3 and conway_pairing(trefoil, 2, "ascending") == 1
    assert determinant(fig8) == 5 and conway_pairing(fig8, 2, "ascending") == -1
    assert determinant(unknot) == 1 and conway_pairing(unknot, 2, "ascending") == 0

    rng = random.Random(303)
    codes = [
        find_entry(name).code
        for name in ("unknot", "kink", "trefoil", "trefoil-left", "figure-eight",
                     "cinquefoil", "7_1", "granny", "square-knot")
    ]
    codes.append(braid_closure_gauss_code([-1] * 7, 2))
    codes += random_knot_braids(rng, 20 - len(codes), max_crossings=8)
    assert len(codes) == 20
    for code in codes:
        G = parse_gauss_code(code)
        assert G.num_chords <= 8
        oracle = conway_polynomial(G)
        assert ascending_polynomial(G) == oracle, code
        assert descending_polynomial(G) == oracle, code
        for based in basepoint_positions(G):
            assert ascending_polynomial(based) == oracle, code
    _report(3, "20 classical codes: ascending = descending = skein-oracle Conway")


def test_criterion_04_basepoint_and_variant_sweep():
    report = run_check("main-theorem", SweepConfig(max_chords=4, moduli=(2, 3)))
    assert report.failures == 0, report.counterexamples[:5]
    assert report.population > 0
    _report(4, "z^2 pairings mod 2 and mod 3 basepoint-free on %d diagrams" % report.population)


def test_criterion_05_determinant_mod8_sweep():
    report = run_check("cor-det", SweepConfig(max_chords=4))
    assert report.failures == 0, report.counterexamples[:5]
    assert report.population == 6565
    _report(5, "det = +-(1 + 4 v2) mod 8 on all %d colorable diagrams" % report.population)


def test_criterion_06_determinant_vs_ascending_sweep():
    report = run_check("det-asc", SweepConfig(max_chords=4))
    assert report.failures == 0, report.counterexamples[:5]
    assert report.population == 6565
    _report(6, "det = +-ascending(2) mod 8 on all %d colorable diagrams" % report.population)


def test_criterion_07_skein_identities():
    report = run_check("skein", SweepConfig(samples=1000, random_max_chords=8, seed=2024))
    assert report.failures == 0, report.counterexamples[:5]
    assert report.population == 1000
    _report(7, "skein identities exact on 1000 seeded diagrams, every crossing resolved")


def test_criterion_08_block_determinant_identity():
    rng = random.Random(88)
    for _ in range(1000):
        n = rng.randint(0, 6)
        s0 = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        x = [rng.randint(-9, 9) for _ in range(n)]
        y = [rng.randint(-9, 9) for _ in range(n)]
        assert skein_block_check(s0, x, y, rng.randint(-9, 9))
    _report(8, "det S+ - det S- = 2 det S0 exact on 1000 random blocks")


def test_criterion_09_descending_diagrams():
    population = 0
    for G in enumerate_all_diagrams(4):
        if warping_degree(G) != 0:
            continue
        population += 1
        for degree in range(1, G.num_chords + 1):
            assert conway_pairing(G, degree, "ascending") == 0, str(G)
            assert conway_pairing(G, degree, "descending") == 0, str(G)
        if is_mod_p_numberable(G, 2):
            assert determinant(G) == 1, str(G)
    assert population > 0
    _report(9, "all %d descending diagrams: pairings vanish, colorable ones have det 1" % population)


def test_criterion_10_conway_combination_structure():
    expected = {
        (1, 2, "ascending"): ["U1;O1"],
        (1, 2, "descending"): ["O1;U1"],
        (2, 1, "ascending"): ["U1O2O1U2"],
        (2, 1, "descending"): ["O1U2U1O2"],
    }
    for (degree, circles, variant), members in expected.items():
        cs = conway_set(degree, circles, variant)
        assert [str(m) for m in cs.members] == members
    _report(10, "degree 1 and 2 combinations each have the single expected member")

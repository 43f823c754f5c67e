"""Acceptance suite: twelve go/no-go criteria, one line printed each.

Every count here is a floor, every equality is exact rational
arithmetic, and every random draw is seeded.  The checks come from
skewfrac.selftest (the same code `skewfrac selftest` runs) plus the
independent oracles in tests/oracles.py and the CLI golden table in
tests/test_cli.py.
"""

import random

from skewfrac import cli, lcrm
from skewfrac.fractionfield import HPOLY
from skewfrac.selftest import (check_center, check_components,
                               check_coordinate_functions,
                               check_degree_additivity, check_eval_compat,
                               check_fraction_axioms, check_ideal_members,
                               check_lcrm, check_phi_sigma, check_re_identity,
                               check_sigma_phi, check_tower_axioms,
                               check_tower_centrality, check_tower_depth3,
                               check_witness_search)

from oracles import lcrm_oracle, run_commutative_comparison
from test_cli import GOLDEN


def _report(capsys, num, name, ok):
    with capsys.disabled():
        print(f"[criterion {num:02d}] {name}: {'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {num}: {name}"


def _rng(tag):
    return random.Random(f"acceptance:{tag}")


def test_criterion_01_re_extraction(capsys):
    r = check_re_identity(_rng(1), n=1000)
    _report(capsys, 1, "re-extraction identity at 1000 points", r.ok)


def test_criterion_02_coordinate_functions(capsys):
    r = check_coordinate_functions(_rng(2), n=500)
    _report(capsys, 2,
            "coordinate functions: sigma(y_l) = t_l, rational values, "
            "X reconstruction", r.ok)


def test_criterion_03_isomorphism_round_trips(capsys):
    a = check_sigma_phi(_rng(3), n=200, bound=10)
    b = check_phi_sigma(_rng("3b"), n=100)
    _report(capsys, 3, "sigma/phi round trips (200 + 100)", a.ok and b.ok)


def test_criterion_04_vanishing_decision(capsys):
    a = check_witness_search(_rng(4), n=100)
    b = check_ideal_members(_rng("4b"), n=100, evals=200)
    _report(capsys, 4,
            "witnesses within 50 draws; ideal members evaluate to zero",
            a.ok and b.ok)


def test_criterion_05_evaluation_compatibility(capsys):
    r = check_eval_compat(_rng(5), n=500)
    _report(capsys, 5, "free evaluation matches polynomial evaluation x500",
            r.ok)


def test_criterion_06_ore_condition(capsys):
    r = check_lcrm(_rng(6), n=500)
    rng = _rng("6b")
    agreed = 0
    for trial in range(70):
        if trial % 3 == 0:
            c = HPOLY.sample(rng, rng.randint(1, 2), 5)
            x = c * HPOLY.sample(rng, rng.randint(0, 3), 5)
            y = c * HPOLY.sample(rng, rng.randint(0, 3), 5)
        else:
            x = HPOLY.sample(rng, rng.randint(0, 5), 5)
            y = HPOLY.sample(rng, rng.randint(0, 5), 5)
        if not x or not y:
            continue
        if lcrm(x, y) == lcrm_oracle(x, y):
            agreed += 1
        else:
            agreed = -10**6
    _report(capsys, 6,
            f"lcrm witnesses minimal on 500 pairs; oracle agreement on "
            f"{agreed} pairs", r.ok and agreed >= 50)


def test_criterion_07_degree_additivity(capsys):
    r = check_degree_additivity(_rng(7), n=1000)
    _report(capsys, 7, "degree additivity on 1000 products", r.ok)


def test_criterion_08_fraction_axioms(capsys):
    r = check_fraction_axioms(_rng(8), n=300)
    _report(capsys, 8,
            "fraction field axioms on 300 triples; canonical equality",
            r.ok)


def test_criterion_09_center_and_components(capsys):
    a = check_center(_rng(9), n=200)
    b = check_components(_rng("9b"), n=300)
    _report(capsys, 9,
            "center iff components vanish (200); decompose/recompose (300)",
            a.ok and b.ok)


def test_criterion_10_tower(capsys):
    a = check_tower_axioms(_rng(10), n=100)
    b = check_tower_centrality(_rng("10b"))
    c = check_tower_depth3(_rng("10c"))
    _report(capsys, 10,
            "depth-2 axioms on 100 triples; central variables; depth-3 smoke",
            a.ok and b.ok and c.ok)


def test_criterion_11_commutative_mirror(capsys):
    bad = run_commutative_comparison(_rng(11), n_ops=300)
    _report(capsys, 11, "rational-coefficient ops match sympy x300", bad == 0)


def test_criterion_12_cli_golden(capsys):
    ok = len(GOLDEN) >= 20
    for argv, expected in GOLDEN:
        if cli.main(argv) != 0:
            ok = False
            break
        if capsys.readouterr().out != expected:
            ok = False
            break
    _report(capsys, 12, f"{len(GOLDEN)} CLI command/output pairs byte-exact",
            ok)

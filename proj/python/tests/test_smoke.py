"""End-to-end smoke checks for the python bindings.

Needs DAST_FIXTURE_DIR pointing at the repository's fixtures/ directory
(ctest sets it; set it manually when running pytest directly).
"""

import math
import os

import pytest

import dast

FIXTURES = os.environ["DAST_FIXTURE_DIR"]


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_parse_derive_and_value_chain():
    logic = dast.load_logic_file(fixture("chain3.sl"))
    stats = dast.logic_stats(logic)
    assert stats.theory_count == 1
    assert stats.rule_count == 3

    lattice = dast.derive(logic.quantize("Step0"), logic)
    assert len(lattice) == 4
    assert [str(t) for t in lattice.terms()] == ["Step0", "Step1", "Step2", "Step3"]
    assert lattice.contains(dast.parse_term("Step3"))

    values = dast.node_complexity(lattice)
    assert sorted(values.values()) == [1.0, 2.0, 3.0, 4.0]
    point = dast.semantic_point(lattice, values)
    assert point == {"Step3": 4.0}
    assert dast.overall_complexity(point) == 4.0
    assert dast.dastex(lattice, logic) == 1


def test_round_trip_and_json():
    logic = dast.load_logic_file(fixture("semantic_logic_2.sl"))
    assert dast.parse_logic(logic.render()) == logic

    lattice = dast.derive(logic.quantize("#S"), logic)
    again = dast.Lattice.from_json(lattice.to_json())
    assert again == lattice


def test_judgment_pipeline():
    judged = dast.dast_judge([1.0, 2.0, 3.0, 4.0, 5.0])
    assert judged.d == {5}

    machine = dast.load_judgment_file(fixture("dast_judgment_experiment1.json"))
    humans = dast.load_judgments_csv(fixture("judgments_experiment1.csv"))
    report = dast.precision_report(machine, humans)
    assert math.isclose(report.overall, 14 / 22)
    assert math.isclose(report.no_deviation, 10 / 22)
    assert math.isclose(report.comp_steps, 71 / 88)
    assert report.deviation_shares[0] == report.no_deviation


def test_corpus_pipeline():
    pairs = dast.load_corpus_csv(fixture("scanpath_pairs.csv"))
    assert len(pairs) == 16
    assert math.isclose(dast.overall_difficulty_ratio("dastex", pairs), 0.64, abs_tol=5e-4)
    curve = dast.dr_curve("dastex", pairs)
    assert curve == sorted(curve) and curve[-1] == 1.0

    stats = dast.text_stats("Hello world.")
    assert (stats.sentences, stats.words, stats.syllables) == (1, 2, 3)
    assert math.isclose(dast.flesch_kincaid(10.0, 1.5), 6.01)

    fit = dast.linear_regression([1, 2, 3], [3, 5, 7])
    assert math.isclose(fit.slope, 2.0) and math.isclose(fit.r_squared, 1.0)


def test_deviation_model():
    model = dast.make_model(0.25)
    pmf = dast.deviation_pmf(model)
    assert math.isclose(sum(pmf), 1.0)
    assert math.isclose(pmf[0], 0.75**4)
    assert math.isclose(dast.fit_alpha(pmf).alpha, 0.25, abs_tol=1e-6)
    assert dast.simulate(model, 1000, 7) == dast.simulate(model, 1000, 7)


def test_errors_translate():
    with pytest.raises(dast.Error):
        dast.parse_logic("theory Broken:\n  fact: F(\n")
    with pytest.raises(dast.Error):
        dast.make_model(0.9)

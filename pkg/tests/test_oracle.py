import pytest

from pomsetblock import balls
from pomsetblock.balls import BudgetExceededError
from pomsetblock.oracle import verify_formula_suite, verify_metric, weight_census
from pomsetblock.pomset import Pomset
from pomsetblock.space import Space


def make_space(m, relations, labeling):
    return Space(m, Pomset.from_relations(len(labeling), m // 2, relations), labeling)


def test_census_small_antichain():
    sp = make_space(5, [], (1, 1))
    report = weight_census(sp)
    assert report.sphere_counts[1] == 4
    assert report.ball_size(1) == 5
    assert report.ideal_sphere_counts[(0, 0)] == 1
    assert report.telescopes()


def test_census_totals():
    sp = make_space(6, [], (1, 2))
    report = weight_census(sp)
    assert report.total == 216
    assert 1 + sum(report.sphere_counts.values()) == 216
    assert sum(report.ideal_sphere_counts.values()) == 216


def test_census_budget():
    sp = make_space(6, [], (1, 2))
    with pytest.raises(BudgetExceededError):
        weight_census(sp, budget=100)


def test_metric_exhaustive_pass():
    report = verify_metric(make_space(6, [(1, 2)], (1, 1)))
    assert report.passed and report.exhaustive
    assert report.triples_checked == 36 ** 3


def test_metric_single_block():
    for m in (2, 3, 5, 8):
        report = verify_metric(make_space(m, [], (1,)))
        assert report.passed


def test_metric_sampled_pass():
    sp = make_space(5, [(1, 2), (3, 4)], (1, 2, 1, 2))
    report = verify_metric(sp, seed=3, samples=3000)
    assert report.passed and not report.exhaustive
    assert report.triples_checked == 3000


def test_metric_negative_control():
    # Raw residues instead of Lee weights break symmetry; the check must
    # find a witness.
    sp = make_space(5, [], (1,))

    def fake_distance(a, b):
        return (a[0] - b[0]) % 5

    report = verify_metric(sp, distance_fn=fake_distance)
    assert not report.passed
    assert report.counterexample is not None
    axiom = report.counterexample[0]
    assert axiom in ("symmetry", "identity", "triangle")


def test_metric_deterministic_sampling():
    sp = make_space(6, [], (2, 1))
    a = verify_metric(sp, seed=11, samples=500)
    b = verify_metric(sp, seed=11, samples=500)
    assert (a.passed, a.triples_checked) == (b.passed, b.triples_checked)


def test_formula_suite_passes():
    spaces = [
        make_space(5, [], (1, 1)),
        make_space(5, [(1, 2)], (1, 1)),
        make_space(6, [], (2, 1)),
        make_space(6, [(2, 1)], (2, 1)),
        make_space(6, [], (1, 2)),
        make_space(9, [], (1, 1)),
        make_space(4, [(1, 2), (1, 3)], (1, 1, 1)),
        make_space(7, [], (3,)),
    ]
    for sp in spaces:
        report = verify_formula_suite(sp)
        assert report.ok, (sp, [(c.name, c.detail) for c in report.failures])
        names = {c.name for c in report.checks}
        assert {
            "sphere-formula",
            "ball-formula",
            "rball-formula",
            "sphere-partition",
            "rball-union",
            "full-ball-submodule",
            "ball-duality",
            "partition-tiling",
        } <= names


def test_formula_suite_on_random_spaces():
    import random

    from conftest import random_pomset

    rng = random.Random(99)
    for m in (4, 5, 6, 7, 8, 9):
        for _ in range(3):
            s = rng.randint(1, 3)
            labeling = tuple(rng.randint(1, 2) for _ in range(s))
            sp = Space(m, random_pomset(rng, s, m // 2), labeling)
            if sp.size > 20000:
                continue
            report = verify_formula_suite(sp)
            assert report.ok, (
                m,
                labeling,
                [(c.name, c.detail) for c in report.failures],
            )


def test_formula_suite_detects_sphere_mutation(monkeypatch):
    original = balls.I_sphere_cardinality

    def off_by_one(space, ideal):
        value = original(space, ideal)
        return value + 1 if ideal.cardinality == 1 else value

    monkeypatch.setattr("pomsetblock.balls.I_sphere_cardinality", off_by_one)
    report = verify_formula_suite(make_space(5, [], (1, 1)))
    assert not report.ok
    assert any(c.name == "sphere-formula" for c in report.failures)


def test_formula_suite_detects_ball_mutation(monkeypatch):
    original = balls.I_ball_cardinality

    def doubled(space, ideal):
        value = original(space, ideal)
        return value * 2 if ideal.cardinality else value

    monkeypatch.setattr("pomsetblock.balls.I_ball_cardinality", doubled)
    report = verify_formula_suite(make_space(5, [], (1, 1)))
    assert not report.ok
    failing = {c.name for c in report.failures}
    assert "ball-formula" in failing

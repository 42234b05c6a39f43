import random

from lbanded import DefinitenessClass, from_band, ops
from lbanded.verification import (
    check_band,
    random_band_any_class,
    random_invertible_band,
    run_verification,
    trial_rng,
)


def test_random_invertible_band():
    rng = random.Random(0)
    for _ in range(200):
        assert ops.is_invertible(from_band(random_invertible_band(rng, rng.randint(1, 8))))


def test_any_class_generator_covers_all_classes():
    rng = random.Random(0)
    seen = {ops.classify_definiteness(from_band(random_band_any_class(rng, rng.randint(1, 6)))) for _ in range(300)}
    assert seen == set(DefinitenessClass)


def test_trial_rng_is_independent_of_order():
    assert trial_rng(5, 3).random() == trial_rng(5, 3).random()
    assert trial_rng(5, 3).random() != trial_rng(5, 4).random()


def test_run_verification_passes():
    for mode in ("rational", "float"):
        reports = run_verification(n_max=5, trials=30, seed=42, mode=mode)
        assert reports and all(r.passed for r in reports)
        assert {r.operation for r in reports} >= {"determinant", "inverse", "characteristic_polynomial"}


def test_single_case_reports():
    reports = check_band(from_band([1]), random.Random(0))
    assert all(r.passed for r in reports)


def test_corrupted_closed_form_is_detected(monkeypatch):
    monkeypatch.setattr(ops, "determinant", lambda A: A.band[0])
    reports = run_verification(n_max=4, trials=10, seed=1)
    assert any(not r.passed and r.operation == "determinant" for r in reports)

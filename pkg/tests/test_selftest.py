from __future__ import annotations

import pytest

from f4desc.config import settings
from f4desc.selftest import CHECKS, run_selftest


def test_checks_are_numbered() -> None:
    assert [c[0] for c in CHECKS] == list(range(1, 11))


@pytest.mark.parametrize("criterion", [1, 2, 3, 4, 6, 8, 9, 10])
def test_fast_criteria_pass(criterion: int) -> None:
    report = run_selftest(only=[criterion])
    assert report.is_valid, [c.detail for c in report.failures]
    assert [c.criterion for c in report.checks] == [criterion]


@pytest.mark.slow
def test_full_selftest(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(settings, "jacobi_samples", 500)
    report = run_selftest()
    assert report.is_valid, [c.detail for c in report.failures]
    assert len(report.checks) == 10


def test_seed_is_recorded() -> None:
    assert run_selftest(only=[1]).seed == settings.random_seed
    assert run_selftest(only=[1], seed=7).seed == 7

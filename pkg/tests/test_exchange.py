from __future__ import annotations

from pathlib import Path

import pytest

from f4desc.exchange.engine import (
    apply_exchange,
    expand,
    replay,
    reverse_exchange,
    validate_exchange,
    validate_expand,
    validate_reverse,
)
from f4desc.exchange.loader import list_fixtures, load_fixture, parse_fixture, replay_fixture
from f4desc.exchange.schemas import ExchangeDatum, ExchangeStep, Extra
from f4desc.roots.system import Root

SHIPPED = [
    "a2a1t-descent",
    "a2t-descent",
    "b2-descent",
    "b3-descent",
    "c3-descent",
    "c3a1-descent",
    "minimal-b2",
]


def test_shipped_fixtures() -> None:
    assert list_fixtures() == SHIPPED


@pytest.mark.parametrize("name", SHIPPED)
def test_fixture_replays_to_completion(name: str) -> None:
    fixture = load_fixture(name)
    result = replay_fixture(name)
    assert result.completed, result.diagnostic
    assert result.steps_applied == len(fixture.steps)
    assert all(r.is_valid for r in result.reports)
    assert all(r.coefficient for r in result.reports if r.step.startswith("exchange"))


def test_exchange_moves_roots(minimal_datum: ExchangeDatum) -> None:
    after = apply_exchange(minimal_datum, "0121", "-1100", "1221")
    assert after.extra(Root.of("-1100")) == Extra(root="-1100", mode="full_adelic")
    assert after.extra(Root.of("1221")) == Extra(root="1221", mode="compact")
    assert after.universe == minimal_datum.universe
    assert after.characters == minimal_datum.characters


def test_exchange_records_assumption(minimal_datum: ExchangeDatum) -> None:
    report = validate_exchange(minimal_datum, "0121", "-1100", "1221")
    assert report.is_valid
    assert report.assumed
    assert set(report.conditions) >= {"beta_compact", "alpha_support", "gamma_new", "sum", "constant", "normalizes"}


def test_sum_condition_failure(minimal_datum: ExchangeDatum) -> None:
    report = validate_exchange(minimal_datum, "0121", "-1100", "0001")
    assert not report.is_valid
    assert report.conditions["sum"] is False
    assert report.conditions["constant"] is False
    with pytest.raises(ValueError, match="Invalid exchange"):
        apply_exchange(minimal_datum, "0121", "-1100", "0001")


def test_beta_must_be_compact(minimal_datum: ExchangeDatum) -> None:
    report = validate_exchange(minimal_datum, "0121", "0010", "0111")
    assert report.conditions["beta_compact"] is False
    assert not report.is_valid


def test_alpha_must_carry_the_character(minimal_datum: ExchangeDatum) -> None:
    report = validate_exchange(minimal_datum, "1221", "-1100", "0001")
    assert report.conditions["alpha_support"] is False


def test_repeating_a_step_is_rejected(minimal_datum: ExchangeDatum) -> None:
    after = apply_exchange(minimal_datum, "0121", "-1100", "1221")
    report = validate_exchange(after, "0121", "-1100", "1221")
    assert report.conditions["beta_compact"] is False
    assert report.conditions["gamma_new"] is False


def test_reverse_undoes_exchange(minimal_datum: ExchangeDatum) -> None:
    after = apply_exchange(minimal_datum, "0121", "-1100", "1221")
    assert validate_reverse(after, "0121", "-1100", "1221").is_valid
    assert reverse_exchange(after, "0121", "-1100", "1221") == minimal_datum


def test_reverse_needs_a_prior_exchange(minimal_datum: ExchangeDatum) -> None:
    report = validate_reverse(minimal_datum, "0121", "-1100", "1221")
    assert report.conditions["beta_full"] is False
    assert report.conditions["gamma_compact"] is False


def test_expand_existing_root_rejected(minimal_datum: ExchangeDatum) -> None:
    report = validate_expand(minimal_datum, "1000")
    assert report.conditions["root_new"] is False
    with pytest.raises(ValueError):
        expand(minimal_datum, "1000")


def test_empty_script_is_identity(minimal_datum: ExchangeDatum) -> None:
    result = replay(minimal_datum, [])
    assert result.completed
    assert result.steps_applied == 0
    assert result.final == minimal_datum


def test_replay_stops_at_first_failure(minimal_datum: ExchangeDatum) -> None:
    steps = [
        "exchange 0121 -1100 1221",
        "exchange 0121 -1100 1221",
        "exchange 1000 -0100 1100",
    ]
    result = replay(minimal_datum, steps)
    assert not result.completed
    assert result.steps_applied == 1
    assert len(result.reports) == 2
    assert result.diagnostic.startswith("step 2")
    assert result.final.extra(Root.of("1221")) is not None


def test_step_parsing() -> None:
    step = ExchangeStep.parse("exchange 0121 -1100 1221")
    assert step.kind == "exchange"
    assert str(step) == "exchange 0121 -1100 1221"
    assert str(ExchangeStep.parse("expand 1111")) == "expand 1111"
    for bad in ["", "swap 1000 0100", "exchange 1000 0100", "expand 1300"]:
        with pytest.raises(ValueError):
            ExchangeStep.parse(bad)


def test_datum_invariants() -> None:
    with pytest.raises(ValueError, match="not closed"):
        ExchangeDatum(universe=["1000", "0100"])
    with pytest.raises(ValueError):
        ExchangeDatum(universe=["1000"], extras=[{"root": "1000", "mode": "compact"}])
    with pytest.raises(ValueError):
        ExchangeDatum(universe=["1000"], characters=[{"root": "0100"}])
    with pytest.raises(ValueError):
        ExchangeDatum(
            universe=["1000"],
            extras=[{"root": "0010", "mode": "compact"}, {"root": "0010", "mode": "full_adelic"}],
        )


def test_malformed_fixtures() -> None:
    with pytest.raises(ValueError):
        parse_fixture({"universe": ["1300"]})
    with pytest.raises(ValueError):
        parse_fixture(["1000"])
    with pytest.raises(ValueError):
        parse_fixture({"universe": ["1000"], "steps": ["swap 1000 0100"]})


def test_load_fixture_from_path(tmp_path: Path) -> None:
    path = tmp_path / "chain.yaml"
    path.write_text(
        "name: chain\n"
        "universe: ['0100', '1100']\n"
        "characters:\n"
        "  - {root: '1100', tag: a}\n"
        "extras:\n"
        "  - {root: '-0100', mode: compact}\n"
        "steps: []\n",
        encoding="utf-8",
    )
    fixture = load_fixture(path)
    assert fixture.name == "chain"
    assert fixture.datum.root_count == 3
    assert replay_fixture(str(path)).completed


def test_unknown_fixture() -> None:
    with pytest.raises(ValueError, match="Unknown exchange fixture"):
        load_fixture("no-such-chain")


def test_unparseable_yaml(tmp_path: Path) -> None:
    path = tmp_path / "broken.yaml"
    path.write_text("universe: [1000\n", encoding="utf-8")
    with pytest.raises(ValueError, match="Cannot parse fixture"):
        load_fixture(path)

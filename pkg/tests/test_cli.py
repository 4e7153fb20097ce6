from __future__ import annotations

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from f4desc.cli import app


def _payload(runner: CliRunner, *args: str) -> dict:
    result = runner.invoke(app, list(args))
    assert result.exit_code == 0, result.output
    envelope = json.loads(result.stdout)
    assert envelope["status"] == "ok"
    assert envelope["schema_version"] == "1"
    return envelope["payload"]


def test_roots_count(runner: CliRunner) -> None:
    assert _payload(runner, "roots", "--count") == {"count": 48}
    assert _payload(runner, "roots", "--count", "--positive") == {"count": 24}


def test_roots_tsv(runner: CliRunner) -> None:
    result = runner.invoke(app, ["roots", "--positive", "--format", "tsv"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "root\theight\tlength"
    assert len(lines) == 25
    assert lines[-1] == "2342\t11\tlong"


def test_roots_table(runner: CliRunner) -> None:
    result = runner.invoke(app, ["roots", "--positive", "--format", "table"])
    assert result.exit_code == 0
    assert "2342" in result.stdout


def test_unknown_format_is_usage_error(runner: CliRunner) -> None:
    result = runner.invoke(app, ["roots", "--format", "xml"])
    assert result.exit_code == 2


def test_weyl_commands(runner: CliRunner) -> None:
    assert _payload(runner, "weyl", "order") == {"order": 1152}
    assert _payload(runner, "weyl", "apply", "w[1]", "1000")["image"] == "-1000"
    image = _payload(runner, "weyl", "cochar", "w[]", "6,10,7,4")["image"]
    assert image == "(6,10,7,4)"


def test_commutator(runner: CliRunner) -> None:
    payload = _payload(runner, "commutator", "1110", "0010")
    assert [t["root"] for t in payload["terms"]] == ["1120"]
    assert abs(payload["terms"][0]["coefficient"]) == 2


def test_constants(runner: CliRunner) -> None:
    payload = _payload(runner, "constants")
    assert all(row["n"] != 0 for row in payload)


def test_torus(runner: CliRunner) -> None:
    assert _payload(runner, "torus", "B2")["weight"] == [6, 10, 7, 4]
    assert _payload(runner, "torus", "A2t+A1")["weight"] == [5, 10, 7, 4]


def test_orbits_by_half_dim(runner: CliRunner) -> None:
    payload = _payload(runner, "orbits", "--half-dim", "15")
    assert {row["label"] for row in payload} == {"A2", "Ã2"}


def test_orbits_leq(runner: CliRunner) -> None:
    assert _payload(runner, "orbits", "--leq", "A2", "F4a3")["leq"] is True
    assert _payload(runner, "orbits", "--leq", "B3", "C3")["leq"] is False


def test_grade(runner: CliRunner) -> None:
    payload = _payload(runner, "grade", "B2")
    assert payload["half_dim"] == 18
    assert payload["levels"]["6"] == ["2342"]


def test_unknown_orbit_is_usage_error(runner: CliRunner) -> None:
    result = runner.invoke(app, ["grade", "E8"])
    assert result.exit_code == 2


def test_match_torus(runner: CliRunner) -> None:
    assert _payload(runner, "match-torus", "--weight", "6,10,7,4")["label"] == "B2"


def test_match_torus_without_match_fails(runner: CliRunner) -> None:
    result = runner.invoke(app, ["match-torus", "--weight", "100,0,0,0"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["status"] == "failed"


def test_compose(runner: CliRunner) -> None:
    payload = _payload(runner, "compose", "--orbit", "C3", "--sub", "(2)")
    assert payload["composite"] == [10, 20, 14, 8]
    assert payload["match"]["label"] == "F4(a2)"


def test_sp_torus(runner: CliRunner) -> None:
    payload = _payload(runner, "sp-torus", "211", "--size", "4")
    assert payload["exponents"] == [1, 0, 0, -1]
    assert payload["dim"] == 4


def test_stab_f4a3(runner: CliRunner) -> None:
    payload = _payload(runner, "stab", "f4a3", "--a", "1,0,1,0,0,1", "--b", "0,1,0,0,0,0")
    assert payload["dimension"] == 1


def test_stab_f4a2(runner: CliRunner) -> None:
    payload = _payload(runner, "stab", "f4a2", "--chi", "1/2,1,0,1,1,0,1,0")
    assert payload["dimension"] == 0


def test_discriminant(runner: CliRunner) -> None:
    payload = _payload(runner, "discriminant", "1", "0", "0")
    assert payload["f"] == "-27"
    assert payload["det"] == "27"
    assert payload["generic"] is True


def test_descent_table(runner: CliRunner) -> None:
    payload = _payload(runner, "descent", "table")
    assert len(payload) == 14
    assert [(r["orbit"], r["tag"]) for r in payload if not r["feasible"]] == [
        ("A1+Ã1", "(2|2)"),
        ("A1", "(42)"),
    ]


def test_pairs(runner: CliRunner) -> None:
    payload = _payload(runner, "pairs", "SL2/Sp6")
    assert payload[0]["pair"] == "SL2/Sp6"
    assert len(_payload(runner, "pairs")) == 5


def test_verify(runner: CliRunner) -> None:
    payload = _payload(runner, "verify", "c3-2")
    assert payload[0]["matched"] == "F4(a2)"


def test_verify_needs_a_target(runner: CliRunner) -> None:
    assert runner.invoke(app, ["verify"]).exit_code == 2
    assert runner.invoke(app, ["verify", "no-such-identity"]).exit_code == 2


def test_exchange_list(runner: CliRunner) -> None:
    payload = _payload(runner, "exchange", "list")
    assert "minimal-b2" in {row["name"] for row in payload}


def test_exchange_replay(runner: CliRunner) -> None:
    payload = _payload(runner, "exchange", "replay", "minimal-b2")
    assert payload["completed"] is True
    assert payload["steps_applied"] == 2


def test_exchange_replay_failure_exits_one(runner: CliRunner, tmp_path: Path) -> None:
    path = tmp_path / "bad.yaml"
    path.write_text(
        "universe: ['0100', '1100']\n"
        "characters:\n"
        "  - {root: '1100'}\n"
        "extras:\n"
        "  - {root: '-0100', mode: compact}\n"
        "steps:\n"
        "  - exchange 1100 -0100 2342\n",
        encoding="utf-8",
    )
    result = runner.invoke(app, ["exchange", "replay", str(path)])
    assert result.exit_code == 1
    envelope = json.loads(result.stdout)
    assert envelope["status"] == "failed"
    assert envelope["payload"]["diagnostic"].startswith("step 1")


@pytest.mark.parametrize("fmt", ["json", "tsv", "table"])
def test_selftest_subset(runner: CliRunner, fmt: str) -> None:
    result = runner.invoke(app, ["selftest", "--only", "1,2,3", "--format", fmt])
    assert result.exit_code == 0, result.output

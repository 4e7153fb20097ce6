"""Load exchange fixtures from YAML.

A fixture names a datum and the step script that replays one proof chain::

    name: b2-descent
    description: ...
    universe: ["1100", "1110", ...]
    characters:
      - {root: "1110", tag: a}
    extras:
      - {root: "1000", mode: compact}
    steps:
      - exchange 1110 1000 0110
      - expand 1120
"""

from __future__ import annotations

import logging
from pathlib import Path

import yaml
from pydantic import BaseModel, Field, ValidationError

from f4desc.config import settings
from f4desc.exchange.engine import replay
from f4desc.exchange.schemas import ExchangeDatum, ExchangeStep, ReplayResult

logger = logging.getLogger("f4desc.exchange.loader")


class ExchangeFixture(BaseModel):
    name: str
    description: str = ""
    datum: ExchangeDatum
    steps: list[ExchangeStep] = Field(default_factory=list)


def _fixtures_dir() -> Path:
    return Path(settings.fixtures_dir)


def list_fixtures() -> list[str]:
    return sorted(p.stem for p in _fixtures_dir().glob("*.yaml"))


def _resolve(name_or_path: str | Path) -> Path:
    path = Path(name_or_path)
    if path.is_file():
        return path
    candidate = _fixtures_dir() / f"{name_or_path}.yaml"
    if candidate.is_file():
        return candidate
    known = ", ".join(list_fixtures())
    raise ValueError(f"Unknown exchange fixture {str(name_or_path)!r}; shipped: {known}")


def parse_fixture(raw: dict, source: str = "<memory>") -> ExchangeFixture:
    if not isinstance(raw, dict):
        raise ValueError(f"Fixture {source} must be a mapping, got {type(raw).__name__}")
    name = str(raw.get("name") or Path(source).stem)
    try:
        datum = ExchangeDatum(
            name=name,
            universe=raw.get("universe") or [],
            characters=tuple(raw.get("characters") or []),
            extras=tuple(raw.get("extras") or []),
        )
        steps = [ExchangeStep.parse(str(line)) for line in raw.get("steps") or []]
    except ValidationError as exc:
        raise ValueError(f"Malformed fixture {source}: {exc}") from exc
    return ExchangeFixture(
        name=name, description=str(raw.get("description", "")), datum=datum, steps=steps
    )


def load_fixture(name_or_path: str | Path) -> ExchangeFixture:
    """By shipped name (``b3-descent``) or by path to a YAML file."""
    path = _resolve(name_or_path)
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except yaml.YAMLError as exc:
        raise ValueError(f"Cannot parse fixture {path}: {exc}") from exc
    fixture = parse_fixture(raw, source=str(path))
    logger.debug("Loaded fixture %s: %d roots, %d steps", fixture.name, len(fixture.datum.universe), len(fixture.steps))
    return fixture


def replay_fixture(name_or_path: str | Path) -> ReplayResult:
    fixture = load_fixture(name_or_path)
    return replay(fixture.datum, fixture.steps)

from __future__ import annotations

import pytest
from typer.testing import CliRunner

from f4desc.exchange.loader import load_fixture
from f4desc.exchange.schemas import ExchangeDatum


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


@pytest.fixture
def minimal_datum() -> ExchangeDatum:
    return load_fixture("minimal-b2").datum

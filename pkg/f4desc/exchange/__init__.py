"""Root-exchange move: integration data, validation, application and fixture replay."""

from f4desc.exchange.engine import (
    apply_exchange,
    expand,
    replay,
    reverse_exchange,
    validate_exchange,
    validate_expand,
    validate_reverse,
)
from f4desc.exchange.loader import ExchangeFixture, list_fixtures, load_fixture, replay_fixture
from f4desc.exchange.schemas import (
    CharEntry,
    ExchangeDatum,
    ExchangeReport,
    ExchangeStep,
    Extra,
    ReplayResult,
)

__all__ = [
    "CharEntry",
    "ExchangeDatum",
    "ExchangeFixture",
    "ExchangeReport",
    "ExchangeStep",
    "Extra",
    "ReplayResult",
    "apply_exchange",
    "expand",
    "list_fixtures",
    "load_fixture",
    "replay",
    "replay_fixture",
    "reverse_exchange",
    "validate_exchange",
    "validate_expand",
    "validate_reverse",
]

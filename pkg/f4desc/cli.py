"""f4desc CLI: batch queries over the F4 root, orbit, torus and descent tables.

Every command prints a deterministic payload on stdout, as a JSON envelope
(``--format json``), a TSV block (``--format tsv``) or a rich table
(``--format table``). Diagnostics go to stderr.

Exit codes: 0 success, 1 failed verification, 2 usage error.

Usage::

    f4desc roots --count
    f4desc torus B2
    f4desc orbits --half-dim 15
    f4desc verify c3-2
    f4desc exchange replay b3-descent
    f4desc selftest
"""

from __future__ import annotations

import json
import logging
import sys
from contextlib import contextmanager
from typing import Any, Iterator, Optional, Sequence

import typer
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from f4desc import __version__
from f4desc.chevalley.adjoint import commutator_formula
from f4desc.chevalley.constants import structure_constants
from f4desc.config import settings
from f4desc.descent.dimensions import all_pair_reports, descent_table, pair_feasibility
from f4desc.descent.identities import composition_identities, verify_all, verify_composition
from f4desc.exchange.loader import list_fixtures, load_fixture, replay_fixture
from f4desc.orbits.catalog import closure_leq, get_orbit, orbit_catalog, orbits_with_half_dim
from f4desc.roots.system import CocharWeight, Root, enumerate_positive_roots, enumerate_roots
from f4desc.roots.weyl import f4_weyl_group, weyl_apply, weyl_apply_cochar
from f4desc.selftest import run_selftest
from f4desc.stabilizers.f4a2 import f4a2_stab_dim
from f4desc.stabilizers.f4a3 import f4a3_discriminant, f4a3_reduced_system, f4a3_stab
from f4desc.stabilizers.schemas import F4a2Char, Mat3J, parse_rationals
from f4desc.tori.engine import compose, match_to_orbit, sub_torus, torus_of_orbit
from f4desc.tori.symplectic import sp_orbit_dim, sp_partition_torus

# ---------------------------------------------------------------------------
# App & console setup
# ---------------------------------------------------------------------------

app = typer.Typer(
    name="f4desc",
    help="f4desc: exact F4 root, orbit, torus, stabilizer and descent bookkeeping.",
    add_completion=False,
    rich_markup_mode="rich",
)
weyl_app = typer.Typer(help="Weyl words acting on roots and cocharacters.", add_completion=False)
stab_app = typer.Typer(help="Stabilizer computations for F4(a3) pairs and F4(a2) characters.")
descent_app = typer.Typer(help="Descent table from the dimension equation.")
exchange_app = typer.Typer(help="Root-exchange fixtures.")
app.add_typer(weyl_app, name="weyl")
app.add_typer(stab_app, name="stab")
app.add_typer(descent_app, name="descent")
app.add_typer(exchange_app, name="exchange")

console = Console()
err_console = Console(stderr=True, style="bold red")

logging.basicConfig(
    level=getattr(logging, settings.log_level.upper(), logging.INFO),
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    stream=sys.stderr,
)
logger = logging.getLogger("f4desc.cli")

FORMATS = ("json", "tsv", "table")

FormatOption = typer.Option(
    None, "--format", "-f", help="Output format: json, tsv or table (default from F4DESC_OUTPUT_FORMAT)"
)

# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def _resolve_format(fmt: Optional[str]) -> str:
    value = (fmt or settings.output_format).lower()
    if value not in FORMATS:
        raise ValueError(f"Unknown format {fmt!r}; choose one of {', '.join(FORMATS)}")
    return value


def _cell(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ",".join(_cell(v) for v in value)
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _emit(
    command: str,
    payload: Any,
    columns: Sequence[str],
    rows: Sequence[Sequence[Any]],
    fmt: Optional[str],
    title: str = "",
    ok: bool = True,
) -> None:
    """Print the payload in the requested format; exit 1 afterwards if ``ok`` is false."""
    out = _resolve_format(fmt)
    if out == "json":
        envelope = {
            "schema_version": settings.schema_version,
            "command": command,
            "payload": payload,
            "status": "ok" if ok else "failed",
        }
        typer.echo(json.dumps(envelope, sort_keys=True, ensure_ascii=False, default=str))
    elif out == "tsv":
        typer.echo("\t".join(columns))
        for row in rows:
            typer.echo("\t".join(_cell(v) for v in row))
    else:
        table = Table(title=title or command, box=box.ROUNDED)
        for name in columns:
            table.add_column(name, style="cyan" if name == columns[0] else None)
        for row in rows:
            table.add_row(*(_cell(v) for v in row))
        console.print(table)
    if not ok:
        raise typer.Exit(1)


@contextmanager
def _handled(command: str) -> Iterator[None]:
    """ValueError → exit 2; anything unexpected → exit 1 with a logged traceback."""
    try:
        yield
    except typer.Exit:
        raise
    except ValueError as exc:
        err_console.print(f"{command}: {exc}")
        raise typer.Exit(2)
    except Exception as exc:
        err_console.print(f"{command} failed: {exc}")
        logger.exception("CLI %s command failed", command)
        raise typer.Exit(1)


# ---------------------------------------------------------------------------
# Command: roots
# ---------------------------------------------------------------------------


@app.command("roots")
def roots(
    count: bool = typer.Option(False, "--count", help="Only print the number of roots"),
    positive: bool = typer.Option(False, "--positive", "-p", help="Positive roots only"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """List the roots of F4 in canonical order.

    Examples:

      f4desc roots --count

      f4desc roots --positive --format tsv
    """
    with _handled("roots"):
        items = enumerate_positive_roots() if positive else enumerate_roots()
        if count:
            _emit("roots", {"count": len(items)}, ["count"], [[len(items)]], fmt)
            return
        payload = [
            {"root": str(r), "height": r.height, "length": "long" if r.is_long else "short"}
            for r in items
        ]
        rows = [[p["root"], p["height"], p["length"]] for p in payload]
        _emit("roots", payload, ["root", "height", "length"], rows, fmt, title="F4 roots")


# ---------------------------------------------------------------------------
# Command: weyl
# ---------------------------------------------------------------------------


@weyl_app.command("apply")
def weyl_apply_cmd(
    word: str = typer.Argument(..., help="Weyl word, e.g. w[234] or 234"),
    root: str = typer.Argument(..., help="Root, e.g. 1100 or -0121"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Apply w[i1..im] to a root; the rightmost reflection acts first."""
    with _handled("weyl apply"):
        image = weyl_apply(word, root)
        payload = {"word": word, "root": str(Root.of(root)), "image": str(image)}
        _emit("weyl apply", payload, list(payload), [list(payload.values())], fmt)


@weyl_app.command("cochar")
def weyl_cochar_cmd(
    word: str = typer.Argument(..., help="Weyl word, e.g. w[234]"),
    weight: str = typer.Argument(..., help="Cocharacter exponents r1,r2,r3,r4"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Apply a Weyl word to a cocharacter h(t^r1, t^r2, t^r3, t^r4).

    Examples:

      f4desc weyl cochar w[234] 10,18,12,4
    """
    with _handled("weyl cochar"):
        image = weyl_apply_cochar(word, weight)
        payload = {"word": word, "weight": str(CocharWeight.of(weight)), "image": str(image)}
        _emit("weyl cochar", payload, list(payload), [list(payload.values())], fmt)


@weyl_app.command("order")
def weyl_order_cmd(fmt: Optional[str] = FormatOption) -> None:
    """Order of the Weyl group of F4."""
    with _handled("weyl order"):
        order = len(f4_weyl_group())
        _emit("weyl order", {"order": order}, ["order"], [[order]], fmt)


# ---------------------------------------------------------------------------
# Command: commutator / constants
# ---------------------------------------------------------------------------


@app.command("commutator")
def commutator(
    alpha: str = typer.Argument(..., help="First root α"),
    beta: str = typer.Argument(..., help="Second root β (β ≠ ±α)"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Chevalley commutator x_β(s)⁻¹x_α(r)⁻¹x_β(s)x_α(r) as a product of root elements.

    Examples:

      f4desc commutator 1100 0010
    """
    with _handled("commutator"):
        expansion = commutator_formula(alpha, beta)
        payload = expansion.model_dump(mode="json")
        rows = [[t.root, t.coefficient, f"r^{t.degree[0]} s^{t.degree[1]}"] for t in expansion.terms]
        _emit("commutator", payload, ["root", "coefficient", "monomial"], rows, fmt)


@app.command("constants")
def constants(fmt: Optional[str] = FormatOption) -> None:
    """Every nonzero structure constant N_{α,β}."""
    with _handled("constants"):
        entries = structure_constants().entries()
        payload = [e.model_dump(mode="json") for e in entries]
        rows = [[e.alpha, e.beta, e.total, e.n] for e in entries]
        _emit("constants", payload, ["alpha", "beta", "alpha+beta", "N"], rows, fmt)


# ---------------------------------------------------------------------------
# Command: orbits / grade
# ---------------------------------------------------------------------------


@app.command("orbits")
def orbits(
    half_dim: Optional[int] = typer.Option(None, "--half-dim", "-k", help="Orbits of this half-dimension"),
    leq: Optional[tuple[str, str]] = typer.Option(None, "--leq", help="Test closure order: A ≤ B"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """The unipotent orbit catalog of F4.

    Examples:

      f4desc orbits

      f4desc orbits --half-dim 15

      f4desc orbits --leq A2 F4a3
    """
    with _handled("orbits"):
        if leq and all(leq):
            a, b = (get_orbit(x).label for x in leq)
            result = closure_leq(a, b)
            payload = {"a": a, "b": b, "leq": result}
            _emit("orbits", payload, ["a", "b", "leq"], [[a, b, result]], fmt)
            return
        records = orbits_with_half_dim(half_dim) if half_dim is not None else list(orbit_catalog())
        payload = [r.summary() for r in records]
        rows = [[r.label, r.alias, str(r.diagram), r.dim, r.half_dim, r.stabilizer] for r in records]
        _emit(
            "orbits",
            payload,
            ["label", "alias", "diagram", "dim", "half_dim", "stabilizer"],
            rows,
            fmt,
            title="Unipotent orbits of F4",
        )


@app.command("grade")
def grade(
    orbit: str = typer.Argument(..., help="Orbit label, e.g. B2 or A2t"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Roots of U_Δ by level for one orbit."""
    with _handled("grade"):
        record = get_orbit(orbit)
        levels = record.grading.as_text()
        payload = {
            "orbit": record.label,
            "diagram": str(record.diagram),
            "half_dim": record.grading.half_dim,
            "levels": {str(k): v for k, v in levels.items()},
        }
        rows = [[k, len(v), v] for k, v in levels.items()]
        _emit("grade", payload, ["level", "count", "roots"], rows, fmt, title=f"Grading of {record.label}")


# ---------------------------------------------------------------------------
# Command: torus / match-torus / compose / sp-torus
# ---------------------------------------------------------------------------


@app.command("torus")
def torus_cmd(
    orbit: str = typer.Argument(..., help="Orbit label"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """One-parameter torus h_O(t) of an orbit.

    Examples:

      f4desc torus B2
    """
    with _handled("torus"):
        record = get_orbit(orbit)
        weight = torus_of_orbit(record.label)
        payload = {"orbit": record.label, "diagram": str(record.diagram), "weight": list(weight.exponents)}
        _emit("torus", payload, ["orbit", "diagram", "weight"], [[record.label, str(record.diagram), str(weight)]], fmt)


@app.command("match-torus")
def match_torus(
    weight: str = typer.Option(..., "--weight", "-w", help="Exponents r1,r2,r3,r4"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Find the orbit whose torus is Weyl-conjugate to the given weight."""
    with _handled("match-torus"):
        match = match_to_orbit(weight)
        payload = match.model_dump(mode="json") if match else None
        rows = [[match.label, match.witness_word, match.image]] if match else []
        _emit("match-torus", payload, ["orbit", "witness", "image"], rows, fmt, ok=match is not None)


@app.command("compose")
def compose_cmd(
    orbit: str = typer.Option(..., "--orbit", "-o", help="Host orbit label"),
    sub: str = typer.Option(..., "--sub", "-s", help="Stabilizer orbit tag, e.g. (2) or G2(a1)"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Compose a host torus with an embedded stabilizer torus and match the result.

    Examples:

      f4desc compose --orbit C3 --sub "(2)"
    """
    with _handled("compose"):
        entry = sub_torus(orbit, sub)
        composite = compose(torus_of_orbit(entry.host), entry.weight)
        match = match_to_orbit(composite)
        payload = {
            "host": get_orbit(entry.host).label,
            "sub": entry.tag,
            "sub_weight": list(entry.weight.exponents),
            "composite": list(composite.exponents),
            "match": match.model_dump(mode="json") if match else None,
        }
        rows = [[payload["host"], entry.tag, str(composite), match.label if match else "", match.witness_word if match else ""]]
        _emit("compose", payload, ["host", "sub", "composite", "orbit", "witness"], rows, fmt, ok=match is not None)


@app.command("sp-torus")
def sp_torus(
    partition: str = typer.Argument(..., help="Symplectic partition, e.g. 211 or 4,2"),
    size: int = typer.Option(..., "--size", "-n", help="Size 2m of Sp_2m"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Torus and orbit dimension of a symplectic partition."""
    with _handled("sp-torus"):
        t = sp_partition_torus(size, partition)
        dim = sp_orbit_dim(size, t.partition)
        payload = {"partition": list(t.partition), "exponents": list(t.exponents), "dim": dim}
        _emit("sp-torus", payload, ["partition", "exponents", "dim"], [[t.partition, t.exponents, dim]], fmt)


# ---------------------------------------------------------------------------
# Command: stab / discriminant
# ---------------------------------------------------------------------------


@stab_app.command("f4a3")
def stab_f4a3(
    a: str = typer.Option(..., "--a", help="Six entries r1..r6 of A"),
    b: str = typer.Option(..., "--b", help="Six entries r1..r6 of B"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Stabilizer of an F4(a3) character pair (A, B).

    Examples:

      f4desc stab f4a3 --a 1,0,0,0,1,0 --b 0,0,1,1,0,0
    """
    with _handled("stab f4a3"):
        result = f4a3_stab(Mat3J.of(parse_rationals(a, 6)), Mat3J.of(parse_rationals(b, 6)))
        payload = result.model_dump(mode="json")
        rows = [[k + 1, s.h1, s.g1] for k, s in enumerate(result.basis)]
        _emit("stab f4a3", payload, ["basis", "h1", "g1"], rows, fmt, title=f"dimension {result.dimension}")


@stab_app.command("f4a2")
def stab_f4a2(
    chi: str = typer.Option(..., "--chi", help="Eight coordinates a1..a6, γ1, γ2"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Infinitesimal stabilizer dimension of an F4(a2) character."""
    with _handled("stab f4a2"):
        result = f4a2_stab_dim(F4a2Char.of(parse_rationals(chi, 8)))
        payload = result.model_dump(mode="json")
        rows = [[result.dimension, result.rank, result.acting_dimension]]
        _emit("stab f4a2", payload, ["dimension", "rank", "acting_dimension"], rows, fmt)


@app.command("discriminant")
def discriminant(
    m: str = typer.Argument(...),
    n: str = typer.Argument(...),
    z: str = typer.Argument(...),
    fmt: Optional[str] = FormatOption,
) -> None:
    """f(m, n, z) and the determinant of the reduced stabilizer system.

    Examples:

      f4desc discriminant 1 0 0
    """
    with _handled("discriminant"):
        f = f4a3_discriminant(m, n, z)
        det = f4a3_reduced_system(m, n, z).det()
        payload = {"m": m, "n": n, "z": z, "f": str(f), "det": str(det), "generic": f != 0}
        _emit("discriminant", payload, list(payload), [list(payload.values())], fmt)


# ---------------------------------------------------------------------------
# Command: descent / pairs / verify
# ---------------------------------------------------------------------------


@descent_app.command("table")
def descent_table_cmd(fmt: Optional[str] = FormatOption) -> None:
    """Required dim E = ½dim O + dim σ for every candidate descent."""
    with _handled("descent table"):
        rows_data = descent_table()
        payload = [r.model_dump(mode="json") for r in rows_data]
        rows = [
            [r.orbit, r.stabilizer, r.tag, r.dim_sigma, r.dim_e, r.feasible, r.orbits, r.note]
            for r in rows_data
        ]
        _emit(
            "descent table",
            payload,
            ["orbit", "stabilizer", "tag", "dim_sigma", "dim_e", "feasible", "orbits", "note"],
            rows,
            fmt,
            title="Descent table",
        )


@app.command("pairs")
def pairs(
    name: Optional[str] = typer.Argument(None, help="Pair, e.g. SL2/Sp6 (default: all five)"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Feasible dim E for the commuting pairs in F4.

    Examples:

      f4desc pairs

      f4desc pairs SL2/Sp6 --format tsv
    """
    with _handled("pairs"):
        reports = [pair_feasibility(name)] if name else all_pair_reports()
        payload = [r.model_dump(mode="json") for r in reports]
        rows = [
            [r.pair, o.direction, o.dim_pi, o.dim_sigma, o.dim_e, o.feasible, o.orbits]
            for r in reports
            for o in r.forward + r.reverse
        ]
        _emit(
            "pairs",
            payload,
            ["pair", "direction", "dim_pi", "dim_sigma", "dim_e", "feasible", "orbits"],
            rows,
            fmt,
        )


@app.command("verify")
def verify(
    identity: Optional[str] = typer.Argument(None, help="Identity name, e.g. c3-2"),
    all_: bool = typer.Option(False, "--all", help="Verify every registered identity"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Verify composition identities at the torus level.

    Examples:

      f4desc verify c3-2

      f4desc verify --all --format table
    """
    with _handled("verify"):
        if all_:
            reports = verify_all()
        elif identity:
            reports = [verify_composition(identity)]
        else:
            known = ", ".join(composition_identities())
            raise ValueError(f"Give an identity name or --all; known: {known}")
        payload = [r.model_dump(mode="json") for r in reports]
        rows = [
            [r.name, r.equation, r.is_valid, r.matched or "", r.witness or "", r.half_dim_gap]
            for r in reports
        ]
        ok = all(r.is_valid for r in reports)
        _emit("verify", payload, ["name", "equation", "valid", "match", "witness", "gap"], rows, fmt, ok=ok)


# ---------------------------------------------------------------------------
# Command: exchange
# ---------------------------------------------------------------------------


@exchange_app.command("list")
def exchange_list(fmt: Optional[str] = FormatOption) -> None:
    """Shipped proof-chain fixtures."""
    with _handled("exchange list"):
        fixtures = [load_fixture(name) for name in list_fixtures()]
        payload = [{"name": f.name, "steps": len(f.steps), "description": f.description} for f in fixtures]
        rows = [[p["name"], p["steps"], p["description"]] for p in payload]
        _emit("exchange list", payload, ["name", "steps", "description"], rows, fmt)


@exchange_app.command("replay")
def exchange_replay(
    fixture: str = typer.Argument(..., help="Fixture name or path to a YAML file"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Replay an exchange script, stopping at the first failed step.

    Examples:

      f4desc exchange replay b3-descent

      f4desc exchange replay ./my-chain.yaml --format table
    """
    with _handled("exchange replay"):
        result = replay_fixture(fixture)
        payload = {
            "fixture": result.fixture,
            "completed": result.completed,
            "steps_applied": result.steps_applied,
            "diagnostic": result.diagnostic,
            "reports": [r.model_dump(mode="json") for r in result.reports],
            "final": result.final.summary(),
        }
        rows = [
            [k + 1, r.step, r.is_valid, r.coefficient if r.coefficient is not None else "", r.higher_terms, r.errors]
            for k, r in enumerate(result.reports)
        ]
        _emit(
            "exchange replay",
            payload,
            ["step", "move", "valid", "|c|", "higher_terms", "errors"],
            rows,
            fmt,
            title=result.fixture,
            ok=result.completed,
        )


# ---------------------------------------------------------------------------
# Command: selftest
# ---------------------------------------------------------------------------


@app.command("selftest")
def selftest(
    only: Optional[str] = typer.Option(None, "--only", help="Comma-separated criterion numbers"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Override F4DESC_RANDOM_SEED"),
    fmt: Optional[str] = FormatOption,
) -> None:
    """Run the acceptance suite; exit 1 on any failure."""
    with _handled("selftest"):
        criteria = [int(x) for x in only.split(",") if x.strip()] if only else None
        if _resolve_format(fmt) == "table":
            console.print(Panel(f"[bold cyan]f4desc {__version__} selftest[/bold cyan]", expand=False))
        report = run_selftest(only=criteria, seed=seed)
        payload = report.model_dump(mode="json")
        rows = [[c.criterion, c.name, c.passed, f"{c.seconds:.3f}", c.detail] for c in report.checks]
        _emit("selftest", payload, ["criterion", "name", "passed", "seconds", "detail"], rows, fmt, ok=report.is_valid)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

if __name__ == "__main__":
    app()

"""Export the reference tables as TSV files.

Usage:
    python -m scripts.export_tables --out tables/
    python -m scripts.export_tables --out tables/ --only orbits tori

Writes one file per table (roots, constants, orbits, tori, descent,
identities, pairs) so the numbers can be diffed between releases.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path
from typing import Callable, Iterable, Sequence

# Ensure f4desc is importable when run as `python -m scripts.export_tables`
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from f4desc.chevalley.constants import structure_constants
from f4desc.descent.dimensions import all_pair_reports, descent_table
from f4desc.descent.identities import verify_all
from f4desc.orbits.catalog import orbit_catalog
from f4desc.roots.system import enumerate_roots
from f4desc.tori.engine import orbit_tori

logging.basicConfig(level=logging.INFO, format="%(levelname)s  %(name)s  %(message)s")
logger = logging.getLogger("f4desc.export_tables")

Table = tuple[list[str], Iterable[Sequence]]


# ---------------------------------------------------------------------------
# Tables
# ---------------------------------------------------------------------------


def _roots() -> Table:
    rows = ((str(r), r.height, "long" if r.is_long else "short") for r in enumerate_roots())
    return ["root", "height", "length"], rows


def _constants() -> Table:
    rows = ((e.alpha, e.beta, e.total, e.n) for e in structure_constants().entries())
    return ["alpha", "beta", "alpha+beta", "N"], rows


def _orbits() -> Table:
    rows = (
        (r.label, r.alias, str(r.diagram), r.dim, r.half_dim, r.stabilizer)
        for r in orbit_catalog()
    )
    return ["label", "alias", "diagram", "dim", "half_dim", "stabilizer"], rows


def _tori() -> Table:
    rows = ((label, str(w)) for label, w in orbit_tori().items())
    return ["orbit", "weight"], rows


def _descent() -> Table:
    rows = (
        (r.orbit, r.stabilizer, r.tag, r.dim_sigma, r.dim_e, r.feasible, ",".join(r.orbits), r.note)
        for r in descent_table()
    )
    return ["orbit", "stabilizer", "tag", "dim_sigma", "dim_e", "feasible", "orbits", "note"], rows


def _identities() -> Table:
    rows = (
        (r.name, r.equation, r.is_valid, r.matched or "", r.witness or "", r.half_dim_gap)
        for r in verify_all()
    )
    return ["name", "equation", "valid", "match", "witness", "gap"], rows


def _pairs() -> Table:
    rows = (
        (r.pair, o.direction, o.dim_pi, o.dim_sigma, o.dim_e, o.feasible, ",".join(o.orbits))
        for r in all_pair_reports()
        for o in r.forward + r.reverse
    )
    return ["pair", "direction", "dim_pi", "dim_sigma", "dim_e", "feasible", "orbits"], rows


TABLES: dict[str, Callable[[], Table]] = {
    "roots": _roots,
    "constants": _constants,
    "orbits": _orbits,
    "tori": _tori,
    "descent": _descent,
    "identities": _identities,
    "pairs": _pairs,
}


def export(out: Path, names: Sequence[str]) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name in names:
        header, rows = TABLES[name]()
        path = out / f"{name}.tsv"
        with path.open("w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, delimiter="\t", lineterminator="\n")
            writer.writerow(header)
            count = 0
            for row in rows:
                writer.writerow(row)
                count += 1
        logger.info("Wrote %s (%d rows)", path, count)
        written.append(path)
    return written


def main() -> None:
    parser = argparse.ArgumentParser(description="Export f4desc reference tables as TSV")
    parser.add_argument("--out", type=Path, default=Path("tables"), help="Output directory")
    parser.add_argument(
        "--only", nargs="+", choices=sorted(TABLES), default=None,
        help="Subset of tables (e.g. --only orbits tori)",
    )
    args = parser.parse_args()
    export(args.out, args.only or list(TABLES))


if __name__ == "__main__":
    main()

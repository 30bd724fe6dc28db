"""Bundled table data: the three parameter tables, the symmetry table, and
the six example-presentation tables.

Files live under ``artinhexa/data`` and can be overridden by pointing the
``ARTINHEXA_DATA`` environment variable at a directory with the same file
names.  Loaders keep each table's printed column order; reordering into the
canonical slot order happens only at instantiation time.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from importlib.resources import files

from .hexa import SLOTS, HexError, HexSymmetry, ParamRow, parse_cell
from .relexpr import RelatorExpr, parse_relator_expr

DATA_ENV = "ARTINHEXA_DATA"

PARAM_TABLES = (1, 2, 3)
EXAMPLE_TABLES = (5, 6, 7, 8, 9, 10)
# which parameter table each example table's rows were generated from
EXAMPLE_SOURCES = {5: 1, 6: 1, 7: 2, 8: 2, 9: 3, 10: 3}


class TableError(ValueError):
    pass


def read_data_text(name: str) -> str:
    override = os.environ.get(DATA_ENV)
    if override:
        path = os.path.join(override, name)
        if not os.path.exists(path):
            raise TableError(f"{DATA_ENV} set but {path} is missing")
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    return files("artinhexa").joinpath("data", name).read_text(encoding="utf-8")


def _rows(text: str, name: str) -> list[list[str]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        out.append([cell.strip() for cell in line.split("\t")])
    if not out:
        raise TableError(f"{name} is empty")
    return out


@lru_cache(maxsize=None)
def load_table(table_id: int) -> tuple[ParamRow, ...]:
    """Parameter table 1, 2 or 3 in its printed column order."""
    if table_id not in PARAM_TABLES:
        raise TableError(f"no parameter table {table_id}")
    name = f"table{table_id}.tsv"
    lines = _rows(read_data_text(name), name)
    order = tuple(lines[0][0].split())
    if sorted(order) != sorted(SLOTS):
        raise TableError(f"{name}: bad column declaration {lines[0]}")
    rows = []
    for cells in lines[1:]:
        if len(cells) != 7:
            raise TableError(f"{name}: expected row number + 6 cells, got {cells}")
        rows.append(
            ParamRow(
                table_id=table_id,
                row=int(cells[0]),
                column_order=order,
                cells=tuple(parse_cell(c) for c in cells[1:]),
            )
        )
    return tuple(rows)


@lru_cache(maxsize=None)
def load_symmetries() -> tuple[HexSymmetry, ...]:
    """The 24 symmetry assignments, verbatim as shipped (row 1 is the
    identity).  Validation is a separate, explicit step; loading never
    corrects anything."""
    name = "symmetries.tsv"
    lines = _rows(read_data_text(name), name)
    order = tuple(lines[0][0].split())
    if sorted(order) != sorted(SLOTS):
        raise TableError(f"{name}: bad column declaration {lines[0]}")
    syms = []
    for cells in lines[1:]:
        if len(cells) != 7:
            raise TableError(f"{name}: expected index + 6 sources, got {cells}")
        by_slot = dict(zip(order, cells[1:]))
        try:
            syms.append(
                HexSymmetry(int(cells[0]), tuple(by_slot[s] for s in SLOTS))
            )
        except HexError as exc:
            raise TableError(f"{name} row {cells[0]}: {exc}") from exc
    return tuple(syms)


def identity_symmetry() -> HexSymmetry:
    for sym in load_symmetries():
        if sym.is_identity():
            return sym
    raise TableError("symmetry table has no identity row")


def symmetry_by_index(index: int) -> HexSymmetry:
    for sym in load_symmetries():
        if sym.index == index:
            return sym
    raise TableError(f"no symmetry with index {index}")


@dataclass(frozen=True)
class ExampleRow:
    """One example-table presentation: three relator expressions, possibly
    with one symbolic exponent variable."""

    table: int
    row: int
    relators: tuple[RelatorExpr, RelatorExpr, RelatorExpr]

    @property
    def source_table(self) -> int:
        return EXAMPLE_SOURCES[self.table]

    def variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for r in self.relators:
            for v in r.variables():
                if v not in seen:
                    seen.append(v)
        return tuple(seen)

    @property
    def is_concrete(self) -> bool:
        return not self.variables()


@lru_cache(maxsize=None)
def load_examples(table: int) -> tuple[ExampleRow, ...]:
    if table not in EXAMPLE_TABLES:
        raise TableError(f"no example table {table}")
    name = f"examples{table}.tsv"
    lines = _rows(read_data_text(name), name)
    rows = []
    for cells in lines:
        if len(cells) != 4:
            raise TableError(f"{name}: expected row number + 3 relators, got {cells}")
        rows.append(
            ExampleRow(
                table=table,
                row=int(cells[0]),
                relators=tuple(parse_relator_expr(c) for c in cells[1:]),
            )
        )
    return tuple(rows)

"""Batch verification pipeline over the parameter tables.

Every instantiated filling (optionally swept through the 24 symmetries and
the mirror transform) runs the full chain: presentation generation, both
Artin identities, abelian invariants, the triviality search, and the
hyperbolicity classification of the associated surgery braid.  Rows come
out in a fixed canonical order whatever the worker count, so reports are
byte-identical across ``jobs`` settings.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .artin import gen_from_hex, verify_artin
from .braids import classify
from .hexa import HexFilling, HexSymmetry, instantiate_row, to_surgery
from .tables import (
    EXAMPLE_TABLES,
    ExampleRow,
    identity_symmetry,
    load_examples,
    load_symmetries,
    load_table,
)
from .triviality import DEFAULT_BUDGET, abelian_invariants, simplify
from .words import serialize_word

Assignment = tuple[tuple[str, int], ...]


@dataclass(frozen=True)
class Task:
    table: int
    row: int
    assignment: Assignment
    branch: str
    symmetry: int
    mirrored: bool
    filling: HexFilling


@dataclass(frozen=True)
class ReportRow:
    table: int
    row: int
    assignment: Assignment
    branch: str
    symmetry: int
    mirrored: bool
    filling: HexFilling
    relators: tuple[str, str, str]
    artin_w: bool
    artin_f: bool
    divisors: tuple[int, ...]
    verdict: str
    braid_class: str
    example_match: str = ""

    def sort_key(self):
        return (
            self.table,
            self.row,
            self.assignment,
            self.branch,
            self.symmetry,
            self.mirrored,
        )


TSV_COLUMNS = (
    "table",
    "row",
    "assignment",
    "branch",
    "symmetry",
    "mirror",
    "filling",
    "r1",
    "r2",
    "r3",
    "artin_w",
    "artin_f",
    "divisors",
    "verdict",
    "braid_class",
    "example_match",
)


def assignments_for(variables: Sequence[str], param_range: tuple[int, int]) -> list[Assignment]:
    lo, hi = param_range
    if lo > hi:
        raise ValueError(f"empty parameter range {lo}..{hi}")
    values = range(lo, hi + 1)
    return [
        tuple(zip(variables, combo))
        for combo in itertools.product(values, repeat=len(variables))
    ]


def build_tasks(
    tables: Iterable[int] = (1, 2, 3),
    param_range: tuple[int, int] = (-5, 5),
    symmetries: str = "all",
    mirror: bool = False,
) -> list[Task]:
    if symmetries not in ("all", "id"):
        raise ValueError(f"symmetries must be 'all' or 'id', got {symmetries!r}")
    syms: tuple[HexSymmetry, ...]
    syms = load_symmetries() if symmetries == "all" else (identity_symmetry(),)
    tasks = []
    for table_id in tables:
        for row in load_table(table_id):
            for assignment in assignments_for(row.variables(), param_range):
                for branch, base in instantiate_row(row, dict(assignment)):
                    for sym in syms:
                        image = sym.apply(base)
                        for mirrored in (False, True) if mirror else (False,):
                            filling = image.mirror() if mirrored else image
                            tasks.append(
                                Task(
                                    table_id,
                                    row.row,
                                    assignment,
                                    branch,
                                    sym.index,
                                    mirrored,
                                    filling,
                                )
                            )
    return tasks


# worker configuration travels via the initializer so Pool.map stays a plain
# map over picklable tasks
_WORKER_CFG = {"budget": DEFAULT_BUDGET, "run_simplify": True}


def _init_worker(budget: int, run_simplify: bool) -> None:
    _WORKER_CFG["budget"] = budget
    _WORKER_CFG["run_simplify"] = run_simplify


def _run_task(task: Task) -> ReportRow:
    pres = gen_from_hex(task.filling)
    check = verify_artin(pres)
    divisors = abelian_invariants(pres)
    if _WORKER_CFG["run_simplify"]:
        verdict = simplify(pres, _WORKER_CFG["budget"]).tag
    else:
        verdict = "-"
    braid = classify(to_surgery(task.filling).braid)
    return ReportRow(
        table=task.table,
        row=task.row,
        assignment=task.assignment,
        branch=task.branch,
        symmetry=task.symmetry,
        mirrored=task.mirrored,
        filling=task.filling,
        relators=pres.serialized_relators(),
        artin_w=check.w,
        artin_f=check.f,
        divisors=divisors,
        verdict=verdict,
        braid_class=str(braid),
    )


def run_tables(
    tables: Iterable[int] = (1, 2, 3),
    param_range: tuple[int, int] = (-5, 5),
    symmetries: str = "all",
    mirror: bool = False,
    jobs: int = 1,
    budget: int = DEFAULT_BUDGET,
    run_simplify: bool = True,
    annotate_examples: bool = True,
) -> list[ReportRow]:
    tasks = build_tasks(tables, param_range, symmetries, mirror)
    if jobs <= 1:
        _init_worker(budget, run_simplify)
        rows = [_run_task(t) for t in tasks]
    else:
        with multiprocessing.Pool(
            jobs, initializer=_init_worker, initargs=(budget, run_simplify)
        ) as pool:
            rows = pool.map(_run_task, tasks, chunksize=64)
    if annotate_examples:
        index = example_index(param_range)
        rows = [
            replace(row, example_match=index[row.relators]) if row.relators in index else row
            for row in rows
        ]
    return rows


def _example_instances(example: ExampleRow, param_range: tuple[int, int]):
    """Concrete relator triples of one printed example row; parametric rows
    are expanded over the same grid as their source table."""
    variables = example.variables()
    for assignment in assignments_for(variables, param_range):
        env = dict(assignment)
        triple = tuple(serialize_word(r.instantiate(env)) for r in example.relators)
        yield assignment, triple


def example_index(param_range: tuple[int, int]) -> dict[tuple[str, str, str], str]:
    """Map reduced relator triples to their example-table coordinates."""
    index: dict[tuple[str, str, str], str] = {}
    for table in EXAMPLE_TABLES:
        for example in load_examples(table):
            for _, triple in _example_instances(example, param_range):
                index.setdefault(triple, f"{table}:{example.row}")
    return index


@dataclass(frozen=True)
class ExampleMatch:
    table: int
    row: int
    concrete: bool
    instances: int
    matched: int
    first_match: str  # report-row coordinates, "" when unmatched

    @property
    def fully_matched(self) -> bool:
        return self.instances > 0 and self.matched == self.instances


def match_examples(
    rows: Sequence[ReportRow],
    param_range: tuple[int, int] = (-5, 5),
    tables: Iterable[int] = EXAMPLE_TABLES,
) -> list[ExampleMatch]:
    """Compare every example-table row against the generated report.

    Concrete rows are matched as printed; parametric rows are matched
    instance by instance on the shared grid.  Unmatched rows are findings
    to report, not failures.
    """
    by_triple: dict[tuple[str, str, str], ReportRow] = {}
    for row in rows:
        by_triple.setdefault(row.relators, row)
    out = []
    for table in tables:
        for example in load_examples(table):
            matched = 0
            first = ""
            total = 0
            for assignment, triple in _example_instances(example, param_range):
                total += 1
                hit = by_triple.get(triple)
                if hit is not None:
                    matched += 1
                    if not first:
                        loc = f"table{hit.table} row {hit.row} sym {hit.symmetry}"
                        if hit.branch:
                            loc += f" branch {hit.branch}"
                        if assignment:
                            loc += " at " + format_assignment(assignment)
                        first = loc
            out.append(
                ExampleMatch(
                    table=table,
                    row=example.row,
                    concrete=example.is_concrete,
                    instances=total,
                    matched=matched,
                    first_match=first,
                )
            )
    return out


def format_assignment(assignment: Assignment) -> str:
    return ",".join(f"{name}={value}" for name, value in assignment) if assignment else "-"


def _row_cells(row: ReportRow) -> list[str]:
    return [
        str(row.table),
        str(row.row),
        format_assignment(row.assignment),
        row.branch or "-",
        str(row.symmetry),
        "1" if row.mirrored else "0",
        str(row.filling),
        row.relators[0],
        row.relators[1],
        row.relators[2],
        "true" if row.artin_w else "false",
        "true" if row.artin_f else "false",
        ",".join(str(d) for d in row.divisors),
        row.verdict,
        row.braid_class,
        row.example_match or "-",
    ]


def report_tsv(rows: Sequence[ReportRow]) -> str:
    lines = ["\t".join(TSV_COLUMNS)]
    lines.extend("\t".join(_row_cells(row)) for row in rows)
    return "\n".join(lines) + "\n"


def report_json(rows: Sequence[ReportRow]) -> str:
    payload = [dict(zip(TSV_COLUMNS, _row_cells(row))) for row in rows]
    return json.dumps(payload, indent=2) + "\n"


def matches_tsv(matches: Sequence[ExampleMatch]) -> str:
    lines = ["\t".join(("example_table", "row", "kind", "instances", "matched", "first_match"))]
    for m in matches:
        lines.append(
            "\t".join(
                (
                    str(m.table),
                    str(m.row),
                    "concrete" if m.concrete else "parametric",
                    str(m.instances),
                    str(m.matched),
                    m.first_match or "-",
                )
            )
        )
    return "\n".join(lines) + "\n"


def matches_json(matches: Sequence[ExampleMatch]) -> str:
    payload = [
        {
            "example_table": m.table,
            "row": m.row,
            "kind": "concrete" if m.concrete else "parametric",
            "instances": m.instances,
            "matched": m.matched,
            "first_match": m.first_match,
        }
        for m in matches
    ]
    return json.dumps(payload, indent=2) + "\n"

"""Command-line surface.

Exit codes: 0 success, 1 domain error (bad input data, unsolvable request),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import artin, braids, freeprod, hexa, pipeline, tables, triviality, words


class DomainError(Exception):
    pass


def _parse_ints(text: str, count: int, what: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise DomainError(f"{what}: expected comma-separated integers, got {text!r}")
    if len(values) != count:
        raise DomainError(f"{what}: expected {count} integers, got {len(values)}")
    return values


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    except ValueError:
        raise DomainError(f"bad range {text!r}; expected LO..HI")


def _parse_onoff(text: str, what: str) -> bool:
    if text not in ("on", "off"):
        raise DomainError(f"{what}: expected on|off, got {text!r}")
    return text == "on"


def _load_presentation(path: str) -> artin.Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        raise DomainError(str(exc))
    if not lines or not lines[0].startswith("rank "):
        raise DomainError(f"{path}: first line must be 'rank N'")
    rank = int(lines[0].split()[1])
    relators = tuple(words.parse_word(line) for line in lines[1:])
    return artin.Presentation(rank, relators)


def _presentation_text(pres: artin.Presentation) -> str:
    out = [f"rank {pres.rank}"]
    out.extend(pres.serialized_relators())
    return "\n".join(out) + "\n"


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_gen_presentation(args) -> int:
    if (args.hex is None) == (args.params is None):
        raise DomainError("give exactly one of --hex or --params")
    if args.hex is not None:
        filling = hexa.HexFilling.from_tuple(_parse_ints(args.hex, 6, "--hex"))
        pres = artin.gen_from_hex(filling)
    else:
        m, n, p, e, e1, f1 = _parse_ints(args.params, 6, "--params")
        pres = artin.gen_from_params(artin.SurgeryParams(m, n, p, e, e1, f1))
    _emit(_presentation_text(pres), args.out)
    return 0


def _cmd_verify_artin(args) -> int:
    pres = _load_presentation(args.file)
    check = artin.verify_artin(pres)
    if args.condition in ("w", "both"):
        print(f"W {'true' if check.w else 'false'}")
    if args.condition in ("f", "both"):
        print(f"F {'true' if check.f else 'false'}")
    return 0


def _cmd_simplify(args) -> int:
    pres = _load_presentation(args.file)
    verdict = triviality.simplify(pres, args.budget)
    payload = verdict.as_json_dict()
    if not args.emit_log:
        del payload["moves"]
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_classify_braid(args) -> int:
    braid = braids.PureBraid(braids.parse_blocks(args.blocks), args.twist)
    print(braids.classify(braid))
    return 0


def _cmd_rho(args) -> int:
    letters = braids.parse_braid_word(args.braid_word)
    print(freeprod.serialize_fp_word(freeprod.rho(letters)))
    return 0


def _cmd_symmetry(args) -> int:
    filling = hexa.HexFilling.from_tuple(_parse_ints(args.hex, 6, "--hex"))
    sym = tables.symmetry_by_index(args.index)
    print(sym.apply(filling))
    return 0


def _cmd_orbit(args) -> int:
    filling = hexa.HexFilling.from_tuple(_parse_ints(args.hex, 6, "--hex"))
    include_mirror = _parse_onoff(args.mirror, "--mirror")
    for image in hexa.orbit(filling, tables.load_symmetries(), include_mirror):
        print(image)
    return 0


def _cmd_validate_symmetries(args) -> int:
    control = hexa.validate_symmetry_table(hexa.tetrahedral_control())
    print("control (programmatic tetrahedral edge action):")
    for line in control.lines():
        print("  " + line)
    table = hexa.validate_symmetry_table(tables.load_symmetries())
    print("bundled symmetry table:")
    for line in table.lines():
        print("  " + line)
    if table.passed:
        print("discrepancy report: empty")
    else:
        print("discrepancy report: bundled table FAILED checks above")
    return 0 if control.passed else 1


def _cmd_parse_cell(args) -> int:
    cell = hexa.parse_cell(args.cell)
    print(f"canonical {hexa.serialize_cell(cell)}")
    if args.assign:
        name, _, raw = args.assign.partition("=")
        try:
            assignment = {name.strip(): int(raw)}
        except ValueError:
            raise DomainError(f"bad --assign {args.assign!r}; expected var=int")
        print("values " + ",".join(str(v) for v in cell.values(assignment)))
    elif cell.var is None:
        print("values " + ",".join(str(v) for v in cell.values({})))
    return 0


def _report_args(args) -> dict:
    return dict(
        tables=tuple(int(t) for t in args.tables.split(",")),
        param_range=_parse_range(args.param_range),
        symmetries=args.symmetries,
        mirror=_parse_onoff(args.mirror, "--mirror"),
        jobs=args.jobs,
        budget=args.budget,
    )


def _cmd_run_tables(args) -> int:
    rows = pipeline.run_tables(**_report_args(args))
    text = pipeline.report_json(rows) if args.json else pipeline.report_tsv(rows)
    _emit(text, args.out)
    return 0


def _cmd_match_examples(args) -> int:
    cfg = _report_args(args)
    rows = pipeline.run_tables(**cfg, run_simplify=False)
    matches = pipeline.match_examples(rows, cfg["param_range"])
    text = pipeline.matches_json(matches) if args.json else pipeline.matches_tsv(matches)
    _emit(text, args.out)
    return 0


def _add_report_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--tables", default="1,2,3", help="parameter tables to run (default 1,2,3)")
    sub.add_argument("--param-range", default="-5..5", help="free-variable range LO..HI")
    sub.add_argument("--symmetries", choices=("all", "id"), default="all")
    sub.add_argument("--mirror", default="off", help="also sweep mirror images: on|off")
    sub.add_argument("--jobs", type=int, default=1, help="worker processes")
    sub.add_argument("--budget", type=int, default=triviality.DEFAULT_BUDGET)
    sub.add_argument("--out", help="write output to a file instead of stdout")
    sub.add_argument("--json", action="store_true", help="JSON instead of TSV")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="artinhexa",
        description="Artin 3-presentations from hexatangle fillings; "
        "hyperbolicity of closed pure 3-braids",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-presentation", help="generate the three relators")
    p.add_argument("--hex", help="filling alpha,beta,gamma,delta,epsilon,eta")
    p.add_argument("--params", help="surgery parameters m,n,p,e,e1,f1")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen_presentation)

    p = sub.add_parser("verify-artin", help="check the Artin identities of a presentation file")
    p.add_argument("--file", required=True)
    p.add_argument("--condition", choices=("w", "f", "both"), default="both")
    p.set_defaults(func=_cmd_verify_artin)

    p = sub.add_parser("simplify", help="run the triviality search on a presentation file")
    p.add_argument("--file", required=True)
    p.add_argument("--budget", type=int, default=triviality.DEFAULT_BUDGET)
    p.add_argument("--emit-log", action="store_true", help="include the move log")
    p.set_defaults(func=_cmd_simplify)

    p = sub.add_parser("classify-braid", help="hyperbolicity of a closed pure 3-braid")
    p.add_argument("--blocks", required=True, help='block exponents "e1,f1;e2,f2;..."')
    p.add_argument("--twist", type=int, default=0, help="full-twist exponent e")
    p.set_defaults(func=_cmd_classify_braid)

    p = sub.add_parser("rho", help="image of a braid word in Z2 * Z3")
    p.add_argument("--braid-word", required=True, help='e.g. "s1*s2^-1*s1"')
    p.set_defaults(func=_cmd_rho)

    p = sub.add_parser("symmetry", help="apply one symmetry row to a filling")
    p.add_argument("--index", type=int, required=True, help="symmetry number 1..24")
    p.add_argument("--hex", required=True)
    p.set_defaults(func=_cmd_symmetry)

    p = sub.add_parser("orbit", help="orbit of a filling under all symmetries")
    p.add_argument("--hex", required=True)
    p.add_argument("--mirror", default="off")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("validate-symmetries", help="validate the bundled symmetry table against the control")
    p.set_defaults(func=_cmd_validate_symmetries)

    p = sub.add_parser("parse-cell", help="parse a table cell expression")
    p.add_argument("cell")
    p.add_argument("--assign", help="variable assignment var=int")
    p.set_defaults(func=_cmd_parse_cell)

    p = sub.add_parser("run-tables", help="batch-verify the parameter tables")
    _add_report_flags(p)
    p.set_defaults(func=_cmd_run_tables)

    p = sub.add_parser("match-examples", help="match generated presentations against the example tables")
    _add_report_flags(p)
    p.set_defaults(func=_cmd_match_examples)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            return args.func(args)
    except (
        DomainError,
        artin.PresentationError,
        braids.BraidError,
        freeprod.FPWordError,
        hexa.HexError,
        tables.TableError,
        words.WordError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 oracle mismatch or internal consistency failure,
2 input/validation error, 3 resource guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .chromhom import AbstractGraph, chromatic_homology
from .errors import ComplexIntegrityError, ContractError, ResourceLimitError, UnsupportedInputError, ValidationError
from .khovanov import DEFAULT_MAX_CROSSINGS, KhTable, graded_euler, khovanov_homology
from .laurent import LaurentPoly, chromatic_state_sum, jones_state_sum, render_laurent
from .linkdiag import LinkDiagram, validate_link
from .spatialgraph import SpatialGraphDiagram, kauffman_family, validate_spatial

SUBCOMMANDS = ("kh", "jones", "family", "graphkh", "chrom", "validate")
FORMATS = ("table", "csv", "structured")

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    input_path: str
    output_format: str = "table"
    multiset: bool = False
    drop_empty: bool = False
    oracle: bool = False
    max_crossings: int = DEFAULT_MAX_CROSSINGS


class _InputError(Exception):
    pass


def _read_json(path: str) -> dict:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(f"{path}: cannot read ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise _InputError(f"{path}: expected a JSON object")
    return data


def _render_table(t: KhTable, fmt: str) -> str:
    if fmt == "csv":
        return t.to_csv()
    return t.to_grid()


def _oracle_line(equal: bool, got: LaurentPoly, want: LaurentPoly) -> str:
    if equal:
        return "ORACLE: EQUAL\n"
    return f"ORACLE: MISMATCH euler={render_laurent(got)} oracle={render_laurent(want)}\n"


def _emit_table(cfg: RunConfig, table: KhTable, extra: dict, oracle: Optional[Tuple[LaurentPoly, LaurentPoly]]) -> Tuple[int, str, str]:
    status = EXIT_OK
    if oracle is not None and oracle[0] != oracle[1]:
        return EXIT_MISMATCH, "", _oracle_line(False, *oracle)
    if cfg.output_format == "structured":
        doc = dict(extra)
        doc["table"] = table.to_structured()
        doc["euler"] = render_laurent(graded_euler(table))
        if oracle is not None:
            doc["oracle"] = "EQUAL"
        return status, json.dumps(doc, sort_keys=True) + "\n", ""
    out = _render_table(table, cfg.output_format)
    if oracle is not None:
        out += _oracle_line(True, *oracle)
    return status, out, ""


def _run_kh(cfg: RunConfig, data: dict):
    d = LinkDiagram.from_dict(data)
    validate_link(d).raise_if_bad()
    table = khovanov_homology(d, max_crossings=cfg.max_crossings)
    oracle = None
    if cfg.oracle:
        oracle = (graded_euler(table), jones_state_sum(d))
    return _emit_table(cfg, table, {"subcommand": "kh"}, oracle)


def _run_jones(cfg: RunConfig, data: dict):
    d = LinkDiagram.from_dict(data)
    validate_link(d).raise_if_bad()
    if len(d.crossings) > cfg.max_crossings:
        raise ResourceLimitError(f"diagram has {len(d.crossings)} crossings, guard is {cfg.max_crossings}")
    p = jones_state_sum(d)
    if cfg.output_format == "structured":
        doc = {"subcommand": "jones", "jones": render_laurent(p),
               "coefficients": [[e, c] for e, c in sorted(p.coeffs.items())]}
        return EXIT_OK, json.dumps(doc, sort_keys=True) + "\n", ""
    return EXIT_OK, render_laurent(p) + "\n", ""


def _family(cfg: RunConfig, data: dict):
    g = SpatialGraphDiagram.from_dict(data)
    validate_spatial(g).raise_if_bad()
    return kauffman_family(g, dedup_mode="multiset" if cfg.multiset else "set",
                           include_empty=not cfg.drop_empty, max_crossings=cfg.max_crossings)


def _run_family(cfg: RunConfig, data: dict):
    fam = _family(cfg, data)
    if cfg.output_format == "structured":
        doc = {"subcommand": "family", "dedup_mode": fam.dedup_mode,
               "members": [m.to_structured() for m in fam.members]}
        return EXIT_OK, json.dumps(doc, sort_keys=True) + "\n", ""
    out = []
    for k, m in enumerate(fam.members):
        choice = ",".join("-" if c is None else f"{c[0]}{c[1]}" for c in m.choice)
        out.append(f"# member {k}: choice={choice} crossings={len(m.diagram.crossings)} "
                   f"components={m.diagram.n_components}\n")
        out.append(_render_table(m.table, cfg.output_format))
    return EXIT_OK, "".join(out), ""


def _run_graphkh(cfg: RunConfig, data: dict):
    fam = _family(cfg, data)
    table = fam.total()
    oracle = None
    if cfg.oracle:
        want = LaurentPoly()
        for m in fam.members:
            want = want + jones_state_sum(m.diagram)
        oracle = (graded_euler(table), want)
    return _emit_table(cfg, table, {"subcommand": "graphkh", "members": len(fam.members)}, oracle)


def _run_chrom(cfg: RunConfig, data: dict):
    g = AbstractGraph.from_dict(data)
    table = chromatic_homology(g)
    oracle = None
    if cfg.oracle:
        oracle = (graded_euler(table), chromatic_state_sum(g).substitute(LaurentPoly({0: 1, 1: 1})))
    return _emit_table(cfg, table, {"subcommand": "chrom"}, oracle)


def _run_validate(cfg: RunConfig, data: dict):
    if "vertex_count" in data:
        kind = "graph"
        try:
            g = AbstractGraph.from_dict(data)
            problems = ["graph has a loop"] if g.has_loop() else []
        except ValidationError as exc:
            problems = exc.violations
    elif "vertices" in data:
        kind = "spatial"
        problems = list(validate_spatial(SpatialGraphDiagram.from_dict(data)).violations)
    else:
        kind = "link"
        problems = list(validate_link(LinkDiagram.from_dict(data)).violations)
    if cfg.output_format == "structured":
        doc = {"subcommand": "validate", "kind": kind, "ok": not problems, "violations": problems}
        text = json.dumps(doc, sort_keys=True) + "\n"
        return (EXIT_OK, text, "") if not problems else (EXIT_INPUT, "", text)
    if problems:
        return EXIT_INPUT, "", "".join(f"INVALID {kind}: {p}\n" for p in problems)
    return EXIT_OK, f"OK {kind}\n", ""


_HANDLERS = {
    "kh": _run_kh,
    "jones": _run_jones,
    "family": _run_family,
    "graphkh": _run_graphkh,
    "chrom": _run_chrom,
    "validate": _run_validate,
}


def run(cfg: RunConfig) -> Tuple[int, str, str]:
    """Execute one command; returns (exit status, stdout text, stderr text).

    Stdout is empty whenever the status is nonzero.
    """
    try:
        data = _read_json(cfg.input_path)
        return _HANDLERS[cfg.subcommand](cfg, data)
    except _InputError as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    except ValidationError as exc:
        return EXIT_INPUT, "", "".join(f"error: {v}\n" for v in exc.violations[:1]) or "error: invalid input\n"
    except (ContractError, UnsupportedInputError) as exc:
        return EXIT_INPUT, "", f"error: {exc}\n"
    except ResourceLimitError as exc:
        return EXIT_RESOURCE, "", f"error: resource guard: {exc}\n"
    except ComplexIntegrityError as exc:
        return EXIT_MISMATCH, "", f"error: internal consistency failure: {exc}\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="khgraph", description="Khovanov homology of links and spatial graphs, chromatic homology of graphs.")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    helps = {
        "kh": "bigraded Khovanov homology of a link diagram",
        "jones": "unreduced Jones polynomial (state sum)",
        "family": "Kauffman link family T(G) of a spatial graph",
        "graphkh": "Khovanov homology of a spatial graph (sum over T(G))",
        "chrom": "chromatic graded homology of an abstract graph",
        "validate": "validate a link, spatial graph or abstract graph file",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("input", help="JSON input file")
        p.add_argument("--format", choices=FORMATS, default="table", dest="output_format")
        p.add_argument("--multiset", action="store_true", help="keep every family member (no dedup)")
        p.add_argument("--drop-empty", action="store_true", help="drop empty links from the family")
        p.add_argument("--oracle", action="store_true", help="cross-check against the polynomial oracle")
        p.add_argument("--max-crossings", type=int, default=DEFAULT_MAX_CROSSINGS)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(args.subcommand, args.input, args.output_format, args.multiset,
                    args.drop_empty, args.oracle, args.max_crossings)
    status, out, err = run(cfg)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())

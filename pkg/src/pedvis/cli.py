"""Command-line entry points.

Exit codes: 0 success, 1 validation failure, 2 bad arguments, 3 I/O
failure.  All errors are emitted on stderr as single-line JSON objects
so scripted callers never have to scrape prose.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analytics, jsonio
from .analytics import Scope
from .config import AppConfig, load_config
from .core import PedigreeGraph
from .errors import ConfigError, SchemaError, UnknownPerson
from .glyphs import build_dotplots
from .ingest import Dataset, load_dataset
from .layout import compute_layout, layout_to_json
from .render import render_compare
from .service import make_server

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_USAGE = 2
EXIT_IO = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports errors as single-line JSON on stderr."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _fail(code: int, message: str) -> int:
    print(jsonio.dumps({"error": message}), file=sys.stderr)
    return code


def _read_file(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _load(path: str) -> Dataset:
    """Parse the input file or raise with the failure mapped to an exit code."""
    ds, report = load_dataset(_read_file(path))
    if ds is None:
        raise SchemaError(
            f"validation failed with {len(report.errors)} error(s); "
            "run the validate subcommand for details"
        )
    return ds


def _family(ds: Dataset, family_id: str) -> PedigreeGraph:
    graph = ds.families.get(family_id)
    if graph is None:
        raise _UsageError(
            f"unknown family {family_id!r}; available: {sorted(ds.families)}"
        )
    return graph


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pedvis", description="Pedigree layout and analytics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an input file and print the report")
    p.add_argument("file")

    p = sub.add_parser("layout", help="layout JSON for one family")
    p.add_argument("file")
    p.add_argument("--family", required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("render", help="side-by-side comparison SVG")
    p.add_argument("file")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--config", default=None)

    p = sub.add_parser("stats", help="dot-plots and pattern analytics as JSON")
    p.add_argument("file")
    p.add_argument("--family", default=None)
    p.add_argument("--min-diagnoses", type=int, default=5)
    p.add_argument("--scope", choices=["suicide", "all"], default="suicide")
    p.add_argument("--lca", nargs=2, metavar=("A", "B"), default=None)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("serve", help="HTTP API for the companion UI")
    p.add_argument("file")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", default=None)
    p.add_argument("--config", default=None)

    return parser


def _cmd_validate(args) -> int:
    _, report = load_dataset(_read_file(args.file))
    print(jsonio.dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_VALIDATION


def _cmd_layout(args, cfg: AppConfig) -> int:
    ds = _load(args.file)
    graph = _family(ds, args.family)
    layout = compute_layout(graph, cfg.layout, disease_count=ds.disease_count)
    _write_output(args.output, jsonio.dumps(layout_to_json(layout)))
    return EXIT_OK


def _cmd_render(args, cfg: AppConfig) -> int:
    ds = _load(args.file)
    left = compute_layout(
        _family(ds, args.left), cfg.layout, disease_count=ds.disease_count
    )
    right = compute_layout(
        _family(ds, args.right), cfg.layout, disease_count=ds.disease_count
    )
    svg = render_compare(left, right, build_dotplots(ds), cfg.render)
    _write_output(args.output, svg)
    return EXIT_OK


def _stats_document(ds: Dataset, args) -> dict:
    if args.min_diagnoses < 1:
        raise _UsageError("--min-diagnoses must be >= 1")
    scope = Scope(args.scope)
    families = (
        {args.family: _family(ds, args.family)} if args.family else ds.families
    )

    def chains(graph):
        return [
            {
                "persons": list(c.persons),
                "shared_diagnoses": sorted(c.shared_diagnoses),
            }
            for c in analytics.suicide_lineages(graph)
        ]

    def findings(graph):
        return [
            {
                "person_id": f.person_id,
                "diagnosis_count": f.diagnosis_count,
                "generation": f.generation,
                "peer_alive_fraction": f.peer_alive_fraction,
                "context_alive_fraction": f.context_alive_fraction,
            }
            for f in analytics.isolated_burden(graph, args.min_diagnoses)
        ]

    return {
        "dotplots": [
            {
                "disease_index": s.disease_index,
                "disease_name": s.disease_name,
                "dots": [
                    {
                        "person_id": d.person_id,
                        "family_id": d.family_id,
                        "age_at_diagnosis": d.age_at_diagnosis,
                    }
                    for d in s.dots
                ],
            }
            for s in build_dotplots(ds)
        ],
        "lineages": {fid: chains(g) for fid, g in sorted(families.items())},
        "cooccurrence": {
            "scope": scope.value,
            "disease_names": list(ds.disease_names),
            "matrix": analytics.diagnosis_cooccurrence(ds, scope),
        },
        "isolated": {fid: findings(g) for fid, g in sorted(families.items())},
    }


def _cmd_stats(args) -> int:
    ds = _load(args.file)
    if args.lca is not None:
        a, b = args.lca
        if args.family:
            graph = _family(ds, args.family)
        else:
            hits = [g for g in ds.families.values() if a in g.persons]
            if not hits:
                raise UnknownPerson(a)
            graph = hits[0]
        result = sorted(analytics.lowest_common_ancestors(graph, a, b))
        _write_output(args.output, jsonio.dumps({"lca": result}))
        return EXIT_OK
    _write_output(args.output, jsonio.dumps(_stats_document(ds, args)))
    return EXIT_OK


def _cmd_serve(args, cfg: AppConfig) -> int:
    ds = _load(args.file)
    port = args.port
    env_port = os.environ.get("PEDVIS_PORT")
    if env_port:
        try:
            port = int(env_port)
        except ValueError:
            raise _UsageError(f"PEDVIS_PORT {env_port!r} is not an integer") from None
    server = make_server(ds, cfg, port, host=args.host, ui_dir=args.ui_dir)
    actual_port = server.server_address[1]
    print(jsonio.dumps({"status": "serving", "host": args.host, "port": actual_port}))
    sys.stdout.flush()
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cfg = load_config(getattr(args, "config", None))
        if args.command == "validate":
            return _cmd_validate(args)
        if args.command == "layout":
            return _cmd_layout(args, cfg)
        if args.command == "render":
            return _cmd_render(args, cfg)
        if args.command == "stats":
            return _cmd_stats(args)
        if args.command == "serve":
            return _cmd_serve(args, cfg)
        raise _UsageError(f"unknown command {args.command!r}")
    except _UsageError as exc:
        return _fail(EXIT_USAGE, str(exc))
    except (ConfigError, UnknownPerson) as exc:
        return _fail(EXIT_USAGE, str(exc))
    except SchemaError as exc:
        return _fail(EXIT_VALIDATION, str(exc))
    except OSError as exc:
        return _fail(EXIT_IO, str(exc))


if __name__ == "__main__":
    sys.exit(main())

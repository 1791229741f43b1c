"""The ``lcymirror`` command.

Exit codes: 0 ok, 1 I/O or other failure, 2 schema error, 3 invariant
failure, 4 illegal move, 5 script not closed.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .acceptance import run_all
from .atf import diagram_from_model, diagram_svg
from .bundled import resolve
from .elliptic import config_from_json, validate_config
from .ktheory import relation_suite
from .lattice import LatticeError
from .logcy import model_from_json, picard
from .moves import IllegalMove, script_from_json
from .reports import model_report, mw_report, run_report

EXIT_OK, EXIT_IO, EXIT_SCHEMA, EXIT_INVARIANT, EXIT_ILLEGAL, EXIT_NOT_CLOSED = 0, 1, 2, 3, 4, 5


def _exit_code(exc: LatticeError) -> int:
    if isinstance(exc, IllegalMove):
        return EXIT_ILLEGAL
    if exc.code == "schema":
        return EXIT_SCHEMA
    if exc.code == "script_not_closed":
        return EXIT_NOT_CLOSED
    return EXIT_INVARIANT


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and not _flat(val):
                lines.append(f"{pad}{key}:")
                lines.append(_pretty(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_inline(val)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(f"{pad}- {_inline(v)}" if _flat(v) or not isinstance(v, (dict, list))
                         else f"{pad}-\n{_pretty(v, indent + 1)}" for v in obj)
    return pad + _inline(obj)


def _flat(v) -> bool:
    """Lists of scalars or of scalar lists print on one line."""
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    return json.dumps(v) if isinstance(v, (list, dict, str)) and not isinstance(v, str) else str(v)


def _emit(obj, fmt: str) -> None:
    if fmt == "pretty":
        sys.stdout.write(_pretty(obj) + "\n")
    else:
        sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _load_model(ref: str):
    """Any failure to build a model from the file is reported as a schema error."""
    obj = resolve("models", ref)
    try:
        return model_from_json(obj)
    except LatticeError as exc:
        if exc.code == "schema":
            raise
        raise LatticeError("schema", f"{ref}: {exc}") from None


def cmd_validate(args) -> dict:
    bundle_dir = {"auto": "models", "model": "models", "script": "scripts", "fibres": "fibres"}[args.kind]
    obj = resolve(bundle_dir, args.path)
    kind = args.kind
    if kind == "auto":
        kind = "script" if isinstance(obj, dict) and "steps" in obj else \
            "fibres" if isinstance(obj, dict) and "fibres" in obj else "model"
    if kind == "model":
        model = _load_model(args.path)
        pd = picard(model)
        return {"valid": True, "kind": "model", "k": model.k, "picard_rank": pd.rank}
    if kind == "script":
        moves = script_from_json(obj)
        out = {"valid": True, "kind": "script", "steps": len(moves)}
        ref = args.model or (obj.get("model") if isinstance(obj, dict) else None)
        if ref:
            rep = run_report(_load_model(ref), moves, args.side)
            out["closed"] = rep["closed"]
        return out
    ref = args.model or obj.get("model")
    if not ref:
        raise LatticeError("schema", "fibre config needs a model (field 'model' or --model)")
    model = _load_model(ref)
    pd = picard(model)
    cfg = config_from_json(obj, pd)
    validate_config(pd, cfg)
    return {"valid": True, "kind": "fibres", "fibre_count": len(cfg.fibres)}


def cmd_report(args) -> dict:
    return model_report(_load_model(args.model))


def cmd_run(args) -> dict:
    model = _load_model(args.model)
    moves = script_from_json(resolve("scripts", args.script))
    return run_report(model, moves, args.side, require_closed=args.kauto)


def cmd_svg(args) -> dict:
    text = diagram_svg(diagram_from_model(_load_model(args.model)), size=args.size)
    if args.out in (None, "-"):
        sys.stdout.write(text)
        return {}
    try:
        Path(args.out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"{args.out}: {exc.strerror}") from None
    return {"written": args.out, "bytes": len(text.encode("utf-8"))}


def cmd_relations(args) -> dict:
    rep = relation_suite(_load_model(args.model))
    return {"version": __version__, "relations": rep,
            "all_pass": all(r["status"] != "fail" for r in rep.values())}


def cmd_mw(args) -> dict:
    model = _load_model(args.model)
    cfg = config_from_json(resolve("fibres", args.fibres), picard(model))
    return mw_report(model, cfg)


def cmd_accept(args) -> dict:
    outcomes = run_all(jobs=args.jobs, only=args.only or None)
    return {"version": __version__, "criteria": [o.to_json() for o in outcomes],
            "all_pass": all(o.passed for o in outcomes), "_lines": [o.line() for o in outcomes]}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="json", help="output format")
    common.add_argument("--jobs", type=int, default=1, help="worker processes (never changes output)")
    common.add_argument("--side", choices=("ccw", "cw"), default=None,
                        help="override the shear side of every elementary transformation")

    p = argparse.ArgumentParser(prog="lcymirror", description=__doc__.splitlines()[0], parents=[common])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="schema- and invariant-check a JSON file")
    s.add_argument("path")
    s.add_argument("--kind", choices=("auto", "model", "script", "fibres"), default="auto")
    s.add_argument("--model", help="model for a script or fibre config")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("report", parents=[common], help="lattice and diagram report for a model")
    s.add_argument("model", help="model file or bundled model name")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("run", parents=[common], help="execute a move script")
    s.add_argument("model")
    s.add_argument("script", help="script file or bundled script name")
    s.add_argument("--kauto", action="store_true", help="require a closed script and its K action")
    s.set_defaults(func=cmd_run)

    s = sub.add_parser("svg", parents=[common], help="write the almost-toric diagram as SVG")
    s.add_argument("model")
    s.add_argument("-o", "--out", default=None, help="output path (default stdout)")
    s.add_argument("--size", type=int, default=400)
    s.set_defaults(func=cmd_svg)

    s = sub.add_parser("relations", parents=[common], help="check autoequivalence relations on a model")
    s.add_argument("model")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("mw", parents=[common], help="Mordell-Weil group from a fibre configuration")
    s.add_argument("model")
    s.add_argument("fibres", help="fibre config file or bundled name")
    s.set_defaults(func=cmd_mw)

    s = sub.add_parser("accept", parents=[common], help="run the acceptance suite")
    s.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    s.set_defaults(func=cmd_accept)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except LatticeError as exc:
        err = {"error": exc.code, "message": str(exc)}
        if isinstance(exc, IllegalMove):
            err.update(error="illegal_move", step=exc.step, cause=exc.cause_code)
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return _exit_code(exc)
    except OSError as exc:
        sys.stderr.write(json.dumps({"error": "io", "message": str(exc)}, sort_keys=True) + "\n")
        return EXIT_IO
    if not out:
        return EXIT_OK
    lines = out.pop("_lines", None)
    if lines is not None and args.format == "pretty":
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        _emit(out, args.format)
    if args.command == "accept" and not out["all_pass"]:
        return EXIT_INVARIANT
    if args.command == "relations" and not out["all_pass"]:
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error (including an unknown catalog
key), 2 parse error, 3 validation error, 4 admissibility error, 5 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import connect_sum, mirror
from .catalog import CATALOG
from .diagram import parse, serialize, validate
from .errors import DiagramError
from .faces import check_admissible
from .invariant import sigma_tilde

EXIT_USAGE = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage, which would collide with the parse-error code
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(text: str, path: str | None, stdout) -> None:
    if path is None or path == "-":
        stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def _load_checked(path: str):
    d = validate(parse(_read(path)))
    check_admissible(d)
    return d


def _emit_diagram(d, path, stdout):
    d = validate(d)
    check_admissible(d)
    _write(serialize(d), path, stdout)


def cmd_validate(args, stdout):
    d = _load_checked(args.file)
    stdout.write(f"ok: {d.name} ({d.n} crossings, {len(d.on_axis)} on the axis) "
                 "is a valid admissible symmetric diagram\n")


def cmd_compute(args, stdout):
    report = sigma_tilde(_load_checked(args.file))
    if args.json:
        stdout.write(report.to_json(explain=args.explain))
    else:
        stdout.write(report.to_text(explain=args.explain))


def cmd_catalog(args, stdout):
    if args.action == "list":
        if args.key is not None or args.n is not None:
            raise UsageError("catalog list takes no further arguments")
        for key, entry in CATALOG.items():
            stdout.write(f"{key:<12} {entry.description}; {entry.expected}\n")
        return
    if args.key not in CATALOG:
        raise UsageError(f"unknown catalog key {args.key!r}; try 'catalog list'")
    try:
        d = CATALOG[args.key].build(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit_diagram(d, args.output, stdout)


def cmd_connect_sum(args, stdout):
    _emit_diagram(connect_sum(_load_checked(args.first), _load_checked(args.second)),
                  args.output, stdout)


def cmd_mirror(args, stdout):
    _emit_diagram(mirror(_load_checked(args.file)), args.output, stdout)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="eqsig", description="Equivariant signature of directed strongly "
                                          "invertible knots from symmetric diagrams.")
    p.add_argument("--json-errors", action="store_true",
                   help="report failures as one JSON object on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check a diagram file")
    v.add_argument("file", help="diagram file, or - for stdin")
    v.set_defaults(func=cmd_validate)

    c = sub.add_parser("compute", help="compute the equivariant signature")
    c.add_argument("file", nargs="?", default="-", help="diagram file (default: stdin)")
    c.add_argument("--explain", action="store_true",
                   help="also print faces, shading, matrices and eigenspace bases")
    c.add_argument("--json", action="store_true", help="machine-readable report")
    c.set_defaults(func=cmd_compute)

    k = sub.add_parser("catalog", help="list or emit built-in diagrams")
    k.add_argument("action", choices=["list", "emit"])
    k.add_argument("key", nargs="?")
    k.add_argument("--n", type=int, default=None, help="family parameter")
    k.add_argument("-o", "--output", default=None, help="output file (default: stdout)")
    k.set_defaults(func=cmd_catalog)

    s = sub.add_parser("connect-sum", help="equivariant connected sum of two diagrams")
    s.add_argument("first")
    s.add_argument("second")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=cmd_connect_sum)

    m = sub.add_parser("mirror", help="mirror image, direction kept")
    m.add_argument("file")
    m.add_argument("-o", "--output", default=None)
    m.set_defaults(func=cmd_mirror)
    return p


def _report_error(kind, code, message, where, as_json, stderr):
    if as_json:
        stderr.write(json.dumps({"error": kind, "code": code, "where": where,
                                 "message": message}) + "\n")
    else:
        loc = f" at {where}" if where else ""
        stderr.write(f"error [{kind}]{loc}: {message}\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = sys.argv[1:] if argv is None else list(argv)
    # accepted anywhere on the command line, not just before the subcommand
    as_json = "--json-errors" in argv
    argv = [a for a in argv if a != "--json-errors"]
    try:
        args = build_parser().parse_args(argv)
        args.func(args, stdout)
    except UsageError as exc:
        _report_error("usage_error", EXIT_USAGE, str(exc), None, as_json, stderr)
        return EXIT_USAGE
    except DiagramError as exc:
        _report_error(exc.kind, exc.code, exc.message, exc.where, as_json, stderr)
        return exc.code
    return 0


if __name__ == "__main__":
    sys.exit(main())

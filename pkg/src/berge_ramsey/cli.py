"""Command-line entry point.

Exit codes: 0 positive result, 10 definite negative, 2 usage or input
error, 3 instance beyond the exhaustive kernel.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import berge, constructions, hypergraph, shadow
from .errors import BergeError, FormatError, InvalidArguments, PreconditionViolated, ScaleExceeded
from .search import ArrowingProblem, decide_arrowing, turan_max

OK, NEGATIVE, USAGE, SCALE = 0, 10, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="berge-ramsey", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="write a hypergraph (and coloring) to files")
    gsub = gen.add_subparsers(dest="what", required=True, parser_class=_Parser)
    g = gsub.add_parser("complete")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--r", type=int, default=3)
    g.add_argument("-o", dest="output", required=True)
    g = gsub.add_parser("turan")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--parts", type=int, required=True)
    g.add_argument("-o", dest="output", required=True)
    g = gsub.add_parser("lower-bound")
    g.add_argument("--kind", choices=["ccc", "ck-small", "ck-general"], required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int)
    g.add_argument("-o", dest="output", required=True)

    d = sub.add_parser("detect", help="find a Berge copy and print its certificate")
    d.add_argument("--family", required=True)
    d.add_argument("--input", required=True)
    d.add_argument("--coloring")
    d.add_argument("--color", type=int)

    c = sub.add_parser("certify", help="re-verify a certificate")
    c.add_argument("--cert", required=True)
    c.add_argument("--input", required=True)
    c.add_argument("--coloring")

    s = sub.add_parser("shadow", help="print the color-listed shadow at a threshold")
    s.add_argument("--input", required=True)
    s.add_argument("--coloring", required=True)
    s.add_argument("--threshold", type=int, required=True)

    lf = sub.add_parser("lift", help="lift a shadow cycle or clique to a Berge copy")
    lf.add_argument("--kind", choices=["cycle", "clique"], required=True)
    lf.add_argument("--input", required=True)
    lf.add_argument("--coloring", required=True)
    lf.add_argument("--color", type=int, required=True)
    lf.add_argument("--core", required=True)

    r = sub.add_parser("ramsey", help="decide whether K_N^3 arrows the families")
    r.add_argument("--families", required=True)
    r.add_argument("--vertices", type=int, required=True)
    r.add_argument("--strategy", choices=["dfs", "turan-first"], default="dfs")
    r.add_argument("--symmetry", choices=["on", "off"], default="on")
    r.add_argument("--jobs", type=int, default=1)

    t = sub.add_parser("turan", help="exact Turán number with a witness")
    t.add_argument("--family", required=True)
    t.add_argument("--vertices", type=int, required=True)
    return p


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load(args) -> tuple[hypergraph.Hypergraph, shadow.ColoredHypergraph | None]:
    h = hypergraph.parse(_read(args.input))
    ch = None
    if getattr(args, "coloring", None):
        ch = shadow.parse_coloring(_read(args.coloring), h)
    return h, ch


def _with_suffix(path: str, suffix: str) -> Path:
    p = Path(path)
    return p if p.suffix == suffix else p.with_name(p.name + suffix)


def _cmd_gen(args, out: TextIO, err: TextIO) -> int:
    if args.what == "complete":
        h = hypergraph.complete(args.n, args.r)
        target = _with_suffix(args.output, ".hg")
        target.write_text(hypergraph.serialize(h), encoding="utf-8")
        print(f"wrote {target}", file=err)
        return OK
    if args.what == "turan":
        h = constructions.turan_partite(args.n, args.parts)
        target = _with_suffix(args.output, ".hg")
        target.write_text(hypergraph.serialize(h), encoding="utf-8")
        print(f"wrote {target}", file=err)
        return OK
    if args.kind == "ccc":
        layout = constructions.lower_bound_ccc(args.n)
    elif args.kind == "ck-small":
        layout = constructions.lower_bound_ck_small(args.m if args.m is not None else args.n)
    else:
        if args.m is None:
            raise UsageError("ck-general needs --m")
        layout = constructions.lower_bound_ck_general(args.m, args.n)
    base = Path(args.output)
    hg, col = base.with_name(base.name + ".hg"), base.with_name(base.name + ".col")
    hg.write_text(hypergraph.serialize(layout.colored.base, layout.comments()), encoding="utf-8")
    col.write_text(
        "".join(f"# {c}\n" for c in layout.comments()) + shadow.serialize_coloring(layout.colored),
        encoding="utf-8",
    )
    print(f"wrote {hg} {col}", file=err)
    return OK


def _cmd_detect(args, out: TextIO, err: TextIO) -> int:
    spec = berge.parse_family(args.family)
    h, ch = _load(args)
    if (ch is None) != (args.color is None):
        raise UsageError("--coloring and --color go together")
    if ch is not None:
        if not 0 <= args.color < ch.t:
            raise UsageError(f"--color must be in [0, {ch.t})")
        cert = berge.find_in_color(ch, spec, args.color)
    else:
        cert = berge.find_berge(h, spec)
    if cert is None:
        print("none", file=out)
        return NEGATIVE
    out.write(berge.serialize_certificate(cert, spec.order))
    return OK


def _cmd_certify(args, out: TextIO, err: TextIO) -> int:
    h, ch = _load(args)
    cert, size = berge.parse_certificate(_read(args.cert))
    spec = berge.spec_for_certificate(cert.kind, size)
    color_filter = None
    if cert.color is not None:
        if ch is None:
            print("note: certificate names a color but no --coloring given; color not checked", file=err)
        else:
            color_filter = (ch, cert.color)
    res = berge.check_certificate(h, cert, spec, color_filter)
    print("valid" if res else f"invalid {res.reason}", file=out)
    return OK if res else NEGATIVE


def _cmd_shadow(args, out: TextIO, err: TextIO) -> int:
    _, ch = _load(args)
    out.write(shadow.format_shadow(shadow.shadow_with_threshold(ch, args.threshold)))
    return OK


def _parse_core(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--core must be comma-separated integers, got {text!r}") from None


def _cmd_lift(args, out: TextIO, err: TextIO) -> int:
    _, ch = _load(args)
    core = _parse_core(args.core)
    lift = berge.lift_shadow_cycle if args.kind == "cycle" else berge.lift_shadow_clique
    try:
        cert = lift(ch, core, args.color)
    except PreconditionViolated as exc:
        print(f"precondition-violated: {exc}", file=err)
        return NEGATIVE
    out.write(berge.serialize_certificate(cert))
    return OK


def _cmd_ramsey(args, out: TextIO, err: TextIO) -> int:
    specs = berge.parse_families(args.families)
    problem = ArrowingProblem(
        args.vertices, tuple(specs), strategy=args.strategy,
        symmetry=args.symmetry == "on", worker_count=args.jobs,
    )
    outcome = decide_arrowing(problem)
    print(outcome.verdict, file=out)
    print(outcome.stats.line(), file=out)
    if outcome.arrows:
        return OK
    out.write(shadow.serialize_coloring(outcome.counterexample))
    return NEGATIVE


def _cmd_turan(args, out: TextIO, err: TextIO) -> int:
    spec = berge.parse_family(args.family)
    res = turan_max(args.vertices, spec)
    print(f"max={res.value}", file=out)
    out.write(hypergraph.serialize(res.witness))
    print(res.stats.line(), file=err)
    return OK


_COMMANDS = {
    "gen": _cmd_gen,
    "detect": _cmd_detect,
    "certify": _cmd_certify,
    "shadow": _cmd_shadow,
    "lift": _cmd_lift,
    "ramsey": _cmd_ramsey,
    "turan": _cmd_turan,
}


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = _parser().parse_args(list(argv))
        return _COMMANDS[args.verb](args, out, err)
    except UsageError as exc:
        print(exc, file=err)
        return USAGE
    except ScaleExceeded as exc:
        print(f"scale-exceeded: {exc}", file=err)
        return SCALE
    except (FormatError, InvalidArguments, BergeError) as exc:
        print(f"error: {exc}", file=err)
        return USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))

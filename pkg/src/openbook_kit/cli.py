"""
``openbook-kit`` command line.

Exit codes: 0 success, 1 domain violation (invalid placement, framing,
failed check, unreadable document), 2 usage error (bad flags, malformed
word spec, missing file).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from . import interchange
from .check import run_check
from .errors import FramingError, OpenBookKitError, PlacementError, UnsupportedDocumentError, WordSpecError
from .openbook import MonodromyWord, OpenBook, Twist
from .pushoff import apply_schedule, build_schedule
from .render import render_svg
from .surface import CurveRef, Surface

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2

# ---------------------------------------------------------------- word specs

_TERM = re.compile(r"([+-]?) *(\d*)([a-z]+\d+)")
_LABEL = re.compile(r"[a-z]+\d+")
_SEP = re.compile(r"[\s,]+")


def parse_word_spec(spec: str, page: Surface) -> MonodromyWord:
    """Read a word like ``+a1 -b1 +(a1+b1-2d1)``.

    Each token is an optional sign (``+`` right-handed, the default, or
    ``-``) followed by a basis label or a parenthesized integer combination
    of labels.  Tokens are separated by whitespace or commas, and may span
    lines.  Equal classes share one curve; curves are named ``w1, w2, ...``
    in order of first use.
    """
    twists: list[Twist] = []
    curves: dict[tuple[int, ...], CurveRef] = {}
    for line_no, line in enumerate(spec.splitlines() or [""], start=1):
        pos = 0
        while pos < len(line):
            sep = _SEP.match(line, pos)
            if sep:
                pos = sep.end()
                continue
            if line[pos] == "#":
                break
            col = pos + 1
            sign = 1
            if line[pos] in "+-":
                sign = -1 if line[pos] == "-" else 1
                pos += 1
            if pos < len(line) and line[pos] == "(":
                close = line.find(")", pos)
                if close < 0:
                    raise WordSpecError("unclosed parenthesis", line_no, pos + 1)
                vec = _combination(line[pos + 1:close], page, line_no, pos + 2)
                pos = close + 1
            else:
                m = _LABEL.match(line, pos)
                if not m:
                    raise WordSpecError(f"expected a basis label, got {line[pos:pos + 8]!r}", line_no, pos + 1)
                vec = _combination(m.group(0), page, line_no, pos + 1)
                pos = m.end()
            if pos < len(line) and not _SEP.match(line, pos) and line[pos] != "#":
                raise WordSpecError(f"unexpected {line[pos]!r} after twist", line_no, pos + 1)
            if not any(vec):
                raise WordSpecError("twist curve has zero homology", line_no, col)
            if vec not in curves:
                kind = "boundary-parallel" if page.is_boundary_supported(vec) else "stabilization-curve"
                curves[vec] = CurveRef(f"w{len(curves) + 1}", vec, kind)
            twists.append(Twist(curves[vec], sign))
    return MonodromyWord(tuple(twists))


def _combination(text: str, page: Surface, line: int, col: int) -> tuple[int, ...]:
    vec = [0] * page.dim
    pos = 0
    text_len = len(text)
    first = True
    while pos < text_len:
        if text[pos] == " ":
            pos += 1
            continue
        m = _TERM.match(text, pos)
        if not m or (not first and not m.group(1)):
            raise WordSpecError(f"malformed combination {text!r}", line, col + pos)
        coeff = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        label = m.group(3)
        if label not in page.basis:
            raise WordSpecError(f"unknown basis label {label!r} for basis {list(page.basis)}", line, col + m.start(3))
        vec[page.index(label)] += coeff
        pos = m.end()
        first = False
    if first:
        raise WordSpecError("empty combination", line, col)
    return tuple(vec)


# ---------------------------------------------------------------- commands

def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_new(args: argparse.Namespace) -> int:
    page = Surface.standard(args.genus, args.boundary)
    spec = args.word or ""
    if args.word_file:
        spec = Path(args.word_file).read_text(encoding="utf-8")
    word = parse_word_spec(spec, page)
    ob = OpenBook(page, word)
    if args.marks:
        ob = ob.with_marks(m.strip() for m in args.marks.split(",") if m.strip())
    _write(interchange.emit(ob), args.output)
    return EXIT_OK


def cmd_pushoff(args: argparse.Namespace) -> int:
    doc = interchange.load(args.placement)
    if doc.kind != "placement":
        raise UnsupportedDocumentError(f"pushoff needs a placement document, got {doc.kind}")
    p = doc.payload
    ob, cert = apply_schedule(p, build_schedule(p))
    if args.cert_out:
        interchange.dump(cert, args.cert_out)
    if args.ob_out:
        interchange.dump(ob, args.ob_out)
    order_free = "true" if cert.order_free else "false"
    print(f"case={cert.case.value} steps={len(cert.steps)} order_free={order_free} aux={cert.aux_count}")
    first, last = cert.ledger[0], cert.ledger[-1]
    print(f"ledger: genus {first.genus}->{last.genus} boundary {first.boundary_count}->{last.boundary_count} "
          f"euler {first.euler_char}->{last.euler_char} word {first.word_length}->{last.word_length}")
    for cid, b in cert.sub_binding_map:
        print(f"  {cid} -> {b}")
    for tag in cert.tags:
        print(f"tag: {tag}")
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    doc = interchange.load(args.document)
    _write(render_svg(doc.payload), args.output)
    return EXIT_OK


def _permutations_flag(value: str) -> str | int:
    if value == "all":
        return value
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("expected 'all' or a positive integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("expected 'all' or a positive integer")
    return n


def cmd_check(args: argparse.Namespace) -> int:
    suites = args.suites or not args.documents
    report = run_check(args.documents, args.permutations, suites, args.seed, args.jobs)
    text = json.dumps(report.to_json(), indent=2) + "\n"
    _write(text, args.output)
    return EXIT_OK if report.passed else EXIT_DOMAIN


def _non_negative(value: str) -> int:
    n = int(value)
    if n < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {n}")
    return n


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="openbook-kit", description="Open books, Legendrian placements and push-off certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("new", help="write an open book document")
    p.add_argument("--genus", type=_non_negative, required=True)
    p.add_argument("--boundary", type=_positive, required=True)
    p.add_argument("--word", default="", help="twists, e.g. '+a1 -b1 +(a1+d1)'")
    p.add_argument("--word-file", help="read the word spec from a file")
    p.add_argument("--marks", help="comma-separated binding labels to mark as sub-binding")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("pushoff", help="realize a placement's transverse push-off as a sub-binding")
    p.add_argument("placement")
    p.add_argument("--cert-out", help="write the certificate document here")
    p.add_argument("--ob-out", help="write the resulting open book document here")
    p.set_defaults(func=cmd_pushoff)

    p = sub.add_parser("render", help="draw a document as SVG")
    p.add_argument("document")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("check", help="check documents and run randomized property suites")
    p.add_argument("documents", nargs="*")
    p.add_argument("--permutations", type=_permutations_flag, default=None,
                   help="replay certificate steps in 'all' orders or N sampled orders")
    p.add_argument("--suites", action="store_true", help="also run the randomized suites (default with no documents)")
    p.add_argument("--seed", type=int, default=None, help="overrides OPENBOOK_KIT_SEED")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("-o", "--output", help="write the JSON report here (default stdout)")
    p.set_defaults(func=cmd_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WordSpecError as exc:
        print(f"openbook-kit: word spec {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"openbook-kit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PlacementError as exc:
        print(f"openbook-kit: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return EXIT_DOMAIN
    except (FramingError, OpenBookKitError, ValueError) as exc:
        print(f"openbook-kit: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())

"""Command-line surface.

Commands: validate, manifold, normalize, link, boundary, recognize, pi1,
euler, fixtures.  Input is a complex document on stdin or --input; output
goes to stdout or --output.  Exit codes: 0 success, 1 domain error,
2 malformed input.  Output bytes are deterministic for fixed input and
flags.
"""

from __future__ import annotations

import argparse
import sys

from . import fixtures as fixture_lib
from . import jsonio
from .chains import Simplex, euler_characteristic, link
from .errors import Malformed, StellarError
from .normalize import normalize
from .pi1 import abelianization, presentation
from .quotient import cone_euler_characteristic, validate_regular
from .recognition import DEFAULT_BUDGET, is_stellar_manifold, recognize_ball_or_sphere


def _read_document(args) -> jsonio.ComplexDocument:
    if args.input and args.input != "-":
        with open(args.input, "rb") as f:
            data = f.read()
    else:
        data = sys.stdin.buffer.read()
    return jsonio.parse(data)


def _write(args, payload: bytes) -> None:
    if args.output:
        with open(args.output, "wb") as f:
            f.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _parse_simplex(text: str) -> Simplex:
    try:
        labels = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as e:
        raise Malformed(f"--simplex expects comma-separated integers: {e}") from e
    try:
        return Simplex(*labels)
    except ValueError as e:
        raise Malformed(str(e)) from e


def _cmd_manifold(args) -> int:
    doc = _read_document(args)
    k = jsonio.complex_from_document(doc)
    report = is_stellar_manifold(k, budget=args.budget, seed=args.seed)
    obj = jsonio.manifold_report_to_obj(report)
    if doc.equivalence:
        verdict = validate_regular(k, jsonio.equivalence_from_document(doc))
        obj["equivalence_regular"] = {"verdict": verdict.value, "witness": verdict.witness}
    _write(args, jsonio.dumps(obj))
    return 0


def _cmd_boundary(args) -> int:
    from .chains import boundary

    k = jsonio.complex_from_document(_read_document(args))
    _write(args, jsonio.serialize(jsonio.document_from_complex(boundary(k))))
    return 0


def _cmd_link(args) -> int:
    k = jsonio.complex_from_document(_read_document(args))
    result = link(_parse_simplex(args.simplex), k)
    _write(args, jsonio.serialize(jsonio.document_from_complex(result)))
    return 0


def _cmd_euler(args) -> int:
    k = jsonio.complex_from_document(_read_document(args))
    _write(args, f"{euler_characteristic(k)}\n".encode())
    return 0


def _cmd_recognize(args) -> int:
    k = jsonio.complex_from_document(_read_document(args))
    res = recognize_ball_or_sphere(k, budget=args.budget, seed=args.seed)
    _write(args, jsonio.dumps(jsonio.recognition_to_obj(res)))
    return 0


def _cmd_normalize(args) -> int:
    k = jsonio.complex_from_document(_read_document(args))
    nf = normalize(k, budget=args.budget, seed=args.seed)
    _write(args, jsonio.dumps(jsonio.normal_form_to_obj(nf)))
    if args.summary:
        classes = ", ".join("{" + ", ".join(map(str, sorted(c))) + "}" for c in nf.eq.classes) or "none"
        lines = [
            f"apex: {nf.apex}",
            f"sphere: {len(nf.sphere)} generators of dimension {nf.sphere.dimension}",
            f"vertex classes: {classes}",
            f"pairs: {len(nf.pairing.pairs)}, unpaired: {len(nf.pairing.unpaired)}",
            f"loop steps: {nf.steps}, trace moves: {len(nf.trace)}",
            f"cone Euler characteristic: {cone_euler_characteristic(nf.sphere, nf.eq)}",
        ]
        print("\n".join(lines), file=sys.stderr)
    return 0


def _cmd_pi1(args) -> int:
    k = jsonio.complex_from_document(_read_document(args))
    nf = normalize(k, budget=args.budget, seed=args.seed)
    pres = presentation(nf)
    _write(args, jsonio.dumps(jsonio.presentation_to_obj(pres, abelianization(pres))))
    return 0


def _cmd_fixtures(args) -> int:
    try:
        k = fixture_lib.fixture(args.name)
    except KeyError:
        raise Malformed(f"unknown fixture {args.name!r}; names: {', '.join(fixture_lib.FIXTURE_NAMES)}") from None
    _write(args, jsonio.serialize(jsonio.document_from_complex(k, metadata={"name": args.name})))
    return 0


_COMMANDS = {
    "validate": _cmd_manifold,
    "manifold": _cmd_manifold,
    "normalize": _cmd_normalize,
    "link": _cmd_link,
    "boundary": _cmd_boundary,
    "recognize": _cmd_recognize,
    "pi1": _cmd_pi1,
    "euler": _cmd_euler,
    "fixtures": _cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starform", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--input", help="input document path, or - for stdin")
        p.add_argument("--output", help="output path; default stdout")
        p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="move budget for searches")
        p.add_argument("--seed", type=int, default=0, help="seed for budgeted searches")
        if name == "link":
            p.add_argument("--simplex", required=True, help="comma-separated vertex labels, e.g. 1,2")
        if name == "normalize":
            p.add_argument("--summary", action="store_true", help="print a human summary to stderr")
        if name == "fixtures":
            p.add_argument("--name", required=True, help="fixture name, e.g. torus7 or sphere-3")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except Malformed as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except StellarError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())

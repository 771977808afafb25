"""Command-line front end.

Exit codes: 0 on success, 1 on domain errors (e.g. a hyperbolic class was
required), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Optional, Sequence

from . import entropy as ent
from .kgroup import DegenerateClassError, KClass, growth_sequence, DUAL_GENERATOR, GENERATOR
from .lls import (
    NotReducedError,
    ReductionError,
    brute_force_conjugate,
    find_conjugator,
    lls_period,
    reduce_hyperbolic,
)
from .sl2z import DeterminantError, Mat2Z, NotHyperbolicError, parse_matrix
from .words import WordSyntaxError, evaluate, format_word, parse_word, type_m_word, validate_type_m

DEFAULT_STEPS = 60
DEFAULT_BOUND = 12


class UsageError(Exception):
    pass


def _matrix_json(A: Mat2Z) -> list[str]:
    return [str(x) for x in A.entries()]


def _parse_m(text: str) -> tuple[int, ...]:
    try:
        m = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed m-sequence {text!r}") from exc
    try:
        return validate_type_m(m)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_class(text: str) -> KClass:
    try:
        r, d = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"malformed class {text!r}; expected 'r,d'") from exc
    return KClass(r, d)


def _matrix_arg(text: Optional[str], flag: str) -> Mat2Z:
    if text is None:
        raise UsageError(f"{flag} is required")
    try:
        return parse_matrix(text)
    except (ValueError, DeterminantError) as exc:
        raise UsageError(f"{flag}: {exc}") from exc


def _input_matrix(args) -> tuple[Mat2Z, Optional[str]]:
    """Matrix from exactly one of --word, --matrix, --m; also returns the word text."""
    given = [x for x in ("word", "matrix", "m") if getattr(args, x, None) is not None]
    if len(given) != 1:
        raise UsageError("give exactly one of --word, --matrix, --m")
    if args.word is not None:
        try:
            w = parse_word(args.word)
        except (WordSyntaxError, ValueError) as exc:
            raise UsageError(f"--word: {exc}") from exc
        return evaluate(w), format_word(w)
    if args.matrix is not None:
        return _matrix_arg(args.matrix, "--matrix"), None
    w = type_m_word(_parse_m(args.m))
    return evaluate(w), format_word(w)


def cmd_eval(args) -> dict:
    A, word = _input_matrix(args)
    return {"kind": "eval", "word": word, "matrix": _matrix_json(A), "trace": str(A.trace)}


def cmd_entropy(args) -> dict:
    A, word = _input_matrix(args)
    value = ent.entropy_of_matrix(A)
    out = {"kind": "entropy", **value.to_dict(), "matrix": _matrix_json(A)}
    if word is not None:
        out["word"] = word
    return out


def cmd_lls(args) -> dict:
    A, _ = _input_matrix(args)
    period = lls_period(A)
    reduced, conj = reduce_hyperbolic(A if A.trace > 0 else -A)
    return {
        "kind": "lls",
        "period": [str(x) for x in period.canonical],
        "text": str(period),
        "reduced": _matrix_json(reduced),
        "conjugator": _matrix_json(conj),
    }


def cmd_conjugate(args) -> dict:
    A = _matrix_arg(args.a, "--a")
    B = _matrix_arg(args.b, "--b")
    M = find_conjugator(A, B)
    oracle = brute_force_conjugate(A, B, args.bound)
    return {
        "kind": "conjugate",
        "conjugate": M is not None,
        "conjugator": None if M is None else _matrix_json(M),
        "bound": args.bound,
        "oracle_conjugator": None if oracle is None else _matrix_json(oracle),
    }


def cmd_repr(args) -> dict:
    A, _ = _input_matrix(args)
    m = ent.type_m_representative(A)
    w = type_m_word(m)
    return {
        "kind": "repr",
        "m": [str(x) for x in m],
        "word": format_word(w),
        "matrix": _matrix_json(evaluate(w)),
    }


def cmd_growth(args) -> dict:
    A, _ = _input_matrix(args)
    if args.steps < 1:
        raise UsageError("--steps must be >= 1")
    v = _parse_class(args.v) if args.v else DUAL_GENERATOR
    w = _parse_class(args.w) if args.w else GENERATOR
    return growth_sequence(A, v, w, args.steps).to_dict()


def cmd_verify(args) -> dict:
    m = _parse_m(args.m) if args.m is not None else None
    if m is None:
        raise UsageError("--m is required")
    cert = ent.verify_type_m(m)
    return {
        "kind": "verify-type-m",
        "m": [str(x) for x in m],
        "passed": cert.passed,
        "matrix": _matrix_json(cert.final_matrix),
        "prefixes": [
            {
                "n": p.n,
                "matrix": _matrix_json(p.matrix),
                "alpha": str(p.alpha),
                "beta": str(p.beta),
                "verdicts": list(p.verdicts),
            }
            for p in cert.prefixes
        ],
        "failures": list(cert.failures),
    }


def cmd_standard(args) -> dict:
    try:
        desc = ent.StandardDescriptor(args.genus, args.deg, args.shift, args.aut)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    value, mat = ent.entropy_of_curve_autoeq(desc)
    return {
        "kind": "standard",
        "genus": desc.genus,
        **value.to_dict(),
        "matrix": _matrix_json(mat),
    }


def _render_text(out: dict) -> str:
    kind = out["kind"]
    if kind == "eval":
        return ",".join(out["matrix"])
    if kind in ("entropy", "standard"):
        if out["exact"] == "zero":
            text = "0"
        else:
            text = f"log(({out['trace']} + sqrt({out['discriminant']}))/2) = {out['float']!r}"
        if kind == "standard":
            text += f"\nmatrix {','.join(out['matrix'])}"
        return text
    if kind == "lls":
        return out["text"]
    if kind == "conjugate":
        if not out["conjugate"]:
            return "false"
        return "true\nconjugator " + ",".join(out["conjugator"])
    if kind == "repr":
        return f"m {','.join(out['m'])}\nword {out['word']}"
    if kind == "growth":
        lines = ["l,chi_abs,estimate,gap"]
        lines.extend(f"{r['l']},{r['chi_abs']},{r['estimate']!r},{r['gap']!r}" for r in out["rows"])
        lines.append(f"target {out['target']!r}")
        return "\n".join(lines)
    if kind == "verify-type-m":
        lines = ["passed" if out["passed"] else "FAILED"]
        for p in out["prefixes"]:
            marks = "".join("+" if ok else "x" for ok in p["verdicts"])
            lines.append(f"prefix {p['n']}: {','.join(p['matrix'])} alpha={p['alpha']} beta={p['beta']} [{marks}]")
        lines.extend(out["failures"])
        return "\n".join(lines)
    raise AssertionError(kind)


_COMMANDS = {
    "eval": cmd_eval,
    "entropy": cmd_entropy,
    "lls": cmd_lls,
    "conjugate": cmd_conjugate,
    "repr": cmd_repr,
    "growth": cmd_growth,
    "verify-type-m": cmd_verify,
    "standard": cmd_standard,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curventropy",
        description="Entropy of autoequivalences of D^b of curves via SL(2,Z).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, inputs=True):
        if inputs:
            p.add_argument("--word", help='word such as "S^2 T^2 S T^-3 S"')
            p.add_argument("--matrix", help="matrix a,b,c,d (row-major)")
            p.add_argument("--m", help="type-m sequence m_2n,...,m_1")
        p.add_argument("--json", action="store_true", help="print one JSON object")

    for name in ("eval", "entropy", "lls", "repr"):
        common(sub.add_parser(name))
    p = sub.add_parser("growth")
    common(p)
    p.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    p.add_argument("--v", help="left class r,d (default 2,-9)")
    p.add_argument("--w", help="iterated class r,d (default 2,9)")
    p = sub.add_parser("conjugate")
    common(p, inputs=False)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p = sub.add_parser("verify-type-m")
    common(p, inputs=False)
    p.add_argument("--m", required=True)
    p = sub.add_parser("standard")
    common(p, inputs=False)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--deg", type=int, default=0)
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--aut", action="store_true", help="include a curve automorphism")
    return parser


_VALUE_FLAGS = {"--matrix", "--a", "--b", "--m", "--v", "--w"}
_NEGATIVE_LIST = re.compile(r"^-\d[\d,\s+-]*$")


def _glue_negative_values(argv: Sequence[str]) -> list[str]:
    # argparse reads "--matrix -2,3,-7,10" as two options; rewrite to "--matrix=-2,..."
    out: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and _NEGATIVE_LIST.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (NotHyperbolicError, NotReducedError, DegenerateClassError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except ReductionError as exc:
        print(f"internal error: {exc}", file=stderr)
        return 1
    if args.json:
        print(json.dumps(out), file=stdout)
    else:
        print(_render_text(out), file=stdout)
    if out["kind"] == "verify-type-m" and not out["passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run())

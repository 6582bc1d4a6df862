"""Command-line front end.

    octavic invariants "y^2 = x^8 + 3*x^4 + 1"
    octavic isomorphic "1,0,0,0,1,0,0,0,1" "x^8 + 1"
    octavic moduli --batch curves.txt --format plain
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .arith.forms import BinaryForm
from .arith.sparse import ParseError, normalize
from .invariants import compute_invariants, shioda_invariants

__all__ = ["CurveInput", "parse_input", "format_form", "main", "run", "to_json_value"]

SCHEMA = 1
EXIT_OK, EXIT_PARSE, EXIT_MATH = 0, 1, 2

_NUMBER = r"\d+(?:/\d+)?"
_TOKEN = re.compile(rf"\s*(?:(?P<num>{_NUMBER})|(?P<var>[xy])|(?P<op>[-+*^])|(?P<bad>\S))")


@dataclass(frozen=True)
class CurveInput:
    raw: str
    parsed: BinaryForm


def _tokenize(text, offset):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group("bad") is not None:
            raise ParseError(f"unexpected character {m.group('bad')!r}", column=offset + m.start("bad") + 1)
        kind = m.lastgroup
        out.append((kind, m.group(kind), offset + m.start(kind) + 1))
        pos = m.end()
    return out


def _parse_poly(text, offset):
    """Terms ``c * x^i * y^j`` as a dict {(i, j): coefficient}."""
    toks = _tokenize(text, offset)
    if not toks:
        raise ParseError("empty polynomial", column=offset + 1)
    terms = {}
    i = 0
    n = len(toks)
    while i < n:
        sign = 1
        if toks[i][0] == "op" and toks[i][1] in "+-":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif terms:
            raise ParseError("expected '+' or '-'", column=toks[i][2])
        if i >= n:
            raise ParseError("dangling sign at end of input", column=toks[-1][2])
        coeff = Fraction(sign)
        exps = [0, 0]
        seen = False
        while i < n:
            kind, val, col = toks[i]
            if kind == "num":
                coeff *= Fraction(val)
                i += 1
            elif kind == "var":
                e = 1
                if i + 1 < n and toks[i + 1][1] == "^":
                    if i + 2 >= n or toks[i + 2][0] != "num" or "/" in toks[i + 2][1]:
                        raise ParseError("exponent must be a non-negative integer", column=toks[i + 1][2])
                    e = int(toks[i + 2][1])
                    i += 2
                exps[0 if val == "x" else 1] += e
                i += 1
            else:
                raise ParseError(f"unexpected {val!r}", column=col)
            seen = True
            if i < n and toks[i][1] == "*":
                i += 1
                if i >= n or toks[i][0] not in ("num", "var"):
                    raise ParseError("expected a factor after '*'", column=toks[i - 1][2])
                continue
            if i < n and toks[i][0] in ("num", "var"):
                # implicit multiplication such as 3x^2
                continue
            break
        if not seen:
            raise ParseError("empty term", column=toks[min(i, n - 1)][2])
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + coeff
    return {k: v for k, v in terms.items() if v != 0}


def _from_terms(terms, column):
    if any(j for _, j in terms):
        if {i + j for i, j in terms} - {8}:
            raise ParseError("a polynomial in x and y must be homogeneous of degree 8", column=column)
    else:
        deg = max((i for i, _ in terms), default=0)
        if deg > 8:
            raise ParseError(f"degree {deg} exceeds 8", column=column)
    # x^i becomes X^i Y^(8-i): lower degrees acquire roots at infinity
    coeffs = [0] * 9
    for (i, _), c in terms.items():
        coeffs[i] = normalize(c)
    return BinaryForm(coeffs)


def parse_input(text):
    """Parse ``y^2 = poly(x)``, a bare polynomial, or a list ``a0,...,a8``."""
    raw = text
    if not text.strip():
        raise ParseError("empty input", column=1)
    if "," in text:
        parts = text.split(",")
        if len(parts) != 9:
            raise ParseError(f"expected 9 comma-separated coefficients, got {len(parts)}", column=1)
        coeffs = []
        col = 1
        for part in parts:
            s = part.strip()
            if not re.fullmatch(rf"[-+]?{_NUMBER}", s):
                raise ParseError(f"malformed coefficient {s!r}", column=col + len(part) - len(part.lstrip()))
            coeffs.append(normalize(Fraction(s)))
            col += len(part) + 1
        return CurveInput(raw, BinaryForm(coeffs))
    if "=" in text:
        lhs, rhs = text.split("=", 1)
        if re.sub(r"\s", "", lhs) != "y^2":
            raise ParseError("left-hand side must be y^2", column=1)
        offset = len(lhs) + 1
        terms = _parse_poly(rhs, offset)
        if any(j for _, j in terms):
            raise ParseError("right-hand side must be a polynomial in x", column=offset + 1)
        return CurveInput(raw, _from_terms(terms, offset + 1))
    return CurveInput(raw, _from_terms(_parse_poly(text, 0), 1))


def _coeff_text(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_form(form):
    """Canonical text ``y^2 = ...``; parsing it gives the same form back."""
    parts = []
    for i in range(form.degree, -1, -1):
        c = Fraction(form.coeffs[i])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            body = _coeff_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_text(mag)}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "y^2 = 0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return "y^2 = " + out


def to_json_value(v):
    """Rationals become "num/den" strings (integers just "n"); containers recurse."""
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return _coeff_text(v)
    if isinstance(v, dict):
        return {str(k): to_json_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [to_json_value(x) for x in v]
    return str(v)


def _invariants(form, args):
    t = compute_invariants(form.parsed)
    return t.as_dict()


def _shioda(form, args):
    return shioda_invariants(form.parsed).as_dict()


def _syzygy(form, args):
    from .relations import coefficients, syzygy_residual

    return syzygy_residual(compute_invariants(form.parsed), coefficients(args.data_dir)).as_dict()


def _classify(form, args):
    from .moduli import classify_multiplicity

    return classify_multiplicity(compute_invariants(form.parsed)).as_dict()


def _moduli(form, args):
    from .moduli import absolute_invariants, t_membership
    from .relations import coefficients

    point = absolute_invariants(compute_invariants(form.parsed))
    out = point.as_dict()
    if point.kind == "generic":
        out["t_membership"] = t_membership(point.values, coefficients(args.data_dir))
    return out


def _isomorphic(forms, args):
    from .moduli import are_isomorphic

    res = are_isomorphic(forms[0].parsed, forms[1].parsed)
    return {"isomorphic": res.isomorphic, "witness": res.witness()}


SINGLE = {
    "invariants": _invariants,
    "shioda": _shioda,
    "syzygy": _syzygy,
    "classify": _classify,
    "moduli": _moduli,
}


def _handle(command, texts, args):
    """Run one command on one input (two for ``isomorphic``); returns (payload, exit code)."""
    try:
        forms = [parse_input(t) for t in texts]
    except ParseError as exc:
        err = {"type": "parse", "message": str(exc)}
        if exc.column is not None:
            err["column"] = exc.column
        return {"input": texts if len(texts) > 1 else texts[0], "error": err}, EXIT_PARSE
    payload = {"input": [format_form(f.parsed) for f in forms] if len(forms) > 1
               else format_form(forms[0].parsed)}
    try:
        if command == "isomorphic":
            payload.update(_isomorphic(forms, args))
        else:
            payload.update(SINGLE[command](forms[0], args))
    except (ValueError, ArithmeticError) as exc:
        payload["error"] = {"type": "math", "message": str(exc)}
        return payload, EXIT_MATH
    except OSError as exc:
        payload["error"] = {"type": "io", "message": str(exc)}
        return payload, EXIT_MATH
    return payload, EXIT_OK


def _emit(payload, fmt, out):
    # error records carry plain ints (columns), everything else is exact math
    body = {"schema": SCHEMA}
    body.update({k: v if k == "error" else to_json_value(v) for k, v in payload.items()})
    if fmt == "json":
        out.write(json.dumps(body) + "\n")
        return
    for key, value in body.items():
        if isinstance(value, dict):
            for k, v in value.items():
                out.write(f"{key}.{k}: {json.dumps(v) if not isinstance(v, str) else v}\n")
        else:
            out.write(f"{key}: {json.dumps(value) if not isinstance(value, str) else value}\n")
    out.write("\n")


def _recover(args):
    from .relations import (
        BLOCKS, default_data_dir, load_coefficients, recover_coefficients, write_coefficients,
    )

    data = recover_coefficients(seed=args.seed)
    target = Path(args.out) if args.out else default_data_dir(args.data_dir)
    raw_dir = Path(args.raw) if args.raw else default_data_dir(None) / "transcribed"
    raw, violations = load_coefficients(raw_dir, strict=False, with_violations=True)
    write_coefficients(data, target, raw=raw, raw_violations=violations)
    return {
        "output": str(target),
        "terms": {f"I{d}": len(data.block(d)) for d in BLOCKS},
        "diff_log": str(target / "transcription_diff.log"),
    }


def _refute(args):
    from .relations import coefficients, shioda_refutation

    return shioda_refutation(coefficients(args.data_dir)).as_dict()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "plain"), default="json")
    common.add_argument("--data-dir", default=None,
                        help="directory holding I8.txt..I40.txt (default: $OCTAVIC_DATA_DIR, then bundled data)")

    parser = argparse.ArgumentParser(prog="octavic", description="Invariants of binary octavics and genus-3 hyperelliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in SINGLE:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("input", nargs="?", help="y^2 = poly(x), a bare polynomial, or a0,...,a8")
        p.add_argument("--batch", metavar="FILE", help="one input per line ('-' for stdin)")
    p = sub.add_parser("isomorphic", parents=[common])
    p.add_argument("inputs", nargs="*", help="two curves")
    p.add_argument("--batch", metavar="FILE", help="one pair per line, separated by ';'")
    p = sub.add_parser("recover", parents=[common])
    p.add_argument("--out", default=None, help="where to write the recovered files (default: the data directory)")
    p.add_argument("--raw", default=None, help="directory with the verbatim transcription to diff against")
    p.add_argument("--seed", type=int, default=0)
    sub.add_parser("refute-shioda", parents=[common])
    return parser


def _batch_lines(path):
    stream = sys.stdin if path == "-" else open(path)
    try:
        return [line.rstrip("\n") for line in stream]
    finally:
        if stream is not sys.stdin:
            stream.close()


def run(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    cmd = args.command
    if cmd == "recover":
        _emit(_recover(args), args.format, out)
        return EXIT_OK
    if cmd == "refute-shioda":
        _emit(_refute(args), args.format, out)
        return EXIT_OK
    if args.batch:
        worst = EXIT_OK
        for line in _batch_lines(args.batch):
            texts = line.split(";") if cmd == "isomorphic" else [line]
            if cmd == "isomorphic" and len(texts) != 2:
                payload, code = {"input": line, "error": {"type": "parse", "message": "expected two inputs separated by ';'"}}, EXIT_PARSE
            else:
                payload, code = _handle(cmd, texts, args)
            _emit(payload, args.format, out)
            worst = max(worst, code)
        return worst
    if cmd == "isomorphic":
        texts = args.inputs
        if len(texts) != 2:
            _emit({"input": texts, "error": {"type": "parse", "message": "isomorphic takes two inputs"}}, args.format, out)
            return EXIT_PARSE
    else:
        if args.input is None:
            _emit({"input": None, "error": {"type": "parse", "message": "empty input"}}, args.format, out)
            return EXIT_PARSE
        texts = [args.input]
    payload, code = _handle(cmd, texts, args)
    _emit(payload, args.format, out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()

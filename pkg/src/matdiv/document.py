"""JSON matrix documents.

    {"ring": {"kind": "int"}, "matrix": [["450", "0"], ["-1350", "67500"]]}
    {"ring": {"kind": "polyfp", "p": 5}, "matrix": [[[1, 1], [0]], [[2], [0, 0, 1]]]}

Integers travel as decimal strings; polynomials as ascending coefficient
arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import PreconditionError
from .matrix import Mat2
from .ring import ZZ, Poly, Ring, is_probable_prime, poly_ring

MAX_POLY_DEGREE = 12
MAX_INT_DIGITS = 1000

EXIT_MALFORMED = 2
EXIT_MODULUS = 4
EXIT_LIMIT = 5


class InputError(PreconditionError):
    exit_code = EXIT_MALFORMED


class ModulusError(InputError):
    exit_code = EXIT_MODULUS


class LimitError(InputError):
    exit_code = EXIT_LIMIT


@dataclass(frozen=True)
class MatrixDocument:
    ring: Ring
    matrix: Mat2


def parse_ring(desc) -> Ring:
    if not isinstance(desc, dict) or "kind" not in desc:
        raise InputError("'ring' must be an object with a 'kind' field")
    kind = desc["kind"]
    if kind == "int":
        return ZZ
    if kind == "polyfp":
        p = desc.get("p")
        if isinstance(p, str) and p.lstrip("-").isdigit():
            p = int(p)
        if not isinstance(p, int) or isinstance(p, bool):
            raise InputError("polyfp ring needs an integer modulus 'p'")
        if not is_probable_prime(p):
            raise ModulusError(f"modulus {p} is not prime")
        return poly_ring(p)
    raise InputError(f"unknown ring kind {kind!r}")


def _parse_int(x) -> int:
    if isinstance(x, bool):
        raise InputError(f"bad integer {x!r}")
    if isinstance(x, int):
        v = x
    elif isinstance(x, str):
        s = x.strip()
        if len(s.lstrip("+-")) > MAX_INT_DIGITS:
            raise LimitError(f"integer entry longer than {MAX_INT_DIGITS} digits")
        try:
            v = int(s, 10)
        except ValueError:
            raise InputError(f"bad integer {x!r}") from None
    else:
        raise InputError(f"bad integer {x!r}")
    if len(str(abs(v))) > MAX_INT_DIGITS:
        raise LimitError(f"integer entry longer than {MAX_INT_DIGITS} digits")
    return v


def parse_element(ring: Ring, x):
    if ring == ZZ:
        return _parse_int(x)
    if isinstance(x, list):
        f = Poly(ring.p, [_parse_int(c) for c in x])
    else:
        f = Poly(ring.p, (_parse_int(x),))
    if f.degree > MAX_POLY_DEGREE:
        raise LimitError(f"polynomial degree {f.degree} exceeds {MAX_POLY_DEGREE}")
    return f


def parse_document(doc) -> MatrixDocument:
    if not isinstance(doc, dict):
        raise InputError("document must be a JSON object")
    if "ring" not in doc or "matrix" not in doc:
        raise InputError("document needs 'ring' and 'matrix'")
    ring = parse_ring(doc["ring"])
    rows = doc["matrix"]
    if not (isinstance(rows, list) and len(rows) == 2 and all(isinstance(r, list) and len(r) == 2 for r in rows)):
        raise InputError("'matrix' must be a 2x2 array")
    return MatrixDocument(ring, Mat2.of(ring, [[parse_element(ring, x) for x in r] for r in rows]))


def parse_matrix_file(path) -> Mat2:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e.msg})") from None
    return parse_document(doc).matrix


def encode_element(x):
    if isinstance(x, Poly):
        return list(x.coeffs)
    return str(x)


def encode_matrix(M: Mat2) -> list:
    return [[encode_element(x) for x in r] for r in M.rows]


def matrix_document(M: Mat2) -> dict:
    return {"ring": M.ring.describe(), "matrix": encode_matrix(M)}

"""JSON wire formats: exact rationals as strings, schema version "1".

Rationals travel as decimal-digit strings "p/q", shortened to "p" when the
denominator is 1, so no consumer is ever tempted to round.  Every payload
carries ``"schema": "1"``.  ``dumps`` is deterministic (sorted keys, fixed
separators): identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .coefficients import CoeffTable, DiagonalSequence
from .concavity import SequenceReport, TransferReport
from .errors import ParseError
from .paths import Certificate
from .polycore import GammaVector, SymmetricPolynomial

SCHEMA = "1"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse 'p/q' or 'p' with optional sign; anything else is rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational 'p/q' or integer: {text!r}")
    frac = Fraction(text)
    return frac


def dumps(payload: dict[str, Any]) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def vector_payload(obj: SymmetricPolynomial | GammaVector) -> dict[str, Any]:
    if isinstance(obj, SymmetricPolynomial):
        kind, coeffs = "h", obj.h
    else:
        kind, coeffs = "gamma", obj.gamma
    return {"schema": SCHEMA, "kind": kind, "n": obj.n, "coeffs": [format_rational(c) for c in coeffs]}


def _check_schema(payload: dict[str, Any]) -> None:
    if "schema" in payload and payload["schema"] != SCHEMA:
        raise ParseError(f"unsupported schema {payload['schema']!r}, expected {SCHEMA!r}")


def parse_vector_payload(payload: dict[str, Any], kind: str | None = None) -> SymmetricPolynomial | GammaVector:
    """Rebuild a vector from its payload; ``kind`` overrides/validates the tag."""
    if not isinstance(payload, dict):
        raise ParseError(f"expected a JSON object, got {type(payload).__name__}")
    _check_schema(payload)
    tag = payload.get("kind", kind)
    if kind is not None and payload.get("kind") not in (None, kind):
        raise ParseError(f"payload kind {payload['kind']!r} does not match requested {kind!r}")
    if tag not in ("h", "gamma"):
        raise ParseError(f"payload kind must be 'h' or 'gamma', got {tag!r}")
    try:
        n = int(payload["n"])
        raw = payload["coeffs"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"payload needs integer 'n' and list 'coeffs': {exc}") from exc
    coeffs = []
    for pos, c in enumerate(raw):
        if isinstance(c, str):
            coeffs.append(parse_rational(c))
        elif isinstance(c, int) and not isinstance(c, bool):
            coeffs.append(Fraction(c))
        else:
            raise ParseError(f"coefficient {pos} must be a 'p/q' string or integer, got {c!r}")
    if tag == "h":
        return SymmetricPolynomial(n, tuple(coeffs))
    return GammaVector(n, tuple(coeffs))


def loads_vector(text: str, kind: str | None = None) -> SymmetricPolynomial | GammaVector:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_vector_payload(payload, kind)


def table_payload(table: CoeffTable) -> dict[str, Any]:
    entries = sorted(table.entries.items(), key=lambda item: (item[0][0] + item[0][1], item[0][1] - item[0][0]))
    return {
        "schema": SCHEMA,
        "kind": "coeff-table",
        "n": table.n,
        "i": table.i,
        "entries": [[j, k, str(c)] for (j, k), c in entries],
    }


def diagonal_payload(diag: DiagonalSequence) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "diagonal",
        "n": diag.n,
        "i": diag.i,
        "l": diag.l,
        "parity": diag.parity,
        "pairs": [[j, k] for j, k in diag.pairs],
        "values": [str(v) for v in diag.values],
        "tail_sign_ok": diag.tail_sign_ok,
        "total": str(diag.total),
    }


def certificate_payload(cert: Certificate) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "certificate",
        "n": cert.n,
        "i": cert.i,
        "r": cert.r,
        "lhs": str(cert.lhs),
        "rhs": str(cert.rhs),
        "avoiding_term": str(cert.avoiding_term),
        "boundary_terms": [[list(rb), list(rp), str(c)] for rb, rp, c in cert.boundary_terms],
        "total": str(cert.total),
        "path_count": cert.path_count,
        "contributing_paths": cert.contributing_paths,
        "avoiding_contributing": cert.avoiding_contributing,
    }


def report_payload(report: SequenceReport) -> dict[str, Any]:
    return {
        "kind": report.kind,
        "verdict": report.verdict,
        "witness": list(report.witness) if report.witness is not None else None,
    }


def transfer_payload(report: TransferReport) -> dict[str, Any]:
    return {
        "schema": SCHEMA,
        "kind": "transfer",
        "n": report.n,
        "gamma_log_concave": report_payload(report.gamma_log_concave),
        "gamma_internal_zeros": report_payload(report.gamma_internal_zeros),
        "h_log_concave": report_payload(report.h_log_concave),
        "h_internal_zeros": report_payload(report.h_internal_zeros),
        "h": vector_payload(report.h),
        "hypothesis": report.hypothesis,
        "conclusion": report.conclusion,
        "violation": report.violation,
    }

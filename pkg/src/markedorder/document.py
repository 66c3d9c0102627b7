"""The ``.mop`` text format.

One concern per line, in any order; ``#`` starts a comment::

    elements: m0 p q m4 m1 m3
    covers: m0<p p<q q<m4 m1<q p<m3
    marks: m0=0 m1=1 m3=3 m4=4
    condition: 1*p + 1*r = 4

``covers`` and ``marks`` may repeat; each ``condition`` line adds one row.
``covers`` entries may be chains such as ``a<b<c`` and need not be covers;
they are reduced. Numbers are exact: integers or ``n/d``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from ._rational import format_fraction, parse_exact
from .conditional import LinearConditions, make_conditions
from .errors import ParseError
from .marked import MarkedPoset, make_marked_poset
from .poset import build_poset

_NAME = re.compile(r"[^\s<=+*#,:\-]+")
_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?(" + _NAME.pattern + r")\s*")
_KEYS = ("elements", "covers", "marks", "condition")


def _number(text: str, line: int, column: int) -> Fraction:
    value = parse_exact(text)
    if value is None:
        raise ParseError(f"expected an integer or n/d, got {text!r}", line, column)
    return value


def _tokens(body: str, offset: int):
    for m in re.finditer(r"\S+", body):
        yield m.group(), offset + m.start() + 1


def _parse_condition(body: str, line: int, offset: int) -> tuple[dict[str, Fraction], Fraction]:
    if body.count("=") != 1:
        raise ParseError("a condition needs exactly one '='", line, offset + 1)
    lhs, rhs = body.split("=")
    rhs_col = offset + len(lhs) + 2
    rhs_value = _number(rhs.strip(), line, rhs_col + len(rhs) - len(rhs.lstrip()))
    coeffs: dict[str, Fraction] = {}
    if lhs.strip() == "0":
        return coeffs, rhs_value
    pos = 0
    first = True
    while pos < len(lhs):
        if not lhs[pos:].strip():
            break
        m = _TERM.match(lhs, pos)
        if not m or (m.group(1) is None and not first):
            skipped = len(lhs[pos:]) - len(lhs[pos:].lstrip())
            raise ParseError("expected a term like '2*p' or 'p'", line, offset + pos + skipped + 1)
        sign = -1 if m.group(1) == "-" else 1
        coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        name = m.group(3)
        coeffs[name] = coeffs.get(name, Fraction(0)) + sign * coeff
        pos = m.end()
        first = False
    if first:
        raise ParseError("condition has no terms", line, offset + 1)
    return coeffs, rhs_value


def parse_document(text: str) -> tuple[MarkedPoset, LinearConditions | None]:
    """Parse a document. Syntax problems raise :class:`ParseError` with a
    1-based line and column; semantic problems (cycles, unknown elements,
    non-monotone marks) raise the library's own errors."""
    elements: list[str] | None = None
    relations: list[tuple[str, str]] = []
    marks: dict[str, Fraction] = {}
    conditions = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'key: value'", lineno, 1)
        key, body = line.split(":", 1)
        key = key.strip()
        offset = line.index(":") + 1
        if key not in _KEYS:
            raise ParseError(f"unknown key {key!r}; expected one of {', '.join(_KEYS)}", lineno, 1)
        if key == "elements":
            if elements is not None:
                raise ParseError("elements given twice", lineno, 1)
            elements = []
            for tok, col in _tokens(body, offset):
                if not _NAME.fullmatch(tok):
                    raise ParseError(f"invalid element name {tok!r}", lineno, col)
                elements.append(tok)
        elif key == "covers":
            for tok, col in _tokens(body, offset):
                chain = tok.split("<")
                if len(chain) < 2 or not all(_NAME.fullmatch(c) for c in chain):
                    raise ParseError(f"expected 'a<b', got {tok!r}", lineno, col)
                relations.extend(zip(chain, chain[1:]))
        elif key == "marks":
            for tok, col in _tokens(body, offset):
                name, eq, value = tok.partition("=")
                if not eq or not _NAME.fullmatch(name):
                    raise ParseError(f"expected 'a=value', got {tok!r}", lineno, col)
                if name in marks:
                    raise ParseError(f"element {name!r} marked twice", lineno, col)
                marks[name] = _number(value, lineno, col + len(name) + 1)
        else:
            conditions.append(_parse_condition(body, lineno, offset))
    if elements is None:
        raise ParseError("missing 'elements:' line", 1, 1)
    P = build_poset(elements, relations)
    M = make_marked_poset(P, marks)
    S = make_conditions(M, conditions) if conditions else None
    return M, S


def _condition_line(coeffs: dict[str, Fraction], rhs: Fraction, order: tuple[str, ...]) -> str:
    terms = []
    for name in order:
        c = coeffs.get(name, 0)
        if not c:
            continue
        body = f"{format_fraction(abs(c))}*{name}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    lhs = " ".join(terms) if terms else "0"
    return f"condition: {lhs} = {format_fraction(rhs)}"


def serialize_document(M: MarkedPoset, S: LinearConditions | None = None) -> str:
    """Canonical text: elements in order, reduced covers, marks in element
    order, conditions with explicit coefficients."""
    lines = [f"elements: {' '.join(M.poset.elements)}".rstrip()]
    if M.poset.covers:
        lines.append("covers: " + " ".join(f"{p}<{q}" for p, q in M.poset.covers))
    if M.marking:
        lines.append("marks: " + " ".join(f"{a}={format_fraction(v)}" for a, v in M.marking.items()))
    if S is not None:
        for row in S.rows:
            lines.append(_condition_line(row.coeffs, row.rhs, M.poset.elements))
    return "\n".join(lines) + "\n"

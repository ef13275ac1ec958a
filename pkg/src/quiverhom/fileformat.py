"""Line-oriented algebra files.

::

    vertex 1
    vertex 2
    arrow a 1 1
    arrow g 1 2
    arrow b 2 2
    order a g b        # optional arrow order for the monomial order
    rel a*a
    rel b*b
    rel a*g - g*b      # rational coefficients allowed: rel 1/2 a*g - g*b

``#`` starts a comment.  Composition is left to right: ``a*g`` is "first
a, then g".  Relations written in the functional right-to-left
convention must be reversed term by term when entered.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import (BoundQuiverAlgebra, InconsistentRelationError,
                      Relation, build_algebra)
from .quiver import (IncomposableError, PathSyntaxError, Quiver,
                     UnknownArrowError, parse_path)


class AlgebraFileError(ValueError):
    """Parse failure with 1-based line and column."""

    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


def _strip_comment(line: str) -> str:
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_algebra_source(text: str,
                         max_degree: int = 64) -> BoundQuiverAlgebra:
    vertices = []
    arrows = []
    order = None
    rel_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        tokens = line.split()
        directive = tokens[0]
        if directive == "vertex":
            if len(tokens) != 2:
                raise AlgebraFileError("vertex takes one id", lineno, col)
            vertices.append(_vertex_token(tokens[1]))
        elif directive == "arrow":
            if len(tokens) != 4:
                raise AlgebraFileError(
                    "arrow takes a name, a source and a target", lineno, col)
            arrows.append((tokens[1], _vertex_token(tokens[2]),
                           _vertex_token(tokens[3])))
        elif directive == "order":
            order = tokens[1:]
            if not order:
                raise AlgebraFileError("order needs arrow names", lineno, col)
        elif directive == "rel":
            body = line[len("rel"):].strip()
            body_col = raw.index(body[0], raw.find("rel") + 3) + 1 \
                if body else col
            if not body:
                raise AlgebraFileError("empty relation", lineno, col)
            rel_lines.append((lineno, body_col, body))
        else:
            raise AlgebraFileError(
                f"unknown directive {directive!r}", lineno, col)

    if not vertices:
        raise AlgebraFileError("no vertices declared", 1)
    try:
        quiver = Quiver(vertices, arrows)
    except ValueError as exc:
        raise AlgebraFileError(str(exc), 1) from None

    relations = []
    for lineno, col, body in rel_lines:
        relations.append(_parse_relation(body, quiver, lineno, col))
    if order is not None:
        names = {a.name for a in quiver.arrows}
        if sorted(order) != sorted(names):
            raise AlgebraFileError(
                "order must list every arrow exactly once", 1)
    return build_algebra(quiver, relations, max_degree=max_degree,
                         arrow_order=order)


def load_algebra(path, max_degree: int = 64) -> BoundQuiverAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_algebra_source(fh.read(), max_degree=max_degree)


def _vertex_token(token: str):
    try:
        return int(token)
    except ValueError:
        return token


def _parse_relation(body: str, quiver: Quiver, lineno: int,
                    col: int) -> Relation:
    terms = []
    sign = 1
    pos = 0
    n = len(body)
    while pos < n:
        while pos < n and body[pos].isspace():
            pos += 1
        if pos >= n:
            break
        start = pos
        # grab one term: everything up to the next top-level + or -
        while pos < n and body[pos] not in "+-":
            pos += 1
        chunk = body[start:pos].strip()
        if not chunk:
            raise AlgebraFileError("empty relation term", lineno,
                                   col + start)
        terms.append((sign, chunk, col + start))
        if pos < n:
            sign = 1 if body[pos] == "+" else -1
            pos += 1
    if not terms:
        raise AlgebraFileError("empty relation", lineno, col)

    parsed = []
    for sgn, chunk, chunk_col in terms:
        coeff = Fraction(1)
        path_text = chunk
        pieces = chunk.split(None, 1)
        if len(pieces) == 2 and _looks_rational(pieces[0]):
            coeff = Fraction(pieces[0])
            path_text = pieces[1].strip()
        try:
            path = parse_path(path_text, quiver)
        except (PathSyntaxError, UnknownArrowError,
                IncomposableError) as exc:
            raise AlgebraFileError(str(exc), lineno, chunk_col) from None
        parsed.append((sgn * coeff, path))
    try:
        return Relation(parsed)
    except InconsistentRelationError as exc:
        raise AlgebraFileError(str(exc), lineno, col) from None


def _looks_rational(token: str) -> bool:
    try:
        Fraction(token)
    except (ValueError, ZeroDivisionError):
        return False
    return True

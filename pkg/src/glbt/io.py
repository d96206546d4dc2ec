"""Polytope documents: a strict JSON schema and a 3-dimensional OFF subset."""

from __future__ import annotations

import json
import math
import re
from fractions import Fraction
from pathlib import Path
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, StrictInt, StrictStr, ValidationError

from .geometry import GeometryError, PointConfiguration, convex_hull

FORMAT_VERSION = 1
OFF_DENOMINATOR = 2**20


class DocumentError(ValueError):
    pass


class ParseError(DocumentError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PolytopeDocument(BaseModel):
    """On-disk polytope: vertex coordinates as rational strings, optional facets."""

    model_config = ConfigDict(extra="forbid")

    format_version: Literal[1] = FORMAT_VERSION
    dim: StrictInt
    vertices: list[list[Union[StrictInt, StrictStr]]]
    labels: Optional[list[StrictStr]] = None
    facets: Optional[list[list[StrictInt]]] = None
    name: Optional[StrictStr] = None
    seed: Optional[StrictInt] = None


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(token: str | int) -> Fraction:
    """Exact rational from an integer or a ``"p/q"`` string; decimals are rejected."""
    if isinstance(token, int):
        return Fraction(token)
    t = token.strip()
    if not _RATIONAL.match(t):
        raise DocumentError(f"not an exact rational: {token!r}")
    try:
        return Fraction(t)
    except ZeroDivisionError:
        raise DocumentError(f"zero denominator: {token!r}") from None


def format_rational(x: Fraction) -> str:
    return str(x)


def document_from_config(pc: PointConfiguration, facets: list[list[int]] | None = None, name: str | None = None, seed: int | None = None) -> PolytopeDocument:
    default = tuple(str(i) for i in range(len(pc.points)))
    return PolytopeDocument(
        dim=pc.dim,
        vertices=[[format_rational(c) for c in p] for p in pc.points],
        labels=None if pc.labels == default else list(pc.labels),
        facets=facets,
        name=name,
        seed=seed,
    )


def config_from_document(doc: PolytopeDocument, validate: bool = True) -> PointConfiguration:
    if len(doc.vertices) < doc.dim + 1:
        raise DocumentError(f"{len(doc.vertices)} vertices cannot span dimension {doc.dim}")
    try:
        pts = tuple(tuple(parse_rational(c) for c in p) for p in doc.vertices)
        pc = PointConfiguration(doc.dim, pts, tuple(doc.labels) if doc.labels else ())
    except GeometryError as e:
        raise DocumentError(str(e)) from None
    if validate and doc.facets is not None:
        check_facets(pc, doc.facets)
    return pc


def check_facets(pc: PointConfiguration, facets: list[list[int]]) -> None:
    """Raise DocumentError unless ``facets`` (point indices) are exactly the hull facets."""
    hull = convex_hull(pc)
    expected = {frozenset(hull.vertex_indices[i] for i in f) for f in hull.lattice.facets()}
    given = {frozenset(f) for f in facets}
    if len(given) != len(facets) or given != expected:
        raise DocumentError("inconsistent facet list: does not match the convex hull")


def loads(text: str) -> PolytopeDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    try:
        return PolytopeDocument.model_validate(data)
    except ValidationError as e:
        raise DocumentError(f"schema violation: {e.errors()[0]['loc']}: {e.errors()[0]['msg']}") from None


def dumps(doc: PolytopeDocument) -> str:
    return json.dumps(doc.model_dump(exclude_none=True), indent=2) + "\n"


def load(path: str | Path) -> PolytopeDocument:
    return loads(Path(path).read_text())


def save(doc: PolytopeDocument, path: str | Path) -> None:
    Path(path).write_text(dumps(doc))


def load_config(path: str | Path, rationalize: bool = False) -> PointConfiguration:
    """Load a JSON document or (by extension) an OFF file as a point configuration."""
    path = Path(path)
    if path.suffix.lower() == ".off":
        return loads_off(path.read_text(), rationalize)
    return config_from_document(load(path))


def _off_number(tok: str, line: int, col: int, rationalize: bool) -> Fraction:
    low = tok.lower()
    if "nan" in low or "inf" in low:
        raise ParseError(f"non-finite number {tok!r}", line, col)
    if "." in tok or "e" in low:
        return _float_token(tok, line, col, rationalize)
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {tok!r}", line, col) from None


def _float_token(tok: str, line: int, col: int, rationalize: bool) -> Fraction:
    if not rationalize:
        raise ParseError(f"floating point coordinate {tok!r} (use --rationalize)", line, col)
    try:
        x = float(tok)
    except ValueError:
        raise ParseError(f"bad number {tok!r}", line, col) from None
    if not math.isfinite(x):
        raise ParseError(f"non-finite number {tok!r}", line, col)
    return Fraction(x).limit_denominator(OFF_DENOMINATOR)


def loads_off(text: str, rationalize: bool = False) -> PointConfiguration:
    """Parse a 3-dimensional OFF file; faces, if present, are checked against the hull."""
    tokens: list[tuple[str, int, int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        col = 0
        for part in body.split():
            col = body.index(part, col)
            tokens.append((part, ln, col + 1))
            col += len(part)
    if not tokens:
        raise ParseError("empty file", 1, 1)
    pos = 0
    if tokens[0][0] == "OFF":
        pos = 1
    elif tokens[0][0].endswith("OFF"):
        raise ParseError(f"unsupported OFF variant {tokens[0][0]!r}", tokens[0][1], tokens[0][2])

    def take_int() -> int:
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError("unexpected end of file", tokens[-1][1], tokens[-1][2])
        tok, ln, col = tokens[pos]
        pos += 1
        try:
            return int(tok)
        except ValueError:
            raise ParseError(f"expected an integer, got {tok!r}", ln, col) from None

    nv = take_int()
    nf = take_int()
    take_int()
    pts = []
    for _ in range(nv):
        p = []
        for _ in range(3):
            if pos >= len(tokens):
                raise ParseError("unexpected end of file", tokens[-1][1], tokens[-1][2])
            tok, ln, col = tokens[pos]
            pos += 1
            p.append(_off_number(tok, ln, col, rationalize))
        pts.append(tuple(p))
    faces = []
    for _ in range(nf):
        m = take_int()
        faces.append([take_int() for _ in range(m)])
    try:
        pc = PointConfiguration(3, tuple(pts))
    except GeometryError as e:
        raise DocumentError(str(e)) from None
    if faces:
        check_facets(pc, faces)
    return pc

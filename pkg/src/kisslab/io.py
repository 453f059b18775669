"""JSON shape and family files with exact rational coordinates.

Shape file::

    {"kind": "polygon", "vertices": [["0", "0"], ["1", "0"], ["0", "1"]], "name": "triangle"}
    {"kind": "segment_star", "center": ["0", "0"], "endpoints": [["1", "0"], ["-1", "0"]]}

Family file::

    {"vectors": [["1", "0"], ["0", "1"]]}

Rationals are integers or strings "p/q"; decimals are rejected.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import fields, is_dataclass
from fractions import Fraction
from typing import Any

from .convex import ConvexPolygon
from .geom import InvalidPolygonError, Point, Segment, SimplePolygon
from .star import SegmentStar

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ParseError(ValueError):
    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class ValidationError(ValueError):
    def __init__(self, message: str, edges: tuple[int, int] | None = None):
        super().__init__(message)
        self.edges = edges


def parse_rational(value: Any, location: str = "") -> Fraction:
    if isinstance(value, bool):
        raise ParseError("expected a rational, got a boolean", location)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL.match(value)
        if m:
            den = int(m.group(2)) if m.group(2) else 1
            if den == 0:
                raise ParseError(f"zero denominator in {value!r}", location)
            return Fraction(int(m.group(1)), den)
    raise ParseError(f"malformed rational {value!r} (use an integer or 'p/q')", location)


def parse_point(value: Any, location: str = "") -> Point:
    if isinstance(value, str):
        parts = value.split(",")
        if len(parts) == 2:
            return Point(parse_rational(parts[0], location + ".x"), parse_rational(parts[1], location + ".y"))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return Point(parse_rational(value[0], location + "[0]"), parse_rational(value[1], location + "[1]"))
    raise ParseError(f"expected a coordinate pair, got {value!r}", location)


def fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_point(p: Point) -> list[str]:
    return [fmt_rational(p.x), fmt_rational(p.y)]


def _load(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from exc


def shape_from_obj(obj: Any) -> SimplePolygon | SegmentStar:
    if not isinstance(obj, dict):
        raise ParseError("shape must be a JSON object", "$")
    kind = obj.get("kind")
    if kind == "polygon":
        verts = obj.get("vertices")
        if not isinstance(verts, list):
            raise ParseError("missing vertex list", "$.vertices")
        pts = [parse_point(v, f"$.vertices[{i}]") for i, v in enumerate(verts)]
        try:
            return SimplePolygon(pts)
        except InvalidPolygonError as exc:
            raise ValidationError(str(exc), exc.edges) from exc
    if kind == "segment_star":
        if "center" not in obj or not isinstance(obj.get("endpoints"), list):
            raise ParseError("segment_star needs 'center' and 'endpoints'", "$")
        center = parse_point(obj["center"], "$.center")
        ends = [parse_point(v, f"$.endpoints[{i}]") for i, v in enumerate(obj["endpoints"])]
        try:
            return SegmentStar(center, ends)
        except ValueError as exc:
            raise ValidationError(str(exc)) from exc
    raise ParseError(f"unknown kind {kind!r} (expected 'polygon' or 'segment_star')", "$.kind")


def parse_shape_file(text: str) -> SimplePolygon | SegmentStar:
    return shape_from_obj(_load(text))


def shape_to_obj(shape: SimplePolygon | SegmentStar, name: str | None = None) -> dict:
    if isinstance(shape, SegmentStar):
        obj = {"kind": "segment_star", "center": fmt_point(shape.center),
               "endpoints": [fmt_point(e) for e in shape.arm_endpoints]}
    else:
        obj = {"kind": "polygon", "vertices": [fmt_point(v) for v in shape.vertices]}
    if name:
        obj["name"] = name
    return obj


def serialize_shape(shape: SimplePolygon | SegmentStar, name: str | None = None) -> str:
    return json.dumps(shape_to_obj(shape, name), indent=2)


def parse_vectors(text: str) -> list[Point]:
    obj = _load(text)
    if isinstance(obj, dict):
        obj = obj.get("vectors")
        loc = "$.vectors"
    else:
        loc = "$"
    if not isinstance(obj, list):
        raise ParseError("expected a list of vectors", loc)
    return [parse_point(v, f"{loc}[{i}]") for i, v in enumerate(obj)]


def serialize_vectors(vectors) -> str:
    return json.dumps({"vectors": [fmt_point(v) for v in vectors]})


def to_jsonable(obj: Any) -> Any:
    """Plain JSON structure for reports; rationals become 'p/q' strings."""
    if isinstance(obj, Fraction):
        return fmt_rational(obj)
    if isinstance(obj, Point):
        return fmt_point(obj)
    if isinstance(obj, Segment):
        return [fmt_point(obj.a), fmt_point(obj.b)]
    if isinstance(obj, (SimplePolygon, ConvexPolygon)):
        return [fmt_point(v) for v in obj.vertices]
    if isinstance(obj, SegmentStar):
        return shape_to_obj(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if is_dataclass(obj):
        out = {f.name: to_jsonable(getattr(obj, f.name)) for f in fields(obj)}
        for extra in ("count", "valid", "exact", "passed"):
            if hasattr(type(obj), extra) and isinstance(getattr(type(obj), extra), property):
                out[extra] = to_jsonable(getattr(obj, extra))
        return out
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    return obj

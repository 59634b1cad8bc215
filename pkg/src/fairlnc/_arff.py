"""Minimal reader for the attribute-relation file format.

Supports ``@relation``, ``@attribute`` (numeric/real/integer, nominal
``{...}`` and string) and dense ``@data`` rows. Missing cells (``?``) are
returned as ``None``.
"""
from dataclasses import dataclass

from .errors import ParseError

NUMERIC_TYPES = {"numeric", "real", "integer"}


@dataclass
class Attribute:
    name: str
    kind: str  # "numeric", "nominal" or "string"
    levels: tuple = ()


def split_fields(line):
    """Split a comma separated line, honouring single and double quotes."""
    fields, buf, quote, i = [], [], None, 0
    quoted = False
    while i < len(line):
        ch = line[i]
        if quote:
            if ch == "\\" and i + 1 < len(line):
                buf.append(line[i + 1])
                i += 2
                continue
            if ch == quote:
                quote = None
            else:
                buf.append(ch)
        elif ch in "'\"":
            quote = ch
            quoted = True
        elif ch == ",":
            fields.append(_finish(buf, quoted))
            buf, quoted = [], False
        else:
            buf.append(ch)
        i += 1
    if quote:
        raise ValueError("unterminated quote")
    fields.append(_finish(buf, quoted))
    return fields


def _finish(buf, quoted):
    text = "".join(buf)
    return text if quoted else text.strip()


def _parse_attribute(rest, lineno):
    rest = rest.strip()
    if rest[:1] in "'\"":
        q = rest[0]
        end = rest.index(q, 1)
        name, spec = rest[1:end], rest[end + 1:].strip()
    else:
        parts = rest.split(None, 1)
        if len(parts) != 2:
            raise ParseError(f"malformed @attribute on line {lineno}")
        name, spec = parts
    low = spec.lower()
    if spec.startswith("{"):
        if not spec.endswith("}"):
            raise ParseError(f"unterminated nominal list on line {lineno}")
        levels = tuple(v for v in split_fields(spec[1:-1]))
        return Attribute(name, "nominal", levels)
    if low in NUMERIC_TYPES:
        return Attribute(name, "numeric")
    if low == "string":
        return Attribute(name, "string")
    raise ParseError(f"unsupported attribute type {spec!r} on line {lineno}")


def read_arff(text):
    """Parse ARFF ``text`` into ``(attributes, rows)``.

    Each row is a list of raw strings (``None`` for missing cells); type
    conversion is left to the caller so errors can name row and column.
    """
    attributes, rows = [], []
    in_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if not in_data:
            key = line.split(None, 1)[0].lower()
            if key == "@relation":
                continue
            if key == "@attribute":
                attributes.append(_parse_attribute(line.split(None, 1)[1], lineno))
                continue
            if key == "@data":
                in_data = True
                continue
            raise ParseError(f"unexpected header line {lineno}: {line[:40]!r}")
        if line.startswith("{"):
            raise ParseError("sparse ARFF rows are not supported", row=len(rows) + 1)
        try:
            cells = split_fields(line)
        except ValueError as exc:
            raise ParseError(str(exc), row=len(rows) + 1) from None
        if len(cells) != len(attributes):
            raise ParseError(
                f"expected {len(attributes)} values, got {len(cells)}", row=len(rows) + 1
            )
        rows.append([None if c == "?" else c for c in cells])
    if not attributes:
        raise ParseError("no @attribute declarations found")
    return attributes, rows

"""Facet file parsing and emission.

Text format: one facet per line as whitespace-separated vertex labels;
lines starting with '#' are comments; an empty file is the void complex and
a file whose only content is the line '@empty-face' is {<>}.  A JSON
alternative {"facets": [["1", "2"], ...]} is accepted on input (detected by
a leading '{').  Emission always uses the canonical text form, so
parse(emit(cx)) reproduces cx for compact complexes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import SimplicialComplex, from_facets

EMPTY_FACE_LINE = "@empty-face"


class ParseError(ValueError):
    """Malformed facet file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _label_key(label: str):
    # numeric labels sort numerically, everything else lexicographically after
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def _build(facet_tokens: list[list[str]]) -> SimplicialComplex:
    labels = sorted({tok for row in facet_tokens for tok in row}, key=_label_key)
    index = {lb: i for i, lb in enumerate(labels)}
    return from_facets([[index[tok] for tok in row] for row in facet_tokens],
                       labels=labels)


def _parse_text(text: str) -> SimplicialComplex:
    rows: list[tuple[int, list[str]]] = []
    marker_line = None
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line == EMPTY_FACE_LINE:
            if marker_line is not None:
                raise ParseError(f"duplicate {EMPTY_FACE_LINE}", line=ln)
            marker_line = ln
            continue
        rows.append((ln, line.split()))
    if marker_line is not None:
        if rows:
            raise ParseError(f"{EMPTY_FACE_LINE} must be the only content", line=marker_line)
        return from_facets([()])
    if not rows:
        return from_facets([])
    return _build([tokens for _, tokens in rows])


def _parse_json(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", line=e.lineno) from None
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParseError('JSON input must be an object with a "facets" key')
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError('"facets" must be a list of lists of labels')
    if facets and all(len(f) == 0 for f in facets):
        return from_facets([()])
    return _build([[str(tok) for tok in f] for f in facets]) if facets else from_facets([])


def parse(text: str) -> SimplicialComplex:
    """Parse either facet format; JSON is detected by a leading '{'."""
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def load(path) -> SimplicialComplex:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror or e}") from None
    return parse(text)


def emit(cx: SimplicialComplex) -> str:
    """Canonical text form: facets in canonical order, one per line."""
    if cx.is_void:
        return ""
    if cx.dim == -1:
        return EMPTY_FACE_LINE + "\n"
    lines = []
    for facet in cx.facets:
        tokens = [cx.labels[v] for v in facet]
        for tok in tokens:
            if not tok or tok.split() != [tok] or tok.startswith(("#", "@")):
                raise ValueError(f"label {tok!r} cannot be written to the facet format")
        lines.append(" ".join(tokens))
    return "\n".join(lines) + "\n"


def dump(cx: SimplicialComplex, path) -> None:
    Path(path).write_text(emit(cx))

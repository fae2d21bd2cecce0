"""Line-oriented space documents.

::

    # comments run to end of line
    space E
    points a b c
    open a b

The empty and full sets are implicit. Documents are normalized on parse
(labels within an open follow point order, duplicates and trivial opens
dropped, opens sorted by size then point order) so that
``parse_space(render_space(doc)) == doc``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import FiniteSpace, validate_topology
from .errors import DuplicateLabel, ParseError, SizeLimitExceeded, UnknownLabel
from .pointset import bits_of

MAX_DOC_BYTES = 64 * 1024
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_.\-]*")


@dataclass(frozen=True)
class SpaceDoc:
    name: str
    points: tuple[str, ...]
    opens: tuple[tuple[str, ...], ...]


def _normalize(points, opens):
    where = {p: i for i, p in enumerate(points)}
    full = len(points)
    keyed = set()
    for labels in opens:
        idx = tuple(sorted({where[l] for l in labels}))
        if 0 < len(idx) < full:
            keyed.add(idx)
    return tuple(tuple(points[i] for i in idx) for idx in sorted(keyed, key=lambda t: (len(t), t)))


def parse_space(text: str) -> SpaceDoc:
    if len(text.encode()) > MAX_DOC_BYTES:
        raise SizeLimitExceeded(f"space document exceeds {MAX_DOC_BYTES} bytes")
    name = points = None
    where: dict[str, int] = {}
    opens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        words = [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]
        if not words:
            continue
        (keyword, col), args = words[0], words[1:]
        if keyword == "space":
            if name is not None:
                raise ParseError("duplicate 'space' line", lineno, col)
            if len(args) != 1 or not _NAME.fullmatch(args[0][0]):
                raise ParseError("expected 'space <name>'", lineno, col)
            name = args[0][0]
        elif keyword == "points":
            if name is None:
                raise ParseError("'points' before 'space'", lineno, col)
            if points is not None:
                raise ParseError("duplicate 'points' line", lineno, col)
            points = []
            for label, lcol in args:
                if label in where:
                    raise DuplicateLabel(f"duplicate label {label!r}", lineno, lcol)
                where[label] = len(points)
                points.append(label)
        elif keyword == "open":
            if points is None:
                raise ParseError("'open' before 'points'", lineno, col)
            for label, lcol in args:
                if label not in where:
                    raise UnknownLabel(f"unknown label {label!r}", lineno, lcol)
            opens.append([label for label, _ in args])
        else:
            raise ParseError(f"unknown directive {keyword!r}", lineno, col)
    if name is None:
        raise ParseError("missing 'space' line")
    if points is None:
        raise ParseError("missing 'points' line")
    return SpaceDoc(name, tuple(points), _normalize(points, opens))


def render_space(doc: SpaceDoc) -> str:
    lines = [f"space {doc.name}", "points " + " ".join(doc.points)]
    lines += ["open " + " ".join(o) for o in _normalize(doc.points, doc.opens)]
    return "\n".join(lines) + "\n"


def doc_to_space(doc: SpaceDoc, *, complete: bool = False) -> FiniteSpace:
    where = {p: i for i, p in enumerate(doc.points)}
    family = [sum(1 << where[l] for l in labels) for labels in doc.opens]
    sp = validate_topology(len(doc.points), family, complete=complete, labels=doc.points)
    sp._cache["name"] = doc.name
    return sp


def space_to_doc(sp: FiniteSpace, name: str = "X") -> SpaceDoc:
    labels = sp.point_labels()
    opens = [tuple(labels[p] for p in bits_of(m)) for m in sp.open_masks]
    return SpaceDoc(name, tuple(labels), _normalize(labels, opens))


def load_space(path, *, complete: bool = False) -> FiniteSpace:
    with open(path, encoding="utf-8") as fh:
        return doc_to_space(parse_space(fh.read()), complete=complete)


def parse_labels(text: str) -> list[str]:
    """Split a comma-separated label list; commas inside parentheses are kept."""
    if not text.strip():
        return []
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += (ch == "(") - (ch == ")")
        cur.append(ch)
    out.append("".join(cur).strip())
    return out

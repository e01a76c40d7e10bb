"""Plain-text edge-list and coloring files.

Edge list::

    # comments start with '#', blank lines are ignored
    3          <- vertex count
    0 1        <- one edge u->v per line
    1 2
    2 0

Coloring: one ``v c`` line per vertex, sorted by ``v``, after ``#`` header
lines of the form ``# key=value``.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .core import Digraph, from_edge_list
from .degeneracy import Coloring


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(f"expected {count} integer(s), got {line!r}", lineno)
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"not an integer in {line!r}", lineno) from None


def _header_line(header: Mapping[str, object]) -> str:
    return "# " + " ".join(f"{k}={v}" for k, v in header.items()) + "\n"


def parse_edge_list(text: str) -> Digraph:
    lines = _content_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ParseError("missing vertex count") from None
    (n,) = _ints(first, lineno, 1)
    if n < 0:
        raise ParseError(f"negative vertex count {n}", lineno)
    edges = []
    seen = set()
    for lineno, line in lines:
        u, v = _ints(line, lineno, 2)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno)
        seen.add((u, v))
        edges.append((u, v))
    return from_edge_list(n, edges)


def format_edge_list(D: Digraph, header: Mapping[str, object] | None = None) -> str:
    out = [_header_line(header)] if header else []
    out.append(f"{D.n}\n")
    out.extend(f"{u} {v}\n" for u, v in D.edges())
    return "".join(out)


def format_coloring(c: Coloring, header: Mapping[str, object]) -> str:
    out = [_header_line(header)] if header else []
    out.extend(f"{v} {col}\n" for v, col in enumerate(c.assignment))
    return "".join(out)


def parse_coloring(text: str, n: int | None = None) -> tuple[Coloring, dict[str, str]]:
    header: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#") and "=" in line:
            for token in line[1:].split():
                if "=" in token:
                    key, _, value = token.partition("=")
                    header[key] = value
    colors = []
    for lineno, line in _content_lines(text):
        v, c = _ints(line, lineno, 2)
        if v != len(colors):
            raise ParseError(f"expected vertex {len(colors)}, got {v}", lineno)
        if c < 0:
            raise ParseError(f"negative color {c}", lineno)
        colors.append(c)
    if n is not None and len(colors) != n:
        raise ParseError(f"coloring covers {len(colors)} vertices, digraph has {n}")
    return Coloring(tuple(colors)), header

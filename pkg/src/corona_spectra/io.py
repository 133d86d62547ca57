"""Edge-list text format and DOT export for digraphs.

Format::

    # comment lines are ignored
    n 3
    0 1
    1 2
    2 0

The first significant line is ``n <count>``; every further significant line
is ``<tail> <head>`` with 0-based indices.
"""
from __future__ import annotations

from .digraph import Digraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class HeaderError(ParseError):
    pass


class MalformedArcError(ParseError):
    pass


class LoopError(ParseError):
    pass


class DuplicateArcError(ParseError):
    pass


class IndexRangeError(ParseError):
    pass


def parse_digraph(text: str) -> Digraph:
    n = None
    arcs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n" or not _is_uint(parts[1]):
                raise HeaderError(f"expected header 'n <count>', got {line!r}", lineno)
            n = int(parts[1])
            continue
        if len(parts) != 2 or not all(_is_uint(p) for p in parts):
            raise MalformedArcError(f"expected '<tail> <head>', got {line!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u >= n or v >= n:
            raise IndexRangeError(f"arc ({u}, {v}) outside vertex range [0, {n})", lineno)
        if u == v:
            raise LoopError(f"loop at vertex {u}", lineno)
        if (u, v) in seen:
            raise DuplicateArcError(f"duplicate arc ({u}, {v})", lineno)
        seen.add((u, v))
        arcs.append((u, v))
    if n is None:
        raise HeaderError("missing header 'n <count>'", last_line + 1)
    return Digraph(n, tuple(arcs))


def _is_uint(s: str) -> bool:
    return s.isascii() and s.isdigit()


def serialize_digraph(d: Digraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {d.n}")
    lines.extend(f"{u} {v}" for u, v in d.arcs)
    return "\n".join(lines) + "\n"


def to_dot(d: Digraph) -> str:
    body = "".join(f" {v};" for v in range(d.n))
    body += "".join(f" {u} -> {v};" for u, v in d.arcs)
    return f"digraph {{{body} }}\n"


def read_digraph(path: str) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_digraph(fh.read())


def write_digraph(d: Digraph, path: str, comments: tuple[str, ...] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_digraph(d, comments))

"""Reading and writing the plain-text hypergraph format.

The first non-comment line is ``n r m``; it is followed by ``m`` lines, each
holding ``r`` strictly increasing 0-based vertex ids separated by single
spaces. Lines starting with ``#`` are comments. Graphs use ``r = 2``.
"""

from __future__ import annotations

from pathlib import Path
from typing import TextIO, Union

from .errors import ParseError
from .hypergraph import Graph, Hypergraph


def _ints(text: str, lineno: int) -> list[int]:
    fields = text.split(" ")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise ParseError(f"expected integers separated by single spaces, got {text!r}", lineno) from None


def parse_hypergraph(text: str) -> Hypergraph:
    lines = [
        (i, line.strip())
        for i, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("missing header line 'n r m'", 1)
    lineno, header = lines[0]
    values = _ints(header, lineno)
    if len(values) != 3:
        raise ParseError("header must be 'n r m'", lineno)
    n, r, m = values
    if n < 0 or r < 2 or m < 0:
        raise ParseError(f"invalid header values n={n} r={r} m={m}", lineno)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header announces {m} edges but {len(body)} edge lines follow",
                         body[-1][0] if body else lineno)
    edges = []
    seen = set()
    for lineno, line in body:
        edge = _ints(line, lineno)
        if len(edge) != r:
            raise ParseError(f"expected {r} vertices, got {len(edge)}", lineno)
        if any(a >= b for a, b in zip(edge, edge[1:])):
            raise ParseError("vertex ids must be strictly increasing", lineno)
        if edge[0] < 0 or edge[-1] >= n:
            raise ParseError(f"vertex id outside 0..{n - 1}", lineno)
        if tuple(edge) in seen:
            raise ParseError(f"duplicate edge {edge}", lineno)
        seen.add(tuple(edge))
        edges.append(tuple(edge))
    return Hypergraph(n, r, tuple(edges))


def format_hypergraph(H: Union[Hypergraph, Graph], comment: str | None = None) -> str:
    if isinstance(H, Graph):
        H = H.to_hypergraph()
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{H.n} {H.r} {H.num_edges}")
    out.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def read_hypergraph(source: Union[str, Path, TextIO]) -> Hypergraph:
    if hasattr(source, "read"):
        return parse_hypergraph(source.read())
    return parse_hypergraph(Path(source).read_text())


def read_graph(source: Union[str, Path, TextIO]) -> Graph:
    H = read_hypergraph(source)
    if H.r != 2:
        raise ParseError(f"expected a graph (r = 2), got r = {H.r}", 1)
    return H.to_graph()


def write_hypergraph(H: Union[Hypergraph, Graph], path: Union[str, Path], comment: str | None = None):
    Path(path).write_text(format_hypergraph(H, comment))

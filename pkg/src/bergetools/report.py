"""Search and census results, with a stable ``key: value`` text form."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .hypergraph import Graph, Hypergraph


def _edges_text(witness: Union[Graph, Hypergraph]) -> str:
    edges = witness.edges() if isinstance(witness, Graph) else witness.edges
    return "; ".join(" ".join(map(str, e)) for e in edges) or "-"


@dataclass
class SearchReport:
    """Extremal value of one exact search plus a witness attaining it.

    ``mode`` is one of ``graph``, ``generalized``, ``berge``, ``expansion``.
    For ``generalized`` the value counts ``K_r`` copies in the witness graph;
    otherwise it counts edges.
    """

    mode: str
    n: int
    r: int
    pattern: str
    value: int
    witness: Union[Graph, Hypergraph]
    nodes: int = 0
    seconds: float = 0.0

    def to_text(self, telemetry: bool = True) -> str:
        lines = [
            f"mode: {self.mode}",
            f"n: {self.n}",
            f"r: {self.r}",
            f"pattern: {self.pattern}",
            f"value: {self.value}",
            f"witness: {_edges_text(self.witness)}",
        ]
        if telemetry:
            lines += [f"nodes: {self.nodes}", f"seconds: {self.seconds:.3f}"]
        return "\n".join(lines) + "\n"


@dataclass
class CensusTable:
    """Labelled counts of n-vertex r-graphs avoiding a family, by edge count."""

    n: int
    r: int
    family: str
    counts: dict[int, int] = field(default_factory=dict)
    nodes: int = 0
    seconds: float = 0.0

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @property
    def max_edges(self) -> int:
        return max((m for m, c in self.counts.items() if c), default=0)

    def to_text(self, telemetry: bool = True) -> str:
        lines = [f"family: {self.family}", f"n: {self.n}", f"r: {self.r}"]
        lines += [f"count[{m}]: {self.counts[m]}" for m in sorted(self.counts)]
        lines += [f"total: {self.total}", f"max_edges: {self.max_edges}"]
        if telemetry:
            lines += [f"nodes: {self.nodes}", f"seconds: {self.seconds:.3f}"]
        return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict[str, str]:
    """Read a ``key: value`` report back into a dict (order preserved)."""
    out: dict[str, str] = {}
    for line in text.splitlines():
        if line.strip():
            key, _, value = line.partition(": ")
            out[key] = value
    return out

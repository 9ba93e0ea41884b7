#!/usr/bin/env python3
"""
Instance files, generators and reports.

Arc-list format: the first non-comment line holds n; every further
non-comment line is "u v" with 0-based vertex indices. '#' starts a comment.
A leading "# name: <text>" comment names the instance.

random_dag(n, p, seed) is reproducible everywhere CPython's random module is:
random.Random(seed) (MT19937) draws one random() per pair (i, j), i < j, in
row-major order and keeps the arc when the draw is below p; shuffle() of
list(range(n)) then gives the relabelling pi, arc (i, j) becoming (pi[i], pi[j]).
"""

import json
import logging
import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .dim_two import intersection_of_orders
from .errors import InputError, ParseError
from .graph_core import Digraph
from .orderings import Ranking

logger = logging.getLogger(__name__)

FAMILIES = ('path', 'total_order', 'antichain', 'standard_example', 'random_dag', 'figure1')

# Canonical realizer of the four-vertex example poset
FIGURE1_F = (3, 1, 4, 2)
FIGURE1_G = (1, 2, 3, 4)


@dataclass(frozen=True)
class InstanceFile:
    n: int
    arcs: Tuple[Tuple[int, int], ...]
    name: Optional[str] = None

    def to_digraph(self) -> Digraph:
        return Digraph.from_arcs(self.n, self.arcs)


@dataclass
class Report:
    """Structured result of one command, renderable as text or JSON."""

    command: str
    data: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {'command': self.command, 'data': self.data}

    @classmethod
    def from_dict(cls, tree: Dict[str, Any]) -> 'Report':
        return cls(command=tree['command'], data=tree['data'])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        return cls.from_dict(json.loads(text))

    @staticmethod
    def banner(command: str) -> List[str]:
        return ["=" * 60, command.upper(), "=" * 60]

    def to_text(self) -> str:
        lines = self.banner(self.command)
        self._render(self.data, lines, indent=0)
        return "\n".join(lines)

    def _render(self, value: Any, lines: List[str], indent: int) -> None:
        pad = "  " * indent
        for key, item in value.items():
            if isinstance(item, dict):
                lines.append(f"{pad}{key}:")
                self._render(item, lines, indent + 1)
            elif isinstance(item, list) and item and isinstance(item[0], dict):
                lines.append(f"{pad}{key}:")
                for number, entry in enumerate(item, start=1):
                    lines.append(f"{pad}  [{number}]")
                    self._render(entry, lines, indent + 2)
            else:
                lines.append(f"{pad}{key}: {self.format_value(item)}")

    @staticmethod
    def format_value(item: Any) -> str:
        if isinstance(item, list):
            return "(" + ", ".join(Report.format_value(part) for part in item) + ")"
        if isinstance(item, bool):
            return "yes" if item else "no"
        if item is None:
            return "-"
        return str(item)


def read_instance(text: str) -> InstanceFile:
    """
    Parse arc-list text into an InstanceFile.

    Args:
        text: Instance text

    Returns:
        InstanceFile with n, arcs in file order and the optional name

    Raises:
        ParseError: on malformed lines, self-loops, duplicates or out-of-range indices
    """
    n: Optional[int] = None
    name: Optional[str] = None
    arcs: List[Tuple[int, int]] = []
    seen = set()
    line_number = 0

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if n is None and line.startswith('#') and line[1:].strip().lower().startswith('name:'):
            name = line[1:].strip()[len('name:'):].strip() or None
            continue
        line = line.split('#', 1)[0].strip()
        if not line:
            continue

        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise ParseError(f"expected the vertex count, got {line!r}", line_number)
            n = int(parts[0])
            continue

        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line_number)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {line!r}", line_number) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"arc ({u},{v}) outside 0..{n - 1}", line_number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_number)
        if (u, v) in seen:
            raise ParseError(f"duplicate arc ({u},{v})", line_number)
        seen.add((u, v))
        arcs.append((u, v))

    if n is None:
        raise ParseError("missing vertex count", line_number + 1)
    return InstanceFile(n=n, arcs=tuple(arcs), name=name)


def parse_instance(text: str) -> Digraph:
    """Parse arc-list text into a Digraph. Cyclic digraphs are accepted."""
    return read_instance(text).to_digraph()


def serialize_instance(D: Digraph, name: Optional[str] = None) -> str:
    lines = []
    if name:
        lines.append(f"# name: {name}")
    lines.append(str(D.n))
    lines.extend(f"{u} {v}" for u, v in D.sorted_arcs())
    return "\n".join(lines) + "\n"


def _require_size(value: Optional[int], label: str, family: str) -> int:
    if value is None:
        raise InputError(f"family {family} needs --{label}")
    if not isinstance(value, int) or value < 0:
        raise InputError(f"{label} must be a non-negative integer, got {value!r}")
    return value


def generate(family: str,
             n: Optional[int] = None,
             k: Optional[int] = None,
             p: Optional[float] = None,
             seed: Optional[int] = None) -> Digraph:
    """
    Build a named instance.

    Args:
        family: One of FAMILIES
        n: Vertex count (path, total_order, antichain, random_dag)
        k: Size parameter of standard_example (n is accepted in its place)
        p: Arc probability for random_dag, default 0.5
        seed: Seed for random_dag, default 0

    Returns:
        The digraph
    """
    if family == 'path':
        size = _require_size(n, 'n', family)
        return Digraph(size, frozenset((i, i + 1) for i in range(size - 1)))

    if family == 'total_order':
        size = _require_size(n, 'n', family)
        return Digraph(size, frozenset((i, j) for i in range(size) for j in range(i + 1, size)))

    if family == 'antichain':
        return Digraph(_require_size(n, 'n', family))

    if family == 'standard_example':
        half = _require_size(k if k is not None else n, 'k', family)
        return Digraph(2 * half, frozenset(
            (i, half + j) for i in range(half) for j in range(half) if i != j
        ))

    if family == 'random_dag':
        size = _require_size(n, 'n', family)
        probability = 0.5 if p is None else p
        if not 0.0 <= probability <= 1.0:
            raise InputError(f"p must lie in [0, 1], got {probability}")
        rng = random.Random(0 if seed is None else seed)
        chosen = [
            (i, j)
            for i in range(size)
            for j in range(i + 1, size)
            if rng.random() < probability
        ]
        relabel = list(range(size))
        rng.shuffle(relabel)
        return Digraph(size, frozenset((relabel[i], relabel[j]) for i, j in chosen))

    if family == 'figure1':
        return intersection_of_orders(Ranking(FIGURE1_F), Ranking(FIGURE1_G))

    raise InputError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")

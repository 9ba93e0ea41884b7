#!/usr/bin/env python3
"""
Acyclic orderings as rank bijections g: V -> [1..n].

Ranks are 1-based, vertex indices 0-based. "Lexicographic order" always
means lexicographic order of the vertex sequence g^-1(1), g^-1(2), ...
"""

import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import InputError, PreconditionError, PropertyViolation
from .graph_core import Digraph, e_vector, require_acyclic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ranking:
    """Rank vector: ranks[x] is the rank of vertex x."""

    ranks: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'ranks', tuple(int(r) for r in self.ranks))

    @classmethod
    def from_sequence(cls, sequence: Sequence[int]) -> 'Ranking':
        """Build the ranking that places sequence[i] at rank i+1."""
        ranks = [0] * len(sequence)
        for position, x in enumerate(sequence, start=1):
            ranks[x] = position
        return cls(tuple(ranks))

    def __len__(self) -> int:
        return len(self.ranks)

    def __getitem__(self, x: int) -> int:
        return self.ranks[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self.ranks)

    def is_bijection(self) -> bool:
        return sorted(self.ranks) == list(range(1, len(self.ranks) + 1))

    def vertex_sequence(self) -> Tuple[int, ...]:
        """Return the vertices in rank order; requires a bijection."""
        if not self.is_bijection():
            raise InputError(f"ranks {self.ranks} are not a bijection onto 1..{len(self)}")
        sequence = [0] * len(self.ranks)
        for x, rank in enumerate(self.ranks):
            sequence[rank - 1] = x
        return tuple(sequence)

    def restricted(self, index_map: Dict[int, int]) -> 'Ranking':
        """
        Restrict to the vertices of an induced subgraph.

        Ranks are compressed onto 1..len(index_map) keeping their relative order.

        Args:
            index_map: old -> new vertex map from induced_subgraph

        Returns:
            Ranking on the re-indexed vertices
        """
        kept = sorted(index_map, key=lambda old: self.ranks[old])
        return Ranking.from_sequence([index_map[old] for old in kept])


class OrderingWalker:
    """
    Depth-first walk over all acyclic orderings of a DAG in lexicographic order.

    `explored` counts every prefix entered (one per vertex placement).
    """

    def __init__(self, D: Digraph):
        self.D = D
        self.explored = 0

    def sequences(self) -> Iterator[Tuple[int, ...]]:
        D = self.D
        indegree = [len(D.predecessors(x)) for x in D.vertices()]
        available = [x for x in D.vertices() if indegree[x] == 0]
        sequence: List[int] = []

        def descend() -> Iterator[Tuple[int, ...]]:
            if len(sequence) == D.n:
                yield tuple(sequence)
                return
            for v in list(available):
                self.explored += 1
                available.remove(v)
                sequence.append(v)
                released = []
                for w in D.successors(v):
                    indegree[w] -= 1
                    if indegree[w] == 0:
                        bisect.insort(available, w)
                        released.append(w)

                yield from descend()

                for w in released:
                    available.remove(w)
                for w in D.successors(v):
                    indegree[w] += 1
                sequence.pop()
                bisect.insort(available, v)

        yield from descend()


class OrderingStream:
    """
    Streaming enumeration of acyclic orderings.

    After iteration, `count` holds the number emitted and `truncated` tells
    whether max_count cut the stream short.
    """

    def __init__(self, D: Digraph, max_count: Optional[int] = None):
        self.walker = OrderingWalker(D)
        self.max_count = max_count
        self.count = 0
        self.truncated = False

    def __iter__(self) -> Iterator[Ranking]:
        self.count = 0
        self.truncated = False
        for sequence in self.walker.sequences():
            if self.max_count is not None and self.count >= self.max_count:
                self.truncated = True
                logger.warning(f"Enumeration truncated after {self.count} orderings")
                return
            self.count += 1
            yield Ranking.from_sequence(sequence)


def validate_ordering(D: Digraph, g: Ranking) -> bool:
    """
    Check that g is a bijection onto 1..n and respects every arc of D.

    Raises:
        InputError: if g does not have length n
    """
    if len(g) != D.n:
        raise InputError(f"ordering has length {len(g)}, digraph has {D.n} vertices")
    if not g.is_bijection():
        return False
    return all(g[u] < g[v] for u, v in D.arcs)


def require_valid_ordering(D: Digraph, g: Ranking) -> None:
    if not validate_ordering(D, g):
        raise PreconditionError(f"{list(g)} is not an acyclic ordering of the digraph")


def some_topological_ordering(D: Digraph) -> Ranking:
    """Smallest-index-first topological ordering; the lexicographically first one."""
    require_acyclic(D)
    return Ranking.from_sequence(list(nx.lexicographical_topological_sort(D.to_networkx())))


def enumerate_orderings(D: Digraph, max_count: Optional[int] = None) -> OrderingStream:
    """
    Stream every acyclic ordering of D exactly once, in lexicographic order.

    Args:
        D: Acyclic digraph
        max_count: Optional positive cap on the number of orderings emitted

    Returns:
        An OrderingStream; check `.truncated` after iterating
    """
    require_acyclic(D)
    if max_count is not None and max_count < 1:
        raise InputError(f"max_count must be positive, got {max_count}")
    return OrderingStream(D, max_count)


def inner_product(u: Iterable[int], v: Iterable[int]) -> int:
    """Return sum over x of u(x) * v(x)."""
    u, v = list(u), list(v)
    if len(u) != len(v):
        raise InputError(f"vector lengths differ: {len(u)} != {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def arc_weight_sum(D: Digraph, g: Ranking) -> int:
    """
    Total arc weight sum over arcs (x,y) of g(y) - g(x).

    Equals <e, g>; a mismatch raises PropertyViolation.
    """
    require_valid_ordering(D, g)
    total = sum(g[v] - g[u] for u, v in D.arcs)
    eg = inner_product(e_vector(D), g)
    if total != eg:
        logger.error(f"arc weight sum {total} differs from <e,g> = {eg}")
        raise PropertyViolation(f"arc weight sum {total} != <e,g> {eg}")
    return total


def average_relational_distance(D: Digraph, g: Ranking) -> Fraction:
    """Arc weight sum divided by the arc count, as an exact rational."""
    if D.arc_count == 0:
        raise InputError("average relational distance is undefined without arcs")
    return Fraction(arc_weight_sum(D, g), D.arc_count)

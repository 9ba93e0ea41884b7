#!/usr/bin/env python3
"""
Digraph representation and the e-vector.

Vertices are the dense indices 0..n-1. External labels, if any, belong to the
I/O layer. All values are immutable once constructed.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, NamedTuple, Tuple

import networkx as nx

from .errors import InputError, PreconditionError, PropertyViolation

logger = logging.getLogger(__name__)

Arc = Tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A finite simple digraph on the vertices 0..n-1."""

    n: int
    arcs: FrozenSet[Arc] = frozenset()
    _succ: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _pred: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a non-negative integer, got {self.n!r}")

        arcs = frozenset((int(u), int(v)) for u, v in self.arcs)
        succ: List[List[int]] = [[] for _ in range(self.n)]
        pred: List[List[int]] = [[] for _ in range(self.n)]
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"arc ({u},{v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            succ[u].append(v)
            pred[v].append(u)

        object.__setattr__(self, 'arcs', arcs)
        object.__setattr__(self, '_succ', tuple(tuple(sorted(s)) for s in succ))
        object.__setattr__(self, '_pred', tuple(tuple(sorted(p)) for p in pred))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> 'Digraph':
        """
        Build a digraph from an arc list, rejecting duplicate arcs.

        Args:
            n: Vertex count
            arcs: Iterable of (u, v) pairs, 0-based

        Returns:
            The digraph
        """
        seen = set()
        for u, v in arcs:
            if (u, v) in seen:
                raise InputError(f"duplicate arc ({u},{v})")
            seen.add((u, v))
        return cls(n, frozenset(seen))

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def successors(self, x: int) -> Tuple[int, ...]:
        return self._succ[x]

    def predecessors(self, x: int) -> Tuple[int, ...]:
        return self._pred[x]

    def sorted_arcs(self) -> List[Arc]:
        return sorted(self.arcs)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.arcs)
        return graph


@dataclass(frozen=True)
class EVector:
    """Integer vector e(x) = indegree - outdegree, one entry per vertex."""

    values: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> int:
        return self.values[x]

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def total(self) -> int:
        return sum(self.values)

    def norm_squared(self) -> int:
        """Return <e,e>."""
        return sum(value * value for value in self.values)


class InducedSubgraph(NamedTuple):
    """An induced subgraph plus the old -> new vertex index map."""

    digraph: Digraph
    index_map: Dict[int, int]


def _check_vertex(D: Digraph, x: int) -> None:
    if not (isinstance(x, int) and 0 <= x < D.n):
        raise InputError(f"vertex {x!r} out of range 0..{D.n - 1}")


def in_neighbors(D: Digraph, x: int) -> FrozenSet[int]:
    """Return N^-(x), the sources of all arcs into x."""
    _check_vertex(D, x)
    return frozenset(D.predecessors(x))


def out_neighbors(D: Digraph, x: int) -> FrozenSet[int]:
    """Return N^+(x), the targets of all arcs out of x."""
    _check_vertex(D, x)
    return frozenset(D.successors(x))


def e_vector(D: Digraph) -> EVector:
    """
    Compute the e-vector of a digraph.

    Args:
        D: Any well-formed digraph

    Returns:
        EVector with entry x equal to |N^-(x)| - |N^+(x)|
    """
    values = tuple(len(D.predecessors(x)) - len(D.successors(x)) for x in D.vertices())
    e = EVector(values)
    if e.total() != 0:
        raise PropertyViolation(f"e-vector entries sum to {e.total()}, expected 0")
    return e


def is_acyclic(D: Digraph) -> bool:
    return nx.is_directed_acyclic_graph(D.to_networkx())


def require_acyclic(D: Digraph) -> None:
    if not is_acyclic(D):
        raise PreconditionError("digraph has a directed cycle")


def induced_subgraph(D: Digraph, X: Iterable[int]) -> InducedSubgraph:
    """
    Restrict D to the vertex set X.

    Vertices of X are re-indexed in increasing order, so relative order is
    preserved.

    Args:
        D: Source digraph
        X: Vertex subset

    Returns:
        InducedSubgraph with the restricted digraph and the old -> new map
    """
    kept = sorted(set(X))
    for x in kept:
        _check_vertex(D, x)
    index_map = {old: new for new, old in enumerate(kept)}
    arcs = frozenset(
        (index_map[u], index_map[v])
        for u, v in D.arcs
        if u in index_map and v in index_map
    )
    return InducedSubgraph(Digraph(len(kept), arcs), index_map)


def delete_vertex(D: Digraph, z: int) -> InducedSubgraph:
    """Return D with z removed."""
    _check_vertex(D, z)
    return induced_subgraph(D, (x for x in D.vertices() if x != z))


def transitive_closure(D: Digraph) -> Digraph:
    """
    Return the transitive closure of an acyclic digraph.

    Raises:
        PreconditionError: if D has a directed cycle
    """
    require_acyclic(D)
    closure = nx.transitive_closure_dag(D.to_networkx())
    return Digraph(D.n, frozenset(closure.edges()))


def is_transitive(D: Digraph) -> bool:
    # a 2-cycle fails too: it would need the loop (u,u)
    for u, v in D.arcs:
        for w in D.successors(v):
            if not D.has_arc(u, w):
                return False
    return True


def maximal_vertices(D: Digraph) -> List[int]:
    """Vertices with no outgoing arc, in increasing order."""
    return [x for x in D.vertices() if not D.successors(x)]


def deletion_identity_check(D1: Digraph, z: int) -> bool:
    """
    Check the e-vector deletion identities for a maximal vertex z.

    With D = D1 - z: e_D(x) = e_D1(x) + 1 on N^-(z) and e_D(x) = e_D1(x)
    elsewhere; summed over N^-(z) the two differ by |N^-(z)|.

    Args:
        D1: Digraph containing z
        z: A maximal vertex of D1

    Returns:
        True if both identities hold
    """
    _check_vertex(D1, z)
    if D1.successors(z):
        raise PreconditionError(f"vertex {z} is not maximal")

    big = e_vector(D1)
    small_graph, index_map = delete_vertex(D1, z)
    small = e_vector(small_graph)
    below = in_neighbors(D1, z)

    for old, new in index_map.items():
        expected = big[old] + 1 if old in below else big[old]
        if small[new] != expected:
            logger.error(f"deletion identity fails at vertex {old}: {small[new]} != {expected}")
            return False

    lhs = sum(small[index_map[x]] for x in below)
    rhs = sum(big[x] for x in below) + len(below)
    if lhs != rhs:
        logger.error(f"summed deletion identity fails: {lhs} != {rhs}")
        return False
    return True

#!/usr/bin/env python3
"""
The lower bound <e,g> >= <e,e>/2 and the search for its minimum.

All comparisons with the bound are done on gap2 = 2<e,g> - <e,e>, which is an
integer; <e,e>/2 is never formed as a fraction.
"""

import bisect
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from . import settings
from .errors import InputError, PreconditionError, PropertyViolation, RefusalError
from .graph_core import Digraph, delete_vertex, e_vector, in_neighbors, require_acyclic
from .orderings import OrderingWalker, Ranking, inner_product, require_valid_ordering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    eg: int
    ee: int
    gap2: int

    @property
    def is_equality(self) -> bool:
        return self.gap2 == 0

    def to_dict(self) -> dict:
        return {'eg': self.eg, 'ee': self.ee, 'gap2': self.gap2}


@dataclass(frozen=True)
class SearchResult:
    min_eg: int
    argmin: Ranking
    explored: int
    proven_optimal: bool

    def to_dict(self) -> dict:
        return {
            'min_eg': self.min_eg,
            'argmin': list(self.argmin),
            'explored': self.explored,
            'proven_optimal': self.proven_optimal,
        }


def bound_report(D: Digraph, g: Ranking) -> BoundReport:
    """
    Compute <e,g>, <e,e> and gap2 for an acyclic ordering.

    Args:
        D: Acyclic digraph
        g: Acyclic ordering of D

    Returns:
        BoundReport; gap2 is never negative

    Raises:
        PreconditionError: if g is not an acyclic ordering of D
        PropertyViolation: if gap2 < 0
    """
    require_valid_ordering(D, g)
    e = e_vector(D)
    eg = inner_product(e, g)
    ee = e.norm_squared()
    report = BoundReport(eg=eg, ee=ee, gap2=2 * eg - ee)
    if ee % 2 != 0:
        raise PropertyViolation(f"<e,e> = {ee} is odd")
    if report.gap2 < 0:
        logger.error(f"lower bound violated: 2<e,g> - <e,e> = {report.gap2} for g={list(g)}")
        raise PropertyViolation(f"gap2 = {report.gap2} < 0")
    return report


def _check_subset(S: Iterable[int], n: int) -> List[int]:
    if n < 0:
        raise InputError(f"n must be non-negative, got {n}")
    members = sorted(set(S))
    for s in members:
        if not (isinstance(s, int) and 1 <= s <= n):
            raise InputError(f"{s!r} is outside 1..{n}")
    return members


def insertion_pairs(S: Iterable[int], n: int) -> int:
    """
    Count the insertion pairs (s, t) of S: s in S, t in [1..n] \\ S, s < t.

    Args:
        S: Subset of 1..n
        n: Size of the interval

    Returns:
        Number of insertion pairs
    """
    members = _check_subset(S, n)
    inside = set(members)
    return sum(1 for s in members for t in range(s + 1, n + 1) if t not in inside)


def insertion_pair_slacks(S: Iterable[int], n: int) -> Tuple[int, int]:
    """
    Slack of the two insertion-pair bounds for S = {s_1 < ... < s_m}.

    Returns:
        (sum_i [(n - s_i) - (m - i)] - k,  m(2n-m+1)/2 - k - sum_i s_i)
    """
    members = _check_subset(S, n)
    m = len(members)
    k = insertion_pairs(members, n)
    per_element = sum((n - s) - (m - i) for i, s in enumerate(members, start=1))
    # m(2n-m+1) is always even
    interval_bound = m * (2 * n - m + 1) // 2
    return per_element - k, interval_bound - k - sum(members)


def insertion_pair_bounds_check(S: Iterable[int], n: int) -> bool:
    first, second = insertion_pair_slacks(S, n)
    logger.debug(f"insertion pair slacks for {sorted(set(S))}, n={n}: {first}, {second}")
    return first >= 0 and second >= 0


def lemma1_slack(D1: Digraph, g1: Ranking, z: int) -> int:
    """
    Slack of the insertion inequality for the top vertex z.

    With D = D1 - z, n = |V(D)|, m = |N^-(z)| and e, g taken on D, returns
    sum over x in N^-(z) of [e(x) - g(x)] + n*m - C(m, 2).

    Raises:
        PreconditionError: if g1 is invalid, z is not maximal or z is not ranked last
    """
    require_valid_ordering(D1, g1)
    if not 0 <= z < D1.n:
        raise InputError(f"vertex {z!r} out of range 0..{D1.n - 1}")
    if D1.successors(z):
        raise PreconditionError(f"vertex {z} is not maximal")
    if g1[z] != D1.n:
        raise PreconditionError(f"vertex {z} has rank {g1[z]}, expected the last rank {D1.n}")

    D, index_map = delete_vertex(D1, z)
    g = g1.restricted(index_map)
    e = e_vector(D)
    below = [index_map[x] for x in in_neighbors(D1, z)]
    m = len(below)
    lhs = sum(e[x] - g[x] for x in below) + D.n * m
    return lhs - comb(m, 2)


def lemma1_check(D1: Digraph, g1: Ranking, z: int) -> bool:
    slack = lemma1_slack(D1, g1, z)
    if slack < 0:
        logger.error(f"insertion inequality fails for z={z}, g={list(g1)}: slack {slack}")
        return False
    return True


def minimize_eg_exhaustive(D: Digraph, cap: int = settings.EXHAUSTIVE_CAP) -> SearchResult:
    """
    Minimise <e,g> by enumerating every acyclic ordering.

    Args:
        D: Acyclic digraph
        cap: Largest vertex count accepted

    Returns:
        SearchResult with the lexicographically first minimiser

    Raises:
        RefusalError: if D has more than cap vertices
    """
    require_acyclic(D)
    if D.n > cap:
        raise RefusalError(f"exhaustive search refused: {D.n} vertices exceeds cap {cap}")

    e = e_vector(D)
    walker = OrderingWalker(D)
    best_value: Optional[int] = None
    best_sequence: Tuple[int, ...] = ()
    for sequence in walker.sequences():
        value = sum(e[x] * rank for rank, x in enumerate(sequence, start=1))
        if best_value is None or value < best_value:
            best_value, best_sequence = value, sequence

    logger.info(f"Exhaustive search explored {walker.explored} nodes, min <e,g> = {best_value}")
    return SearchResult(
        min_eg=best_value,
        argmin=Ranking.from_sequence(best_sequence),
        explored=walker.explored,
        proven_optimal=True,
    )


class _BranchSearch:
    """Depth-first branch and bound over acyclic orderings, ranks assigned upward."""

    def __init__(self, D: Digraph, e: Sequence[int], budget: Optional[int]):
        self.D = D
        self.e = e
        self.ee = sum(value * value for value in e)
        self.budget = budget
        self.indegree = [len(D.predecessors(x)) for x in D.vertices()]
        self.available = [x for x in D.vertices() if self.indegree[x] == 0]
        # negated so the list stays ascending while the values are descending
        self.remaining = sorted(-value for value in e)
        self.sequence: List[int] = []
        self.partial = 0
        self.explored = 0
        self.best: Optional[int] = None
        self.best_sequence: Tuple[int, ...] = ()
        self.finished = False
        self.exhausted = False

    def place(self, v: int) -> List[int]:
        rank = len(self.sequence) + 1
        self.available.remove(v)
        self.sequence.append(v)
        self.partial += self.e[v] * rank
        self.remaining.remove(-self.e[v])
        released = []
        for w in self.D.successors(v):
            self.indegree[w] -= 1
            if self.indegree[w] == 0:
                bisect.insort(self.available, w)
                released.append(w)
        return released

    def unplace(self, v: int, released: List[int]) -> None:
        for w in released:
            self.available.remove(w)
        for w in self.D.successors(v):
            self.indegree[w] += 1
        bisect.insort(self.remaining, -self.e[v])
        self.partial -= self.e[v] * len(self.sequence)
        self.sequence.pop()
        bisect.insort(self.available, v)

    def relaxation(self) -> int:
        """Lower bound on the final value, ignoring arcs among unplaced vertices."""
        start = len(self.sequence) + 1
        return self.partial - sum(neg * (start + i) for i, neg in enumerate(self.remaining))

    def descend(self) -> None:
        if len(self.sequence) == self.D.n:
            if self.best is None or self.partial < self.best:
                self.best = self.partial
                self.best_sequence = tuple(self.sequence)
                logger.debug(f"New incumbent {self.best} at {self.best_sequence}")
                if 2 * self.best == self.ee:
                    self.finished = True
            return

        for v in list(self.available):
            if self.finished:
                return
            if self.budget is not None and self.best is not None and self.explored >= self.budget:
                logger.warning(f"Node budget {self.budget} exhausted")
                self.exhausted = True
                self.finished = True
                return
            self.explored += 1
            released = self.place(v)
            if self.best is None or self.relaxation() < self.best:
                self.descend()
            self.unplace(v, released)

    def run(self) -> None:
        self.descend()


def _search_branch(D: Digraph, e: Tuple[int, ...], root: int):
    search = _BranchSearch(D, e, None)
    search.explored += 1
    search.place(root)
    search.descend()
    return search.best, search.best_sequence, search.explored


def minimize_eg_bnb(D: Digraph,
                    budget: Optional[int] = settings.DEFAULT_NODE_BUDGET,
                    workers: int = settings.DEFAULT_WORKERS) -> SearchResult:
    """
    Minimise <e,g> by branch and bound.

    Prunes with a rearrangement relaxation and stops as soon as an ordering
    attains <e,e>/2. Ties go to the lexicographically first vertex sequence.

    Args:
        D: Acyclic digraph
        budget: Optional node budget; when hit the result is not proven optimal
        workers: Processes used for the first branching level; ignored when a
            budget is set, which always runs in one process

    Returns:
        SearchResult
    """
    require_acyclic(D)
    if budget is not None and budget < 1:
        raise InputError(f"node budget must be positive, got {budget}")
    e = tuple(e_vector(D))

    if workers > 1 and budget is not None:
        logger.info("Node budget set; searching sequentially so the budget covers the whole tree")

    if workers > 1 and D.n > 1 and budget is None:
        roots = [x for x in D.vertices() if not D.predecessors(x)]
        logger.info(f"Splitting {len(roots)} first-level branches across {workers} workers")
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [executor.submit(_search_branch, D, e, root) for root in roots]
            outcomes = [future.result() for future in futures]
        best, best_sequence = min((value, sequence) for value, sequence, _ in outcomes)
        explored = sum(outcome[2] for outcome in outcomes)
        proven = True
    else:
        search = _BranchSearch(D, e, budget)
        search.run()
        best, best_sequence = search.best, search.best_sequence
        explored = search.explored
        proven = not search.exhausted

    logger.info(f"Branch and bound explored {explored} nodes, min <e,g> = {best}")
    return SearchResult(
        min_eg=best,
        argmin=Ranking.from_sequence(best_sequence),
        explored=explored,
        proven_optimal=proven,
    )

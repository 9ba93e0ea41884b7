#!/usr/bin/env python3
"""
Equality case of the lower bound and order dimension at most two.

An acyclic ordering g with 2<e,g> = <e,e> forces D to be a poset with the
realizer (f, g), f = n + 1 - g + e. Certification searches for such a g.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

from . import settings
from .bound_engine import SearchResult, bound_report, lemma1_slack, minimize_eg_bnb
from .errors import InputError, PreconditionError, PropertyViolation, RefusalError
from .graph_core import (
    Digraph,
    delete_vertex,
    e_vector,
    in_neighbors,
    is_transitive,
    require_acyclic,
    transitive_closure,
)
from .orderings import Ranking, enumerate_orderings, require_valid_ordering, validate_ordering

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CertificateChecks:
    f_is_bijection: bool
    f_is_acyclic_ordering: bool
    intersection_matches: bool
    realizer_identity_holds: bool

    def all_passed(self) -> bool:
        return (self.f_is_bijection and self.f_is_acyclic_ordering
                and self.intersection_matches and self.realizer_identity_holds)

    def to_dict(self) -> dict:
        return {
            'f_is_bijection': self.f_is_bijection,
            'f_is_acyclic_ordering': self.f_is_acyclic_ordering,
            'intersection_matches': self.intersection_matches,
            'realizer_identity_holds': self.realizer_identity_holds,
        }


@dataclass(frozen=True)
class Dim2Certificate:
    """Realizer (f, g) of a poset of dimension at most two."""

    g: Ranking
    f: Ranking
    reconstructed: Digraph
    checks: CertificateChecks

    def to_dict(self) -> dict:
        return {
            'g': list(self.g),
            'f': list(self.f),
            'reconstructed_arcs': [list(arc) for arc in self.reconstructed.sorted_arcs()],
            'checks': self.checks.to_dict(),
        }


class Verdict(Enum):
    CERTIFIED_DIM2 = 'certified_dim2'
    NOT_DIM2 = 'not_dim2'
    NOT_A_POSET = 'not_a_poset'
    UNDECIDED = 'undecided'


@dataclass(frozen=True)
class CertificationOutcome:
    verdict: Verdict
    certificate: Optional[Dim2Certificate] = None
    min_eg: Optional[int] = None
    floor: Optional[int] = None
    search: Optional[SearchResult] = None
    alternatives: Tuple[Dim2Certificate, ...] = field(default=())

    def to_dict(self) -> dict:
        result = {
            'verdict': self.verdict.value,
            'min_eg': self.min_eg,
            'floor': self.floor,
        }
        if self.certificate is not None:
            result['certificate'] = self.certificate.to_dict()
        if self.search is not None:
            result['search'] = self.search.to_dict()
        if self.alternatives:
            result['alternatives'] = [alt.to_dict() for alt in self.alternatives]
        return result


def conjugate_ordering(D: Digraph, g: Ranking) -> Ranking:
    """
    Build the conjugate f = n + 1 - g + e of an equality ordering.

    Args:
        D: Acyclic digraph
        g: Acyclic ordering of D with 2<e,g> = <e,e>

    Returns:
        f, an acyclic ordering of D

    Raises:
        PreconditionError: if g is invalid or not an equality ordering
        PropertyViolation: if f is out of range, not a bijection or not acyclic
    """
    report = bound_report(D, g)
    if not report.is_equality:
        raise PreconditionError(f"g={list(g)} is not an equality ordering (gap2 = {report.gap2})")

    e = e_vector(D)
    values = [D.n + 1 - g[x] + e[x] for x in D.vertices()]
    out_of_range = [x for x, value in enumerate(values) if not 0 < value <= D.n]
    if out_of_range:
        logger.error(f"conjugate ranks {values} leave 1..{D.n} at {out_of_range}")
        raise PropertyViolation(f"conjugate rank out of range at vertices {out_of_range}")

    f = Ranking(tuple(values))
    if not f.is_bijection():
        raise PropertyViolation(f"conjugate {values} is not a bijection")
    if not validate_ordering(D, f):
        raise PropertyViolation(f"conjugate {values} is not an acyclic ordering")
    return f


def intersection_of_orders(f: Ranking, g: Ranking) -> Digraph:
    """Digraph with an arc (x, y) exactly when f(x) < f(y) and g(x) < g(y)."""
    if len(f) != len(g):
        raise InputError(f"orderings have different lengths: {len(f)} != {len(g)}")
    if not (f.is_bijection() and g.is_bijection()):
        raise InputError("both orderings must be bijections onto 1..n")
    n = len(f)
    arcs = frozenset(
        (x, y)
        for x in range(n)
        for y in range(n)
        if f[x] < f[y] and g[x] < g[y]
    )
    return Digraph(n, arcs)


def realizer_identity_check(D: Digraph, g1: Ranking, g2: Ranking) -> bool:
    """
    Check g1 + g2 = n + 1 + e for a realizer (g1, g2) of D.

    Raises:
        PreconditionError: if g1, g2 are not acyclic orderings whose intersection is D
    """
    require_valid_ordering(D, g1)
    require_valid_ordering(D, g2)
    if intersection_of_orders(g1, g2) != D:
        raise PreconditionError("the two orderings do not intersect to the digraph")

    e = e_vector(D)
    for x in D.vertices():
        if g1[x] + g2[x] != D.n + 1 + e[x]:
            logger.error(f"realizer identity fails at {x}: {g1[x]} + {g2[x]} != {D.n + 1 + e[x]}")
            return False
    return True


def _build_certificate(D: Digraph, g: Ranking) -> Dim2Certificate:
    f = conjugate_ordering(D, g)
    reconstructed = intersection_of_orders(f, g)
    matches = reconstructed == D
    checks = CertificateChecks(
        f_is_bijection=f.is_bijection(),
        f_is_acyclic_ordering=validate_ordering(D, f),
        intersection_matches=matches,
        realizer_identity_holds=matches and realizer_identity_check(D, f, g),
    )
    if not checks.all_passed():
        logger.error(f"certificate checks failed: {checks.to_dict()}")
        raise PropertyViolation("equality ordering does not yield a realizer")
    return Dim2Certificate(g=g, f=f, reconstructed=reconstructed, checks=checks)


def equality_orderings(D: Digraph) -> Iterator[Ranking]:
    """Stream every acyclic ordering attaining 2<e,g> = <e,e>, in lexicographic order."""
    e = e_vector(D)
    ee = e.norm_squared()
    for g in enumerate_orderings(D):
        if 2 * sum(e[x] * g[x] for x in D.vertices()) == ee:
            yield g


def certify_dimension_two(D: Digraph,
                          as_is: bool = False,
                          budget: Optional[int] = settings.DEFAULT_NODE_BUDGET,
                          workers: int = settings.DEFAULT_WORKERS,
                          verbose: bool = False) -> CertificationOutcome:
    """
    Decide whether D (or its transitive closure) has order dimension at most two.

    Args:
        D: Acyclic digraph
        as_is: Certify D literally instead of its transitive closure
        budget: Optional node budget for the search
        workers: Processes for the first branching level
        verbose: Also list other equality orderings and their conjugates

    Returns:
        CertificationOutcome; UNDECIDED when the budget ran out without a proof
    """
    require_acyclic(D)
    target = D if as_is else transitive_closure(D)
    transitive = is_transitive(target)

    ee = e_vector(target).norm_squared()
    floor = ee // 2
    result = minimize_eg_bnb(target, budget=budget, workers=workers)

    if 2 * result.min_eg == ee:
        if not transitive:
            logger.error("equality ordering found on a digraph that is not transitively closed")
            raise PropertyViolation("equality attained on a non-transitive digraph")
        certificate = _build_certificate(target, result.argmin)
        alternatives: List[Dim2Certificate] = []
        if verbose:
            for g in equality_orderings(target):
                if len(alternatives) >= settings.VERBOSE_ALTERNATIVES_LIMIT:
                    break
                if g != result.argmin:
                    alternatives.append(_build_certificate(target, g))
        logger.info(f"Certified dimension at most two with g={list(result.argmin)}")
        return CertificationOutcome(
            verdict=Verdict.CERTIFIED_DIM2,
            certificate=certificate,
            min_eg=result.min_eg,
            floor=floor,
            search=result,
            alternatives=tuple(alternatives),
        )

    if not transitive:
        return CertificationOutcome(verdict=Verdict.NOT_A_POSET, min_eg=result.min_eg,
                                    floor=floor, search=result)
    if not result.proven_optimal:
        logger.warning("Search budget exhausted before the minimum was proven")
        return CertificationOutcome(verdict=Verdict.UNDECIDED, min_eg=result.min_eg,
                                    floor=floor, search=result)
    return CertificationOutcome(verdict=Verdict.NOT_DIM2, min_eg=result.min_eg,
                                floor=floor, search=result)


def brute_force_dim2_oracle(D: Digraph, cap: int = settings.ORACLE_CAP) -> bool:
    """
    Search all pairs of linear extensions for a realizer of D.

    Args:
        D: Transitively closed acyclic digraph
        cap: Largest vertex count accepted

    Returns:
        True if some pair (f, g) has intersection exactly D
    """
    require_acyclic(D)
    if not is_transitive(D):
        raise PreconditionError("oracle needs a transitively closed digraph")
    if D.n > cap:
        raise RefusalError(f"oracle refused: {D.n} vertices exceeds cap {cap}")

    extensions = list(enumerate_orderings(D))
    incomparable = [
        (x, y) for x, y in combinations(D.vertices(), 2)
        if not D.has_arc(x, y) and not D.has_arc(y, x)
    ]
    logger.info(f"Oracle: {len(extensions)} linear extensions, {len(incomparable)} incomparable pairs")

    for i, f in enumerate(extensions):
        for g in extensions[i:]:
            # comparable pairs agree in any two linear extensions
            if all((f[x] < f[y]) != (g[x] < g[y]) for x, y in incomparable):
                if intersection_of_orders(f, g) == D:
                    return True
    return False


def peel_equality_check(D1: Digraph, G: Ranking) -> bool:
    """
    Peel the top-ranked vertex repeatedly and check every level stays an equality case.

    At each level with top vertex z and conjugate F = N + 1 - G + E it checks:
    F(z) = |N^-(z)| + 1; F maps N^-(z) onto 1..|N^-(z)| and the rest onto
    |N^-(z)|+2..N; the restriction is again an equality ordering; the
    insertion inequality is tight; E(x) = e(x) - 1 on N^-(z) and e(x)
    elsewhere; F(x) = f(x) on N^-(z) and f(x) + 1 elsewhere.

    Args:
        D1: Acyclic digraph
        G: Equality ordering of D1

    Returns:
        True if every level passes
    """
    if not bound_report(D1, G).is_equality:
        raise PreconditionError(f"G={list(G)} is not an equality ordering")

    D, g = D1, G
    level = 0
    while D.n > 1:
        N = D.n
        z = g.vertex_sequence()[-1]
        E = e_vector(D)
        F = [N + 1 - g[x] + E[x] for x in D.vertices()]
        below = in_neighbors(D, z)
        m = len(below)

        if F[z] != m + 1:
            logger.error(f"level {level}: F(z) = {F[z]}, expected {m + 1}")
            return False
        if sorted(F[x] for x in below) != list(range(1, m + 1)):
            logger.error(f"level {level}: F does not map N^-(z) onto 1..{m}")
            return False
        rest = sorted(F[x] for x in D.vertices() if x != z and x not in below)
        if rest != list(range(m + 2, N + 1)):
            logger.error(f"level {level}: F does not map the rest onto {m + 2}..{N}")
            return False
        if lemma1_slack(D, g, z) != 0:
            logger.error(f"level {level}: insertion inequality is not tight")
            return False

        smaller, index_map = delete_vertex(D, z)
        smaller_g = g.restricted(index_map)
        if not bound_report(smaller, smaller_g).is_equality:
            logger.error(f"level {level}: restriction is not an equality ordering")
            return False

        e = e_vector(smaller)
        f = [smaller.n + 1 - smaller_g[x] + e[x] for x in smaller.vertices()]
        for old, new in index_map.items():
            if old in below:
                deletion_ok = E[old] == e[new] - 1
                conjugate_ok = F[old] == f[new]
            else:
                deletion_ok = E[old] == e[new]
                conjugate_ok = F[old] == f[new] + 1
            if not (deletion_ok and conjugate_ok):
                logger.error(f"level {level}: deletion/conjugate relation fails at vertex {old}")
                return False

        logger.debug(f"level {level}: peeled vertex {z} with {m} in-neighbours")
        D, g = smaller, smaller_g
        level += 1
    return True

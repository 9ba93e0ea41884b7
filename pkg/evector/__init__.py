#!/usr/bin/env python3

from .errors import (
    EVectorError,
    InputError,
    ParseError,
    PreconditionError,
    PropertyViolation,
    RefusalError,
    UsageError,
)
from .graph_core import (
    Digraph,
    EVector,
    InducedSubgraph,
    deletion_identity_check,
    delete_vertex,
    e_vector,
    in_neighbors,
    induced_subgraph,
    is_acyclic,
    is_transitive,
    maximal_vertices,
    out_neighbors,
    transitive_closure,
)
from .orderings import (
    OrderingStream,
    Ranking,
    arc_weight_sum,
    average_relational_distance,
    enumerate_orderings,
    inner_product,
    some_topological_ordering,
    validate_ordering,
)
from .bound_engine import (
    BoundReport,
    SearchResult,
    bound_report,
    insertion_pair_bounds_check,
    insertion_pair_slacks,
    insertion_pairs,
    lemma1_check,
    lemma1_slack,
    minimize_eg_bnb,
    minimize_eg_exhaustive,
)
from .dim_two import (
    CertificationOutcome,
    Dim2Certificate,
    Verdict,
    brute_force_dim2_oracle,
    certify_dimension_two,
    conjugate_ordering,
    equality_orderings,
    intersection_of_orders,
    peel_equality_check,
    realizer_identity_check,
)
from .cli_io import InstanceFile, Report, generate, parse_instance, read_instance, serialize_instance
from .cli import run_command

__all__ = [
    'EVectorError', 'InputError', 'ParseError', 'PreconditionError', 'PropertyViolation',
    'RefusalError', 'UsageError',
    'Digraph', 'EVector', 'InducedSubgraph', 'deletion_identity_check', 'delete_vertex',
    'e_vector', 'in_neighbors', 'induced_subgraph', 'is_acyclic', 'is_transitive',
    'maximal_vertices', 'out_neighbors', 'transitive_closure',
    'OrderingStream', 'Ranking', 'arc_weight_sum', 'average_relational_distance',
    'enumerate_orderings', 'inner_product', 'some_topological_ordering', 'validate_ordering',
    'BoundReport', 'SearchResult', 'bound_report', 'insertion_pair_bounds_check',
    'insertion_pair_slacks', 'insertion_pairs', 'lemma1_check', 'lemma1_slack',
    'minimize_eg_bnb', 'minimize_eg_exhaustive',
    'CertificationOutcome', 'Dim2Certificate', 'Verdict', 'brute_force_dim2_oracle',
    'certify_dimension_two', 'conjugate_ordering', 'equality_orderings',
    'intersection_of_orders', 'peel_equality_check', 'realizer_identity_check',
    'InstanceFile', 'Report', 'generate', 'parse_instance', 'read_instance', 'serialize_instance',
    'run_command',
]

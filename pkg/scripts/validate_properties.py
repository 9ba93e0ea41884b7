#!/usr/bin/env python3

import os
import sys
import argparse
import logging
from itertools import combinations
from pathlib import Path
from typing import Dict, List

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))
from evector import (
    Verdict,
    arc_weight_sum,
    bound_report,
    brute_force_dim2_oracle,
    certify_dimension_two,
    deletion_identity_check,
    e_vector,
    enumerate_orderings,
    generate,
    inner_product,
    insertion_pair_bounds_check,
    lemma1_check,
    maximal_vertices,
    minimize_eg_bnb,
    minimize_eg_exhaustive,
    peel_equality_check,
    realizer_identity_check,
    transitive_closure,
)
from evector.errors import PropertyViolation

logger = logging.getLogger(__name__)

PROBABILITIES = (0.2, 0.35, 0.5, 0.65, 0.8)


class PropertyValidator:
    """Runs the bound and dimension-two property suites over seeded random instances."""

    def __init__(self, instances: int = 500, max_n: int = 8, seed: int = 0, output_dir: Path = None):
        self.instances = instances
        self.max_n = max_n
        self.seed = seed

        self.script_dir = Path(__file__).parent
        self.output_dir = output_dir or self.script_dir.parent / "final_output"

        self.validation_results = {
            'total_instances': 0,
            'total_orderings': 0,
            'errors': [],
            'warnings': [],
            'suite_stats': {}
        }

    def random_instances(self, count: int, max_n: int):
        """Yield (label, digraph) for seeded random DAGs cycling through sizes and densities."""
        for index in range(count):
            n = 1 + index % max_n
            p = PROBABILITIES[index % len(PROBABILITIES)]
            seed = self.seed + index
            yield f"random_dag(n={n}, p={p}, seed={seed})", generate('random_dag', n=n, p=p, seed=seed)

    def _record(self, suite: str, checked: int, failures: List[str]):
        self.validation_results['suite_stats'][suite] = {
            'checked': checked,
            'failed': len(failures),
        }
        for failure in failures:
            self.validation_results['errors'].append(f"{suite}: {failure}")

    def validate_lower_bound(self):
        """Every acyclic ordering of every instance satisfies 2<e,g> >= <e,e>."""
        logger.info("Validating the lower bound over all orderings")
        failures = []
        checked = 0
        for label, D in self.random_instances(self.instances, self.max_n):
            self.validation_results['total_instances'] += 1
            for g in enumerate_orderings(D):
                checked += 1
                try:
                    bound_report(D, g)
                except PropertyViolation as e:
                    failures.append(f"{label}, g={list(g)}: {e}")
        self.validation_results['total_orderings'] += checked
        self._record('lower_bound', checked, failures)

    def validate_identities(self):
        """Arc weight identity, e-vector sum/parity, deletion identities and the insertion inequality."""
        logger.info("Validating e-vector identities")
        failures = []
        checked = 0
        for label, D in self.random_instances(self.instances, self.max_n):
            e = e_vector(D)
            checked += 1
            if e.total() != 0 or e.norm_squared() % 2 != 0:
                failures.append(f"{label}: e-vector sum {e.total()}, <e,e> = {e.norm_squared()}")

            for z in maximal_vertices(D):
                if not deletion_identity_check(D, z):
                    failures.append(f"{label}: deletion identity fails at z={z}")

            for g in enumerate_orderings(D, max_count=200):
                try:
                    if arc_weight_sum(D, g) != inner_product(e, g):
                        failures.append(f"{label}: arc weight identity fails for g={list(g)}")
                except PropertyViolation as e_violation:
                    failures.append(f"{label}: {e_violation}")
                z = g.vertex_sequence()[-1] if D.n else None
                if z is not None and not lemma1_check(D, g, z):
                    failures.append(f"{label}: insertion inequality fails for g={list(g)}")
        self._record('identities', checked, failures)

    def validate_insertion_pairs(self, max_n: int = 10):
        logger.info(f"Validating insertion-pair bounds for all subsets, n <= {max_n}")
        failures = []
        checked = 0
        for n in range(max_n + 1):
            for size in range(n + 1):
                for subset in combinations(range(1, n + 1), size):
                    checked += 1
                    if not insertion_pair_bounds_check(subset, n):
                        failures.append(f"n={n}, S={subset}")
        self._record('insertion_pairs', checked, failures)

    def validate_dimension_two(self, count: int = 200, max_n: int = 6):
        """Certification agrees with the realizer oracle; certificates pass every check."""
        logger.info("Validating dimension-two certification against the oracle")
        failures = []
        checked = 0
        for label, D in self.random_instances(count, max_n):
            poset = transitive_closure(D)
            checked += 1
            outcome = certify_dimension_two(poset)
            oracle = brute_force_dim2_oracle(poset)
            certified = outcome.verdict is Verdict.CERTIFIED_DIM2
            if certified != oracle:
                failures.append(f"{label}: certify={outcome.verdict.value}, oracle={oracle}")
            if certified:
                certificate = outcome.certificate
                if not realizer_identity_check(poset, certificate.f, certificate.g):
                    failures.append(f"{label}: realizer identity fails")
                if not peel_equality_check(poset, certificate.g):
                    failures.append(f"{label}: peeling check fails")
        self._record('dimension_two', checked, failures)

    def validate_optimizers(self, count: int = 100):
        logger.info("Validating branch and bound against exhaustive search")
        failures = []
        checked = 0
        for label, D in self.random_instances(count, self.max_n):
            checked += 1
            exhaustive = minimize_eg_exhaustive(D)
            pruned = minimize_eg_bnb(D)
            if (pruned.min_eg, pruned.argmin) != (exhaustive.min_eg, exhaustive.argmin):
                failures.append(f"{label}: bnb {pruned.min_eg} {list(pruned.argmin)} != "
                                f"exhaustive {exhaustive.min_eg} {list(exhaustive.argmin)}")
            if pruned.explored > exhaustive.explored:
                self.validation_results['warnings'].append(
                    f"{label}: bnb explored {pruned.explored} > {exhaustive.explored}"
                )
        self._record('optimizers', checked, failures)

    def validate_all(self):
        self.validate_lower_bound()
        self.validate_identities()
        self.validate_insertion_pairs()
        self.validate_dimension_two()
        self.validate_optimizers()
        return not self.validation_results['errors']

    def generate_validation_report(self) -> Path:
        """Write the plain-text validation report."""
        self.output_dir.mkdir(parents=True, exist_ok=True)
        report_file = self.output_dir / "property_report.txt"

        with open(report_file, 'w') as f:
            f.write("e-vector Property Validation Report\n")
            f.write("===================================\n\n")

            f.write(f"Random instances: {self.validation_results['total_instances']}\n")
            f.write(f"Orderings checked: {self.validation_results['total_orderings']}\n")

            f.write("\nSuite Statistics:\n")
            f.write("-" * 50 + "\n")
            for suite, stats in self.validation_results['suite_stats'].items():
                f.write(f"{suite}:\n")
                f.write(f"  Checked: {stats['checked']}\n")
                f.write(f"  Failed: {stats['failed']}\n")
                f.write("\n")

            if self.validation_results['errors']:
                f.write(f"\nViolations ({len(self.validation_results['errors'])}):\n")
                f.write("-" * 50 + "\n")
                for error in self.validation_results['errors'][:50]:
                    f.write(f"- {error}\n")
                if len(self.validation_results['errors']) > 50:
                    f.write(f"... and {len(self.validation_results['errors']) - 50} more violations\n")

            if self.validation_results['warnings']:
                f.write(f"\nWarnings ({len(self.validation_results['warnings'])}):\n")
                f.write("-" * 50 + "\n")
                for warning in self.validation_results['warnings'][:50]:
                    f.write(f"- {warning}\n")

        logger.info(f"Validation report generated: {report_file}")
        return report_file

    def print_summary(self):
        print("\n" + "=" * 60)
        print("PROPERTY VALIDATION SUMMARY")
        print("=" * 60)
        print(f"Random instances: {self.validation_results['total_instances']}")
        print(f"Orderings checked: {self.validation_results['total_orderings']}")
        for suite, stats in self.validation_results['suite_stats'].items():
            print(f"{suite}: {stats['checked']} checked, {stats['failed']} failed")
        print(f"Total violations: {len(self.validation_results['errors'])}")
        print(f"Total warnings: {len(self.validation_results['warnings'])}")

        if self.validation_results['errors']:
            print("\nSample violations:")
            for error in self.validation_results['errors'][:5]:
                print(f"  - {error}")

        print("=" * 60)


def main():
    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')

    parser = argparse.ArgumentParser(description='Run the e-vector property suites over seeded instances')
    parser.add_argument('--instances', type=int, default=500, help='Random DAGs for the bound suites')
    parser.add_argument('--max-n', type=int, default=8, help='Largest random DAG size')
    parser.add_argument('--seed', type=int, default=0, help='First seed')
    parser.add_argument('--output', '-o', type=Path, help='Report directory (default: final_output/)')
    args = parser.parse_args()

    validator = PropertyValidator(args.instances, args.max_n, args.seed, args.output)
    passed = validator.validate_all()
    report_file = validator.generate_validation_report()
    validator.print_summary()

    if not passed:
        logger.warning(f"Validation found {len(validator.validation_results['errors'])} violations. "
                       f"See {report_file} for details.")
        sys.exit(1)
    logger.info("Validation completed successfully. No property violations.")
    sys.exit(0)


if __name__ == "__main__":
    main()

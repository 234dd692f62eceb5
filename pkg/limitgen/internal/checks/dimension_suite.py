"""
Dimension properties: the floor-sqrt bound, witness shrinking, agreement of
the pool search with a window brute force, and the bound between noise
levels 1 and 2.
"""

from math import isqrt

from limitgen.internal.checks.base import Suite, trial_seed
from limitgen.internal.instances import InstanceGenerator
from limitgen.pkg.closure import BRANCH_CONSTRUCTED, Verdict, consistent_subfamily, nc_dimension, noisy_closure, shrink_witness
from limitgen.pkg.closure.oracles import brute_force_dimension

# brute-force windows are slow; check pool sufficiency on every n-th trial
POOL_CHECK_EVERY = 5


class DimensionSuite(Suite):
    name = "dimension"

    def _report(self, collection, noise):
        return nc_dimension(collection, noise, self.config.max_size, self.config.pool_depth_for(noise))

    def run_trial(self, trial: int, seed: int) -> None:
        instances = InstanceGenerator(trial_seed(seed, trial), self.config)
        collection = instances.collection()
        reports = {i: self._report(collection, i) for i in (1, 2)}
        first, second = reports[1], reports[2]

        if first.verdict == Verdict.EXACT and second.verdict == Verdict.EXACT:
            bound = first.value >= isqrt(second.value)
            self.record(
                "floor_sqrt",
                bound,
                trial,
                f"NC_1={first.value} NC_2={second.value}",
                collection,
                second.witness,
                2,
            )

        # NoWitness means the whole collection has an infinite intersection,
        # which does not depend on the noise level
        same_shape = (first.verdict == Verdict.NO_WITNESS) == (second.verdict == Verdict.NO_WITNESS)
        self.record("no_witness_agreement", same_shape, trial, f"{first.describe()} vs {second.describe()}", collection)

        if first.verdict == Verdict.EXACT:
            limit = (first.value + 1) ** 2
            finite = second.verdict == Verdict.NO_WITNESS or second.value < limit
            self.record("noise_equivalence", finite, trial, f"NC_1={first.value} NC_2 {second.describe()}", collection)

        if second.verdict != Verdict.NO_WITNESS and second.witness:
            k = isqrt(len(second.witness))
            sample = frozenset(second.witness[: k * k])
            result = shrink_witness(collection, 2, sample)
            closure = noisy_closure(collection, result.witness, 1)
            holds = len(result.witness) <= k and closure.is_finite and not closure.is_empty_consistent
            if result.branch == BRANCH_CONSTRUCTED:
                holds = holds and consistent_subfamily(collection, sample, 2, result.witness, 1)
            self.record("shrink", holds, trial, f"branch {result.branch}", collection, sample, 2)

        if trial % POOL_CHECK_EVERY == 0:
            tiny = instances.collection("tiny", max_languages=2, max_blocks=2, max_exceptions=3)
            for noise in (0, 1):
                report = self._report(tiny, noise)
                if report.verdict == Verdict.AT_LEAST:
                    continue
                expected = brute_force_dimension(tiny, noise, self.config.oracle_window)
                actual = report.value if report.verdict == Verdict.EXACT else None
                self.record(
                    "pool_sufficiency",
                    expected == actual,
                    trial,
                    f"pool {report.describe()} vs window {expected}",
                    tiny,
                    report.witness,
                    noise,
                )

"""
Refutation, converse-witness and enumeration properties.
"""

import random

from limitgen.internal.checks.base import Suite, trial_seed
from limitgen.internal.instances import InstanceGenerator
from limitgen.internal.synthetic import FirstColumnRepeatGenerator, FreshColumnGenerator
from limitgen.pkg.adversary import (
    CASE_INSIDE,
    CASE_SCATTERED,
    Schedule,
    build_enumeration,
    converse_witness,
    run_refutation,
)
from limitgen.pkg.closure import consistent_languages, noisy_closure
from limitgen.pkg.game import play, settle_time
from limitgen.pkg.generators import ClosureGenerator, FirstColumnGenerator
from limitgen.pkg.universe import ColumnFamily, Element, columns_language, member
from limitgen.pkg.universe.element import iter_universe

MIN_REFUTED = 5


class RefutationSuite(Suite):
    name = "refutation"

    def run_trial(self, trial: int, seed: int) -> None:
        rng = random.Random(trial_seed(seed, trial))
        family = ColumnFamily()
        horizon = max(self.config.horizon, 6) + trial % 7
        iterations = self.config.algorithm1_iterations

        outcome = run_refutation(ClosureGenerator(family, 1), horizon, iterations)
        refuted = outcome.conclusive and list(outcome.errors) == list(outcome.accepted)
        refuted = refuted and len(outcome.errors) >= MIN_REFUTED
        self.record("closure_generator_refuted", refuted, trial, f"horizon {horizon}: {outcome.describe()}")

        outcome = run_refutation(FreshColumnGenerator(), horizon, iterations)
        scattered = outcome.report.case == CASE_SCATTERED and list(outcome.errors) == list(outcome.accepted)
        scattered = scattered and len(outcome.accepted) == min(iterations, horizon)
        self.record("algorithm1", scattered, trial, f"horizon {horizon}: {outcome.describe()}")

        outcome = run_refutation(FirstColumnRepeatGenerator(), horizon, iterations)
        inside = outcome.report.case == CASE_INSIDE and list(outcome.errors) == list(outcome.accepted)
        self.record("inside_case", inside, trial, f"horizon {horizon}: {outcome.describe()}")

        # enumerations are repetition-free and carry exactly the declared noise
        instances = InstanceGenerator(trial_seed(seed, trial), self.config)
        target = instances.language()
        outside = _first_outside(target, 12)
        noise = rng.sample(outside, rng.randint(0, 2))
        schedule = Schedule.parse(rng.choice(["prefix", "random"]), spread=self.config.random_spread)
        enumeration = build_enumeration(target, noise, schedule, rng.randrange(10**6))
        emitted = enumeration.take(self.config.closure_window)
        distinct = len(set(emitted)) == len(emitted)
        strays = [e for e in emitted if not member(target, e)]
        self.record("enumeration", distinct and sorted(strays) == sorted(noise), trial, f"noise {noise}")

        # without noise the column family is generated from the first step on
        columns = sorted(rng.sample(range(6), rng.randint(1, 3)))
        enumeration = build_enumeration(columns_language(columns), (), Schedule.parse("random"), rng.randrange(10**6))
        trace = play(family, FirstColumnGenerator(), enumeration, 12, "columns", 0)
        self.record("noiseless_columns", settle_time(trace) == 0, trial, f"columns {columns}")

        self._check_converse(rng, instances, family, trial)

    def _check_converse(
        self, rng: random.Random, instances: InstanceGenerator, family: ColumnFamily, trial: int
    ) -> None:
        # at most `noise` hits per column leaves no heavy column, so the closure is finite
        noise = rng.randint(1, 2)
        touched = rng.sample(range(6), rng.randint(1, 3))
        sample = frozenset(Element(c, k) for c in touched for k in rng.sample(range(4), rng.randint(1, noise)))
        witness = converse_witness(family, ClosureGenerator(family, noise), sample, noise)
        misses = [e for e in witness.prefix if not member(witness.target, e)]
        wrong = witness.output in witness.prefix or not member(witness.target, witness.output)
        detail = f"{witness.target_name} answer {witness.output}"
        self.record("converse", wrong and len(misses) <= noise, trial, detail, family, sample, noise)

        instance = instances.instance()
        if not instance.sample:
            return
        closure = noisy_closure(instance.collection, instance.sample, instance.noise)
        if closure.is_empty_consistent or not closure.is_finite:
            return
        generator = ClosureGenerator(instance.collection, instance.noise)
        witness = converse_witness(instance.collection, generator, instance.sample, instance.noise)
        names = {entry.name for entry in consistent_languages(instance.collection, witness.prefix, instance.noise)}
        wrong = witness.output in witness.prefix or not member(witness.target, witness.output)
        detail = f"{witness.target_name} answer {witness.output}"
        self.record(
            "converse",
            wrong and witness.target_name in names,
            trial,
            detail,
            instance.collection,
            instance.sample,
            instance.noise,
        )



def _first_outside(target, count):
    found = []
    for element in iter_universe():
        if len(found) == count:
            break
        if not member(target, element):
            found.append(element)
    return found

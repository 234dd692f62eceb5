"""
Closure properties on random explicit collections.
"""

from typing import FrozenSet, Set

from limitgen.internal.checks.base import Suite, trial_seed
from limitgen.internal.instances import InstanceGenerator
from limitgen.pkg.closure import column_closure, consistent_languages, noisy_closure, saturate
from limitgen.pkg.closure.oracles import brute_force_closure, column_oracle_closure, window_elements, windowed
from limitgen.pkg.universe import Element, ExplicitCollection, member


def _exception_elements(collection: ExplicitCollection) -> Set[Element]:
    elements: Set[Element] = set()
    for language in collection.languages:
        elements |= language.adds | language.removes
    return elements


def _names(collection, sample, noise) -> FrozenSet[str]:
    return frozenset(entry.name for entry in consistent_languages(collection, sample, noise))


class ClosureSuite(Suite):
    name = "closure"

    def run_trial(self, trial: int, seed: int) -> None:
        instances = InstanceGenerator(trial_seed(seed, trial), self.config)
        instance = instances.instance()
        collection, sample, noise = instance.collection, instance.sample, instance.noise
        closure = noisy_closure(collection, sample, noise)
        consistent = consistent_languages(collection, sample, noise)

        # every consistent language contains the closure
        checked = set(window_elements(self.config.closure_window)) | _exception_elements(collection)
        contained = True
        detail = ""
        for entry in consistent:
            outside = [e for e in checked if e in closure and not member(entry.language, e)]
            if outside:
                contained = False
                detail = f"{min(outside)} in closure but not in {entry.name}"
                break
        self.record("containment", contained, trial, detail, collection, sample, noise)

        if closure.is_finite and not closure.is_empty_consistent:
            saturated = saturate(collection, sample, noise)
            same = _names(collection, saturated, noise) == _names(collection, sample, noise)
            self.record("saturation", same, trial, "consistent set changed", collection, sample, noise)
            partial = frozenset(instances.rng.sample(sorted(closure.members()), len(closure.members()) // 2))
            same = _names(collection, sample | partial, noise) == _names(collection, sample, noise)
            self.record("saturation_subset", same, trial, "consistent set changed", collection, sample, noise)

        window = self.config.oracle_window
        higher = noise + 1
        grows = _names(collection, sample, noise) <= _names(collection, sample, higher)
        shrinks = True
        low, high = windowed(closure, window), windowed(noisy_closure(collection, sample, higher), window)
        if low is not None and high is not None:
            shrinks = high <= low
        self.record("monotone_noise", grows and shrinks, trial, f"levels {noise} and {higher}", collection, sample, noise)

        extended = sample | instances.sample(3)
        anti = _names(collection, extended, noise) <= _names(collection, sample, noise)
        self.record("antimonotone_sample", anti, trial, f"superset {sorted(extended)}", collection, sample, noise)

        oracle = brute_force_closure(collection, sample, noise, window)
        agrees = oracle == windowed(closure, window)
        self.record("oracle_agreement", agrees, trial, closure.describe(), collection, sample, noise)

        m = 2 + trial % 5
        column_sample = instances.column_sample(m)
        column_noise = trial % 3
        expected = column_oracle_closure(column_sample, column_noise, m, window)
        actual = windowed(column_closure(column_sample, column_noise), window)
        self.record(
            "column_closed_form",
            expected == actual,
            trial,
            f"m={m}",
            None,
            column_sample,
            column_noise,
        )

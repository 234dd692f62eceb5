"""
Generator guarantees on the fixed collections.

- The closure generator at level 1 on the two-language example is correct
  from step NC_1 on, for either target and at most one noise string.
- The chain generator over the gadget chain is correct from
  max(j, t*(D_j)) on for targets in level j.
- Outputs stay inside the closure whenever the closure has unseen members,
  identical histories give identical outputs, and j_t never decreases.
"""

import random
from typing import List, Optional

from limitgen.internal.checks.base import Suite, trial_seed
from limitgen.internal.fixtures import example_collection, gadget_chain_levels
from limitgen.pkg.adversary import Schedule, build_enumeration
from limitgen.pkg.generators import (
    Chain,
    build_chain,
    chain_index,
    nonuniform_noise_dependent,
    uniform_noise_dependent,
)
from limitgen.pkg.game import check_judgments, play
from limitgen.pkg.universe import Element, SymbolicLanguage, member, smallest_member_outside
from limitgen.pkg.universe.element import iter_universe

STEPS = 14


def _noise_outside(rng: random.Random, target: SymbolicLanguage, count: int) -> List[Element]:
    candidates = []
    for element in iter_universe():
        if len(candidates) == 30:
            break
        if not member(target, element):
            candidates.append(element)
    return rng.sample(candidates, count)


def _schedule(rng: random.Random, spread: int) -> Schedule:
    return Schedule.parse(rng.choice(["prefix", "random"]), spread=spread)


class GeneratorsSuite(Suite):
    name = "generators"

    def __init__(self, config=None):
        super().__init__(config)
        self._uniform = None
        self._chain: Optional[Chain] = None

    def _uniform_generator(self):
        if self._uniform is None:
            self._uniform = uniform_noise_dependent(example_collection(), 1, self.config.max_size)
        return self._uniform

    def _gadget_chain(self) -> Chain:
        if self._chain is None:
            self._chain = build_chain(gadget_chain_levels(), 1, "d", self.config.max_size)
        return self._chain

    def run_trial(self, trial: int, seed: int) -> None:
        rng = random.Random(trial_seed(seed, trial))
        collection = example_collection()
        generator, promised = self._uniform_generator()

        entry = collection.members[trial % len(collection)]
        noise = _noise_outside(rng, entry.language, rng.randint(0, 1))
        enumeration = build_enumeration(entry.language, noise, _schedule(rng, self.config.random_spread), rng.randrange(10**6))
        trace = play(collection, generator, enumeration, STEPS, entry.name, promised)
        late_errors = [step.t for step in trace.steps if step.t >= promised and not step.correct]
        self.record("uniform_settle", not late_errors, trial, f"{entry.name} wrong at {late_errors}", collection)
        self.record("judgments", not check_judgments(trace, entry.language), trial, "judgment mismatch", collection)

        history: List[Element] = []
        inside = True
        for step in trace.steps:
            history.append(step.x)
            closure = generator.closure_for(history)
            if closure.is_empty_consistent:
                continue
            if smallest_member_outside(closure.value, set(history)) is not None:
                inside = inside and step.z in closure and step.z not in history
        self.record("output_in_closure", inside, trial, "output left the closure", collection)

        repeat = generator.query(history) == generator.query(list(history))
        self.record("deterministic", repeat, trial, "outputs differ", collection)

        chain = self._gadget_chain()
        level = rng.randrange(len(chain))
        member_entry = rng.choice(chain.levels[level].members)
        chain_generator, chain_promised = nonuniform_noise_dependent(chain, 1, level, member_entry.language)
        noise = _noise_outside(rng, member_entry.language, rng.randint(0, 1))
        enumeration = build_enumeration(
            member_entry.language, noise, _schedule(rng, self.config.random_spread), rng.randrange(10**6)
        )
        trace = play(chain.levels[-1], chain_generator, enumeration, STEPS, member_entry.name, chain_promised)
        late_errors = [step.t for step in trace.steps if step.t >= chain_promised and not step.correct]
        self.record(
            "chain_settle",
            not late_errors,
            trial,
            f"{member_entry.name} (level {level}) wrong at {late_errors}",
            chain.levels[-1],
        )

        settle_times = [rng.randint(0, 8) for _ in range(rng.randint(1, 4))]
        positions = [chain_index(settle_times, t)[0] for t in range(12)]
        self.record("chain_index_monotone", positions == sorted(positions), trial, f"settle times {settle_times}")

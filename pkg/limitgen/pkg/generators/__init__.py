"""
Generators: the closure generator, the chain generator and their
noise-dependent wrappers, plus the first-column and external generators.
"""

from .closure_generator import ClosureGenerator, GeneratorState, closure_generator_step
from .chain import Chain, ChainGenerator, build_chain, chain_from_settle_times, chain_generator_step, chain_index
from .external import EXTERNAL_PREFIX, ExternalGenerator, format_history
from .first_column import FirstColumnGenerator
from .wrappers import nonuniform_noise_dependent, uniform_noise_dependent

__all__ = [
    "ClosureGenerator",
    "GeneratorState",
    "closure_generator_step",
    "Chain",
    "ChainGenerator",
    "build_chain",
    "chain_from_settle_times",
    "chain_generator_step",
    "chain_index",
    "EXTERNAL_PREFIX",
    "ExternalGenerator",
    "format_history",
    "FirstColumnGenerator",
    "nonuniform_noise_dependent",
    "uniform_noise_dependent",
]

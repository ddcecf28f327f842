"""
Reduction from Turing machine halting to generalised string rewriting halting
"""

import logging
from typing import List

from ..problems import SrDerivation, SrhPrimeInstance, Step, check_srh_prime, replay
from ..solvers import rewrite_successors
from ..turing import (
    NotAConfig, TmInstance, decode_config, encode_config, initial_config,
    machine_symbols, tm_rules, tm_step, tm_trace
)
from .base import ReductionError, ReductionOutput, fail, require


def reduce_tm_to_srh_prime(src: TmInstance) -> ReductionOutput[TmInstance, SrhPrimeInstance]:
    """
    Rewrite encoded configurations until a halting state shows up

    :param src: machine and input
    :return: rewriting instance with the compiled rules, the encoded start
        configuration and the halting states as targets
    :raise ReductionError: if the input uses symbols outside of the tape alphabet
    """

    machine = src.machine
    if not set(src.input) <= set(machine.tape_alphabet):
        raise ReductionError("Input contains symbols outside of the tape alphabet")
    start = encode_config(machine, initial_config(machine, src.input))
    instance = SrhPrimeInstance(tm_rules(machine), start, machine.halting)
    return ReductionOutput(src, instance, machine_symbols(machine), machine.tape_alphabet + machine.states)


def tm_witness_fwd(src: TmInstance, steps: int) -> SrDerivation:
    """
    Translate a halting run into a rewriting derivation, one rewriting step per machine step

    :param src: machine and input
    :param steps: step bound within which the machine halts
    :return: derivation accepted by :func:`check_srh_prime` on the reduced instance
    :raise TranslationError: if the machine doesn't halt within ``steps`` steps
    """

    logger = logging.getLogger("reductions.tm")
    out = reduce_tm_to_srh_prime(src)
    configs = list(tm_trace(src.machine, src.input, steps))
    if configs[-1].state not in src.machine.halting:
        raise fail(logger, f"Machine doesn't halt within {steps} steps")

    derivation: List[Step] = []
    for before, after in zip(configs, configs[1:]):
        target = encode_config(src.machine, after)
        matches = [
            Step(rule, cut) for successor, rule, cut in rewrite_successors(out.instance.rules, encode_config(src.machine, before))
            if successor == target
        ]
        if not matches:
            raise fail(logger, f"No rewriting step simulates machine step {len(derivation)}")
        derivation.append(matches[0])

    result = tuple(derivation)
    require(check_srh_prime(out.instance, result), logger, "Simulating derivation")
    return result


def tm_witness_bwd(src: TmInstance, d: SrDerivation) -> int:
    """
    Decode a halting derivation into the number of machine steps

    Every intermediate string is decoded to a configuration and compared
    with the machine's own step.

    :raise TranslationError: if ``d`` is not accepted or some string
        doesn't encode the successor configuration
    """

    logger = logging.getLogger("reductions.tm")
    out = reduce_tm_to_srh_prime(src)
    require(check_srh_prime(out.instance, d), logger, "Halting derivation")

    config = initial_config(src.machine, src.input)
    current = out.instance.start
    for n, step in enumerate(d):
        current, _ = replay(out.instance.rules, current, (step,))
        try:
            decoded = decode_config(src.machine, current)
        except NotAConfig as exc:
            raise fail(logger, f"String after step {n} is no configuration: {exc}") from exc
        expected = tm_step(src.machine, config)
        if decoded != expected:
            raise fail(logger, f"Step {n} doesn't simulate the machine")
        config = decoded
    if config.state not in src.machine.halting:
        raise fail(logger, "Decoded run doesn't halt")
    return len(d)

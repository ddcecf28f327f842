"""
Reductions between the string rewriting problems

Generalised halting with a set of target symbols reduces to halting on a
single target symbol, which in turn reduces to reachability of the string
consisting of the target symbol alone.
"""

import logging
from typing import Optional

from ..core import Card, Str, alphabet_of_cards, fresh
from ..problems import (
    SrDerivation, SrhInstance, SrhPrimeInstance, SrInstance, Step,
    check_sr, check_srh, check_srh_prime, replay
)
from .base import ReductionOutput, fail, require


def reduce_srh_to_sr(src: SrhInstance) -> ReductionOutput[SrhInstance, SrInstance]:
    """
    Add rules which let the target symbol absorb its neighbours

    The rules are ``R``, then ``a a0 / a0`` and then ``a0 a / a0`` for every
    symbol ``a`` of the alphabet, duplicates kept.
    """

    a0 = src.target
    sigma = alphabet_of_cards(src.rules, src.start, (a0,))
    rules = src.rules + tuple(Card((a, a0), (a0,)) for a in sigma) + tuple(Card((a0, a), (a0,)) for a in sigma)
    return ReductionOutput(src, SrInstance(rules, src.start, (a0,)), {}, sigma)


def srh_to_sr_witness_fwd(src: SrhInstance, d: SrDerivation, y: Optional[Str] = None) -> SrDerivation:
    """
    Extend a halting derivation by absorption steps down to the target symbol

    Neighbours left of the first occurrence of the target are deleted from
    right to left, then the neighbours right of it from left to right.

    :param src: halting instance
    :param d: derivation accepted by :func:`check_srh`
    :param y: final string of ``d``, computed when omitted
    :return: derivation accepted by :func:`check_sr` on the reduced instance
    :raise TranslationError: if ``d`` is not accepted or ``y`` is not its end
    """

    logger = logging.getLogger("reductions.sr")
    out = reduce_srh_to_sr(src)
    require(check_srh(src, d), logger, "Halting derivation")
    current, _ = replay(src.rules, src.start, d)
    if y is not None and tuple(y) != current:
        raise fail(logger, "Derivation doesn't end at the given string")

    n, sigma, a0 = len(src.rules), out.alphabet, src.target
    steps = list(d)
    position = current.index(a0)
    while position > 0:
        steps.append(Step(n + sigma.index(current[position - 1]), position - 1))
        current = current[:position - 1] + current[position:]
        position -= 1
    while len(current) > 1:
        steps.append(Step(n + len(sigma) + sigma.index(current[1]), 0))
        current = current[:1] + current[2:]

    require(check_sr(out.instance, tuple(steps)), logger, "Extended derivation")
    return tuple(steps)


def srh_to_sr_witness_bwd(src: SrhInstance, d: SrDerivation) -> SrDerivation:
    """
    Cut a derivation of the target symbol before the first absorption step

    Absorption rules keep the target symbol, so it already occurs in the
    string the absorption started from.
    """

    logger = logging.getLogger("reductions.sr")
    out = reduce_srh_to_sr(src)
    require(check_sr(out.instance, d), logger, "Rewriting derivation")
    n = len(src.rules)
    cut = next((i for i, step in enumerate(d) if step.rule >= n), len(d))
    result = tuple(d[:cut])
    require(check_srh(src, result), logger, "Truncated derivation")
    return result


def reduce_srh_prime_to_srh(src: SrhPrimeInstance) -> ReductionOutput[SrhPrimeInstance, SrhInstance]:
    """Rewrite every target symbol to a single fresh symbol ``#``"""
    sigma = alphabet_of_cards(src.rules, src.start, src.targets)
    h = fresh(sigma)
    rules = src.rules + tuple(Card((a,), (h,)) for a in src.targets)
    return ReductionOutput(src, SrhInstance(rules, src.start, h), {"#": h}, sigma)


def srh_prime_to_srh_witness_fwd(src: SrhPrimeInstance, d: SrDerivation) -> SrDerivation:
    """Append one step replacing the leftmost target symbol of the final string by ``#``"""
    logger = logging.getLogger("reductions.srh")
    out = reduce_srh_prime_to_srh(src)
    require(check_srh_prime(src, d), logger, "Halting derivation")
    final, _ = replay(src.rules, src.start, d)
    targets = set(src.targets)
    position = next(i for i, a in enumerate(final) if a in targets)
    result = tuple(d) + (Step(len(src.rules) + src.targets.index(final[position]), position),)
    require(check_srh(out.instance, result), logger, "Extended derivation")
    return result


def srh_prime_to_srh_witness_bwd(src: SrhPrimeInstance, d: SrDerivation) -> SrDerivation:
    logger = logging.getLogger("reductions.srh")
    out = reduce_srh_prime_to_srh(src)
    require(check_srh(out.instance, d), logger, "Halting derivation")
    n = len(src.rules)
    cut = next((i for i, step in enumerate(d) if step.rule >= n), len(d))
    result = tuple(d[:cut])
    require(check_srh_prime(src, result), logger, "Truncated derivation")
    return result


def srh_to_srh_prime(src: SrhInstance) -> ReductionOutput[SrhInstance, SrhPrimeInstance]:
    """Embed a halting instance as one with a single target; derivations stay as they are"""
    sigma = alphabet_of_cards(src.rules, src.start, (src.target,))
    return ReductionOutput(src, SrhPrimeInstance(src.rules, src.start, (src.target,)), {}, sigma)

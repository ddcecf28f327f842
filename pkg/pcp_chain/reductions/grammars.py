"""
Reductions from the correspondence problem to Post grammar problems

A Post grammar is a list of rules ``x/y`` with a marker ``#``; a
derivation using rules ``x1/y1 ... xn/yn`` (outermost first) generates
``x1 ... xn # yn ... y1``, computed by :func:`pcp_chain.core.sigma`.
"""

import logging
from typing import Iterable, Tuple

from ..core import Card, Symbol, alphabet_of_cards, fresh, reverse, select
from ..problems import (
    CfiInstance, CfpInstance, PcpInstance, StackWitness, check_cfi, check_cfp, check_pcp
)
from .base import ReductionOutput, fail, require


def gamma(stack: Iterable[Card]) -> Tuple[Card, ...]:
    """Reverse the lower string of every card; an involution"""
    return tuple(Card(card.top, reverse(card.bot)) for card in stack)


def gamma1(stack: Iterable[Card], marker: Symbol) -> Tuple[Card, ...]:
    """Rules ``x / x#y#`` for every card ``x/y``"""
    return tuple(Card(card.top, card.top + (marker,) + card.bot + (marker,)) for card in stack)


def gamma2(stack: Iterable[Card], marker: Symbol) -> Tuple[Card, ...]:
    """Rules ``y / x#y#`` for every card ``x/y``"""
    return tuple(Card(card.bot, card.top + (marker,) + card.bot + (marker,)) for card in stack)


def flatten(stack: Iterable[Card], marker: Symbol) -> Tuple[Symbol, ...]:
    """
    Serialise a stack as ``xn#yn# ... x1#y1#``, last card first

    Injective on stacks whose cards don't contain the marker.
    """

    return tuple(s for card in reversed(tuple(stack)) for s in card.top + (marker,) + card.bot + (marker,))


def reduce_pcp_to_cfp(src: PcpInstance) -> ReductionOutput[PcpInstance, CfpInstance]:
    sigma = alphabet_of_cards(src.cards)
    h = fresh(sigma)
    return ReductionOutput(src, CfpInstance(gamma(src.cards), h), {"#": h}, sigma)


def pcp_to_cfp_witness_fwd(src: PcpInstance, w: StackWitness) -> StackWitness:
    """Card ``i`` becomes rule ``i``, so matches are palindrome derivations as they are"""
    logger = logging.getLogger("reductions.cfp")
    out = reduce_pcp_to_cfp(src)
    require(check_pcp(src, w), logger, "Stack")
    require(check_cfp(out.instance, w), logger, "Derivation")
    return tuple(w)


def pcp_to_cfp_witness_bwd(src: PcpInstance, w: StackWitness) -> StackWitness:
    logger = logging.getLogger("reductions.cfp")
    out = reduce_pcp_to_cfp(src)
    require(check_cfp(out.instance, w), logger, "Derivation")
    require(check_pcp(src, w), logger, "Stack")
    return tuple(w)


def reduce_pcp_to_cfi(src: PcpInstance, indexed: bool = False) -> ReductionOutput[PcpInstance, CfiInstance]:
    """
    Build two grammars generating a common string iff the instance has a match

    By default the grammars consist of the rules ``x / x#y#`` and ``y / x#y#``
    for every card ``x/y``. With ``indexed`` set, rule ``i`` of both grammars
    produces a fresh symbol ``ii`` of its own instead: ``x / ii`` and ``y / ii``.

    :param src: correspondence instance
    :param indexed: whether to use one fresh symbol per card position
    :return: intersection instance with the fresh marker and position symbols
    """

    sigma = alphabet_of_cards(src.cards)
    h = fresh(sigma)
    if not indexed:
        instance = CfiInstance(gamma1(src.cards, h), gamma2(src.cards, h), h)
        return ReductionOutput(src, instance, {"#": h}, sigma)

    allocated = {"#": h}
    used = sigma + (h,)
    for i in range(len(src.cards)):
        allocated[f"i{i}"] = fresh(used)
        used += (allocated[f"i{i}"],)
    positions = [allocated[f"i{i}"] for i in range(len(src.cards))]
    rules1 = tuple(Card(card.top, (p,)) for card, p in zip(src.cards, positions))
    rules2 = tuple(Card(card.bot, (p,)) for card, p in zip(src.cards, positions))
    return ReductionOutput(src, CfiInstance(rules1, rules2, h), allocated, sigma)


def pcp_to_cfi_witness_fwd(
        src: PcpInstance,
        w: StackWitness,
        indexed: bool = False
) -> Tuple[StackWitness, StackWitness]:
    logger = logging.getLogger("reductions.cfi")
    out = reduce_pcp_to_cfi(src, indexed)
    require(check_pcp(src, w), logger, "Stack")
    require(check_cfi(out.instance, w, w), logger, "Derivation pair")
    return tuple(w), tuple(w)


def pcp_to_cfi_witness_bwd(
        src: PcpInstance,
        w1: StackWitness,
        w2: StackWitness,
        indexed: bool = False
) -> StackWitness:
    """
    Recover the match from a pair of derivations generating the same string

    Both derivations must select the same stack, as the serialisation of
    stacks after the marker is injective; the first one is returned.

    :raise TranslationError: if the pair is not accepted or the stacks differ
    """

    logger = logging.getLogger("reductions.cfi")
    out = reduce_pcp_to_cfi(src, indexed)
    require(check_cfi(out.instance, w1, w2), logger, "Derivation pair")
    if select(src.cards, w1) != select(src.cards, w2):
        raise fail(logger, "Derivations select different stacks, contradicting injectivity of the serialisation")
    require(check_pcp(src, w1), logger, "Decoded stack")
    return tuple(w1)

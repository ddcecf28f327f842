"""
Reductions from string rewriting to the modified and the plain correspondence problem

A derivation ``x0 > x1 > ... > y0`` becomes a match whose lower trace runs
one line ahead of the upper trace; every line ``xi #`` is copied symbol by
symbol with exactly the rewritten part replaced. The forced first card is
then eliminated by interleaving a fresh separator into every card.
"""

import logging
from typing import Dict, List

from ..core import Alphabet, Card, alphabet_of_cards, fresh, hash_post, hash_pre
from ..problems import (
    MpcpInstance, PcpInstance, SrDerivation, SrInstance, StackWitness, Step,
    check_mpcp, check_pcp, check_sr
)
from .base import ReductionOutput, fail, require


# Positions of the fixed cards in ``first :: cards`` of the modified instance
FIRST_INDEX = 0
FINAL_INDEX = 1
RULES_OFFSET = 2


def reduce_sr_to_mpcp(src: SrInstance) -> ReductionOutput[SrInstance, MpcpInstance]:
    """
    Build the modified correspondence instance of a rewriting instance

    The first card is ``$ / $ x0 #`` and the cards are ``y0 # $ / $``,
    the rules, ``# / #`` and a copy card ``a / a`` per alphabet symbol
    in this order. Witness index ``0`` is the first card, ``1`` the
    final card, rule ``i`` has index ``2 + i``.
    """

    sigma = alphabet_of_cards(src.rules, src.start, src.target)
    h = fresh(sigma)
    d = fresh(sigma + (h,))
    first = Card((d,), (d,) + src.start + (h,))
    cards = (Card(src.target + (h, d), (d,)),) + src.rules + (Card((h,), (h,)),) + tuple(Card((a,), (a,)) for a in sigma)
    return ReductionOutput(src, MpcpInstance(first, cards), {"#": h, "$": d}, sigma)


def _separator_index(src: SrInstance) -> int:
    return RULES_OFFSET + len(src.rules)


def _copy_index(src: SrInstance, sigma, a) -> int:
    return RULES_OFFSET + len(src.rules) + 1 + sigma.index(a)


def sr_to_mpcp_witness_fwd(src: SrInstance, d: SrDerivation) -> StackWitness:
    """
    Write down every string of a derivation as one line of the match

    :param src: rewriting instance
    :param d: derivation accepted by :func:`check_sr`
    :return: witness for the reduced instance (without the first card)
    :raise TranslationError: if ``d`` is not accepted
    """

    logger = logging.getLogger("reductions.mpcp")
    out = reduce_sr_to_mpcp(src)
    require(check_sr(src, d), logger, "Rewriting derivation")

    witness: List[int] = []
    current = src.start
    for step in d:
        rule = src.rules[step.rule]
        end = step.cut + len(rule.top)
        witness.extend(_copy_index(src, out.alphabet, a) for a in current[:step.cut])
        witness.append(RULES_OFFSET + step.rule)
        witness.extend(_copy_index(src, out.alphabet, a) for a in current[end:])
        witness.append(_separator_index(src))
        current = current[:step.cut] + rule.bot + current[end:]
    witness.append(FINAL_INDEX)

    result = tuple(witness)
    require(check_mpcp(out.instance, result), logger, "Translated stack")
    return result


def sr_to_mpcp_witness_bwd(src: SrInstance, w: StackWitness) -> SrDerivation:
    """
    Read a derivation off a match of the modified instance

    The match is consumed left to right while tracking the part ``x`` of
    the current line which is still to be covered and the part ``y`` of
    the next line produced so far. Copy cards move a symbol from ``x`` to
    ``y``, rule cards rewrite a prefix of ``x`` at cut ``len(y)``, the
    separator requires ``x`` to be exhausted and starts the next line.
    Cards after the final card are ignored.

    :raise TranslationError: if ``w`` is not accepted or doesn't decode
    """

    logger = logging.getLogger("reductions.mpcp")
    out = reduce_sr_to_mpcp(src)
    require(check_mpcp(out.instance, w), logger, "Stack")
    result = decode_lines(src, out.alphabet, w)
    require(check_sr(src, result), logger, "Decoded derivation")
    return result


def decode_lines(src: SrInstance, alphabet: Alphabet, w: StackWitness) -> SrDerivation:
    """
    Decode the lines of a stack of the modified instance into rewriting steps

    The stack is not required to be a match; decoding stops at the final card.

    :raise TranslationError: if the first card occurs again or a card doesn't fit its line
    """

    logger = logging.getLogger("reductions.mpcp")
    n = len(src.rules)
    separator = _separator_index(src)
    x, y = src.start, ()
    steps: List[Step] = []
    for position, index in enumerate(w):
        if not 0 <= index <= separator + len(alphabet):
            raise fail(logger, f"Card index {index} at position {position} out of range")
        if index == FIRST_INDEX:
            raise fail(logger, f"First card repeated at position {position}")
        if index == FINAL_INDEX:
            if x != src.target or y:
                raise fail(logger, f"Final card at position {position} doesn't close the target line")
            break
        if index == separator:
            if x:
                raise fail(logger, f"Separator at position {position} inside a line")
            x, y = y, ()
        elif index < RULES_OFFSET + n:
            rule = src.rules[index - RULES_OFFSET]
            if x[:len(rule.top)] != rule.top:
                raise fail(logger, f"Rule card at position {position} doesn't match the line")
            steps.append(Step(index - RULES_OFFSET, len(y)))
            x, y = x[len(rule.top):], y + rule.bot
        else:
            a = alphabet[index - separator - 1]
            if x[:1] != (a,):
                raise fail(logger, f"Copy card at position {position} doesn't match the line")
            x, y = x[1:], y + (a,)
    else:
        raise fail(logger, "Stack ends without the final card")
    return tuple(steps)


def hashed(h, card: Card) -> Card:
    """The card ``x/y`` with ``h`` inserted before every symbol of ``x`` and after every symbol of ``y``"""
    return Card(hash_pre(h, card.top), hash_post(h, card.bot))


def reduce_mpcp_to_pcp(src: MpcpInstance) -> ReductionOutput[MpcpInstance, PcpInstance]:
    """
    Eliminate the forced first card

    The cards are ``$ #x0 / $ # y0#``, ``# $ / $`` and the hashed image of
    every card of ``first :: cards`` except ``ε/ε``, in this order. The
    index map sends every source index to its hashed image.
    """

    sigma = alphabet_of_cards(src.all_cards)
    h = fresh(sigma)
    d = fresh(sigma + (h,))
    cards = [
        Card((d,) + hash_pre(h, src.first.top), (d, h) + hash_post(h, src.first.bot)),
        Card((h, d), (d,)),
    ]
    index_map = []
    for card in src.all_cards:
        if card.is_empty:
            index_map.append(None)
            continue
        index_map.append(len(cards))
        cards.append(hashed(h, card))
    return ReductionOutput(src, PcpInstance(cards), {"#": h, "$": d}, sigma, tuple(index_map))


def mpcp_to_pcp_witness_fwd(src: MpcpInstance, w: StackWitness) -> StackWitness:
    """Frame the hashed stack by the start and the final card, dropping ``ε/ε`` cards"""
    logger = logging.getLogger("reductions.pcp")
    out = reduce_mpcp_to_pcp(src)
    require(check_mpcp(src, w), logger, "Modified stack")
    result = (0,) + tuple(out.index_map[i] for i in w if out.index_map[i] is not None) + (1,)
    require(check_pcp(out.instance, result), logger, "Translated stack")
    return result


def mpcp_to_pcp_witness_bwd(src: MpcpInstance, w: StackWitness) -> StackWitness:
    """
    Map a match of the reduced instance back to the source cards

    Every match starts with the start card; the cards up to the first
    final card are mapped back, cards after it are ignored.

    :raise TranslationError: if ``w`` is not accepted or doesn't decode
    """

    logger = logging.getLogger("reductions.pcp")
    out = reduce_mpcp_to_pcp(src)
    require(check_pcp(out.instance, w), logger, "Stack")
    if w[0] != 0:
        raise fail(logger, f"Match starts with card {w[0]} instead of the start card")

    inverse: Dict[int, int] = {target: source for source, target in enumerate(out.index_map) if target is not None}
    result = []
    for position, index in enumerate(w[1:], start=1):
        if index == 1:
            break
        if index == 0:
            raise fail(logger, f"Start card repeated at position {position}")
        result.append(inverse[index])
    else:
        raise fail(logger, "Match ends without the final card")

    result = tuple(result)
    require(check_mpcp(src, result), logger, "Decoded stack")
    return result

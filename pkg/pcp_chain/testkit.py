"""
Seeded random instance generators and exhaustive reference oracles

All randomness comes from a :class:`numpy.random.Generator` driven by the
PCG64 bit generator seeded through a :class:`numpy.random.SeedSequence`,
so equal :class:`GenConfig` values produce equal instances on every platform.
Generated symbols are ``0 .. alphabet_size - 1``; Turing machine states
are numbered above them.
"""

import itertools
import dataclasses
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .core import Card, Str, fresh
from .problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance,
    StackWitness, check_pcp
)
from .solvers import rewrite_successors
from .turing import Move, TmInstance, TmSpec, Transition


@dataclasses.dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    alphabet_size: int = 2
    max_cards: int = 3
    """Maximal number of cards or rules"""
    max_side_len: int = 2
    """Maximal length of a card side, rule side or input"""
    max_states: int = 3


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def random_string(rng: np.random.Generator, alphabet_size: int, max_len: int, min_len: int = 0) -> Str:
    length = int(rng.integers(min_len, max_len + 1))
    return tuple(int(a) for a in rng.integers(0, alphabet_size, size=length))


def random_cards(rng: np.random.Generator, c: GenConfig, min_top: int = 0, min_count: int = 1) -> Tuple[Card, ...]:
    count = int(rng.integers(min_count, c.max_cards + 1))
    return tuple(
        Card(random_string(rng, c.alphabet_size, c.max_side_len, min_top), random_string(rng, c.alphabet_size, c.max_side_len))
        for _ in range(count)
    )


def gen_pcp(c: GenConfig) -> PcpInstance:
    return PcpInstance(random_cards(make_rng(c.seed), c))


def gen_planted_pcp(c: GenConfig) -> Tuple[PcpInstance, StackWitness]:
    """
    Generate an instance with a known match

    A random upper split of a random string is paired with a random lower
    split of the same string; the distinct cards of this stack are shuffled
    into the instance, filled up with random cards.

    :return: tuple of the instance and the planted match
    """

    rng = make_rng(c.seed)
    length = int(rng.integers(1, c.max_cards + 1))
    tops = [random_string(rng, c.alphabet_size, c.max_side_len) for _ in range(length)]
    word = tuple(a for top in tops for a in top)
    cuts = sorted(int(i) for i in rng.integers(0, len(word) + 1, size=length - 1))
    bounds = [0] + cuts + [len(word)]
    bots = [word[i:j] for i, j in zip(bounds, bounds[1:])]
    if any(len(bot) > c.max_side_len for bot in bots):
        bots = tops
    stack = [Card(top, bot) for top, bot in zip(tops, bots)]

    distinct = list(dict.fromkeys(stack))
    extra = random_cards(rng, c, min_count=0) if len(distinct) < c.max_cards else ()
    cards = (distinct + [card for card in extra if card not in distinct])[:max(c.max_cards, len(distinct))]
    order = [int(i) for i in rng.permutation(len(cards))]
    shuffled = [cards[i] for i in order]
    witness = tuple(shuffled.index(card) for card in stack)
    return PcpInstance(shuffled), witness


def _walk(rng: np.random.Generator, rules: Tuple[Card, ...], start: Str, steps: int) -> Str:
    current = start
    for _ in range(steps):
        successors = rewrite_successors(rules, current)
        if not successors:
            break
        current = successors[int(rng.integers(0, len(successors)))][0]
    return current


def gen_srs(c: GenConfig) -> SrInstance:
    """
    Generate a string rewriting instance

    Left sides are nonempty. With probability one half the target is the
    end of a short random walk from the start, so it's reachable.
    """

    rng = make_rng(c.seed)
    rules = random_cards(rng, c, min_top=1)
    start = random_string(rng, c.alphabet_size, c.max_side_len, 1)
    if rng.random() < 0.5:
        target = _walk(rng, rules, start, int(rng.integers(0, 4)))
    else:
        target = random_string(rng, c.alphabet_size, c.max_side_len)
    return SrInstance(rules, start, target)


def gen_srh(c: GenConfig) -> SrhInstance:
    rng = make_rng(c.seed)
    rules = random_cards(rng, c, min_top=1)
    start = random_string(rng, c.alphabet_size, c.max_side_len, 1)
    return SrhInstance(rules, start, int(rng.integers(0, c.alphabet_size)))


def gen_srh_prime(c: GenConfig) -> SrhPrimeInstance:
    rng = make_rng(c.seed)
    rules = random_cards(rng, c, min_top=1)
    start = random_string(rng, c.alphabet_size, c.max_side_len, 1)
    return SrhPrimeInstance(rules, start, random_string(rng, c.alphabet_size, 2, 1))


def gen_mpcp(c: GenConfig) -> MpcpInstance:
    rng = make_rng(c.seed)
    first = Card(random_string(rng, c.alphabet_size, c.max_side_len), random_string(rng, c.alphabet_size, c.max_side_len))
    return MpcpInstance(first, random_cards(rng, c))


def gen_cfp(c: GenConfig) -> CfpInstance:
    rng = make_rng(c.seed)
    return CfpInstance(random_cards(rng, c), fresh(range(c.alphabet_size)))


def gen_cfi(c: GenConfig) -> CfiInstance:
    rng = make_rng(c.seed)
    return CfiInstance(random_cards(rng, c), random_cards(rng, c), fresh(range(c.alphabet_size)))


def gen_tm(c: GenConfig) -> TmInstance:
    """
    Generate a machine with a total transition function and an input

    The halting states are a random nonempty subset of the states with
    probability one half and empty otherwise.
    """

    rng = make_rng(c.seed)
    tape = tuple(range(c.alphabet_size))
    states = tuple(range(c.alphabet_size, c.alphabet_size + int(rng.integers(1, c.max_states + 1))))
    halting: Tuple[int, ...] = ()
    if rng.random() < 0.5:
        mask = rng.random(len(states)) < 0.5
        mask[int(rng.integers(0, len(states)))] = True
        halting = tuple(q for q, selected in zip(states, mask) if selected)

    moves = list(Move)
    delta = {}
    for state in states:
        if state in halting:
            continue
        for read in (None,) + tape:
            write = int(rng.integers(-1, len(tape)))
            delta[(state, read)] = Transition(
                states[int(rng.integers(0, len(states)))],
                None if write < 0 else tape[write],
                moves[int(rng.integers(0, len(moves)))]
            )
    machine = TmSpec(tape, states, states[0], halting, delta)
    return TmInstance(machine, random_string(rng, c.alphabet_size, c.max_side_len))


GENERATORS: Dict[str, Callable[[GenConfig], object]] = {
    "pcp": gen_pcp,
    "mpcp": gen_mpcp,
    "sr": gen_srs,
    "srh": gen_srh,
    "srh'": gen_srh_prime,
    "cfp": gen_cfp,
    "cfi": gen_cfi,
    "tm": gen_tm,
}


def gen(tag: str, c: GenConfig):
    """Generate a random instance of the problem with the given tag"""
    return GENERATORS[tag](c)


def oracle_pcp(inst: PcpInstance, k: int) -> List[StackWitness]:
    """
    Enumerate all matches of at most ``k`` cards

    :return: matches in length-then-lexicographic order
    """

    return [
        witness
        for length in range(1, k + 1)
        for witness in itertools.product(range(len(inst.cards)), repeat=length)
        if check_pcp(inst, witness)
    ]


def oracle_sr(inst: SrInstance, max_steps: int, max_len: int) -> Optional[int]:
    """
    Compute the distance of the target by enumerating every rewrite path

    Paths are followed up to ``max_steps`` steps without remembering
    visited strings; each rule is applied at every position its left side
    occurs. Only strings of at most ``max_len`` symbols are considered.

    :return: the minimal number of steps or ``None`` if the target isn't
        reached within ``max_steps`` steps
    """

    level: List[Str] = [inst.start]
    for distance in range(max_steps + 1):
        if inst.target in level:
            return distance
        level = [
            current[:i] + rule.bot + current[i + len(rule.top):]
            for current in level
            for rule in inst.rules
            for i in range(len(current) - len(rule.top) + 1)
            if current[i:i + len(rule.top)] == rule.top
            and len(current) - len(rule.top) + len(rule.bot) <= max_len
        ]
    return None

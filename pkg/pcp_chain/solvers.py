"""
Bounded brute-force search for every problem of the reduction chain

The problems are undecidable, hence the solvers never claim that an
instance has no solution. They either return a witness, which always
passes the corresponding checker, or report that nothing was found
within the given :class:`SearchBound`. Exploration orders are fixed,
so repeated calls produce identical witnesses.
"""

import logging
import itertools
import dataclasses
from typing import Callable, Dict, Generic, Iterator, List, Optional, Sequence, Tuple, TypeVar, Union

from .core import Card, Str, is_palindrome, select, sigma
from .problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrDerivation, SrhInstance,
    SrhPrimeInstance, SrInstance, StackWitness, Step
)


W = TypeVar("W")


@dataclasses.dataclass(frozen=True)
class SearchBound:
    """Limits of a single search run"""

    max_steps: int = 12
    """Maximal number of rewriting steps"""
    max_len: int = 24
    """Maximal length of intermediate strings (rewriting) or of the overhang (PCP)"""
    max_cards: int = 8
    """Maximal number of cards in a stack or rules in a grammar derivation"""


@dataclasses.dataclass(frozen=True)
class Found(Generic[W]):
    witness: W
    explored: int = 0
    """Number of search states visited"""

    @property
    def found(self) -> bool:
        return True


@dataclasses.dataclass(frozen=True)
class NotFoundWithinBound:
    explored: int = 0
    """Number of search states visited"""

    @property
    def found(self) -> bool:
        return False


SearchOutcome = Union[Found, NotFoundWithinBound]


def rewrite_successors(rules: Sequence[Card], x: Str) -> List[Tuple[Str, int, int]]:
    """
    Enumerate all strings reachable from ``x`` with exactly one rewriting step

    Rules with an empty left side match at every cut, including ``len(x)``.

    :param rules: rewriting system
    :param x: current string
    :return: list of tuples ``(successor, rule index, cut)`` ordered
        by increasing cut, then by increasing rule index
    """

    x = tuple(x)
    successors = []
    for cut in range(len(x) + 1):
        for index, rule in enumerate(rules):
            end = cut + len(rule.top)
            if end <= len(x) and x[cut:end] == rule.top:
                successors.append((x[:cut] + rule.bot + x[end:], index, cut))
    return successors


def _breadth_first(
        rules: Sequence[Card],
        start: Str,
        goal: Callable[[Str], bool],
        bound: SearchBound,
        logger: logging.Logger
) -> SearchOutcome:
    start = tuple(start)
    if goal(start):
        return Found((), 1)

    parents: Dict[Str, Optional[Tuple[Str, Step]]] = {start: None}
    frontier = [start]
    explored = 0
    for depth in range(bound.max_steps):
        upcoming = []
        for current in frontier:
            explored += 1
            for successor, rule, cut in rewrite_successors(rules, current):
                if len(successor) > bound.max_len or successor in parents:
                    continue
                parents[successor] = (current, Step(rule, cut))
                if goal(successor):
                    logger.debug(f"Found a derivation of {depth + 1} steps after visiting {explored} strings")
                    return Found(_derivation(parents, successor), explored)
                upcoming.append(successor)
        if not upcoming:
            break
        frontier = upcoming
    logger.debug(f"Nothing found within {bound} after visiting {explored} strings")
    return NotFoundWithinBound(explored)


def _derivation(parents: Dict[Str, Optional[Tuple[Str, Step]]], end: Str) -> SrDerivation:
    steps = []
    link = parents[end]
    while link is not None:
        previous, step = link
        steps.append(step)
        link = parents[previous]
    return tuple(reversed(steps))


def solve_sr(inst: SrInstance, bound: SearchBound) -> SearchOutcome:
    """Breadth-first search for a derivation of :attr:`SrInstance.target`"""
    return _breadth_first(inst.rules, inst.start, lambda s: s == inst.target, bound, logging.getLogger("solvers.sr"))


def solve_srh(inst: SrhInstance, bound: SearchBound) -> SearchOutcome:
    """Breadth-first search for a string containing the target symbol"""
    return _breadth_first(inst.rules, inst.start, lambda s: inst.target in s, bound, logging.getLogger("solvers.srh"))


def solve_srh_prime(inst: SrhPrimeInstance, bound: SearchBound) -> SearchOutcome:
    """Breadth-first search for a string sharing a symbol with the targets"""
    targets = frozenset(inst.targets)
    return _breadth_first(
        inst.rules, inst.start, lambda s: not targets.isdisjoint(s), bound, logging.getLogger("solvers.srh'")
    )


# Overhang of a partial stack: which trace is ahead and by which suffix
_TOP = 1
_BOTTOM = -1
Overhang = Tuple[int, Str]
BALANCED: Overhang = (0, ())


def extend_overhang(overhang: Overhang, card: Card) -> Optional[Overhang]:
    """
    Put a card on a partial stack, tracking only the overhang

    :param overhang: current overhang as tuple of side and suffix
    :param card: card to put on the stack
    :return: the new overhang or ``None`` if the traces became inconsistent
    """

    side, rest = overhang
    top = rest + card.top if side == _TOP else card.top
    bot = rest + card.bot if side == _BOTTOM else card.bot
    if top[:len(bot)] == bot:
        return (_TOP, top[len(bot):]) if len(top) > len(bot) else BALANCED
    if bot[:len(top)] == top:
        return _BOTTOM, bot[len(top):]
    return None


def _deepen(cards: Sequence[Card], start: Overhang, bound: SearchBound, logger: logging.Logger) -> SearchOutcome:
    """
    Iterative deepening over partial stacks until the overhang vanishes

    Overhangs proven fruitless for some remaining depth are remembered across
    iterations; the remaining depth is the only other input of a subtree, so
    skipping those never hides a solution. The first solution is therefore of
    minimal length and lexicographically least among those.
    """

    fruitless: Dict[Overhang, int] = {}
    path: List[int] = []
    explored = 0

    def search(overhang: Overhang, remaining: int) -> bool:
        nonlocal explored
        explored += 1
        if remaining <= 0 or fruitless.get(overhang, 0) >= remaining:
            return False
        for index, card in enumerate(cards):
            upcoming = extend_overhang(overhang, card)
            if upcoming is None or len(upcoming[1]) > bound.max_len:
                continue
            path.append(index)
            if upcoming == BALANCED or search(upcoming, remaining - 1):
                return True
            path.pop()
        fruitless[overhang] = max(fruitless.get(overhang, 0), remaining)
        return False

    for limit in range(1, bound.max_cards + 1):
        if search(start, limit):
            logger.debug(f"Found a match of {len(path)} cards after visiting {explored} states")
            return Found(tuple(path), explored)
    logger.debug(f"Nothing found within {bound} after visiting {explored} states")
    return NotFoundWithinBound(explored)


def solve_pcp(inst: PcpInstance, bound: SearchBound) -> SearchOutcome:
    """Iterative deepening search for a nonempty match of at most ``bound.max_cards`` cards"""
    return _deepen(inst.cards, BALANCED, bound, logging.getLogger("solvers.pcp"))


def solve_mpcp(inst: MpcpInstance, bound: SearchBound) -> SearchOutcome:
    """
    Like :func:`solve_pcp`, but starting from the overhang of the forced first card

    The witness lists the stack after the first card (indices into
    ``first :: cards``) and may be empty.
    """

    logger = logging.getLogger("solvers.mpcp")
    start = extend_overhang(BALANCED, inst.first)
    if start is None:
        logger.debug("First card is inconsistent on its own")
        return NotFoundWithinBound(1)
    if start == BALANCED:
        return Found((), 1)
    if len(start[1]) > bound.max_len:
        return NotFoundWithinBound(1)
    return _deepen(inst.all_cards, start, bound, logger)


def _sequences(count: int, max_length: int) -> Iterator[StackWitness]:
    """All nonempty index sequences in length-then-lexicographic order"""
    for length in range(1, max_length + 1):
        yield from itertools.product(range(count), repeat=length)


def solve_cfp(inst: CfpInstance, bound: SearchBound) -> SearchOutcome:
    explored = 0
    for witness in _sequences(len(inst.rules), bound.max_cards):
        explored += 1
        if is_palindrome(sigma(inst.marker, select(inst.rules, witness))):
            return Found(witness, explored)
    logging.getLogger("solvers.cfp").debug(f"Nothing found within {bound} after {explored} derivations")
    return NotFoundWithinBound(explored)


def paired_cards(inst: CfiInstance) -> Optional[Tuple[Card, ...]]:
    """
    Recover the cards of an intersection instance built from a PCP instance

    The grammars are paired when rule ``i`` of both grammars reads
    ``x / x#y#`` and ``y / x#y#`` for the same ``x`` and ``y`` with the
    marker ``#`` absent from ``x`` and ``y``.

    :return: the cards ``x/y`` or ``None`` if the grammars aren't paired
    """

    if len(inst.rules1) != len(inst.rules2):
        return None
    cards = []
    for first, second in zip(inst.rules1, inst.rules2):
        if inst.marker in first.top or inst.marker in second.top:
            return None
        if first.bot != second.bot or first.bot != first.top + (inst.marker,) + second.top + (inst.marker,):
            return None
        cards.append(Card(first.top, second.top))
    return tuple(cards)


def solve_cfi(inst: CfiInstance, bound: SearchBound) -> SearchOutcome:
    """
    Search for a pair of derivations with equal projections

    Paired grammars (see :func:`paired_cards`) are solved as PCP instance,
    since their common strings correspond to matches of the underlying
    cards. All other instances are solved by joint enumeration.
    """

    logger = logging.getLogger("solvers.cfi")
    cards = paired_cards(inst)
    if cards is not None:
        logger.debug(f"Solving paired grammars with {len(cards)} rules as PCP instance")
        outcome = solve_pcp(PcpInstance(cards), bound)
        if outcome.found:
            return Found((outcome.witness, outcome.witness), outcome.explored)
        return outcome

    explored = 0
    projections: Dict[Str, StackWitness] = {}
    for witness in _sequences(len(inst.rules1), bound.max_cards):
        explored += 1
        projections.setdefault(sigma(inst.marker, select(inst.rules1, witness)), witness)
    for witness in _sequences(len(inst.rules2), bound.max_cards):
        explored += 1
        partner = projections.get(sigma(inst.marker, select(inst.rules2, witness)))
        if partner is not None:
            return Found((partner, witness), explored)
    logger.debug(f"Nothing found within {bound} after {explored} derivations")
    return NotFoundWithinBound(explored)

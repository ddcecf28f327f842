"""
Problem instances and exact certificate checkers

The checkers are the ground truth for every solver and witness translator.
They never raise; they return a :class:`CheckResult` whose truth value is
the verdict and whose :attr:`CheckResult.reason` names the first failure.
"""

import dataclasses
from typing import Optional, Sequence, Tuple

from .core import Card, Str, Symbol, is_palindrome, select, sigma, trace_bot, trace_top


StackWitness = Tuple[int, ...]
"""Index sequence into the card list of an instance"""


@dataclasses.dataclass(frozen=True)
class Step:
    """
    A single rewriting step ``u x v > u y v`` using rule ``x/y``

    :attr:`cut` is the length of the untouched prefix ``u``.
    """

    rule: int
    cut: int


SrDerivation = Tuple[Step, ...]
"""Sequence of rewriting steps, replayed from the start string"""


@dataclasses.dataclass(frozen=True)
class SrInstance:
    """String rewriting: is ``target`` reachable from ``start``?"""

    rules: Tuple[Card, ...]
    start: Str
    target: Str

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "target", tuple(self.target))


@dataclasses.dataclass(frozen=True)
class SrhInstance:
    """Generalised halting: is a string containing the symbol ``target`` reachable?"""

    rules: Tuple[Card, ...]
    start: Str
    target: Symbol

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "start", tuple(self.start))


@dataclasses.dataclass(frozen=True)
class SrhPrimeInstance:
    """Like :class:`SrhInstance`, but any symbol of ``targets`` will do"""

    rules: Tuple[Card, ...]
    start: Str
    targets: Str

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "start", tuple(self.start))
        object.__setattr__(self, "targets", tuple(self.targets))


@dataclasses.dataclass(frozen=True)
class PcpInstance:
    cards: Tuple[Card, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(self.cards))


@dataclasses.dataclass(frozen=True)
class MpcpInstance:
    """
    Modified PCP with a forced first card

    The first card does not need to be a member of :attr:`cards`. Witness
    index ``0`` denotes :attr:`first`, index ``i + 1`` denotes ``cards[i]``.
    """

    first: Card
    cards: Tuple[Card, ...]

    def __post_init__(self):
        object.__setattr__(self, "cards", tuple(self.cards))

    @property
    def all_cards(self) -> Tuple[Card, ...]:
        """The list ``first :: cards`` which witness indices refer to"""
        return (self.first,) + self.cards


@dataclasses.dataclass(frozen=True)
class CfpInstance:
    """Does the Post grammar ``(rules, marker)`` generate a palindrome?"""

    rules: Tuple[Card, ...]
    marker: Symbol

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))


@dataclasses.dataclass(frozen=True)
class CfiInstance:
    """Do the Post grammars ``(rules1, marker)`` and ``(rules2, marker)`` share a string?"""

    rules1: Tuple[Card, ...]
    rules2: Tuple[Card, ...]
    marker: Symbol

    def __post_init__(self):
        object.__setattr__(self, "rules1", tuple(self.rules1))
        object.__setattr__(self, "rules2", tuple(self.rules2))


@dataclasses.dataclass(frozen=True)
class CheckResult:
    """
    Verdict of a certificate checker

    Only the truth value carries meaning; the reason is a diagnostic.
    """

    accepted: bool
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.accepted


ACCEPTED = CheckResult(True)


def _reject(reason: str) -> CheckResult:
    return CheckResult(False, reason)


def _invalid_index(cards: Sequence[Card], witness: Sequence[int]) -> Optional[str]:
    for position, index in enumerate(witness):
        if not isinstance(index, int) or not 0 <= index < len(cards):
            return f"index {index!r} at position {position} out of range for {len(cards)} cards"
    return None


def replay(rules: Sequence[Card], start: Str, derivation: Sequence[Step]) -> Tuple[Optional[Str], Optional[str]]:
    """
    Replay a derivation from a start string

    :param rules: rewriting system
    :param start: initial string
    :param derivation: steps to apply in order
    :return: tuple of the final string (or ``None``) and a failure reason (or ``None``)
    """

    current = tuple(start)
    for n, step in enumerate(derivation):
        if not 0 <= step.rule < len(rules):
            return None, f"step {n}: rule {step.rule} out of range for {len(rules)} rules"
        left, right = rules[step.rule].top, rules[step.rule].bot
        if not 0 <= step.cut <= len(current) - len(left):
            return None, f"step {n}: cut {step.cut} invalid for a string of length {len(current)}"
        if current[step.cut:step.cut + len(left)] != left:
            return None, f"step {n}: rule {step.rule} does not match at cut {step.cut}"
        current = current[:step.cut] + right + current[step.cut + len(left):]
    return current, None


def check_pcp(inst: PcpInstance, witness: StackWitness) -> CheckResult:
    if len(witness) == 0:
        return _reject("empty stack")
    reason = _invalid_index(inst.cards, witness)
    if reason:
        return _reject(reason)
    stack = select(inst.cards, witness)
    if trace_top(stack) != trace_bot(stack):
        return _reject("upper and lower traces differ")
    return ACCEPTED


def check_mpcp(inst: MpcpInstance, witness: StackWitness) -> CheckResult:
    """
    Check ``x0 A1 = y0 A2`` where ``A`` is selected from ``first :: cards``

    The empty witness is allowed; it is accepted exactly when both sides
    of the first card are equal.
    """

    cards = inst.all_cards
    reason = _invalid_index(cards, witness)
    if reason:
        return _reject(reason)
    stack = select(cards, witness)
    if inst.first.top + trace_top(stack) != inst.first.bot + trace_bot(stack):
        return _reject("upper and lower traces differ after the first card")
    return ACCEPTED


def check_sr(inst: SrInstance, derivation: SrDerivation) -> CheckResult:
    final, reason = replay(inst.rules, inst.start, derivation)
    if final is None:
        return _reject(reason)
    if final != inst.target:
        return _reject(f"derivation ends at a string of length {len(final)} different from the target")
    return ACCEPTED


def check_srh(inst: SrhInstance, derivation: SrDerivation) -> CheckResult:
    final, reason = replay(inst.rules, inst.start, derivation)
    if final is None:
        return _reject(reason)
    if inst.target not in final:
        return _reject(f"target symbol {inst.target} not in the final string")
    return ACCEPTED


def check_srh_prime(inst: SrhPrimeInstance, derivation: SrDerivation) -> CheckResult:
    final, reason = replay(inst.rules, inst.start, derivation)
    if final is None:
        return _reject(reason)
    if not set(final) & set(inst.targets):
        return _reject("final string shares no symbol with the targets")
    return ACCEPTED


def check_cfp(inst: CfpInstance, witness: StackWitness) -> CheckResult:
    if len(witness) == 0:
        return _reject("empty derivation")
    reason = _invalid_index(inst.rules, witness)
    if reason:
        return _reject(reason)
    if not is_palindrome(sigma(inst.marker, select(inst.rules, witness))):
        return _reject("projection is not a palindrome")
    return ACCEPTED


def check_cfi(inst: CfiInstance, witness1: StackWitness, witness2: StackWitness) -> CheckResult:
    if len(witness1) == 0 or len(witness2) == 0:
        return _reject("empty derivation")
    reason = _invalid_index(inst.rules1, witness1)
    if reason:
        return _reject(f"first grammar: {reason}")
    reason = _invalid_index(inst.rules2, witness2)
    if reason:
        return _reject(f"second grammar: {reason}")
    if sigma(inst.marker, select(inst.rules1, witness1)) != sigma(inst.marker, select(inst.rules2, witness2)):
        return _reject("projections differ")
    return ACCEPTED

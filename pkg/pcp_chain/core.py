"""
Symbols, strings, cards and stacks with the string operations every reduction uses

A symbol is a natural number and a string is a tuple of symbols. All values
in this module are immutable and all functions are pure, so they may be
shared freely between threads.
"""

import dataclasses
from typing import Iterable, Tuple


Symbol = int
"""A symbol is an opaque natural number"""

Str = Tuple[Symbol, ...]
"""A string is a finite sequence of symbols, ``()`` being the empty string"""

Alphabet = Tuple[Symbol, ...]
"""Duplicate-free sequence of symbols"""

EMPTY: Str = ()


@dataclasses.dataclass(frozen=True)
class Card:
    """
    Pair of strings ``top / bot``, called card (PCP) or rule (string rewriting)

    For rules, :attr:`top` is the left side and :attr:`bot` the right side.
    """

    top: Str = EMPTY
    """Upper string of a card or left side of a rule"""
    bot: Str = EMPTY
    """Lower string of a card or right side of a rule"""

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bot", tuple(self.bot))

    @property
    def is_empty(self) -> bool:
        """Whether both sides are the empty string"""
        return not self.top and not self.bot

    def symbols(self) -> Str:
        return self.top + self.bot


Stack = Tuple[Card, ...]
"""Ordered sequence of cards, duplicates allowed"""


def trace_top(stack: Iterable[Card]) -> Str:
    """Concatenation of all upper strings of a stack"""
    return tuple(s for card in stack for s in card.top)


def trace_bot(stack: Iterable[Card]) -> Str:
    """Concatenation of all lower strings of a stack"""
    return tuple(s for card in stack for s in card.bot)


def reverse(x: Str) -> Str:
    return tuple(reversed(x))


def is_palindrome(x: Str) -> bool:
    return tuple(x) == reverse(x)


def sigma(a: Symbol, stack: Iterable[Card]) -> Str:
    """
    Projection of a list of rules with the symbol ``a``

    This is the string a Post grammar derives with the rules of the stack,
    outermost rule first: ``x1 x2 ... xn a yn ... y2 y1``.

    :param a: symbol closing the derivation
    :param stack: rules in derivation order
    :return: projected string
    """

    stack = tuple(stack)
    return trace_top(stack) + (a,) + tuple(s for card in reversed(stack) for s in card.bot)


def fresh(symbols: Iterable[Symbol]) -> Symbol:
    """
    Pick a symbol strictly greater than every given symbol

    ``fresh [] = 0`` and ``fresh (a :: S) = 1 + a + fresh S``, which unfolds
    to the number of symbols plus their sum. The result is therefore never a
    member of ``symbols``.

    :param symbols: alphabet or any sequence of symbols
    :return: a symbol not occurring in ``symbols``
    """

    symbols = tuple(symbols)
    return len(symbols) + sum(symbols)


def hash_pre(h: Symbol, x: Str) -> Str:
    """Insert ``h`` before every symbol of ``x``"""
    return tuple(s for a in x for s in (h, a))


def hash_post(h: Symbol, x: Str) -> Str:
    """Insert ``h`` after every symbol of ``x``"""
    return tuple(s for a in x for s in (a, h))


def alphabet_of(parts: Iterable[Str]) -> Alphabet:
    """
    Collect all symbols occurring in a sequence of strings

    :param parts: strings to scan from left to right
    :return: duplicate-free symbols in order of first occurrence
    """

    return tuple(dict.fromkeys(s for part in parts for s in part))


def alphabet_of_cards(cards: Iterable[Card], *extra: Str) -> Alphabet:
    """Alphabet covering the sides of all cards (top before bottom) followed by some more strings"""
    return alphabet_of([side for card in cards for side in (card.top, card.bot)] + list(extra))


def covers(alphabet: Iterable[Symbol], x: Str) -> bool:
    """Whether every symbol of ``x`` is a member of the alphabet"""
    return set(x) <= set(alphabet)


def select(cards: Tuple[Card, ...], indices: Iterable[int]) -> Stack:
    """Build the stack selected by an index sequence (indices must be in range)"""
    return tuple(cards[i] for i in indices)

"""
Single-tape Turing machines, their configuration strings and rewriting rules

The tape only holds the part the machine has written to so far and is
in one of four shapes: empty, head left of the written part, head right
of it, or head on one of its symbols. A configuration is encoded as a
string with the state symbol left of the read symbol, enclosed in two
markers allocated above all tape and state symbols::

    Empty          q << >>
    LeftOf(a, x)   q << a x >>
    RightOf(a, x)  << x a q >>
    Mid(x, a, y)   << x q a y >>

:func:`tm_rules` compiles a machine into a string rewriting system whose
single steps are exactly the machine's steps on encoded configurations.
"""

import enum
import logging
import functools
import dataclasses
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from .core import EMPTY, Card, Str, Symbol, fresh


class MalformedConfig(Exception):
    """
    Exception for configurations which don't belong to the machine
    """


class NotAConfig(Exception):
    """
    Exception for strings which don't encode any configuration
    """


class Move(enum.Enum):
    L = "L"
    N = "N"
    R = "R"


@dataclasses.dataclass(frozen=True)
class Transition:
    """Reaction of a machine in some state on some read value"""

    state: Symbol
    """Next state"""
    write: Optional[Symbol]
    """Symbol to write or ``None`` to leave the cell as it is"""
    move: Move


@dataclasses.dataclass(frozen=True)
class Empty:
    pass


@dataclasses.dataclass(frozen=True)
class LeftOf:
    """Head left of the written part, ``head_next`` being its first symbol"""

    head_next: Symbol
    rest: Str = EMPTY


@dataclasses.dataclass(frozen=True)
class RightOf:
    """Head right of the written part ``rest head_prev``"""

    head_prev: Symbol
    rest: Str = EMPTY


@dataclasses.dataclass(frozen=True)
class Mid:
    left: Str
    head: Symbol
    right: Str


Tape = Union[Empty, LeftOf, RightOf, Mid]


@dataclasses.dataclass(frozen=True)
class Config:
    state: Symbol
    tape: Tape


@dataclasses.dataclass(frozen=True)
class TmSpec:
    """
    Deterministic single-tape Turing machine

    :attr:`delta` maps pairs of a non-halting state and a read value
    (``None`` for blank) to a :class:`Transition`; it must be total.

    :raise ValueError: when the machine description is inconsistent
    """

    tape_alphabet: Tuple[Symbol, ...]
    states: Tuple[Symbol, ...]
    start: Symbol
    halting: Tuple[Symbol, ...]
    delta: Mapping[Tuple[Symbol, Optional[Symbol]], Transition] = dataclasses.field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "tape_alphabet", tuple(self.tape_alphabet))
        object.__setattr__(self, "states", tuple(self.states))
        if not set(self.halting) <= set(self.states):
            raise ValueError("Halting states must be states")
        object.__setattr__(self, "halting", tuple(q for q in self.states if q in set(self.halting)))
        object.__setattr__(self, "delta", dict(self.delta))
        self._validate()

    def _validate(self):
        if len(set(self.tape_alphabet)) != len(self.tape_alphabet) or len(set(self.states)) != len(self.states):
            raise ValueError("Tape alphabet and states must be duplicate-free")
        if set(self.tape_alphabet) & set(self.states):
            raise ValueError("State symbols and tape symbols must be disjoint")
        if self.start not in self.states:
            raise ValueError(f"Start state {self.start} is no state")
        for (state, read), transition in self.delta.items():
            if state not in self.states or state in self.halting:
                raise ValueError(f"Transition for {state} which is no non-halting state")
            if read is not None and read not in self.tape_alphabet:
                raise ValueError(f"Transition reads {read} which is no tape symbol")
            if transition.state not in self.states:
                raise ValueError(f"Transition targets {transition.state} which is no state")
            if transition.write is not None and transition.write not in self.tape_alphabet:
                raise ValueError(f"Transition writes {transition.write} which is no tape symbol")
        for state in self.states:
            if state in self.halting:
                continue
            for read in self.reads:
                if (state, read) not in self.delta:
                    raise ValueError(f"Transition function undefined for state {state} reading {read}")

    @property
    def reads(self) -> Tuple[Optional[Symbol], ...]:
        """Possible read values, blank (``None``) first"""
        return (None,) + self.tape_alphabet

    @functools.cached_property
    def left_marker(self) -> Symbol:
        return fresh(self.tape_alphabet + self.states)

    @functools.cached_property
    def right_marker(self) -> Symbol:
        return fresh(self.tape_alphabet + self.states + (self.left_marker,))


@dataclasses.dataclass(frozen=True)
class TmInstance:
    """Halting problem instance: does :attr:`machine` halt on :attr:`input`?"""

    machine: TmSpec
    input: Str

    def __post_init__(self):
        object.__setattr__(self, "input", tuple(self.input))


@dataclasses.dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int
    final: Config


def initial_config(machine: TmSpec, input: Str) -> Config:
    """Start configuration, head left of the input (encoded as ``q0 << x >>``)"""
    if not input:
        return Config(machine.start, Empty())
    return Config(machine.start, LeftOf(input[0], tuple(input[1:])))


def read(tape: Tape) -> Optional[Symbol]:
    return tape.head if isinstance(tape, Mid) else None


def write(tape: Tape, symbol: Symbol) -> Mid:
    if isinstance(tape, Empty):
        return Mid(EMPTY, symbol, EMPTY)
    if isinstance(tape, LeftOf):
        return Mid(EMPTY, symbol, (tape.head_next,) + tape.rest)
    if isinstance(tape, RightOf):
        return Mid(tape.rest + (tape.head_prev,), symbol, EMPTY)
    return Mid(tape.left, symbol, tape.right)


def move(tape: Tape, direction: Move) -> Tape:
    if direction is Move.N or isinstance(tape, Empty):
        return tape
    if direction is Move.L:
        if isinstance(tape, RightOf):
            return Mid(tape.rest, tape.head_prev, EMPTY)
        if isinstance(tape, Mid):
            if not tape.left:
                return LeftOf(tape.head, tape.right)
            return Mid(tape.left[:-1], tape.left[-1], (tape.head,) + tape.right)
        return tape
    if isinstance(tape, LeftOf):
        return Mid(EMPTY, tape.head_next, tape.rest)
    if isinstance(tape, Mid):
        if not tape.right:
            return RightOf(tape.head, tape.left)
        return Mid(tape.left + (tape.head,), tape.right[0], tape.right[1:])
    return tape


def tm_step(machine: TmSpec, config: Config) -> Optional[Config]:
    """
    Execute a single step of the machine

    :param machine: machine description
    :param config: current configuration
    :return: the next configuration or ``None`` if the state is halting
    :raise MalformedConfig: if the state is no state of the machine
    """

    if config.state not in machine.states:
        raise MalformedConfig(f"Unknown state {config.state}")
    if config.state in machine.halting:
        return None
    transition = machine.delta[(config.state, read(config.tape))]
    tape = config.tape if transition.write is None else write(config.tape, transition.write)
    return Config(transition.state, move(tape, transition.move))


def tm_trace(machine: TmSpec, input: Str, max_steps: int) -> Iterator[Config]:
    """Yield the initial configuration and at most ``max_steps`` successors"""
    config = initial_config(machine, input)
    yield config
    for _ in range(max_steps):
        config = tm_step(machine, config)
        if config is None:
            return
        yield config


def tm_run(machine: TmSpec, input: Str, max_steps: int) -> RunResult:
    """
    Run the machine on an input for a limited number of steps

    :return: whether a halting state was reached, the number of steps
        executed and the final configuration
    """

    configs = list(tm_trace(machine, input, max_steps))
    final = configs[-1]
    halted = final.state in machine.halting
    logging.getLogger("turing").debug(f"Run of {len(configs) - 1} steps ended in state {final.state} ({halted=})")
    return RunResult(halted, len(configs) - 1, final)


def check_tm(inst: TmInstance, steps: int) -> bool:
    """Whether the machine reaches a halting state after exactly ``steps`` steps"""
    if steps < 0 or not set(inst.input) <= set(inst.machine.tape_alphabet):
        return False
    result = tm_run(inst.machine, inst.input, steps)
    return result.halted and result.steps == steps


def encode_config(machine: TmSpec, config: Config) -> Str:
    lm, rm, q, tape = machine.left_marker, machine.right_marker, config.state, config.tape
    if isinstance(tape, Empty):
        return q, lm, rm
    if isinstance(tape, LeftOf):
        return (q, lm, tape.head_next) + tape.rest + (rm,)
    if isinstance(tape, RightOf):
        return (lm,) + tape.rest + (tape.head_prev, q, rm)
    return (lm,) + tape.left + (q, tape.head) + tape.right + (rm,)


def decode_config(machine: TmSpec, s: Str) -> Config:
    """
    Inverse of :func:`encode_config`

    :raise NotAConfig: when the string has none of the four shapes
    """

    s = tuple(s)
    lm, rm = machine.left_marker, machine.right_marker
    tape_symbols = set(machine.tape_alphabet)
    positions = [i for i, a in enumerate(s) if a in machine.states]
    if len(positions) != 1:
        raise NotAConfig(f"Expected exactly one state symbol, found {len(positions)}")
    i = positions[0]
    q = s[i]
    if i == 0:
        if len(s) < 3 or s[1] != lm or s[-1] != rm or not set(s[2:-1]) <= tape_symbols:
            raise NotAConfig("Malformed configuration with the head left of the tape")
        body = s[2:-1]
        return Config(q, LeftOf(body[0], body[1:]) if body else Empty())
    if s[0] != lm or s[-1] != rm or len(s) < 4:
        raise NotAConfig("Missing tape markers")
    left, right = s[1:i], s[i + 1:-1]
    if not set(left) <= tape_symbols or not set(right) <= tape_symbols:
        raise NotAConfig("Unexpected symbols on the tape")
    if right:
        return Config(q, Mid(left, right[0], right[1:]))
    if not left:
        raise NotAConfig("Head outside of an empty tape")
    return Config(q, RightOf(left[-1], left[:-1]))


def tm_rules(machine: TmSpec, literal: bool = False) -> Tuple[Card, ...]:
    """
    Compile the transition function into a string rewriting system

    For every transition of a non-halting state ``q1`` (in state order,
    blank read first, then tape alphabet order) the rules of the matching
    row below are emitted, left column first. ``a`` denotes the read symbol,
    ``b`` the written one and ``c`` ranges over the tape alphabet; rules
    mentioning ``c`` (or ``a`` when reading blank) are instantiated for
    every tape symbol in alphabet order::

        read  write move  rules
        _     _     L     q1<< / q2<<      c q1>> / q2 c>>
        _     _     N     q1<< / q2<<      q1>> / q2>>
        _     _     R     q1<<>> / q2<<>>  q1>> / q2>>        q1<< c / << q2 c
        _     b     L     q1<< / q2<< b    c q1>> / q2 c b>>
        _     b     N     q1<< / << q2 b   q1>> / q2 b>>
        _     b     R     q1<< / << b q2   q1>> / b q2>>
        a     _     L     << q1 a / q2<< a c q1 a / q2 c a
        a     _     N     q1 a / q2 a
        a     _     R     q1 a / a q2
        a     b     L     << q1 a / q2<< b c q1 a / q2 c b
        a     b     N     q1 a / q2 b
        a     b     R     q1 a / b q2

    :param machine: machine description
    :param literal: keep the printed form ``q1<< c / << q1 c`` of the third
        rule for blank, no write and moving right; it leaves the machine in
        ``q1`` and thus only simulates the machine when ``q1 = q2``
    :return: rewriting rules
    """

    lm, rm = machine.left_marker, machine.right_marker
    rules: List[Card] = []
    for q1 in machine.states:
        if q1 in machine.halting:
            continue
        for a in machine.reads:
            t = machine.delta[(q1, a)]
            q2, b = t.state, t.write
            if a is None:
                rules.extend(_blank_rules(machine.tape_alphabet, q1, q2, b, t.move, lm, rm, literal))
                continue
            if t.move is Move.L:
                w = a if b is None else b
                rules.append(Card((lm, q1, a), (q2, lm, w)))
                rules.extend(Card((c, q1, a), (q2, c, w)) for c in machine.tape_alphabet)
            elif t.move is Move.N:
                rules.append(Card((q1, a), (q2, a if b is None else b)))
            else:
                rules.append(Card((q1, a), (a if b is None else b, q2)))
    return tuple(rules)


def _blank_rules(
        alphabet: Tuple[Symbol, ...],
        q1: Symbol,
        q2: Symbol,
        b: Optional[Symbol],
        direction: Move,
        lm: Symbol,
        rm: Symbol,
        literal: bool
) -> List[Card]:
    if b is None:
        if direction is Move.L:
            return [Card((q1, lm), (q2, lm))] + [Card((c, q1, rm), (q2, c, rm)) for c in alphabet]
        if direction is Move.N:
            return [Card((q1, lm), (q2, lm)), Card((q1, rm), (q2, rm))]
        moved = q1 if literal else q2
        return [Card((q1, lm, rm), (q2, lm, rm)), Card((q1, rm), (q2, rm))] + \
            [Card((q1, lm, c), (lm, moved, c)) for c in alphabet]
    if direction is Move.L:
        return [Card((q1, lm), (q2, lm, b))] + [Card((c, q1, rm), (q2, c, b, rm)) for c in alphabet]
    if direction is Move.N:
        return [Card((q1, lm), (lm, q2, b)), Card((q1, rm), (q2, b, rm))]
    return [Card((q1, lm), (lm, b, q2)), Card((q1, rm), (b, q2, rm))]


def machine_symbols(machine: TmSpec) -> Dict[str, Symbol]:
    """Named marker symbols of a machine, as recorded in reduction traces"""
    return {"<<": machine.left_marker, ">>": machine.right_marker}

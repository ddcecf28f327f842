"""
Helper module to parse and print problem instance files

An instance file starts with a ``%problem <tag>`` line, followed by
directives (``%name values``) and card lines ``x / y``. Strings are lists
of whitespace separated symbol names, ``-`` denoting the empty string, and
``;`` starts a comment. Take a look at :ref:`file_formats` for all layouts.
"""

import logging
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..core import Card, Str, Symbol
from ..problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance
)
from ..turing import Move, TmInstance, TmSpec, Transition


RESERVED = frozenset({"/", "-", "->", "_"})
"""Tokens which are never symbol names"""

FRESH_PREFIX = "_f"
BLANK = "_"
EMPTY_STRING = "-"

# Implicit section for lines without directive and the directives of every problem
LAYOUTS: Dict[str, Tuple[Optional[str], Tuple[str, ...]]] = {
    "pcp": ("cards", ()),
    "mpcp": ("cards", ("first",)),
    "sr": (None, ("rules", "from", "to")),
    "srh": (None, ("rules", "from", "target")),
    "srh'": (None, ("rules", "from", "targets")),
    "cfp": (None, ("rules", "marker")),
    "cfi": (None, ("grammar1", "grammar2", "marker")),
    "tm": ("transitions", ("states", "tape", "start", "halt", "input")),
}
SECTIONS = frozenset({"rules", "grammar1", "grammar2"})
SYMBOL_VALUES = frozenset({"target", "marker", "start"})
OPTIONAL = frozenset({"input"})


class InvalidFormat(Exception):
    """
    Exception for malformed instance, witness or map files

    :param message: description of the problem
    :param line: number of the offending line (starting at 1), if any
    """

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


class InternTable:
    """
    Bidirectional mapping between symbol names and symbol codes

    New names get the smallest code above all codes allocated so far,
    so names are numbered in order of their first appearance.
    """

    def __init__(self, names: Iterable[str] = ()):
        self._codes: Dict[str, Symbol] = {}
        self._names: Dict[Symbol, str] = {}
        for name in names:
            self.intern(name)

    @classmethod
    def from_mapping(cls, mapping: Dict[str, Symbol]) -> "InternTable":
        table = cls()
        for name, code in mapping.items():
            table.add(name, code)
        return table

    def __len__(self) -> int:
        return len(self._codes)

    def __contains__(self, name: str) -> bool:
        return name in self._codes

    def add(self, name: str, code: Symbol, line: Optional[int] = None):
        """
        Add a name with a given code

        :raise InvalidFormat: for reserved names or if name or code are in use
        """

        if name in RESERVED or name.startswith("%") or ";" in name or "=" in name or not name.strip():
            raise InvalidFormat(f"{name!r} is no valid symbol name", line)
        if name in self._codes or code in self._names:
            raise InvalidFormat(f"symbol {name!r} or code {code} defined twice", line)
        self._codes[name] = code
        self._names[code] = name

    def intern(self, name: str, line: Optional[int] = None) -> Symbol:
        """Look up the code of a name, allocating a new code for unknown names"""
        if name not in self._codes:
            self.add(name, max(self._names, default=-1) + 1, line)
        return self._codes[name]

    def code(self, name: str) -> Symbol:
        return self._codes[name]

    def name(self, code: Symbol) -> str:
        return self._names[code]

    def items(self) -> List[Tuple[str, Symbol]]:
        """Pairs of name and code, ordered by code"""
        return sorted(self._codes.items(), key=lambda item: item[1])

    def extended(self, codes: Iterable[Symbol]) -> "InternTable":
        """
        Copy the table and name all unknown codes ``_f0``, ``_f1``, ... in ascending order

        :param codes: codes which need a name
        :return: new table covering all given codes
        """

        table = InternTable.from_mapping(dict(self._codes))
        k = 0
        for code in sorted(set(codes) - set(self._names)):
            while f"{FRESH_PREFIX}{k}" in table:
                k += 1
            table.add(f"{FRESH_PREFIX}{k}", code)
        return table


def tokenize(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield numbered lines split into tokens, skipping comments and blank lines"""
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split(";", 1)[0].split()
        if tokens:
            yield number, tokens


def _string(table: InternTable, tokens: List[str], line: int) -> Str:
    if tokens == [EMPTY_STRING]:
        return ()
    if not tokens:
        raise InvalidFormat(f"missing string, use {EMPTY_STRING!r} for the empty string", line)
    return tuple(table.intern(token, line) for token in tokens)


def _card(table: InternTable, tokens: List[str], line: int) -> Card:
    if tokens.count("/") != 1:
        raise InvalidFormat("expected a card 'x / y'", line)
    split = tokens.index("/")
    return Card(_string(table, tokens[:split], line), _string(table, tokens[split + 1:], line))


def _transition(table: InternTable, tokens: List[str], line: int) -> Tuple[Tuple[Symbol, Optional[Symbol]], Transition]:
    if len(tokens) != 6 or tokens[2] != "->":
        raise InvalidFormat("expected a transition 'q r -> q2 w M'", line)
    try:
        move = Move(tokens[5])
    except ValueError:
        raise InvalidFormat(f"invalid move {tokens[5]!r}, expected one of L, N or R", line) from None
    state, read, upcoming, write = tokens[0], tokens[1], tokens[3], tokens[4]
    read_symbol = None if read == BLANK else table.intern(read, line)
    write_symbol = None if write == BLANK else table.intern(write, line)
    return (table.intern(state, line), read_symbol), Transition(table.intern(upcoming, line), write_symbol, move)


def parse_instance(text: str, table: Optional[InternTable] = None):
    """
    Parse the text of an instance file

    :param text: content of the instance file
    :param table: intern table to extend (a new one is created if omitted)
    :return: tuple of the parsed instance and the intern table
    :raise InvalidFormat: for malformed lines, unknown or duplicate directives
        and missing directives
    """

    table = InternTable() if table is None else table
    lines = tokenize(text)
    header = next(lines, None)
    if header is None:
        raise InvalidFormat("empty instance file")
    number, tokens = header
    if tokens[0] != "%problem" or len(tokens) != 2 or tokens[1] not in LAYOUTS:
        raise InvalidFormat(f"expected '%problem <tag>' with a tag out of {', '.join(LAYOUTS)}", number)
    tag = tokens[1]
    implicit, directives = LAYOUTS[tag]

    values: Dict[str, object] = {}
    sections: Dict[str, list] = {implicit: []} if implicit else {}
    current = implicit
    for number, tokens in lines:
        if tokens[0].startswith("%"):
            key = tokens[0][1:]
            if key not in directives:
                raise InvalidFormat(f"unexpected directive {tokens[0]!r} for problem {tag}", number)
            if key in values or key in sections:
                raise InvalidFormat(f"duplicate directive {tokens[0]!r}", number)
            if key in SECTIONS:
                if len(tokens) > 1:
                    raise InvalidFormat(f"directive {tokens[0]!r} takes no values", number)
                sections[key] = []
                current = key
                continue
            if key == "first":
                values[key] = _card(table, tokens[1:], number)
            elif key in SYMBOL_VALUES:
                if len(tokens) != 2:
                    raise InvalidFormat(f"directive {tokens[0]!r} expects a single symbol", number)
                values[key] = table.intern(tokens[1], number)
            else:
                values[key] = _string(table, tokens[1:], number)
            current = implicit
        elif current is None:
            raise InvalidFormat("line outside of any section", number)
        elif current == "transitions":
            sections[current].append((number, _transition(table, tokens, number)))
        else:
            sections[current].append(_card(table, tokens, number))

    missing = [f"%{d}" for d in directives if d not in values and d not in sections and d not in OPTIONAL]
    if missing:
        raise InvalidFormat(f"missing directives {', '.join(missing)}")

    instance = _build(tag, values, sections)
    logging.getLogger("formats").debug(f"Parsed {tag} instance over {len(table)} symbols")
    return instance, table


def _build(tag: str, values: Dict[str, object], sections: Dict[str, list]):
    if tag == "pcp":
        return PcpInstance(sections["cards"])
    if tag == "mpcp":
        return MpcpInstance(values["first"], sections["cards"])
    if tag == "sr":
        return SrInstance(sections["rules"], values["from"], values["to"])
    if tag == "srh":
        return SrhInstance(sections["rules"], values["from"], values["target"])
    if tag == "srh'":
        return SrhPrimeInstance(sections["rules"], values["from"], values["targets"])
    if tag == "cfp":
        return CfpInstance(sections["rules"], values["marker"])
    if tag == "cfi":
        return CfiInstance(sections["grammar1"], sections["grammar2"], values["marker"])

    delta = {}
    for number, (key, transition) in sections["transitions"]:
        if key in delta:
            raise InvalidFormat("duplicate transition", number)
        delta[key] = transition
    try:
        machine = TmSpec(values["tape"], values["states"], values["start"], values["halt"], delta)
    except ValueError as exc:
        raise InvalidFormat(f"invalid machine: {exc}") from exc
    return TmInstance(machine, values.get("input", ()))


def instance_symbols(instance) -> Tuple[Symbol, ...]:
    """All symbol codes an instance mentions"""
    if isinstance(instance, TmInstance):
        m = instance.machine
        return m.states + m.tape_alphabet + instance.input
    cards: Tuple[Card, ...] = ()
    extra: Tuple[Symbol, ...] = ()
    if isinstance(instance, PcpInstance):
        cards = instance.cards
    elif isinstance(instance, MpcpInstance):
        cards = instance.all_cards
    elif isinstance(instance, SrInstance):
        cards, extra = instance.rules, instance.start + instance.target
    elif isinstance(instance, SrhInstance):
        cards, extra = instance.rules, instance.start + (instance.target,)
    elif isinstance(instance, SrhPrimeInstance):
        cards, extra = instance.rules, instance.start + instance.targets
    elif isinstance(instance, CfpInstance):
        cards, extra = instance.rules, (instance.marker,)
    elif isinstance(instance, CfiInstance):
        cards, extra = instance.rules1 + instance.rules2, (instance.marker,)
    else:
        raise TypeError(f"No problem instance: {type(instance).__name__}")
    return tuple(s for card in cards for s in card.symbols()) + extra


def print_instance(instance, table: Optional[InternTable] = None) -> str:
    """
    Print an instance in canonical layout

    Codes unknown to the table are named ``_f0``, ``_f1``, ... in ascending order.

    :param instance: problem instance
    :param table: names of the symbols (all codes get generated names if omitted)
    :return: text of the instance file, ending with a newline
    """

    table = (table or InternTable()).extended(instance_symbols(instance))

    def s(x: Str) -> str:
        return " ".join(table.name(a) for a in x) if x else EMPTY_STRING

    def c(card: Card) -> str:
        return f"{s(card.top)} / {s(card.bot)}"

    def cards(rules: Iterable[Card]) -> List[str]:
        return [c(card) for card in rules]

    if isinstance(instance, PcpInstance):
        lines = ["%problem pcp"] + cards(instance.cards)
    elif isinstance(instance, MpcpInstance):
        lines = ["%problem mpcp", f"%first {c(instance.first)}"] + cards(instance.cards)
    elif isinstance(instance, SrInstance):
        lines = ["%problem sr", "%rules"] + cards(instance.rules) + \
            [f"%from {s(instance.start)}", f"%to {s(instance.target)}"]
    elif isinstance(instance, SrhInstance):
        lines = ["%problem srh", "%rules"] + cards(instance.rules) + \
            [f"%from {s(instance.start)}", f"%target {table.name(instance.target)}"]
    elif isinstance(instance, SrhPrimeInstance):
        lines = ["%problem srh'", "%rules"] + cards(instance.rules) + \
            [f"%from {s(instance.start)}", f"%targets {s(instance.targets)}"]
    elif isinstance(instance, CfpInstance):
        lines = ["%problem cfp", "%rules"] + cards(instance.rules) + [f"%marker {table.name(instance.marker)}"]
    elif isinstance(instance, CfiInstance):
        lines = ["%problem cfi", "%grammar1"] + cards(instance.rules1) + ["%grammar2"] + \
            cards(instance.rules2) + [f"%marker {table.name(instance.marker)}"]
    elif isinstance(instance, TmInstance):
        lines = _print_machine(instance, table, s)
    else:
        raise TypeError(f"No problem instance: {type(instance).__name__}")
    return "\n".join(lines) + "\n"


def _print_machine(instance: TmInstance, table: InternTable, s) -> List[str]:
    m = instance.machine
    lines = [
        "%problem tm",
        f"%states {s(m.states)}",
        f"%tape {s(m.tape_alphabet)}",
        f"%start {table.name(m.start)}",
        f"%halt {s(m.halting)}",
    ]
    for state in m.states:
        if state in m.halting:
            continue
        for read in m.reads:
            t = m.delta[(state, read)]
            r = BLANK if read is None else table.name(read)
            w = BLANK if t.write is None else table.name(t.write)
            lines.append(f"{table.name(state)} {r} -> {table.name(t.state)} {w} {t.move.value}")
    lines.append(f"%input {s(instance.input)}")
    return lines

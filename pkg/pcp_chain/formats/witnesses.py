"""
Helper module to parse and print witness files and reduction map files

Witnesses are index based, so they don't depend on symbol names::

    %witness pcp            %witness sr         %witness tm
    indices: 0 0 1 1 2      steps:              halt-steps: 1
                            0 1
                            1 0

A reduction map stores everything to re-derive a chain of reductions: the
problem tags, the fresh symbols allocated by every stage, the intern table
of the source instance and the canonical source instance itself.
"""

import logging
import dataclasses
from typing import Any, Dict, List, Optional, Tuple

from .. import reductions
from ..core import Symbol
from ..problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance, Step
)
from .instances import InternTable, InvalidFormat, parse_instance, print_instance, tokenize


INDICES = "indices:"
STEPS = "steps:"
HALT_STEPS = "halt-steps:"

WITNESS_KINDS = {
    "pcp": INDICES,
    "mpcp": INDICES,
    "cfp": INDICES,
    "cfi": INDICES,
    "sr": STEPS,
    "srh": STEPS,
    "srh'": STEPS,
    "tm": HALT_STEPS,
}


def _natural(token: str, line: int) -> int:
    if not token.isdigit():
        raise InvalidFormat(f"expected a natural number, found {token!r}", line)
    return int(token)


def parse_witness(text: str, instance: Any = None) -> Tuple[str, Any]:
    """
    Parse the text of a witness file

    :param text: content of the witness file
    :param instance: optional instance to validate indices and rule numbers against
    :return: tuple of the problem tag and the witness (index tuple, pair of index
        tuples, tuple of :class:`Step` or step count)
    :raise InvalidFormat: for malformed or out of range witnesses
    """

    lines = list(tokenize(text))
    if not lines or lines[0][1][0] != "%witness" or len(lines[0][1]) != 2 or lines[0][1][1] not in WITNESS_KINDS:
        raise InvalidFormat(f"expected '%witness <tag>' with a tag out of {', '.join(WITNESS_KINDS)}", 1)
    tag = lines[0][1][1]
    kind = WITNESS_KINDS[tag]
    body = lines[1:]

    if kind == HALT_STEPS:
        if len(body) != 1 or body[0][1][0] != HALT_STEPS or len(body[0][1]) != 2:
            raise InvalidFormat(f"expected a single line '{HALT_STEPS} <n>'", body[0][0] if body else None)
        witness = _natural(body[0][1][1], body[0][0])

    elif kind == STEPS:
        if not body or body[0][1] != [STEPS]:
            raise InvalidFormat(f"expected a line '{STEPS}'", body[0][0] if body else None)
        steps = []
        for number, tokens in body[1:]:
            if len(tokens) != 2:
                raise InvalidFormat("expected a step 'rule cut'", number)
            steps.append(Step(_natural(tokens[0], number), _natural(tokens[1], number)))
        witness = tuple(steps)

    else:
        expected = 2 if tag == "cfi" else 1
        if len(body) != expected or any(tokens[0] != INDICES for _, tokens in body):
            raise InvalidFormat(f"expected {expected} line(s) '{INDICES} i1 i2 ...'", body[0][0] if body else None)
        parts = [tuple(_natural(t, number) for t in tokens[1:]) for number, tokens in body]
        witness = (parts[0], parts[1]) if tag == "cfi" else parts[0]

    if instance is not None:
        _validate_range(tag, witness, instance, body[-1][0] if body else None)
    logging.getLogger("formats").debug(f"Parsed {tag} witness")
    return tag, witness


def _validate_range(tag: str, witness: Any, instance: Any, line: Optional[int]):
    if reductions.tag_of(instance) != tag:
        raise InvalidFormat(f"witness for {tag} doesn't fit an instance of {reductions.tag_of(instance)}", line)
    if isinstance(instance, (SrInstance, SrhInstance, SrhPrimeInstance)):
        limits = [(len(instance.rules), [step.rule for step in witness])]
    elif isinstance(instance, PcpInstance):
        limits = [(len(instance.cards), witness)]
    elif isinstance(instance, MpcpInstance):
        limits = [(len(instance.all_cards), witness)]
    elif isinstance(instance, CfpInstance):
        limits = [(len(instance.rules), witness)]
    elif isinstance(instance, CfiInstance):
        limits = [(len(instance.rules1), witness[0]), (len(instance.rules2), witness[1])]
    else:
        limits = []
    for size, indices in limits:
        for index in indices:
            if index >= size:
                raise InvalidFormat(f"index {index} out of range for {size} cards or rules", line)


def print_witness(tag: str, witness: Any) -> str:
    """Print a witness in canonical layout, ending with a newline"""
    kind = WITNESS_KINDS[tag]
    if kind == HALT_STEPS:
        lines = [f"{HALT_STEPS} {witness}"]
    elif kind == STEPS:
        lines = [STEPS] + [f"{step.rule} {step.cut}" for step in witness]
    else:
        parts = witness if tag == "cfi" else (witness,)
        lines = [" ".join([INDICES] + [str(i) for i in part]) for part in parts]
    return "\n".join([f"%witness {tag}"] + lines) + "\n"


@dataclasses.dataclass
class ReductionMap:
    """
    Content of a reduction map file
    """

    tags: Tuple[str, ...]
    """Problem tags of all stages, source first"""
    fresh: List[Tuple[str, Symbol]]
    """Fresh symbols of all stages in stage order"""
    symbols: Dict[str, Symbol]
    """Intern table of the source instance"""
    source: str
    """Canonical text of the source instance"""
    indexed: bool = False
    """Whether the reduction to ``cfi`` uses position symbols"""


def write_map(composed: reductions.Chain, table: InternTable, indexed: bool = False) -> str:
    """
    Print the reduction map of a chain

    :param composed: chain of reductions
    :param table: intern table of the source instance
    :param indexed: whether the chain was built with position symbols
    :return: text of the map file
    """

    fresh = [f"{name}={code}" for out in composed.outputs for name, code in out.fresh.items()]
    lines = [
        f"%map {composed.tags[0]} -> {composed.tags[-1]}",
        " ".join(["%stages", *composed.tags]),
        " ".join(["%fresh", *fresh]),
        " ".join(["%symbols", *[f"{name}={code}" for name, code in table.items()]]),
    ]
    if indexed:
        lines.append("%indexed")
    lines.append("%source")
    return "\n".join(lines) + "\n" + print_instance(composed.source, table)


def _pairs(tokens: List[str], line: int) -> List[Tuple[str, Symbol]]:
    pairs = []
    for token in tokens:
        name, sep, code = token.rpartition("=")
        if not sep or not name:
            raise InvalidFormat(f"expected 'name=code', found {token!r}", line)
        pairs.append((name, _natural(code, line)))
    return pairs


def read_map(text: str) -> ReductionMap:
    """
    Parse the text of a reduction map file

    :raise InvalidFormat: for malformed headers
    """

    header, sep, source = text.partition("\n%source\n")
    if not sep:
        raise InvalidFormat("missing '%source' section")
    lines = list(tokenize(header))
    keys = [tokens[0] for _, tokens in lines]
    if keys[:4] != ["%map", "%stages", "%fresh", "%symbols"] or keys[4:] not in ([], ["%indexed"]):
        raise InvalidFormat("expected the directives %map, %stages, %fresh, %symbols and optionally %indexed")
    (n_map, t_map), (n_stages, t_stages), (n_fresh, t_fresh), (n_symbols, t_symbols) = lines[:4]
    if len(t_map) != 4 or t_map[2] != "->":
        raise InvalidFormat("expected '%map <source> -> <target>'", n_map)
    tags = tuple(t_stages[1:])
    if not tags or tags[0] != t_map[1] or tags[-1] != t_map[3]:
        raise InvalidFormat("stages don't match the source and target of the map", n_stages)
    symbols = dict(_pairs(t_symbols[1:], n_symbols))
    return ReductionMap(tags, _pairs(t_fresh[1:], n_fresh), symbols, source, indexed=len(keys) == 5)


def load_chain(rmap: ReductionMap) -> Tuple[reductions.Chain, InternTable]:
    """
    Re-derive the chain of reductions recorded in a map

    :param rmap: parsed reduction map
    :return: tuple of the chain and the intern table of the source instance
    :raise InvalidFormat: when the source doesn't parse or the re-derived
        chain doesn't allocate the recorded fresh symbols
    :raise ReductionError: when the recorded target isn't reachable
    """

    table = InternTable.from_mapping(rmap.symbols)
    instance, table = parse_instance(rmap.source, table)
    composed = reductions.chain(instance, rmap.tags[-1], indexed=rmap.indexed)
    if composed.tags != rmap.tags:
        raise InvalidFormat(f"recorded stages {' '.join(rmap.tags)} differ from {' '.join(composed.tags)}")
    fresh = [(name, code) for out in composed.outputs for name, code in out.fresh.items()]
    if fresh != list(rmap.fresh):
        raise InvalidFormat("recorded fresh symbols differ from the re-derived ones")
    return composed, table

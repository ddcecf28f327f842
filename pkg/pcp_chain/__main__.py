#!/usr/bin/env python3

import os
import sys
import json
import logging
import argparse
from typing import List, Optional

import pydantic

from . import config, entrypoint, persistence, problems, reductions, solvers, testkit, turing, utils
from .formats import InvalidFormat
from .formats.instances import InternTable, parse_instance, print_instance
from .formats.witnesses import load_chain, parse_witness, print_witness, read_map, write_map


EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_INVALID = 2
EXIT_NOT_FOUND = 3

SOLVERS = {
    "pcp": solvers.solve_pcp,
    "mpcp": solvers.solve_mpcp,
    "sr": solvers.solve_sr,
    "srh": solvers.solve_srh,
    "srh'": solvers.solve_srh_prime,
    "cfp": solvers.solve_cfp,
    "cfi": solvers.solve_cfi,
}

CHECKERS = {
    "pcp": problems.check_pcp,
    "mpcp": problems.check_mpcp,
    "sr": problems.check_sr,
    "srh": problems.check_srh,
    "srh'": problems.check_srh_prime,
    "cfp": problems.check_cfp,
    "cfi": lambda inst, pair: problems.check_cfi(inst, pair[0], pair[1]),
    "tm": lambda inst, steps: problems.CheckResult(turing.check_tm(inst, steps), "machine doesn't halt then"),
}


def _configure(args: argparse.Namespace, record: bool = False) -> config.Configuration:
    conf = config.load([args.config])
    entrypoint.start(conf, record)
    return conf


def _read_instance(path: str):
    return parse_instance(utils.read_text(path))


def _check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _configure(args)
    instance, _ = _read_instance(args.instance)
    tag, witness = parse_witness(utils.read_text(args.witness), instance)
    result = CHECKERS[tag](instance, witness)
    if result:
        print("accepted")
        return EXIT_OK
    print(f"rejected: {result.reason}")
    return EXIT_REJECTED


def _solve(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    conf = _configure(args, args.record)
    if any(value is not None and value < 0 for value in (args.max_steps, args.max_len, args.max_cards)):
        parser.error("search bounds must not be negative")
        return EXIT_INVALID
    bound = solvers.SearchBound(
        max_steps=conf.solver.max_steps if args.max_steps is None else args.max_steps,
        max_len=conf.solver.max_len if args.max_len is None else args.max_len,
        max_cards=conf.solver.max_cards if args.max_cards is None else args.max_cards
    )
    instance, table = _read_instance(args.instance)
    tag = reductions.tag_of(instance)

    if tag == "tm":
        result = turing.tm_run(instance.machine, instance.input, bound.max_steps)
        outcome = solvers.Found(result.steps, result.steps + 1) if result.halted \
            else solvers.NotFoundWithinBound(result.steps + 1)
    else:
        outcome = SOLVERS[tag](instance, bound)

    if not outcome.found:
        print(f"no witness found within the bound after exploring {outcome.explored} states", file=sys.stderr)
        return EXIT_NOT_FOUND

    text = print_witness(tag, outcome.witness)
    print(text, end="")
    if args.emit_witness:
        with open(args.emit_witness, "w") as f:
            f.write(text)
    if args.record:
        persistence.record(
            tag, print_instance(instance, table), text,
            bound.max_cards, bound.max_steps, bound.max_len, outcome.explored
        )
    return EXIT_OK


def _reduce(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _configure(args)
    instance, table = _read_instance(args.instance)
    if args.command == "reduce":
        reductions.stage(reductions.tag_of(instance), args.target)
    composed = reductions.chain(instance, args.target, indexed=args.indexed)
    print(print_instance(composed.instance, table), end="")
    if args.emit_map:
        with open(args.emit_map, "w") as f:
            f.write(write_map(composed, table, args.indexed))
    return EXIT_OK


def _translate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _configure(args)
    composed, _ = load_chain(read_map(utils.read_text(args.map)))
    forward = args.direction == "fwd"
    expected, produced = (composed.tags[0], composed.tags[-1]) if forward else (composed.tags[-1], composed.tags[0])
    tag, witness = parse_witness(utils.read_text(args.witness), composed.source if forward else composed.instance)
    if tag != expected:
        raise InvalidFormat(f"expected a witness for {expected}, found one for {tag}")
    try:
        translated = composed.forward(witness) if forward else composed.backward(witness)
    except reductions.TranslationError as exc:
        print(f"translation failed: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    print(print_witness(produced, translated), end="")
    return EXIT_OK


def _gen(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    conf = _configure(args)
    if args.size is not None and args.size <= 0:
        parser.error("option --size must be positive")
        return EXIT_INVALID
    gen_conf = testkit.GenConfig(
        seed=conf.seed if args.seed is None else args.seed,
        alphabet_size=conf.generator.alphabet_size,
        max_cards=conf.generator.max_cards if args.size is None else args.size,
        max_side_len=conf.generator.max_side_len,
        max_states=conf.generator.max_states if args.size is None else args.size
    )
    if args.planted and args.problem != "pcp":
        parser.error("option --planted is only supported for problem 'pcp'")
        return EXIT_INVALID

    witness = None
    if args.planted:
        instance, witness = testkit.gen_planted_pcp(gen_conf)
    else:
        instance = testkit.gen(args.problem, gen_conf)

    names = {utils.symbol_name(a): a for a in range(gen_conf.alphabet_size)}
    if isinstance(instance, turing.TmInstance):
        names.update({f"q{i}": q for i, q in enumerate(instance.machine.states)})
    print(print_instance(instance, InternTable.from_mapping(names)), end="")
    if witness is not None and args.emit_witness:
        with open(args.emit_witness, "w") as f:
            f.write(print_witness("pcp", witness))
    return EXIT_OK


def _new(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if not args.force and os.path.exists(args.config):
        parser.error(f"config file {args.config!r} already exists, force overwriting it with option '-f'")
        return EXIT_INVALID
    for source in [
        config.DEFAULT_CONFIG_INI_PATH,
        os.path.abspath(os.path.join(os.path.dirname(__file__), os.pardir, config.DEFAULT_CONFIG_INI_PATH))
    ]:
        if os.path.exists(source):
            with open(args.config, "w") as f:
                f.write(utils.read_text(source))
            print(f"A new configuration file has been created as {args.config!r}.")
            return EXIT_OK
    print("ERROR: No default configuration file found. Please get a new copy of this project!", file=sys.stderr)
    return EXIT_REJECTED


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    if not os.path.exists(args.config):
        parser.error(f"config file {args.config!r} not found, please use command 'new' to create one")
        return EXIT_INVALID
    conf = config.load([args.config])
    print(json.dumps(conf.dict(), indent=4, sort_keys=True))
    return EXIT_OK


def _history(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    _configure(args, record=True)
    for certificate in persistence.history(args.limit, args.problem):
        print(
            f"{certificate.id}\t{certificate.created}\t{certificate.problem}\t"
            f"{certificate.fingerprint[:12]}\t{certificate.explored}"
        )
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = utils.get_cli_parser()
    args = parser.parse_args(argv)

    try:
        return {
            "check": _check,
            "solve": _solve,
            "reduce": _reduce,
            "chain": _reduce,
            "translate": _translate,
            "gen": _gen,
            "new": _new,
            "validate": _validate,
            "history": _history
        }[args.command](parser, args)
    except (InvalidFormat, reductions.ReductionError, pydantic.ValidationError, OSError) as exc:
        logging.getLogger("entrypoint").debug(f"Command {args.command!r} failed: {exc!r}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())

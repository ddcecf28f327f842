"""
Module with various different utilities
"""

import string
import argparse

from . import config


PROBLEM_TAGS = ["pcp", "mpcp", "sr", "srh", "srh'", "cfp", "cfi", "tm"]


def get_cli_parser() -> argparse.ArgumentParser:
    """
    Get the argument parser for the module's CLI utility

    :return: argument parser
    """

    def add_conf_option(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument(
            "-c",
            help=f"configuration filename (defaults to {config.DEFAULT_CONFIG_FILE!r}, optional)",
            dest="config",
            default=config.DEFAULT_CONFIG_FILE,
            metavar="<file>"
        )
        return p

    def add_bound_options(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--max-cards", type=int, metavar="N", help="overwrite maximal number of cards or rules")
        p.add_argument("--max-steps", type=int, metavar="N", help="overwrite maximal number of rewriting steps")
        p.add_argument("--max-len", type=int, metavar="N", help="overwrite maximal string or overhang length")
        return p

    def add_target_options(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
        p.add_argument("--to", required=True, choices=PROBLEM_TAGS, dest="target", help="target problem")
        p.add_argument("--indexed", action="store_true", help="use one fresh symbol per card when reducing to cfi")
        p.add_argument("--emit-map", metavar="<file>", help="store the reduction map for later translations")
        return p

    parser = argparse.ArgumentParser(
        prog="pcp_chain",
        description="Reductions from Turing machine halting via string rewriting to the Post correspondence "
                    "problem and Post grammars, with certificate checkers, bounded solvers and witness translators",
        epilog="Exit codes: 0 success, 1 rejected witness or failed translation, 2 invalid input, "
               "3 nothing found within the bound."
    )
    commands = parser.add_subparsers(title="commands", dest="command", required=True)

    parser_check = add_conf_option(commands.add_parser("check", help="check a witness for an instance"))
    parser_check.add_argument("instance", help="instance file")
    parser_check.add_argument("witness", help="witness file")

    parser_solve = add_bound_options(add_conf_option(commands.add_parser(
        "solve",
        help="search for a witness within some bounds",
        description="Search for a witness within some bounds. Matches are shortest first, ties broken "
                    "lexicographically, e.g. 'indices: 0 0 1 1 2' for tests/static/sample_pcp.txt with --max-cards 5."
    )))
    parser_solve.add_argument("instance", help="instance file")
    parser_solve.add_argument("--emit-witness", metavar="<file>", help="additionally store the witness in a file")
    parser_solve.add_argument("--record", action="store_true", help="store a found certificate in the database")

    parser_reduce = add_target_options(add_conf_option(commands.add_parser(
        "reduce",
        help="apply a single reduction to an instance"
    )))
    parser_reduce.add_argument("instance", help="instance file")

    parser_chain = add_target_options(add_conf_option(commands.add_parser(
        "chain",
        help="apply all reductions on the way to the target problem"
    )))
    parser_chain.add_argument("instance", help="instance file")

    parser_translate = add_conf_option(commands.add_parser(
        "translate",
        help="translate a witness along a stored reduction map"
    ))
    parser_translate.add_argument("map", help="reduction map file")
    parser_translate.add_argument("witness", help="witness file")
    parser_translate.add_argument("--direction", required=True, choices=["fwd", "bwd"], help="translation direction")

    parser_gen = add_conf_option(commands.add_parser("gen", help="generate a random instance"))
    parser_gen.add_argument("--problem", required=True, choices=PROBLEM_TAGS, help="problem of the instance")
    parser_gen.add_argument("--seed", type=int, metavar="N", help="overwrite the configured seed")
    parser_gen.add_argument("--size", type=int, metavar="N", help="overwrite maximal number of cards, rules or states")
    parser_gen.add_argument("--planted", action="store_true", help="plant a match (pcp only)")
    parser_gen.add_argument("--emit-witness", metavar="<file>", help="store the planted match in a file")

    parser_new = add_conf_option(commands.add_parser("new", help="create a new configuration file"))
    parser_new.add_argument("-f", "--force", action="store_true", help="allow overwriting existing files")

    add_conf_option(commands.add_parser(
        "validate",
        help="validate the configuration file by showing the parsed values incl. defaults"
    ))

    parser_history = add_conf_option(commands.add_parser("history", help="list recorded certificates"))
    parser_history.add_argument("--limit", type=int, default=10, metavar="N", help="maximal number of entries")
    parser_history.add_argument("--problem", choices=PROBLEM_TAGS, help="only list certificates of one problem")

    return parser


def symbol_name(code: int) -> str:
    """Readable name of a generated symbol: letters first, then ``s26``, ``s27``, ..."""
    if code < len(string.ascii_lowercase):
        return string.ascii_lowercase[code]
    return f"s{code}"


def read_text(path: str) -> str:
    with open(path, "r") as f:
        return f.read()

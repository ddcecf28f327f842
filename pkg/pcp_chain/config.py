"""
Configuration parser module
"""

import os
import logging
import configparser

import pydantic

from . import persistence


DEFAULT_SECTION = "_default"
GLOBAL_SECTION = "global"
DEFAULT_CONFIG_FILE = "pcp_chain.ini"
DEFAULT_CONFIG_INI_PATH = os.path.join(".", "default_configuration.ini")


def _positive(value: int) -> int:
    if int(value) <= 0:
        raise ValueError(f"Value {value} must be positive")
    return value


class SolverConfiguration(pydantic.BaseModel):
    """Default bounds of the brute-force solvers"""

    max_cards: int = 8
    """Maximal number of cards of a stack or rules of a grammar derivation"""
    max_steps: int = 12
    """Maximal number of rewriting steps"""
    max_len: int = 24
    """Maximal length of intermediate strings or PCP overhangs"""

    _check_positive = pydantic.validator("max_cards", "max_steps", "max_len", allow_reuse=True)(_positive)


class LogConfiguration(pydantic.BaseModel):
    """Configuration of the ``logging`` module"""

    log_file: str = "-"  # also supports stdout and stderr
    log_level: str = "WARNING"
    log_style: str = "{"
    log_format: str = "{asctime}: [{levelname:<8}] {name}: {message}"
    log_dateformat: str = "%d.%m.%Y %H:%M:%S"

    @pydantic.validator("log_level")
    def is_valid_log_level(value: str):  # noqa
        """
        Checks :attr:`log_level` to be the name of a level of the ``logging`` module

        :raise ValueError: if it's no such name
        """

        if not isinstance(logging.getLevelName(value.upper()), int):
            raise ValueError(f"Unknown log level {value!r}")
        return value.upper()

    @pydantic.validator("log_style")
    def is_valid_log_style(value: str):  # noqa
        if value not in ("%", "{"):
            raise ValueError(f"Log style {value!r} is neither '%' nor '{{'")
        return value


class StorageConfiguration(pydantic.BaseModel):
    database: str = persistence.DEFAULT_DATABASE_URL
    """Connection string to the database of recorded certificates"""


class GeneratorConfiguration(pydantic.BaseModel):
    """Size limits of randomly generated instances"""

    alphabet_size: int = 2
    max_cards: int = 3
    max_side_len: int = 2
    max_states: int = 3

    _check_positive = pydantic.validator(
        "alphabet_size", "max_cards", "max_side_len", "max_states", allow_reuse=True
    )(_positive)


class Configuration(pydantic.BaseModel):
    seed: int = 0  # noqa
    """Seed of the instance generator"""
    solver: SolverConfiguration = SolverConfiguration()
    log: LogConfiguration = LogConfiguration()
    storage: StorageConfiguration = StorageConfiguration()
    generator: GeneratorConfiguration = GeneratorConfiguration()

    @pydantic.validator("seed")
    def is_natural(value: int):  # noqa
        if int(value) < 0:
            raise ValueError(f"Seed {value} must not be negative")
        return value


def defaults() -> Configuration:
    """Configuration without any config file"""
    return Configuration()


def load(filenames: list[str]) -> Configuration:
    """
    Load a :class:`Configuration` object from a list of INI-style config files

    In case the configuration file contains top-level entries without prior
    section, those entries are listed below a global section :const:`GLOBAL_SECTION`.
    Files which don't exist are skipped, so the defaults apply if none exists.

    :param filenames: list of filenames to search for
    :return: instance of a :class:`Configuration`
    :raise pydantic.ValidationError: for invalid values
    """

    def make_conf(c: configparser.ConfigParser) -> Configuration:
        data = dict(c[GLOBAL_SECTION]) if c.has_section(GLOBAL_SECTION) else {}
        data.update({k: dict(v) for k, v in c.items() if k != DEFAULT_SECTION and k != GLOBAL_SECTION})
        try:
            return Configuration(**data)
        except Exception as err:
            raise err from None

    try:
        config = configparser.ConfigParser(default_section=DEFAULT_SECTION)
        config.read(filenames)
        return make_conf(config)
    except configparser.MissingSectionHeaderError:
        config = configparser.ConfigParser(default_section=DEFAULT_SECTION)
        for filename in filenames:
            if not os.path.exists(filename):
                continue
            with open(filename) as f:
                content = f.read()
            if f"[{GLOBAL_SECTION}]" not in content:
                content = f"[{GLOBAL_SECTION}]{os.linesep}{content}"
            config.read_string(content, filename)
        return make_conf(config)

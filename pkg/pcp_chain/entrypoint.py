"""
Module containing the program startup :func:`start`, which configures
logging and (on demand) the certificate ledger before any command runs
"""

import sys
import logging

from . import config, persistence


def setup_logging(conf: config.Configuration):
    """
    Configure the ``logging`` module from the ``[log]`` section

    The standard output stream carries instances and witnesses, so log
    records only go there when ``log_file`` is ``stdout`` explicitly.

    :param conf: complete package configuration
    """

    log_conf = {
        "datefmt": conf.log.log_dateformat,
        "format": conf.log.log_format,
        "level": conf.log.log_level,
        "style": conf.log.log_style,
        "force": True
    }

    if conf.log.log_file not in ["", "-", "stdout", "stderr"]:
        log_conf["filename"] = conf.log.log_file
    elif conf.log.log_file == "stdout":
        log_conf["stream"] = sys.stdout
    else:
        log_conf["stream"] = sys.stderr
    logging.basicConfig(**log_conf)


def start(conf: config.Configuration, record: bool = False):
    """
    Setup logging and, if certificates should be recorded, the database

    :param conf: complete package configuration
    :param record: whether the certificate ledger will be used
    """

    setup_logging(conf)
    logger = logging.getLogger("entrypoint")
    logger.debug(f"Starting with seed {conf.seed} and solver bounds {conf.solver.dict()}")
    if record:
        logger.debug(f"Configuring database using {conf.storage.database!r} ...")
        persistence.init(conf.storage.database)

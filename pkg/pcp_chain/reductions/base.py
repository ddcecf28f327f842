"""
Result type and exceptions shared by all reductions
"""

import logging
import dataclasses
from typing import Generic, Mapping, Optional, Tuple, TypeVar

from ..core import Alphabet, Symbol
from ..problems import CheckResult


S = TypeVar("S")
T = TypeVar("T")


class ReductionError(Exception):
    """
    Exception for reductions which can't be applied to their input
    """


class TranslationError(Exception):
    """
    Exception for witnesses which can't be translated

    Translators raise it when their input is not accepted by the checker
    of its problem or when the decoded witness fails the checker.
    """


@dataclasses.dataclass(frozen=True)
class ReductionOutput(Generic[S, T]):
    """
    Target instance of a reduction together with the data to translate witnesses
    """

    source: S
    """Instance the reduction was applied to"""
    instance: T
    """Resulting instance of the target problem"""
    fresh: Mapping[str, Symbol]
    """Fresh symbols allocated by the reduction, by name in allocation order"""
    alphabet: Alphabet = ()
    """Alphabet of the source instance as used by the reduction"""
    index_map: Optional[Tuple[Optional[int], ...]] = None
    """Target card index for every source card index (``None`` when dropped)"""


def fail(logger: logging.Logger, message: str) -> TranslationError:
    """Log a failed translation and build the exception to raise"""
    logger.warning(message)
    return TranslationError(message)


def require(result: CheckResult, logger: logging.Logger, what: str) -> None:
    """
    Ensure a checker accepted some witness

    :param result: verdict of the checker
    :param logger: logger to report the failure to
    :param what: description of the checked witness used in the message
    :raise TranslationError: when the checker rejected the witness
    """

    if not result:
        raise fail(logger, f"{what} rejected: {result.reason}")

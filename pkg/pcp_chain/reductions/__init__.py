"""
Package containing the reductions between the problems of the chain

    tm -> srh' -> srh -> sr -> mpcp -> pcp -> cfp
                                          \\-> cfi

Every reduction comes with a forward translator (source witness to target
witness) and a backward translator (the other way round). Both verify their
input and output with the checkers of :mod:`pcp_chain.problems`:

  * Module :mod:`reductions.machines <pcp_chain.reductions.machines>`
    compiles Turing machines into string rewriting systems
  * Module :mod:`reductions.rewriting <pcp_chain.reductions.rewriting>`
    handles the three string rewriting problems
  * Module :mod:`reductions.correspondence <pcp_chain.reductions.correspondence>`
    reduces string rewriting to the (modified) correspondence problem
  * Module :mod:`reductions.grammars <pcp_chain.reductions.grammars>`
    reduces the correspondence problem to Post grammar problems

:func:`chain` composes the individual stages along this path.
"""

import logging
import functools
import dataclasses
from typing import Any, Callable, Dict, Tuple

from ..problems import (
    CfiInstance, CfpInstance, MpcpInstance, PcpInstance, SrhInstance, SrhPrimeInstance, SrInstance
)
from ..turing import TmInstance
from .base import ReductionError, ReductionOutput, TranslationError
from .correspondence import (
    mpcp_to_pcp_witness_bwd, mpcp_to_pcp_witness_fwd, reduce_mpcp_to_pcp, reduce_sr_to_mpcp,
    sr_to_mpcp_witness_bwd, sr_to_mpcp_witness_fwd
)
from .grammars import (
    pcp_to_cfi_witness_bwd, pcp_to_cfi_witness_fwd, pcp_to_cfp_witness_bwd, pcp_to_cfp_witness_fwd,
    reduce_pcp_to_cfi, reduce_pcp_to_cfp
)
from .machines import reduce_tm_to_srh_prime, tm_witness_bwd, tm_witness_fwd
from .rewriting import (
    reduce_srh_prime_to_srh, reduce_srh_to_sr, srh_prime_to_srh_witness_bwd, srh_prime_to_srh_witness_fwd,
    srh_to_sr_witness_bwd, srh_to_sr_witness_fwd
)


PATH = ("tm", "srh'", "srh", "sr", "mpcp", "pcp")
"""Problem tags along the linear part of the chain"""

BRANCHES = ("cfp", "cfi")
"""Problem tags the last problem of :data:`PATH` reduces to"""

TAGS = PATH + BRANCHES

INSTANCE_TYPES = {
    "tm": TmInstance,
    "srh'": SrhPrimeInstance,
    "srh": SrhInstance,
    "sr": SrInstance,
    "mpcp": MpcpInstance,
    "pcp": PcpInstance,
    "cfp": CfpInstance,
    "cfi": CfiInstance,
}


def tag_of(instance: Any) -> str:
    """
    Determine the problem tag of an instance

    :raise ReductionError: for objects which are no problem instance
    """

    for tag, cls in INSTANCE_TYPES.items():
        if isinstance(instance, cls):
            return tag
    raise ReductionError(f"No problem instance: {type(instance).__name__}")


@dataclasses.dataclass(frozen=True)
class Stage:
    """A single reduction together with its witness translators"""

    source: str
    target: str
    reduce: Callable[[Any], ReductionOutput]
    forward: Callable[[Any, Any], Any]
    """Translate a source witness, called with the source instance and the witness"""
    backward: Callable[[Any, Any], Any]
    """Translate a target witness, called with the source instance and the witness"""


def _stages(indexed: bool) -> Dict[Tuple[str, str], Stage]:
    return {
        ("tm", "srh'"): Stage("tm", "srh'", reduce_tm_to_srh_prime, tm_witness_fwd, tm_witness_bwd),
        ("srh'", "srh"): Stage(
            "srh'", "srh", reduce_srh_prime_to_srh, srh_prime_to_srh_witness_fwd, srh_prime_to_srh_witness_bwd
        ),
        ("srh", "sr"): Stage("srh", "sr", reduce_srh_to_sr, srh_to_sr_witness_fwd, srh_to_sr_witness_bwd),
        ("sr", "mpcp"): Stage("sr", "mpcp", reduce_sr_to_mpcp, sr_to_mpcp_witness_fwd, sr_to_mpcp_witness_bwd),
        ("mpcp", "pcp"): Stage("mpcp", "pcp", reduce_mpcp_to_pcp, mpcp_to_pcp_witness_fwd, mpcp_to_pcp_witness_bwd),
        ("pcp", "cfp"): Stage("pcp", "cfp", reduce_pcp_to_cfp, pcp_to_cfp_witness_fwd, pcp_to_cfp_witness_bwd),
        ("pcp", "cfi"): Stage(
            "pcp", "cfi",
            functools.partial(reduce_pcp_to_cfi, indexed=indexed),
            functools.partial(pcp_to_cfi_witness_fwd, indexed=indexed),
            lambda src, pair: pcp_to_cfi_witness_bwd(src, pair[0], pair[1], indexed=indexed)
        ),
    }


def route(source: str, target: str) -> Tuple[str, ...]:
    """
    Find the problem tags visited on the way from ``source`` to ``target``

    :return: tags including both ends (a single tag if they are equal)
    :raise ReductionError: if ``target`` is not reachable from ``source``
    """

    if source not in TAGS or target not in TAGS:
        raise ReductionError(f"Unknown problem tag in {source!r} -> {target!r}")
    if source == target:
        return source,
    if source in PATH:
        start = PATH.index(source)
        if target in PATH and PATH.index(target) > start:
            return PATH[start:PATH.index(target) + 1]
        if target in BRANCHES:
            return PATH[start:] + (target,)
    raise ReductionError(f"{target} is not reachable from {source}")


def stage(source: str, target: str, indexed: bool = False) -> Stage:
    """
    Look up a single reduction

    :raise ReductionError: if there is no direct reduction between both problems
    """

    try:
        return _stages(indexed)[(source, target)]
    except KeyError:
        raise ReductionError(f"No direct reduction from {source} to {target}") from None


@dataclasses.dataclass(frozen=True)
class Chain:
    """Composition of reductions applied to a source instance"""

    source: Any
    tags: Tuple[str, ...]
    stages: Tuple[Stage, ...]
    outputs: Tuple[ReductionOutput, ...]

    @property
    def instance(self) -> Any:
        """The instance at the end of the chain"""
        return self.outputs[-1].instance if self.outputs else self.source

    def forward(self, witness: Any) -> Any:
        """Translate a witness of the source instance into one of :attr:`instance`"""
        for s, out in zip(self.stages, self.outputs):
            witness = s.forward(out.source, witness)
        return witness

    def backward(self, witness: Any) -> Any:
        """Translate a witness of :attr:`instance` back into one of the source instance"""
        for s, out in zip(reversed(self.stages), reversed(self.outputs)):
            witness = s.backward(out.source, witness)
        return witness


def chain(src: Any, target: str, indexed: bool = False) -> Chain:
    """
    Apply all reductions on the way from the problem of ``src`` to ``target``

    :param src: source instance
    :param target: tag of the target problem
    :param indexed: whether a final reduction to ``cfi`` uses position symbols
    :return: the composed chain
    :raise ReductionError: if ``target`` is not reachable
    """

    logger = logging.getLogger("reductions.chain")
    tags = route(tag_of(src), target)
    stages, outputs = [], []
    instance = src
    for source, upcoming in zip(tags, tags[1:]):
        s = stage(source, upcoming, indexed)
        out = s.reduce(instance)
        logger.debug(f"Reduced {source} to {upcoming} with fresh symbols {dict(out.fresh)}")
        stages.append(s)
        outputs.append(out)
        instance = out.instance
    logger.info(f"Built chain {' -> '.join(tags)}")
    return Chain(src, tags, tuple(stages), tuple(outputs))


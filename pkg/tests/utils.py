import os
import traceback
from typing import Any, Callable, Iterable, List
import unittest

from pcp_chain import testkit


EXAMPLES = 5


def find_path(paths: list) -> str:
    """
    Find a valid existing path of the specified paths or raise a ValueError
    """

    for path in paths:
        if os.path.exists(path):
            return path
    raise ValueError(f"No file found for search paths {paths!r}")


def static_path(filename: str) -> str:
    return find_path([
        os.path.join(".", "tests", "static", filename),
        os.path.join(".", "static", filename),
        os.path.join(os.path.dirname(__file__), "static", filename)
    ])


def read_static(filename: str) -> str:
    with open(static_path(filename)) as f:
        return f.read()


def counter_examples(predicate: Callable[[Any], bool], cases: Iterable[Any]) -> List[str]:
    """
    Collect all cases the predicate rejects or raises for
    """

    found = []
    for case in cases:
        try:
            if not predicate(case):
                found.append(repr(case))
        except Exception:
            found.append(f"{case!r} : {traceback.format_exc()}")
    return found


def assert_holds(test: unittest.TestCase, predicate: Callable[[Any], bool], cases: Iterable[Any]):
    """
    Fail the test with the first few counter examples, if there are any
    """

    found = counter_examples(predicate, cases)
    if found:
        message = "\n".join(f"    -> {f}" for f in found[:EXAMPLES])
        test.fail(f"found {len(found)} counter examples, displaying first {min(len(found), EXAMPLES)}:\n{message}")


def configs(count: int, offset: int = 0, **kwargs) -> List[testkit.GenConfig]:
    """Generator configurations for the seeds ``offset .. offset + count - 1``"""
    return [testkit.GenConfig(seed=seed, **kwargs) for seed in range(offset, offset + count)]

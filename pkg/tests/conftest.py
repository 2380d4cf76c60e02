from pathlib import Path

import pytest

from adb import parse_adb, parse_nfa

EXAMPLES = Path(__file__).parents[1] / "examples"


def load_adb(name):
    return parse_adb((EXAMPLES / name).read_text())


def load_nfa(name):
    return parse_nfa((EXAMPLES / name).read_text())


@pytest.fixture(scope="session")
def a0():
    return load_adb("a0.adb")


@pytest.fixture(scope="session")
def a1():
    return load_adb("a1.adb")


@pytest.fixture(scope="session")
def a2():
    return load_adb("a2.adb")


@pytest.fixture(scope="session")
def a3():
    return load_adb("a3.adb")


@pytest.fixture(scope="session")
def corpus_adbs(a0, a1, a2, a3):
    return {"a0": a0, "a1": a1, "a2": a2, "a3": a3}


@pytest.fixture(scope="session")
def sigma_star():
    return load_nfa("sigma-star.nfa")


@pytest.fixture(scope="session")
def abc_blocks():
    return load_nfa("astar-bstar-cstar.nfa")


@pytest.fixture(scope="session")
def bac_blocks():
    return load_nfa("bstar-astar-cstar.nfa")


@pytest.fixture(scope="session")
def aabbcc():
    return load_nfa("aabbcc.nfa")


@pytest.fixture(scope="session")
def astar_b():
    return load_nfa("astar-b.nfa")


@pytest.fixture(scope="session")
def corpus_nfas(sigma_star, abc_blocks, bac_blocks, aabbcc, astar_b):
    return {
        "sigma-star": sigma_star,
        "astar-bstar-cstar": abc_blocks,
        "bstar-astar-cstar": bac_blocks,
        "aabbcc": aabbcc,
        "astar-b": astar_b,
    }

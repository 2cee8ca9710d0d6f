import itertools

import numpy as np
import pytest

from symunits import corpus


def brute_center(G):
    return [z for z in range(G.order) if all(G.mul(z, g) == G.mul(g, z) for g in range(G.order))]


def brute_closure(G, gens):
    """Subgroup generated by gens, by repeated multiplication until stable."""
    S = {0} | set(gens)
    while True:
        new = {G.mul(a, b) for a, b in itertools.product(S, S)} | S
        if new == S:
            return S
        S = new


def brute_associative(G):
    n = G.order
    return all(
        G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c))
        for a in range(n)
        for b in range(n)
        for c in range(n)
    )


@pytest.fixture(scope="session")
def small_corpus():
    return corpus.small_2groups()


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240517)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(test_acceptance.RESULTS, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)

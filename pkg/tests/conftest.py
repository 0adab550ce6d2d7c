from __future__ import annotations

import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qsingleton.code_generation import GeneratorConfig, catalog, random_code
from qsingleton.field_linalg import Subspace

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

FIXTURES = ["four_two_two", "five_one_three", "steane", "shor", "free(3)", "trivial_k0(3)"]
PRIMES = [2, 3, 5]

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def fixture_codes():
    return {name: catalog(name) for name in FIXTURES}


def random_vectors(rng: random.Random, p: int, length: int, count: int):
    return [tuple(rng.randrange(p) for _ in range(length)) for _ in range(count)]


def random_subspace(rng: random.Random, p: int, length: int, max_gens: int | None = None) -> Subspace:
    count = rng.randint(0, length if max_gens is None else max_gens)
    return Subspace.span(random_vectors(rng, p, length, count), p, length)


@st.composite
def codes(draw, primes=tuple(PRIMES), max_n=6):
    p = draw(st.sampled_from(primes))
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    seed = draw(st.integers(0, 2**64 - 1))
    return random_code(GeneratorConfig(p, n, k, seed))


@st.composite
def subspaces(draw, primes=tuple(PRIMES), max_dim=8):
    p = draw(st.sampled_from(primes))
    m = draw(st.integers(1, max_dim))
    rows = draw(st.lists(st.lists(st.integers(0, p - 1), min_size=m, max_size=m), max_size=m + 1))
    return Subspace.span(rows, p, m)

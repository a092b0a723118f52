import random

import pytest

from revhash import corpus, esop, synth
from revhash.pla import Cube, PlaFunction


@pytest.fixture(scope="session")
def corpus_funcs():
    return dict(corpus.corpus_functions())


@pytest.fixture(scope="session")
def small_corpus(corpus_funcs):
    """The 4-bit and 6-bit functions (cheap enough for per-test pipelines)."""
    return {name: f for name, f in corpus_funcs.items() if f.n <= 6}


def pipeline(f, minimized=True, effort=esop.DEFAULT_EFFORT, name=None):
    cover = esop.from_pla(f)
    if minimized:
        cover = esop.minimize(cover, effort=effort)
    return cover, synth.synthesize(cover, name=name)


def random_function(rng: random.Random, n=None, m=None, max_cubes=6, allow_dash=True) -> PlaFunction:
    n = n or rng.randint(1, 4)
    m = m or rng.randint(1, 3)
    alphabet = "01-" if allow_dash else "01"
    cubes = tuple(
        Cube(
            "".join(rng.choice(alphabet) for _ in range(n)),
            "".join(rng.choice("01") for _ in range(m)),
        )
        for _ in range(rng.randint(0, max_cubes))
    )
    return PlaFunction(n=n, m=m, cubes=cubes)


def random_truth_table(rng: random.Random, n: int, m: int) -> PlaFunction:
    cubes = tuple(
        Cube(format(x, f"0{n}b"), "".join(rng.choice("01") for _ in range(m)))
        for x in range(1 << n)
    )
    return PlaFunction(n=n, m=m, cubes=cubes)

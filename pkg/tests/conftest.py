import itertools

import pytest

from waring import MonomialSpec


def spec_grid(max_n: int, max_degree: int, min_n: int = 1):
    """All sorted exponent tuples with min_n <= n <= max_n and total degree <= max_degree."""
    out = []
    for num_vars in range(min_n + 1, max_n + 2):
        for combo in itertools.combinations_with_replacement(
            range(1, max_degree + 1), num_vars
        ):
            if sum(combo) <= max_degree:
                out.append(combo)
    return out


@pytest.fixture
def xyz():
    return MonomialSpec.parse("x*y*z")


@pytest.fixture
def xyz2():
    return MonomialSpec.parse("x*y*z^2")


@pytest.fixture
def x2y2z2():
    return MonomialSpec.parse("x^2*y^2*z^2")


@pytest.fixture
def xy2z3():
    return MonomialSpec.parse("x*y^2*z^3")

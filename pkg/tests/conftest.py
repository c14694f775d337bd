import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from semiwalk import families  # noqa: E402
from semiwalk.core import semigroup_from_transformations  # noqa: E402


@pytest.fixture(scope="session")
def p3():
    return families.tsetlin(3)


@pytest.fixture(scope="session")
def p2():
    return families.tsetlin(2)


@pytest.fixture(scope="session")
def b2():
    return families.rees_cycle(2, 1)


@pytest.fixture(scope="session")
def klein():
    return families.klein()


@pytest.fixture(scope="session")
def flipflop():
    return families.flipflop()


@pytest.fixture(scope="session")
def z2x01():
    return families.z2x01()


@pytest.fixture(scope="session")
def z2x01_quotient(z2x01):
    from semiwalk.core import minimal_ideal, rees_quotient

    return rees_quotient(z2x01, minimal_ideal(z2x01))


@pytest.fixture(scope="session")
def counterexample():
    """Transformation semigroup whose expanded simple-path graph is not a
    right Cayley graph (four maps on five states, one absorbing)."""
    maps = {
        "a1": [1, 4, 4, 2, 4],
        "a2": [4, 2, 1, 4, 4],
        "a3": [4, 3, 3, 4, 4],
        "c": [0, 0, 0, 0, 4],
    }
    return semigroup_from_transformations(5, maps)


def frac(s: str) -> Fraction:
    return Fraction(s)


HALF = [Fraction(1, 2), Fraction(1, 2)]
X236 = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]

from fractions import Fraction

import pytest

from conesing import ConeSingularity, QuadNum, build


@pytest.fixture(scope="session")
def abelian_cover() -> ConeSingularity:
    return build("abelian-cover")


@pytest.fixture(scope="session")
def p1xe() -> ConeSingularity:
    return build("p1xE")


@pytest.fixture(scope="session")
def quadrant() -> ConeSingularity:
    return build("quadrant-synthetic")


@pytest.fixture(scope="session")
def t_minus_exact() -> QuadNum:
    # threshold of the abelian-cover pencil: (7 + sqrt(17))/16
    return QuadNum(Fraction(7, 16), Fraction(1, 16), 17)


@pytest.fixture(scope="session")
def val_minus_exact() -> QuadNum:
    # -(23 + sqrt(17))/16
    return QuadNum(Fraction(-23, 16), Fraction(-1, 16), 17)

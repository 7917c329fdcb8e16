import pytest

from chdiag.epd import enumerate_diagrams, parse_epd
from chdiag.resolution import is_admissible
from chdiag.shadows import enumerate_shadows

EXAMPLE_1 = ("X[1, 5, 2, 4], X[18, 10, 19, 1], Y[5, 19, 6, 20], X[14, 2, 15, 3], "
             "X[3, 13, 4, 14], X[17, 12, 18, 13], X[9, 6, 10, 7], X[20, 16, 17, 15], "
             "X[7, 12, 8, 11], X[16, 9, 11, 8]")

TREFOIL = "X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]"
FIGURE_EIGHT = "X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]"
HOPF = "X[1,3,2,4],X[3,1,4,2]"


@pytest.fixture(scope="session")
def example_1():
    return parse_epd(EXAMPLE_1)


@pytest.fixture(scope="session")
def small_diagrams():
    """Every enumerated diagram with n <= 6 as (code, admissible)."""
    out = []
    for n in range(2, 7):
        for pm in enumerate_shadows(n):
            for code in enumerate_diagrams(pm):
                out.append((code, is_admissible(code)))
    return out

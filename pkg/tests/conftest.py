import pytest

from arrhom.geometry import Arrangement, Line
from arrhom.local_system import LocalSystem

# complete quadrilateral: the six lines through pairs of (0,0), (1,0), (0,1), (1,1)
QUADRILATERAL_LINES = (
    Line.from_coeffs(0, 1, 0),   # y = 0
    Line.from_coeffs(1, 0, 0),   # x = 0
    Line.from_coeffs(1, -1, 0),  # y = x
    Line.from_coeffs(1, 1, -1),  # x + y = 1
    Line.from_coeffs(1, 0, -1),  # x = 1
    Line.from_coeffs(0, 1, -1),  # y = 1
)


@pytest.fixture
def quadrilateral():
    return Arrangement(QUADRILATERAL_LINES)


@pytest.fixture
def quadrilateral_system():
    return LocalSystem(order=3, exponents=[1] * 6)


@pytest.fixture
def generic_triangle():
    return Arrangement(
        [
            Line.from_slope_intercept(0, 0),
            Line.from_slope_intercept(1, -2),
            Line.from_slope_intercept(-1, 3),
        ]
    )


def pencil(n, slopes=None):
    from fractions import Fraction

    if slopes is None:
        slopes = [Fraction(i) for i in range(n)]
    return Arrangement(Line.from_slope_intercept(s, 0) for s in slopes)

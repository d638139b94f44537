from fractions import Fraction

import pytest

from transgraph import LineArrangement, line_from_slope_intercept


def F(a, b=1):
    return Fraction(a, b)


@pytest.fixture
def three_lines():
    # slopes 0, 1, 2 -- simple, crossings at (0,0), (1,0), (2,2)
    return LineArrangement(
        (
            line_from_slope_intercept(F(0), F(0)),
            line_from_slope_intercept(F(1), F(0)),
            line_from_slope_intercept(F(2), F(-2)),
        )
    )


@pytest.fixture
def concurrent_lines():
    # all three meet at the origin
    return LineArrangement(
        (
            line_from_slope_intercept(F(0), F(0)),
            line_from_slope_intercept(F(1), F(0)),
            line_from_slope_intercept(F(2), F(0)),
        )
    )

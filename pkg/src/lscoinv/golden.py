"""Frozen reference data for family A at rank 3.

This is the fully worked 3x3 case (labels (3) > (2,1) > (1,1,1), i.e. the
trivial, reflection and sign characters of S_3).  The ``example05`` verify
suite and the regression tests compare freshly computed output against
these values with exact canonical equality.
"""

from __future__ import annotations

from .ring import LaurentPoly, RatFunc
from .springer import Label


def _p(*pairs) -> LaurentPoly:
    return LaurentPoly(dict(pairs))

def _r(num, den=None) -> RatFunc:
    return RatFunc(num, den if den is not None else LaurentPoly.one())


_ONE = _p((0, 1))
_DELTA = _p((0, 1)) * _p((0, 1), (4, -1)) * _p((0, 1), (6, -1))  # (1-t^4)(1-t^6)

LABELS = (
    Label("A", (3,)),
    Label("A", (2, 1)),
    Label("A", (1, 1, 1)),
)

D_VALUES = (0, 2, 6)

FAKE_DEGREES = (
    _p((0, 1)),
    _p((2, 1), (4, 1)),
    _p((6, 1)),
)

# symmetric 3x3 matrix of Molien series, common denominator (1-t^4)(1-t^6)
PL_MATRIX = tuple(
    tuple(_r(num, _DELTA) for num in row)
    for row in (
        (_p((0, 1)), _p((2, 1), (4, 1)), _p((6, 1))),
        (_p((2, 1), (4, 1)), _p((0, 1), (2, 1), (4, 1), (6, 1)), _p((2, 1), (4, 1))),
        (_p((6, 1)), _p((2, 1), (4, 1)), _p((0, 1))),
    )
)

K_MATRIX = (
    (_r(_ONE), _r(0), _r(0)),
    (_r(_p((2, 1))), _r(_ONE), _r(0)),
    (_r(_p((6, 1))), _r(_p((2, 1), (4, 1))), _r(_ONE)),
)

D_PIVOTS = (
    _r(_ONE),
    _r(_ONE, _p((0, 1), (2, -1))),
    _r(_ONE, _DELTA),
)

KOSTKA = (
    (_p((0, 1)), _p((0, 1)), _p((0, 1))),
    (_p(), _p((1, 1)), _p((1, 1), (2, 1))),
    (_p(), _p(), _p((3, 1))),
)

DETERMINANT = _r(_ONE, _p((0, 1), (2, -1)) * _p((0, 1), (4, -1)) * _p((0, 1), (6, -1)))

from lscoinv.ring import LaurentPoly, RatFunc


def lp(*pairs) -> LaurentPoly:
    """LaurentPoly from (exponent, coefficient) pairs."""
    return LaurentPoly(dict(pairs))


def rf(num, den=1) -> RatFunc:
    return RatFunc(num, den)


ONE = lp((0, 1))
T2 = lp((2, 1))
# 1 - t^2, 1 - t^4, 1 - t^6
G2 = lp((0, 1), (2, -1))
G4 = lp((0, 1), (4, -1))
G6 = lp((0, 1), (6, -1))

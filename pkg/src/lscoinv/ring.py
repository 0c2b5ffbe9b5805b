"""Exact arithmetic in Z[t, t^-1] and its fraction field Q(t).

``LaurentPoly`` is a sparse map {exponent: coefficient} with arbitrary
precision integer coefficients and no stored zeros.  ``RatFunc`` is a
reduced pair of Laurent polynomials kept in a canonical form, so that
``==`` on canonical representatives is semantic equality in Q(t).

Both types are immutable after construction and every operation is a pure
function returning a fresh value, so instances can be shared freely.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial quotient does not exist in Z[t, t^-1]."""


def _as_coeff_map(obj) -> dict[int, int]:
    if isinstance(obj, LaurentPoly):
        return dict(obj.coeffs)
    if isinstance(obj, int):
        return {0: obj} if obj else {}
    raise TypeError(f"cannot build a Laurent polynomial from {type(obj).__name__}")


class LaurentPoly:
    """An element of Z[t, t^-1] in canonical sparse form."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for e, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if not isinstance(e, int) or not isinstance(c, int):
                    raise TypeError("exponents and coefficients must be int")
                if c:
                    nc = data.get(e, 0) + c
                    if nc:
                        data[e] = nc
                    elif e in data:
                        del data[e]
        object.__setattr__(self, "coeffs", data)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def t_power(cls, e: int, c: int = 1) -> "LaurentPoly":
        return cls({e: c})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no minimal exponent")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no maximal exponent")
        return max(self.coeffs)

    def content(self) -> int:
        """gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs.values():
            g = int_gcd(g, c)
        return g

    def __getitem__(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(tuple(sorted(self.coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in _as_coeff_map(other).items():
            nc = out.get(e, 0) + c
            if nc:
                out[e] = nc
            elif e in out:
                del out[e]
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, LaurentPoly) else -_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        om = _as_coeff_map(other)
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in om.items():
                e = e1 + e2
                nc = out.get(e, 0) + c1 * c2
                if nc:
                    out[e] = nc
                elif e in out:
                    del out[e]
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers live in RatFunc")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute t -> t^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def inflate(self, k: int) -> "LaurentPoly":
        """Substitute t -> t^k (k >= 1)."""
        if k < 1:
            raise ValueError("inflate expects k >= 1")
        return LaurentPoly({e * k: c for e, c in self.coeffs.items()})

    def deflate(self, k: int) -> "LaurentPoly":
        """Substitute t^k -> t; every exponent must be divisible by k."""
        if any(e % k for e in self.coeffs):
            raise InexactDivisionError(f"exponent not divisible by {k}")
        return LaurentPoly({e // k: c for e, c in self.coeffs.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient in Z[t, t^-1]; raises InexactDivisionError otherwise."""
        if not isinstance(other, LaurentPoly):
            other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return LaurentPoly.zero()
        # shift both to ordinary polynomials and long-divide from the top
        sh_a, sh_b = self.min_exp(), other.min_exp()
        rem = dict(self.shifted(-sh_a).coeffs)
        div = other.shifted(-sh_b).coeffs
        dd = max(div)
        lead = div[dd]
        quo: dict[int, int] = {}
        while rem:
            rd = max(rem)
            if rd < dd:
                raise InexactDivisionError("division leaves a remainder")
            q, r = divmod(rem[rd], lead)
            if r:
                raise InexactDivisionError("quotient is not integral")
            quo[rd - dd] = q
            for e, c in div.items():
                ne = e + rd - dd
                nc = rem.get(ne, 0) - q * c
                if nc:
                    rem[ne] = nc
                elif ne in rem:
                    del rem[ne]
        return LaurentPoly(quo).shifted(sh_a - sh_b)

    def __call__(self, value: int | Fraction):
        """Evaluate at a nonzero rational point."""
        if not value and any(e < 0 for e in self.coeffs):
            raise ZeroDivisionError("negative exponents cannot be evaluated at 0")
        return sum((Fraction(value) ** e) * c for e, c in self.coeffs.items()) if self.coeffs else Fraction(0)

    # -- presentation -------------------------------------------------

    def to_text(self) -> str:
        """Canonical textual form ``c0 + c1*t^e1 + ...`` with exponents ascending."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self.coeffs)):
            c = self.coeffs[e]
            mag = f"{abs(c)}" if e == 0 else f"{abs(c)}*t^{e}"
            if i == 0:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self):
        return f"LaurentPoly({dict(sorted(self.coeffs.items()))!r})"

    def to_obj(self) -> dict:
        """JSON-ready encoding: {"coeffs": {"<exp>": coeff}} with exponent keys ascending."""
        return {"coeffs": {str(e): self.coeffs[e] for e in sorted(self.coeffs)}}

    @classmethod
    def from_obj(cls, obj: dict) -> "LaurentPoly":
        return cls({int(e): int(c) for e, c in obj["coeffs"].items()})


def _coerce(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly(_as_coeff_map(x))


# -- polynomial gcd ----------------------------------------------------

def _dense(p: LaurentPoly) -> list[int]:
    """Ordinary-polynomial coefficient list, constant term first (p must have min_exp 0)."""
    out = [0] * (p.max_exp() + 1)
    for e, c in p.coeffs.items():
        out[e] = c
    return out


def _dense_content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = int_gcd(g, c)
    return g or 1


def _dense_primitive(a: list[int]) -> list[int]:
    g = _dense_content(a)
    return [c // g for c in a]


def _dense_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        da, la = len(a) - 1, a[-1]
        a = [c * lb for c in a]
        for i, bc in enumerate(b):
            a[i + da - db] -= la * bc
        while a and a[-1] == 0:
            a.pop()
    return a


def laurent_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """A gcd in Z[t, t^-1], primitive with min exponent 0 and positive lowest coefficient.

    Computed by the primitive Euclidean algorithm after shifting both inputs
    to ordinary polynomials with nonzero constant term.
    """
    if p.is_zero() and q.is_zero():
        return LaurentPoly.zero()
    if p.is_zero() or q.is_zero():
        g = q if p.is_zero() else p
        g = g.shifted(-g.min_exp())
        prim = _dense_primitive(_dense(g))
        if prim[0] < 0:
            prim = [-c for c in prim]
        return LaurentPoly({i: c for i, c in enumerate(prim)})
    a = _dense_primitive(_dense(p.shifted(-p.min_exp())))
    b = _dense_primitive(_dense(q.shifted(-q.min_exp())))
    if len(a) < len(b):
        a, b = b, a
    while any(b):
        r = _dense_prem(a, b)
        a, b = b, (_dense_primitive(r) if any(r) else [])
    if a[0] < 0:
        a = [-c for c in a]
    g = LaurentPoly({i: c for i, c in enumerate(a)})
    # gcd of the shifted inputs is an ordinary poly; re-anchor at exponent 0
    return g.shifted(-g.min_exp()) if not g.is_zero() else g


# -- rational functions ------------------------------------------------

class RatFunc:
    """An element of Q(t) as a canonical reduced fraction of LaurentPolys.

    Canonical form: the denominator has minimal exponent 0, positive lowest
    coefficient, and shares no polynomial factor and no integer factor with
    the numerator.  Equality and hashing act on that form.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = LaurentPoly.zero(), LaurentPoly.one()
        else:
            g = laurent_gcd(num, den)
            if g.coeffs != {0: 1}:
                num = num.exact_div(g)
                den = den.exact_div(g)
            shift = den.min_exp()
            if shift:
                num = num.shifted(-shift)
                den = den.shifted(-shift)
            c = int_gcd(num.content(), den.content())
            if den[den.min_exp()] < 0:
                c = -c
            if c != 1:
                num = LaurentPoly({e: v // c for e, v in num.coeffs.items()})
                den = LaurentPoly({e: v // c for e, v in den.coeffs.items()})
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(0)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(1)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == LaurentPoly.one()

    def as_poly(self) -> LaurentPoly:
        if not self.is_poly():
            raise InexactDivisionError(f"{self} is not a Laurent polynomial")
        return self.num

    def __eq__(self, other) -> bool:
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_rf(other) - self

    def __mul__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def inverse(self) -> "RatFunc":
        return RatFunc(1) / self

    def bar(self) -> "RatFunc":
        """Substitute t -> t^-1 and re-canonicalize; an involution."""
        return RatFunc(self.num.bar(), self.den.bar())

    def series(self, order: int) -> LaurentPoly:
        """Expansion in ascending powers of t, truncated strictly below ``order``.

        The result satisfies self*den - num == 0 mod t^order after clearing.
        Raises InexactDivisionError if a truncated coefficient is not an
        integer (cannot happen for graded dimensions).
        """
        if self.is_zero():
            return LaurentPoly.zero()
        den = self.den  # canonical: min exp 0, nonzero constant term
        d0 = den[0]
        start = self.num.min_exp()
        coeffs: dict[int, Fraction] = {}
        out: dict[int, int] = {}
        for k in range(start, order):
            acc = Fraction(self.num[k])
            for e, c in den.coeffs.items():
                if e > 0 and (k - e) in coeffs:
                    acc -= c * coeffs[k - e]
            s = acc / d0
            coeffs[k] = s
            if s:
                if s.denominator != 1:
                    raise InexactDivisionError("series has non-integer coefficients")
                out[k] = int(s)
        return LaurentPoly(out)

    def __call__(self, value):
        dv = self.den(value)
        if not dv:
            raise ZeroDivisionError(f"pole at t={value}")
        return self.num(value) / dv

    def to_text(self) -> str:
        if self.is_poly():
            return self.num.to_text()
        return f"({self.num.to_text()}) / ({self.den.to_text()})"

    __str__ = to_text

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def to_obj(self) -> dict:
        return {"num": self.num.to_obj(), "den": self.den.to_obj()}

    @classmethod
    def from_obj(cls, obj: dict) -> "RatFunc":
        return cls(LaurentPoly.from_obj(obj["num"]), LaurentPoly.from_obj(obj["den"]))


def _coerce_rf(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (LaurentPoly, int)):
        return RatFunc(x)
    return NotImplemented


def bar(f: RatFunc) -> RatFunc:
    """The substitution t -> t^-1 on Q(t)."""
    return f.bar()


def series_expand(f: RatFunc, order: int) -> LaurentPoly:
    """Ascending Laurent series of ``f`` through exponents < ``order``."""
    return f.series(order)

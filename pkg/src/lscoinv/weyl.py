"""Irreducible characters and graded multiplicities for Weyl groups.

Family A at rank n is the symmetric group S_n (reflection representation of
dimension n-1); family B is the hyperoctahedral group W_n = (Z/2) wr S_n
acting on its rank-n reflection representation.  Throughout, the polynomial
grading is doubled: the reflection representation sits in degree 2, so all
graded dimensions are series in t^2.

Character values for S_n come from the Murnaghan-Nakayama rule; those of
W_n from the standard wreath-product construction, evaluated through the
power-sum expansion (each positive k-cycle splits as p_k(x) + p_k(y), each
negative one as p_k(x) - p_k(y)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .lsalgo import GradedMatrix
from .ring import LaurentPoly, RatFunc
from .springer import Label, partitions_of, raw_labels, sort_key


@dataclass(frozen=True)
class WeylType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "B"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")

    def order(self) -> int:
        n = factorial(self.rank)
        return n if self.family == "A" else (1 << self.rank) * n

    def reflection_dim(self) -> int:
        return self.rank - 1 if self.family == "A" else self.rank

    def degrees(self) -> tuple[int, ...]:
        """Fundamental degrees of the invariant ring."""
        if self.family == "A":
            return tuple(range(2, self.rank + 1))
        return tuple(2 * i for i in range(1, self.rank + 1))

    def triv_label(self) -> Label:
        if self.family == "A":
            return Label("A", (self.rank,))
        return Label("B", (self.rank,), ())

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class ConjClass:
    """A conjugacy class: cycle data, cardinality, and det(1 - t^2*w | reflection rep).

    ``cycles`` is a partition for family A and a (positive, negative) pair of
    partitions for family B.
    """

    cycles: tuple
    size: int
    det_t: LaurentPoly

    def to_obj(self) -> dict:
        if len(self.cycles) == 2 and all(isinstance(c, tuple) for c in self.cycles):
            cyc = {"positive": list(self.cycles[0]), "negative": list(self.cycles[1])}
        else:
            cyc = list(self.cycles)
        return {"cycles": cyc, "size": self.size}


def _det_poly_a(cycles: tuple[int, ...]) -> LaurentPoly:
    # permutation representation determinant, then strip the trivial summand
    out = LaurentPoly.one()
    for k in cycles:
        out = out * LaurentPoly({0: 1, 2 * k: -1})
    return out.exact_div(LaurentPoly({0: 1, 2: -1}))


def _det_poly_b(pos: tuple[int, ...], neg: tuple[int, ...]) -> LaurentPoly:
    out = LaurentPoly.one()
    for k in pos:
        out = out * LaurentPoly({0: 1, 2 * k: -1})
    for k in neg:
        out = out * LaurentPoly({0: 1, 2 * k: 1})
    return out


def _cycle_centralizer(cycles: tuple[int, ...], weight: int = 1) -> int:
    z = 1
    for k, m in Counter(cycles).items():
        z *= (weight * k) ** m * factorial(m)
    return z


def conjugacy_classes(wt: WeylType) -> list[ConjClass]:
    """Deterministically ordered conjugacy classes with sizes and det data."""
    if wt.family == "A":
        n = factorial(wt.rank)
        return [
            ConjClass(cycles=p, size=n // _cycle_centralizer(p), det_t=_det_poly_a(p))
            for p in partitions_of(wt.rank)
        ]
    out = []
    for a in range(wt.rank, -1, -1):
        for pos in partitions_of(a):
            for neg in partitions_of(wt.rank - a):
                z = _cycle_centralizer(pos, 2) * _cycle_centralizer(neg, 2)
                out.append(
                    ConjClass(
                        cycles=(pos, neg),
                        size=wt.order() // z,
                        det_t=_det_poly_b(pos, neg),
                    )
                )
    return out


@lru_cache(maxsize=None)
def _sym_char(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama evaluation of the S_n character ``shape`` at ``cycles``."""
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    total = 0
    m = len(shape)
    beta = [shape[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((nb if j == i else c for j, c in enumerate(beta)), reverse=True)
        newshape = tuple(
            c - (m - 1 - idx) for idx, c in enumerate(newbeta) if c - (m - 1 - idx) > 0
        )
        total += (-1) ** height * _sym_char(newshape, rest)
    return total


def _submultisets(parts: tuple[int, ...]):
    """Triples (chosen, count, complement) over sub-multisets of a partition.

    ``count`` is the number of ways to pick the chosen parts from the
    multiset, i.e. the product of binomial coefficients per part value.
    """
    groups = sorted(Counter(parts).items())
    acc = [((), 1, ())]
    for k, m in groups:
        nxt = []
        for chosen, cnt, rest in acc:
            for j in range(m + 1):
                nxt.append((chosen + (k,) * j, cnt * comb(m, j), rest + (k,) * (m - j)))
        acc = nxt
    return acc


def _wreath_char(alpha, beta, pos, neg) -> int:
    a = sum(alpha)
    total = 0
    for sp, cp, rp in _submultisets(pos):
        if sum(sp) > a:
            continue
        for sm, cm, rm in _submultisets(neg):
            if sum(sp) + sum(sm) != a:
                continue
            sign = -1 if (len(neg) - len(sm)) % 2 else 1
            total += (
                cp
                * cm
                * sign
                * _sym_char(alpha, tuple(sorted(sp + sm, reverse=True)))
                * _sym_char(beta, tuple(sorted(rp + rm, reverse=True)))
            )
    return total


@dataclass(frozen=True)
class CharTable:
    wt: WeylType
    labels: tuple[Label, ...]
    classes: tuple[ConjClass, ...]
    values: tuple[tuple[int, ...], ...]

    def label_index(self, lam: Label) -> int:
        try:
            return self.labels.index(lam)
        except ValueError:
            raise ValueError(f"unknown label {lam} for {self.wt}") from None

    def identity_index(self) -> int:
        ident = (1,) * self.wt.rank if self.wt.family == "A" else ((1,) * self.wt.rank, ())
        for i, c in enumerate(self.classes):
            if c.cycles == ident:
                return i
        raise AssertionError("identity class missing")

    def dim(self, lam: Label) -> int:
        return self.values[self.label_index(lam)][self.identity_index()]

    def to_obj(self) -> dict:
        return {
            "family": self.wt.family,
            "rank": self.wt.rank,
            "labels": [l.to_obj() for l in self.labels],
            "classes": [c.to_obj() for c in self.classes],
            "values": [list(row) for row in self.values],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "CharTable":
        wt = WeylType(obj["family"], obj["rank"])
        classes = conjugacy_classes(wt)
        want = [c.to_obj() for c in classes]
        if want != obj["classes"]:
            raise ValueError("class data does not match this code version")
        return cls(
            wt=wt,
            labels=tuple(Label.from_obj(o) for o in obj["labels"]),
            classes=tuple(classes),
            values=tuple(tuple(row) for row in obj["values"]),
        )


def enumerate_labels(wt: WeylType) -> list[Label]:
    """All labels in the total refinement order (open orbit first)."""
    return sorted(raw_labels(wt.family, wt.rank), key=lambda l: sort_key(wt, l))


def _validate_table(tab: CharTable) -> None:
    wt = tab.wt
    order = wt.order()
    if sum(c.size for c in tab.classes) != order:
        raise AssertionError("class sizes do not sum to the group order")
    ident = tab.identity_index()
    nl = len(tab.labels)
    for i in range(nl):
        if tab.values[i][ident] <= 0:
            raise AssertionError(f"non-positive dimension for {tab.labels[i]}")
        for j in range(i, nl):
            s = sum(
                c.size * tab.values[i][k] * tab.values[j][k]
                for k, c in enumerate(tab.classes)
            )
            if s != (order if i == j else 0):
                raise AssertionError(
                    f"row orthogonality fails at {tab.labels[i]}, {tab.labels[j]}"
                )
    for k in range(len(tab.classes)):
        for k2 in range(k, len(tab.classes)):
            s = sum(tab.values[i][k] * tab.values[i][k2] for i in range(nl))
            want = order // tab.classes[k].size if k == k2 else 0
            if s != want:
                raise AssertionError(f"column orthogonality fails at classes {k}, {k2}")


@lru_cache(maxsize=None)
def char_table(wt: WeylType) -> CharTable:
    """The full character table, validated for exact orthogonality."""
    labels = tuple(enumerate_labels(wt))
    classes = tuple(conjugacy_classes(wt))
    if wt.family == "A":
        values = tuple(
            tuple(_sym_char(l.alpha, c.cycles) for c in classes) for l in labels
        )
    else:
        values = tuple(
            tuple(_wreath_char(l.alpha, l.beta, c.cycles[0], c.cycles[1]) for c in classes)
            for l in labels
        )
    tab = CharTable(wt=wt, labels=labels, classes=classes, values=values)
    _validate_table(tab)
    return tab


def poincare_denominator(wt: WeylType) -> LaurentPoly:
    """prod_i (1 - t^(2 d_i)) over the fundamental degrees."""
    out = LaurentPoly.one()
    for d in wt.degrees():
        out = out * LaurentPoly({0: 1, 2 * d: -1})
    return out


def coinvariant_poincare(wt: WeylType) -> LaurentPoly:
    """Graded dimension of the coinvariant algebra (doubled grading)."""
    num = poincare_denominator(wt)
    for _ in range(wt.reflection_dim()):
        num = num.exact_div(LaurentPoly({0: 1, 2: -1}))
    return num


def graded_mult(wt: WeylType, lam: Label, mu: Label, table: CharTable | None = None) -> RatFunc:
    """Graded multiplicity of the simple ``mu`` in ``lam`` tensor the polynomial ring.

    This is the Molien series (1/|W|) sum_c |c| chi_mu(c) chi_lam(c) /
    det(1 - t^2 w_c); its denominator divides prod (1 - t^(2 d_i)).
    """
    tab = table if table is not None else char_table(wt)
    i, j = tab.label_index(lam), tab.label_index(mu)
    acc = RatFunc.zero()
    for k, c in enumerate(tab.classes):
        w = c.size * tab.values[i][k] * tab.values[j][k]
        if w:
            acc = acc + RatFunc(LaurentPoly({0: w}), c.det_t)
    return acc / wt.order()


def fake_degree(wt: WeylType, mu: Label, table: CharTable | None = None) -> LaurentPoly:
    """Graded multiplicity of ``mu`` in the coinvariant algebra, as a polynomial."""
    tab = table if table is not None else char_table(wt)
    f = graded_mult(wt, wt.triv_label(), mu, tab) * RatFunc(poincare_denominator(wt))
    return f.as_poly()


def molien_matrix(wt: WeylType, table: CharTable | None = None) -> GradedMatrix:
    """The symmetric matrix of pairwise Molien series, in total-refinement order."""
    tab = table if table is not None else char_table(wt)
    labels = list(tab.labels)
    n = len(labels)
    entries = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = graded_mult(wt, labels[i], labels[j], tab)
            entries[i][j] = v
            entries[j][i] = v
    return GradedMatrix(labels=tuple(labels), entries=tuple(tuple(r) for r in entries))

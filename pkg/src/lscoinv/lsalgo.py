"""The Lusztig-Shoji factorization over Q(t).

Given the symmetric Molien matrix P indexed by an orbit poset's total order
(open orbit first), there is a unique factorization

    P = transpose(K) * diag(D) * K

with K unitriangular and lower-triangular in the listed order.  The pivots
are peeled off by exact rank-one elimination starting at the closure-minimal
label (the last listed position): at that position the diagonal entry of
the residual *is* the pivot, and the scaled pivot row is the corresponding
row of K.  Triangularity with respect to the full closure order is a
theorem about genuine orbit data, so it is verified afterwards rather than
imposed; a violation means the order, d-function, or label dictionary fed
in was wrong, and raises.

``kostka_normalize`` turns the rows of K into modified Kostka polynomials:
entry (mu, lam) is defined by  K_{mu,lam}(t^2) = t^(d_lam) * bar(K[lam][mu]).
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import LaurentPoly, RatFunc
from .springer import Label, OrbitPoset


class FactorizationError(ValueError):
    """Singular pivot, asymmetric input, or an order/input mismatch."""


class NormalizationError(ValueError):
    """A normalized Kostka entry fails the parity or positivity-of-exponent shape."""


@dataclass(frozen=True)
class GradedMatrix:
    """A square matrix over Q(t) indexed by an ordered label list."""

    labels: tuple[Label, ...]
    entries: tuple[tuple[RatFunc, ...], ...]

    def __post_init__(self):
        n = len(self.labels)
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise ValueError("entries must form a square matrix matching labels")

    @property
    def size(self) -> int:
        return len(self.labels)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[RatFunc, ...]:
        return self.entries[i]

    def is_symmetric(self) -> bool:
        n = self.size
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def transpose(self) -> "GradedMatrix":
        n = self.size
        return GradedMatrix(
            labels=self.labels,
            entries=tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)),
        )

    def matmul(self, other: "GradedMatrix") -> "GradedMatrix":
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = RatFunc.zero()
                for k in range(n):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(tuple(row))
        return GradedMatrix(labels=self.labels, entries=tuple(out))

    def scale_rows(self, factors) -> "GradedMatrix":
        return GradedMatrix(
            labels=self.labels,
            entries=tuple(
                tuple(f * x for x in row) for f, row in zip(factors, self.entries)
            ),
        )

    @classmethod
    def identity(cls, labels) -> "GradedMatrix":
        n = len(labels)
        one, zero = RatFunc.one(), RatFunc.zero()
        return cls(
            labels=tuple(labels),
            entries=tuple(
                tuple(one if i == j else zero for j in range(n)) for i in range(n)
            ),
        )

    def permuted(self, perm) -> "GradedMatrix":
        """Simultaneous row/column reindexing: new position k holds old position perm[k]."""
        return GradedMatrix(
            labels=tuple(self.labels[p] for p in perm),
            entries=tuple(
                tuple(self.entries[p][q] for q in perm) for p in perm
            ),
        )

    def to_obj(self) -> dict:
        return {
            "labels": [l.to_obj() for l in self.labels],
            "entries": [[x.to_obj() for x in row] for row in self.entries],
        }


@dataclass(frozen=True)
class LSResult:
    """Factorization output: unitriangular K, diagonal D, normalized Kostka matrix.

    ``K[i][j]`` is the graded multiplicity of the j-th simple in the i-th
    standard object; ``kostka[i][j]`` is the normalized polynomial attached
    to (row label i, column label j).
    """

    labels: tuple[Label, ...]
    d: tuple[int, ...]
    K: GradedMatrix
    D: tuple[RatFunc, ...]
    kostka: tuple[tuple[LaurentPoly, ...], ...]

    def to_obj(self) -> dict:
        return {
            "labels": [l.to_obj() for l in self.labels],
            "K": [[x.to_obj() for x in row] for row in self.K.entries],
            "D": [x.to_obj() for x in self.D],
            "kostka": [[p.to_obj() for p in row] for row in self.kostka],
        }


def ls_factorize(P: GradedMatrix, poset: OrbitPoset) -> LSResult:
    """Factor P = transpose(K) * diag(D) * K against the poset's total order."""
    labels = poset.ordered_labels
    if P.labels != labels:
        raise FactorizationError("matrix labels do not match the poset total order")
    if not P.is_symmetric():
        raise FactorizationError("input matrix is not symmetric")

    n = P.size
    zero, one = RatFunc.zero(), RatFunc.one()
    R = [list(row) for row in P.entries]
    K = [[zero] * n for _ in range(n)]
    D: list[RatFunc] = [zero] * n

    for i in range(n - 1, -1, -1):
        pivot = R[i][i]
        if not pivot:
            raise FactorizationError(f"singular pivot at label {labels[i]}")
        D[i] = pivot
        row = [R[i][j] / pivot for j in range(i)] + [one]
        for j, v in enumerate(row):
            K[i][j] = v
        for a in range(i + 1):
            ra = row[a]
            if not ra:
                continue
            for b in range(a + 1):
                if row[b]:
                    v = R[a][b] - pivot * ra * row[b]
                    R[a][b] = v
                    R[b][a] = v

    for i in range(n):
        for j in range(n):
            if R[i][j]:
                raise FactorizationError("elimination left a nonzero residual")

    # the closure-order vanishing is a consequence, not a constraint: verify it
    for i in range(n):
        for j in range(n):
            if K[i][j] and not poset.leq_labels(labels[i], labels[j]):
                raise FactorizationError(
                    f"order/input mismatch: nonzero entry at ({labels[i]}, {labels[j]}) "
                    "outside the closure order"
                )

    kmat = GradedMatrix(labels=labels, entries=tuple(tuple(r) for r in K))
    d = poset.ordered_d
    return LSResult(
        labels=labels,
        d=d,
        K=kmat,
        D=tuple(D),
        kostka=_normalize(kmat, d),
    )


def _normalize(K: GradedMatrix, d) -> tuple[tuple[LaurentPoly, ...], ...]:
    n = K.size
    out = [[LaurentPoly.zero()] * n for _ in range(n)]
    for lam in range(n):
        shift = RatFunc(LaurentPoly.t_power(d[lam]))
        for mu in range(n):
            entry = K[lam, mu]
            if not entry:
                continue
            q = shift * entry.bar()
            if not q.is_poly():
                raise NormalizationError(
                    f"entry at ({K.labels[lam]}, {K.labels[mu]}) is not polynomial"
                )
            p = q.as_poly()
            if any(e < 0 for e in p.coeffs):
                raise NormalizationError(
                    f"parity/normalization failure at ({K.labels[lam]}, {K.labels[mu]}): "
                    "negative exponent after shift"
                )
            if any(e % 2 for e in p.coeffs):
                raise NormalizationError(
                    f"parity/normalization failure at ({K.labels[lam]}, {K.labels[mu]}): "
                    "odd exponent before halving"
                )
            out[mu][lam] = p.deflate(2)
    return tuple(tuple(r) for r in out)


def kostka_normalize(res: LSResult, poset: OrbitPoset) -> tuple[tuple[LaurentPoly, ...], ...]:
    """Normalized Kostka matrix of a factorization (entry (mu, lam) order)."""
    if res.labels != poset.ordered_labels:
        raise ValueError("result labels do not match the poset total order")
    return _normalize(res.K, poset.ordered_d)


def reconstruct(res: LSResult) -> GradedMatrix:
    """transpose(K) * diag(D) * K, for exactness checks."""
    return res.K.transpose().matmul(res.K.scale_rows(res.D))

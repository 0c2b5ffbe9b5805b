"""Orbit posets and dimension functions for the two implemented families.

Family A (rank n): labels are partitions of n ordered by dominance, with
d(p) = 2*n_invariant(p).  Family B (rank n): labels are bipartitions
(alpha; beta) of total size n ordered by dominance of the interleaved
sequences (a1, b1, a2, b2, ...), with d = 2*(2n(alpha) + 2n(beta) + |beta|).

Both d-functions strictly decrease along the closure order; ``build_poset``
checks this (and the other poset axioms) and refuses to return an object
that violates them.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # only for annotations; weyl imports this module at runtime
    from .weyl import WeylType


class PosetError(ValueError):
    """Fatal configuration error: the label data violate a poset invariant."""


@dataclass(frozen=True)
class Label:
    """An orbit / irreducible-representation label.

    Family A: ``alpha`` is the partition, ``beta`` is None.
    Family B: the ordered bipartition (alpha; beta).
    """

    family: str
    alpha: tuple[int, ...]
    beta: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.family not in ("A", "B"):
            raise ValueError(f"unknown family {self.family!r}")
        if (self.beta is None) != (self.family == "A"):
            raise ValueError("family A labels carry one partition, family B two")
        for part in (self.alpha,) + (() if self.beta is None else (self.beta,)):
            if any(x <= 0 for x in part) or list(part) != sorted(part, reverse=True):
                raise ValueError(f"not a partition: {part}")

    @property
    def size(self) -> int:
        return sum(self.alpha) + (sum(self.beta) if self.beta is not None else 0)

    def flattened(self, rank: int) -> tuple[int, ...]:
        """Fixed-length linearization used for tie-breaking and ordering.

        Family A: the partition padded to ``rank`` entries.  Family B: the
        interleaved sequence (a1, b1, a2, b2, ...) padded to 2*rank.
        """
        if self.family == "A":
            return tuple(self.alpha) + (0,) * (rank - len(self.alpha))
        out = []
        for i in range(rank):
            out.append(self.alpha[i] if i < len(self.alpha) else 0)
            out.append(self.beta[i] if i < len(self.beta) else 0)
        return tuple(out)

    def to_obj(self) -> dict:
        if self.family == "A":
            return {"partition": list(self.alpha)}
        return {"alpha": list(self.alpha), "beta": list(self.beta)}

    @classmethod
    def from_obj(cls, obj: dict) -> "Label":
        if "partition" in obj:
            return cls("A", tuple(obj["partition"]))
        return cls("B", tuple(obj["alpha"]), tuple(obj["beta"]))

    def __str__(self):
        if self.family == "A":
            return "(" + ",".join(map(str, self.alpha)) + ")"
        a = ",".join(map(str, self.alpha))
        b = ",".join(map(str, self.beta))
        return f"({a};{b})"


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in descending lexicographic order; ((),) for n = 0."""
    if n < 0:
        raise ValueError("negative size")
    if n == 0:
        return ((),)

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))


def raw_labels(family: str, rank: int) -> list[Label]:
    """Enumeration-order labels (before the total refinement is applied)."""
    if family == "A":
        return [Label("A", p) for p in partitions_of(rank)]
    out = []
    for a in range(rank, -1, -1):
        for pa in partitions_of(a):
            for pb in partitions_of(rank - a):
                out.append(Label("B", pa, pb))
    return out


def n_invariant(p: tuple[int, ...]) -> int:
    """The classical partition statistic sum_i (i-1)*p_i."""
    return sum(i * x for i, x in enumerate(p))


def d_value(wt: "WeylType", lam: Label) -> int:
    """Twice the fiber dimension attached to the orbit ``lam``; even, 0 at triv."""
    if lam.family != wt.family or lam.size != wt.rank:
        raise ValueError(f"label {lam} does not belong to {wt}")
    if lam.family == "A":
        return 2 * n_invariant(lam.alpha)
    return 2 * (2 * n_invariant(lam.alpha) + 2 * n_invariant(lam.beta) + sum(lam.beta))


def _dominates(xs: tuple[int, ...], ys: tuple[int, ...]) -> bool:
    """Partial sums of xs are <= the partial sums of ys, entrywise."""
    sx = sy = 0
    for x, y in zip(xs, ys):
        sx += x
        sy += y
        if sx > sy:
            return False
    return True


def closure_leq(wt: "WeylType", lam: Label, mu: Label) -> bool:
    """Whether the orbit of ``lam`` lies in the closure of the orbit of ``mu``."""
    if lam.size != mu.size:
        raise ValueError(f"size mismatch: {lam} vs {mu}")
    n = wt.rank
    return _dominates(lam.flattened(n), mu.flattened(n))


def sort_key(wt: "WeylType", lam: Label):
    """Total-order key: d ascending, ties by reverse-lex of the flattened label."""
    return (d_value(wt, lam), tuple(-x for x in lam.flattened(wt.rank)))


@dataclass(frozen=True)
class OrbitPoset:
    """A finite label set with closure order, d-function and a total refinement.

    ``labels`` is the raw enumeration order; ``leq[i][j]`` says labels[i] is
    in the closure of labels[j]; ``total_order`` lists raw indices with the
    open orbit (d = 0) first.
    """

    family: str
    rank: int
    labels: tuple[Label, ...]
    d: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]
    total_order: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def ordered_labels(self) -> tuple[Label, ...]:
        return tuple(self.labels[i] for i in self.total_order)

    @property
    def ordered_d(self) -> tuple[int, ...]:
        return tuple(self.d[i] for i in self.total_order)

    def index(self, lam: Label) -> int:
        return self.labels.index(lam)

    def leq_labels(self, lam: Label, mu: Label) -> bool:
        return self.leq[self.index(lam)][self.index(mu)]

    def minimum(self) -> Label | None:
        """The unique closure-minimal label, or None if there is no unique one."""
        mins = [i for i in range(self.size) if all(self.leq[i][j] for j in range(self.size))]
        return self.labels[mins[0]] if len(mins) == 1 else None

    def to_obj(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "labels": [l.to_obj() for l in self.labels],
            "d": list(self.d),
            "leq": [[1 if x else 0 for x in row] for row in self.leq],
            "total_order": list(self.total_order),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "OrbitPoset":
        return cls(
            family=obj["family"],
            rank=obj["rank"],
            labels=tuple(Label.from_obj(o) for o in obj["labels"]),
            d=tuple(obj["d"]),
            leq=tuple(tuple(bool(x) for x in row) for row in obj["leq"]),
            total_order=tuple(obj["total_order"]),
        )


def build_poset(wt: "WeylType") -> OrbitPoset:
    """Assemble and validate the orbit poset for a Weyl type.

    Raises PosetError if any structural invariant fails (the d-function must
    strictly decrease along the closure order, the order must be a genuine
    partial order, the open orbit must be the unique maximum with d = 0, and
    the unique minimum must carry d = 2 * sum(degrees - 1)).
    """
    labels = raw_labels(wt.family, wt.rank)
    n = len(labels)
    d = [d_value(wt, l) for l in labels]
    leq = [[closure_leq(wt, a, b) for b in labels] for a in labels]

    for i in range(n):
        if not leq[i][i]:
            raise PosetError(f"closure order not reflexive at {labels[i]}")
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise PosetError(f"closure order not antisymmetric on {labels[i]}, {labels[j]}")
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    raise PosetError(
                        f"closure order not transitive on {labels[i]}, {labels[j]}, {labels[k]}"
                    )
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and not d[i] > d[j]:
                raise PosetError(
                    f"d-function not strictly decreasing: d({labels[i]})={d[i]}, d({labels[j]})={d[j]}"
                )

    maxima = [i for i in range(n) if all(leq[j][i] for j in range(n))]
    if len(maxima) != 1 or d[maxima[0]] != 0:
        raise PosetError("open orbit is not the unique maximum with d = 0")
    minima = [i for i in range(n) if all(leq[i][j] for j in range(n))]
    expected_min_d = 2 * sum(dg - 1 for dg in wt.degrees())
    if len(minima) != 1 or d[minima[0]] != expected_min_d:
        raise PosetError(f"zero orbit must be the unique minimum with d = {expected_min_d}")

    order = sorted(range(n), key=lambda i: sort_key(wt, labels[i]))
    return OrbitPoset(
        family=wt.family,
        rank=wt.rank,
        labels=tuple(labels),
        d=tuple(d),
        leq=tuple(tuple(row) for row in leq),
        total_order=tuple(order),
    )


def _is_linear_extension(poset: OrbitPoset, order: tuple[int, ...]) -> bool:
    pos = {idx: k for k, idx in enumerate(order)}
    for i in range(poset.size):
        for j in range(poset.size):
            if i != j and poset.leq[i][j] and pos[j] > pos[i]:
                return False
    return True


def _all_linear_extensions(poset: OrbitPoset, cap: int) -> list[tuple[int, ...]]:
    """DFS over closure-descending listings; stops after ``cap`` many."""
    n = poset.size
    strictly_below = [
        {j for j in range(n) if j != i and poset.leq[j][i]} for i in range(n)
    ]
    out: list[tuple[int, ...]] = []
    placed: list[int] = []
    placed_set: set[int] = set()

    def rec():
        if len(out) >= cap:
            return
        if len(placed) == n:
            out.append(tuple(placed))
            return
        for i in range(n):
            if i in placed_set:
                continue
            # i may be listed next if everything above it is already listed
            above = {j for j in range(n) if j != i and poset.leq[i][j]}
            if above <= placed_set:
                placed.append(i)
                placed_set.add(i)
                rec()
                placed.pop()
                placed_set.remove(i)

    rec()
    return out


def refinements(poset: OrbitPoset, count: int, seed: int) -> list[tuple[int, ...]]:
    """``count`` distinct linear extensions of the closure order (open orbit first).

    Deterministic for a given seed; always includes ``poset.total_order``.
    If the poset admits fewer extensions than requested, all of them are
    returned.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    n = poset.size
    found: list[tuple[int, ...]] = [poset.total_order]
    seen = {poset.total_order}
    rng = random.Random(seed)
    attempts = 0
    while len(found) < count and attempts < 64 * count:
        attempts += 1
        remaining = set(range(n))
        order: list[int] = []
        while remaining:
            ready = sorted(
                i
                for i in remaining
                if all(j not in remaining for j in range(n) if j != i and poset.leq[i][j])
            )
            pick = rng.choice(ready)
            order.append(pick)
            remaining.remove(pick)
        tup = tuple(order)
        if tup not in seen:
            seen.add(tup)
            found.append(tup)
    if len(found) < count:
        # sampling stalled: enumerate exhaustively to honor "return all"
        for tup in _all_linear_extensions(poset, cap=count + 1):
            if len(found) >= count:
                break
            if tup not in seen:
                seen.add(tup)
                found.append(tup)
    out = found[:count]
    for tup in out:
        assert _is_linear_extension(poset, tup)
    return out

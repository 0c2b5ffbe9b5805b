import itertools
import json
from collections import Counter

import pytest

from conftest import G2, G4, G6, ONE, lp, rf
from lscoinv.ring import LaurentPoly, RatFunc
from lscoinv.springer import Label
from lscoinv.weyl import (
    CharTable,
    WeylType,
    char_table,
    coinvariant_poincare,
    conjugacy_classes,
    enumerate_labels,
    fake_degree,
    graded_mult,
    molien_matrix,
    poincare_denominator,
)


A = lambda *p: Label("A", tuple(p))
B = lambda a, b: Label("B", tuple(a), tuple(b))


def test_enumerate_labels_a3():
    assert enumerate_labels(WeylType("A", 3)) == [A(3), A(2, 1), A(1, 1, 1)]


def test_enumerate_labels_b1():
    assert enumerate_labels(WeylType("B", 1)) == [B((1,), ()), B((), (1,))]


def test_enumerate_labels_b2_count():
    assert len(enumerate_labels(WeylType("B", 2))) == 5


def test_char_table_a3_values():
    tab = char_table(WeylType("A", 3))
    # classes in enumeration order: (3), (2,1), (1,1,1) with sizes 2, 3, 1
    assert [c.cycles for c in tab.classes] == [(3,), (2, 1), (1, 1, 1)]
    assert [c.size for c in tab.classes] == [2, 3, 1]
    assert tab.values == (
        (1, 1, 1),    # trivial
        (-1, 0, 2),   # reflection
        (1, -1, 1),   # sign
    )
    assert tab.dim(A(2, 1)) == 2
    assert tab.values[tab.label_index(A(1, 1, 1))][1] == -1


def test_char_table_rejects_unknown_label():
    tab = char_table(WeylType("A", 3))
    with pytest.raises(ValueError):
        tab.label_index(A(4))
    with pytest.raises(ValueError):
        graded_mult(WeylType("A", 3), A(4), A(3))


# -- brute-force group oracle for the hyperoctahedral family -------------


def _signed_matrices(n):
    """All 2^n n! signed permutation matrices as {(row, col): +-1} maps."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            yield perm, signs


def _cycle_data(perm, signs):
    n = len(perm)
    seen = [False] * n
    pos, neg = [], []
    for start in range(n):
        if seen[start]:
            continue
        length, sign, i = 0, 1, start
        while not seen[i]:
            seen[i] = True
            sign *= signs[i]
            length += 1
            i = perm[i]
        (pos if sign == 1 else neg).append(length)
    return tuple(sorted(pos, reverse=True)), tuple(sorted(neg, reverse=True))


def _matrix_det_poly(perm, signs):
    """det(1 - t^2 M) for the signed permutation matrix M, by cofactor expansion."""
    n = len(perm)
    m = [[LaurentPoly.zero()] * n for _ in range(n)]
    for i in range(n):
        m[i][i] = m[i][i] + ONE
        m[perm[i]][i] = m[perm[i]][i] - lp((2, signs[i]))

    def det(rows, cols):
        if not cols:
            return ONE
        i = rows[0]
        total = LaurentPoly.zero()
        for k, j in enumerate(cols):
            if m[i][j].is_zero():
                continue
            minor = det(rows[1:], cols[:k] + cols[k + 1 :])
            term = m[i][j] * minor
            total = total + (term if k % 2 == 0 else -term)
        return total

    return det(tuple(range(n)), tuple(range(n)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_hyperoctahedral_table_against_brute_force(n):
    wt = WeylType("B", n)
    tab = char_table(wt)
    by_class = Counter()
    det_by_class = {}
    for perm, signs in _signed_matrices(n):
        key = _cycle_data(perm, signs)
        by_class[key] += 1
        det_by_class.setdefault(key, _matrix_det_poly(perm, signs))
    # class sizes match the centralizer-order formula
    assert {c.cycles: c.size for c in tab.classes} == dict(by_class)
    # det(1 - t^2 w) from cycle type matches the explicit matrix computation
    for c in tab.classes:
        assert c.det_t == det_by_class[c.cycles]
    # row orthogonality summed over actual group elements
    order = wt.order()
    class_index = {c.cycles: k for k, c in enumerate(tab.classes)}
    for i in range(len(tab.labels)):
        for j in range(i, len(tab.labels)):
            s = sum(
                tab.values[i][class_index[key]] * tab.values[j][class_index[key]] * cnt
                for key, cnt in by_class.items()
            )
            assert s == (order if i == j else 0)


def test_symmetric_group_det_polys_against_matrices():
    n = 3
    tab = char_table(WeylType("A", n))
    dets = {}
    for perm in itertools.permutations(range(n)):
        m = [[LaurentPoly.zero()] * n for _ in range(n)]
        for i in range(n):
            m[i][i] = m[i][i] + ONE
            m[perm[i]][i] = m[perm[i]][i] - lp((2, 1))
        # cofactor det of the permutation action, then strip the trivial summand
        def det(rows, cols):
            if not cols:
                return ONE
            i = rows[0]
            total = LaurentPoly.zero()
            for k, j in enumerate(cols):
                if m[i][j].is_zero():
                    continue
                term = m[i][j] * det(rows[1:], cols[:k] + cols[k + 1 :])
                total = total + (term if k % 2 == 0 else -term)
            return total

        seen = [False] * n
        cycles = []
        for s in range(n):
            if seen[s]:
                continue
            ln, i = 0, s
            while not seen[i]:
                seen[i] = True
                ln += 1
                i = perm[i]
            cycles.append(ln)
        key = tuple(sorted(cycles, reverse=True))
        dets.setdefault(key, det(tuple(range(n)), tuple(range(n))).exact_div(G2))
    for c in tab.classes:
        assert c.det_t == dets[c.cycles]


# -- Molien series -------------------------------------------------------


def test_graded_mult_a3_triv_triv():
    wt = WeylType("A", 3)
    assert graded_mult(wt, A(3), A(3)) == rf(ONE, G4 * G6)


def test_graded_mult_a3_triv_ref():
    wt = WeylType("A", 3)
    assert graded_mult(wt, A(3), A(2, 1)) == rf(lp((2, 1), (4, 1)), G4 * G6)


def test_graded_mult_a2_triv_sgn():
    # two-element Molien sum by hand: (1/2)(1/(1-t^2) - 1/(1+t^2)) = t^2/(1-t^4)
    wt = WeylType("A", 2)
    assert graded_mult(wt, A(2), A(1, 1)) == rf(lp((2, 1)), G4)


def test_fake_degrees_a3():
    wt = WeylType("A", 3)
    assert fake_degree(wt, A(1, 1, 1)) == lp((6, 1))
    assert fake_degree(wt, A(2, 1)) == lp((2, 1), (4, 1))
    assert fake_degree(wt, A(3)) == ONE


def test_fake_degree_b1_sign():
    assert fake_degree(WeylType("B", 1), B((), (1,))) == lp((2, 1))


def test_molien_matrix_a3_worked_example():
    P = molien_matrix(WeylType("A", 3))
    delta = G4 * G6
    c = lp((2, 1), (4, 1))
    expected = [
        [rf(ONE, delta), rf(c, delta), rf(lp((6, 1)), delta)],
        [rf(c, delta), rf(lp((0, 1), (2, 1), (4, 1), (6, 1)), delta), rf(c, delta)],
        [rf(lp((6, 1)), delta), rf(c, delta), rf(ONE, delta)],
    ]
    assert [list(row) for row in P.entries] == expected


def test_molien_matrix_a1_trivial_group():
    P = molien_matrix(WeylType("A", 1))
    assert P.entries == ((rf(1),),)


def test_molien_matrix_a2():
    P = molien_matrix(WeylType("A", 2))
    assert [list(r) for r in P.entries] == [
        [rf(ONE, G4), rf(lp((2, 1)), G4)],
        [rf(lp((2, 1)), G4), rf(ONE, G4)],
    ]


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("A", 4), ("B", 1), ("B", 2), ("B", 3)])
def test_molien_matrix_symmetric_and_denominators(family, rank):
    wt = WeylType(family, rank)
    P = molien_matrix(wt)
    denom = poincare_denominator(wt)
    n = P.size
    for i in range(n):
        for j in range(n):
            assert P.entries[i][j] == P.entries[j][i]
            if P.entries[i][j]:
                assert (rf(denom) / rf(P.entries[i][j].den)).is_poly()


@pytest.mark.parametrize("family,rank", [("A", 2), ("A", 3), ("A", 5), ("B", 1), ("B", 2), ("B", 3)])
def test_fake_degree_properties(family, rank):
    wt = WeylType(family, rank)
    tab = char_table(wt)
    total = LaurentPoly.zero()
    for mu in tab.labels:
        f = fake_degree(wt, mu, tab)
        assert all(e >= 0 and e % 2 == 0 for e in f.coeffs)
        assert all(c > 0 for c in f.coeffs.values())
        assert f(1) == tab.dim(mu)
        total = total + tab.dim(mu) * f
    assert total == coinvariant_poincare(wt)


def test_char_table_json_roundtrip():
    tab = char_table(WeylType("B", 2))
    blob = json.dumps(tab.to_obj())
    back = CharTable.from_obj(json.loads(blob))
    assert back == tab
    assert json.dumps(back.to_obj()) == blob


def test_weyl_type_validation():
    with pytest.raises(ValueError):
        WeylType("D", 4)
    with pytest.raises(ValueError):
        WeylType("A", 0)

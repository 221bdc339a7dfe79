from functools import reduce

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcw.arith import LaurentPoly, Poly, RatFunc, poly_divrem, q
from qcw.cyclotomic import cyclotomic
from qcw.errors import InvalidFamilyParams
from qcw.qseries import (FamilyKind, SummandFamily, one_minus_q_pow, pochhammer, q_bracket,
                         summand, truncated_sum)


def test_pochhammer_examples():
    assert pochhammer(1, 3, 2) == LaurentPoly(1 - q - q**4 + q**5)
    assert pochhammer(7, 5, 0) == LaurentPoly(1)
    assert pochhammer(-1, 2, 2) == LaurentPoly(-(1 - q) ** 2, -1)


@given(st.integers(-6, 6), st.integers(1, 5), st.integers(0, 6))
def test_pochhammer_recurrence(e, d, k):
    assert pochhammer(e, d, k + 1) == pochhammer(e, d, k) * one_minus_q_pow(e + d * k)


def test_q_bracket_negative_index():
    assert q_bracket(-1) == LaurentPoly.monomial(-1, -1)
    assert q_bracket(-1, 2) == LaurentPoly.monomial(-2, -1)
    assert q_bracket(3, 2) == LaurentPoly(1 + q**2 + q**4)
    for m in range(-6, 7):
        if m:
            lhs = RatFunc(q_bracket(m)) * RatFunc(1 - q)
            assert lhs == RatFunc(one_minus_q_pow(m))


def test_summand_examples():
    fam = SummandFamily(FamilyKind.THM1, 3, 1)
    assert summand(fam, 0) == RatFunc(1)
    expected = RatFunc(q_bracket(7) * LaurentPoly((1 - q) ** 6) * LaurentPoly(q**3),
                       LaurentPoly((1 - q**3) ** 6))
    assert summand(fam, 1) == expected
    assert summand(SummandFamily(FamilyKind.SEC5), 0) == RatFunc(LaurentPoly.monomial(-4, -1))


def test_family_validation():
    with pytest.raises(InvalidFamilyParams):
        SummandFamily(FamilyKind.THM1, 2, 1)
    with pytest.raises(InvalidFamilyParams):
        SummandFamily(FamilyKind.CONJ2, 1)
    assert SummandFamily(FamilyKind.THM2_NEG, 3, 5).r == -1
    SummandFamily(FamilyKind.GENERAL, 2, 1)


FAMILIES = [
    SummandFamily(FamilyKind.THM1, 3, 1),
    SummandFamily(FamilyKind.THM1, 4, -3),
    SummandFamily(FamilyKind.THM1, 5, 2),
    SummandFamily(FamilyKind.THM2_NEG, 3),
    SummandFamily(FamilyKind.CONJ2, 4),
    SummandFamily(FamilyKind.SEC5),
    SummandFamily(FamilyKind.GENERAL, 2, 1),
    SummandFamily(FamilyKind.GENERAL, 2, -1),
]


@pytest.mark.parametrize("family", FAMILIES, ids=lambda f: f"{f.kind.value}-{f.d}-{f.r}")
def test_truncated_sum_matches_pairwise_addition(family):
    acc = RatFunc(0)
    for M in range(7):
        acc = acc + summand(family, M)
        assert truncated_sum(family, M) == acc


def test_truncated_sum_small_cases():
    fam = SummandFamily(FamilyKind.THM1, 3, 1)
    assert truncated_sum(fam, 0) == RatFunc(1)
    total = truncated_sum(fam, 4)
    _, rem = poly_divrem(total.num.cleared(), cyclotomic(5) ** 4)
    assert rem.is_zero()


@pytest.mark.parametrize("d,r", [(3, 1), (3, -1), (4, 1), (4, -3), (5, 2), (5, -1)])
def test_tail_summands_vanish_mod_phi(d, r):
    # beyond the shorter truncation point every summand already carries Phi_n
    n = next(n for n in range(max(d - r, 2), 60) if (n + r) % d == 0)
    for n in (n, n + d):
        start = ((d - 1) * n - r) // d + 1
        for k in range(start, n):
            top = pochhammer(r, d, k).cleared()
            assert poly_divrem(top, cyclotomic(n))[1].is_zero(), (d, r, n, k)


def test_truncated_sum_reduced_once_agrees_with_fold():
    fam = SummandFamily(FamilyKind.THM1, 3, -1)
    fold = reduce(lambda acc, k: acc + summand(fam, k), range(5), RatFunc(0))
    assert truncated_sum(fam, 4) == fold
    assert isinstance(fold.den.base, Poly)

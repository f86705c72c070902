"""Tests for the exact operator layer: composition, deformed commutators,
truncation bookkeeping, squared matrix elements and the numeric bridge."""

import math
from fractions import Fraction as Q

import pytest

from sp4q.fock import FockSpace, FockState
from sp4q.ops import (
    NumOp,
    QOperator,
    SafeSubspace,
    classical_gram,
    diagonal_spectrum,
    first_witness,
    gram,
    gram_squared_element,
    is_zero_on,
    q_commutator,
    to_numeric,
)
from sp4q.qnum import LaurentPoly, ONE, QRationalFn, q_int


# Minimal q-boson mode operators, built inline so this module does not
# depend on the algebra layer.


def creator(space, mode):
    def rule(st):
        if mode == 1:
            return FockState(st.n1 + 1, st.nm1), ONE
        return FockState(st.n1, st.nm1 + 1), ONE

    return QOperator.from_rule(space, rule, nu_raise=1)


def annihilator(space, mode):
    def rule(st):
        n = st.n1 if mode == 1 else st.nm1
        if n == 0:
            return None
        if mode == 1:
            return FockState(st.n1 - 1, st.nm1), q_int(n)
        return FockState(st.n1, st.nm1 - 1), q_int(n)

    return QOperator.from_rule(space, rule, nu_lower=1)


def test_declared_bounds_are_enforced():
    space = FockSpace(3)
    with pytest.raises(ValueError):
        QOperator(space, {(space.index(FockState(1, 0)), 0): ONE}, nu_raise=0)
    with pytest.raises(ValueError):
        QOperator(space, {(0, 0): LaurentPoly.zero()})


def test_compose_number_operator():
    space = FockSpace(4)
    num1 = creator(space, 1) @ annihilator(space, 1)
    sub = SafeSubspace(space, 4)  # nu-preserving product is safe everywhere
    for state, value in diagonal_spectrum(num1, sub):
        assert value == QRationalFn(q_int(state.n1))
    assert num1.entry(FockState(1, 0), FockState(1, 0)) == q_int(1)


def test_q_commutator_of_mode_operators():
    space = FockSpace(6)
    a1, ad1 = annihilator(space, 1), creator(space, 1)
    res = q_commutator(a1, ad1, 0)
    assert res.climb == 1
    for state, value in diagonal_spectrum(res, SafeSubspace(space, 5)):
        assert value == QRationalFn(q_int(state.n1 + 1) - q_int(state.n1))
    # the same holds a fortiori on the smaller window nu <= cutoff - 2
    for state, value in diagonal_spectrum(res, SafeSubspace(space, 4)):
        assert value == QRationalFn(q_int(state.n1 + 1) - q_int(state.n1))


def test_truncation_makes_top_shell_untrustworthy():
    # [a_1, a_-1^dag] = 0 exactly, but the truncated product lies at nu = cutoff.
    space = FockSpace(5)
    res = q_commutator(annihilator(space, 1), creator(space, -1), 0)
    assert res.climb == 1
    assert is_zero_on(res, SafeSubspace(space, 4))
    assert not is_zero_on(res, SafeSubspace(space, 5))
    src, dst, poly = first_witness(res, SafeSubspace(space, 5))
    assert src.nu == 5 and dst.nu == 5
    assert not poly.is_zero


def test_climb_bookkeeping_through_composition():
    space = FockSpace(8)
    raise2 = creator(space, 1) @ creator(space, 1)
    lower2 = annihilator(space, 1) @ annihilator(space, 1)
    assert raise2.climb == 2 and raise2.nu_raise == 2
    assert lower2.climb == 0 and lower2.nu_lower == 2
    assert (raise2 @ lower2).climb == 2  # lowers first: no extra headroom used
    assert (lower2 @ raise2).climb == 2  # raises first: climbs by 2
    assert (raise2 @ raise2).climb == 4


def test_column_and_power():
    space = FockSpace(5)
    ad1 = creator(space, 1)
    col = ad1.power(3).column(FockState(0, 0))
    assert col == {FockState(3, 0): ONE}
    assert ad1.power(3).climb == 3


def test_gram_squared_elements():
    space = FockSpace(10)
    jplus = creator(space, 1) @ annihilator(space, -1)
    # squared element of J+ between normalized states is [j-m][j+m+1]
    val = gram_squared_element(jplus, FockState(1, 1), FockState(0, 2))
    assert val == QRationalFn(q_int(2) * q_int(1))
    for src in space.states:
        if src.nm1 == 0 or src.nu == space.cutoff:
            continue
        dst = FockState(src.n1 + 1, src.nm1 - 1)
        expect = q_int(int(src.j - src.m)) * q_int(int(src.j + src.m) + 1)
        assert gram_squared_element(jplus, dst, src) == QRationalFn(expect)


def test_gram_squared_classical():
    # classical I+ = b_1^dag b_-1: squared element (i - i0)(i + i0 + 1)
    space = FockSpace(6)

    def b_lower(mode):
        def rule(st):
            n = st.n1 if mode == 1 else st.nm1
            if n == 0:
                return None
            dst = FockState(st.n1 - 1, st.nm1) if mode == 1 else FockState(st.n1, st.nm1 - 1)
            return dst, LaurentPoly.const(n)

        return QOperator.from_rule(space, rule, nu_lower=1)

    iplus = creator(space, 1) @ b_lower(-1)
    val = gram_squared_element(iplus, FockState(2, 0), FockState(1, 1), classical_gram)
    assert val == QRationalFn(LaurentPoly.const(2))


def test_sqrt_flag_algebra():
    space = FockSpace(3)
    ident = QOperator.identity(space)
    two = q_int(2)
    flagged = ident.times_sqrt(two)
    assert flagged.sqrt_sq == two
    # multiplying two sqrt([2]) factors absorbs [2] exactly
    prod = flagged @ flagged
    assert prod.sqrt_sq is None
    assert prod.entry(FockState(0, 0), FockState(0, 0)) == two
    # a second times_sqrt collapses the flag the same way
    assert flagged.times_sqrt(two).entries == prod.entries
    with pytest.raises(ValueError):
        flagged + ident
    zero = QOperator.zero(space)
    assert (flagged + zero.scale(1)).sqrt_sq == two


def test_shared_denominators_cross_multiply():
    space = FockSpace(2)
    a = QOperator.identity(space).over(q_int(2))
    b = QOperator.identity(space)
    total = a + b
    sub = SafeSubspace(space, 2)
    for _, value in diagonal_spectrum(total, sub):
        assert value == QRationalFn(ONE + q_int(2), q_int(2))
    assert is_zero_on(a + (-b) - (a - b), sub)


def test_diagonal_spectrum_rejects_off_diagonal():
    space = FockSpace(3)
    with pytest.raises(ValueError):
        diagonal_spectrum(creator(space, 1), SafeSubspace(space, 2))


def test_to_numeric_entries_and_adjointness():
    space = FockSpace(6)
    ad1, a1 = creator(space, 1), annihilator(space, 1)
    num = to_numeric(ad1, 2.0)
    key = (space.index(FockState(2, 0)), space.index(FockState(1, 0)))
    assert num.entries[key] == pytest.approx(math.sqrt(2.5), rel=1e-14)
    for q in (0.7, 1.3):
        lhs = to_numeric(a1, q)
        rhs = to_numeric(ad1, q).transpose()
        diff = lhs - rhs
        scale = 1.0 + max(lhs.max_abs(), rhs.max_abs())
        assert diff.max_abs() <= 1e-12 * scale


def test_numeric_composition_matches_exact():
    space = FockSpace(6)
    ad1, a1 = creator(space, 1), annihilator(space, 1)
    q = 1.3
    exact_prod = to_numeric(ad1 @ a1, q)
    num_prod = to_numeric(ad1, q) @ to_numeric(a1, q)
    assert (exact_prod - num_prod).max_abs() <= 1e-12 * (1 + exact_prod.max_abs())


def test_truncation_soundness_window_agreement():
    small, large = FockSpace(8), FockSpace(10)
    for build in (lambda sp: creator(sp, 1) @ creator(sp, -1),
                  lambda sp: q_commutator(annihilator(sp, 1), creator(sp, 1), 0)):
        op_small, op_large = build(small), build(large)
        window = 8 - op_small.climb
        by_state_small = {
            (small.states[d], small.states[s]): poly
            for (d, s), poly in op_small.entries.items()
            if small.states[s].nu <= window
        }
        by_state_large = {
            (large.states[d], large.states[s]): poly
            for (d, s), poly in op_large.entries.items()
            if large.states[s].nu <= window
        }
        assert by_state_small == by_state_large

"""Tests for the truncated two-mode Fock space and its labelings."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from sp4q.fock import (
    FockSpace,
    FockState,
    TripleConvention,
    TripleLabel,
    pair_from_triple,
    triple_from_pair,
)


def pairs(states):
    return [(st.n1, st.nm1) for st in states]


def test_enumeration_is_lexicographic_in_nu_then_nu1():
    space = FockSpace(2)
    assert pairs(space.even_states()) == [(0, 0), (0, 2), (1, 1), (2, 0)]
    assert pairs(FockSpace(1).odd_states()) == [(0, 1), (1, 0)]
    assert pairs(space.states) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_dimension_formula():
    for cutoff in range(0, 13):
        space = FockSpace(cutoff)
        assert space.dimension == (cutoff + 1) * (cutoff + 2) // 2


def test_quantum_numbers():
    state = FockState(3, 1)
    assert state.nu == 4
    assert state.parity == 0
    assert state.j == 2
    assert state.m == 1
    assert FockState(0, 1).m == Q(-1, 2)
    assert FockState(0, 1).parity == 1


def test_state_validation():
    with pytest.raises(ValueError):
        FockState(-1, 0)
    with pytest.raises(ValueError):
        TripleLabel(0, -2, 0)


def test_index_round_trip():
    space = FockSpace(7)
    for i, state in enumerate(space.states):
        assert space.index(state) == i
    assert FockState(8, 0) not in space
    assert FockState(3, 4) in space


def test_triple_label_examples():
    assert triple_from_pair(FockState(3, 1), TripleConvention.MIN_N0) == TripleLabel(1, 1, 0)
    assert triple_from_pair(FockState(2, 2), TripleConvention.MAX_N0) == TripleLabel(0, 2, 0)
    assert triple_from_pair(FockState(2, 2), TripleConvention.MIN_N0) == TripleLabel(1, 0, 1)
    assert pair_from_triple(TripleLabel(0, 3, 0)) == FockState(3, 3)


def test_triple_rejects_odd_sector():
    with pytest.raises(ValueError):
        triple_from_pair(FockState(2, 1), TripleConvention.MIN_N0)


def test_triple_round_trip_at_cutoff_20():
    space = FockSpace(20)
    for state in space.even_states():
        for conv in TripleConvention:
            t = triple_from_pair(state, conv)
            assert pair_from_triple(t) == state
        tmin = triple_from_pair(state, TripleConvention.MIN_N0)
        assert tmin.n0 in (0, 1)
        assert tmin.n0 % 2 == state.n1 % 2
        tmax = triple_from_pair(state, TripleConvention.MAX_N0)
        assert tmax.n0 == min(state.n1, state.nm1)
        assert min(tmax.n1, tmax.nm1) == 0


@given(
    st.integers(min_value=0, max_value=10),
    st.integers(min_value=0, max_value=1),
    st.integers(min_value=0, max_value=10),
)
def test_min_n0_inverts_any_minimal_triple(n1, n0, nm1):
    t = TripleLabel(n1, n0, nm1)
    assert triple_from_pair(pair_from_triple(t), TripleConvention.MIN_N0) == t


@given(st.integers(min_value=0, max_value=10), st.integers(min_value=0, max_value=10))
def test_max_n0_inverts_any_maximal_triple(a, n0):
    # maximal-n0 triples have at least one outer entry equal to zero
    for t in (TripleLabel(a, n0, 0), TripleLabel(0, n0, a)):
        assert triple_from_pair(pair_from_triple(t), TripleConvention.MAX_N0) == t


def test_shell_is_ordered_by_descending_weight():
    space = FockSpace(6)
    row = space.shell(4)
    assert pairs(row) == [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)]
    assert [st.m for st in row] == [2, 1, 0, -1, -2]


def test_sector_filters():
    space = FockSpace(5)
    assert pairs(space.sector(nu=3)) == [(0, 3), (1, 2), (2, 1), (3, 0)]
    assert pairs(space.sector(parity=1, m=Q(1, 2))) == [(1, 0), (2, 1), (3, 2)]
    evens = space.even_states()
    assert all(st.parity == 0 for st in evens)
    assert len(evens) + len(space.odd_states()) == space.dimension

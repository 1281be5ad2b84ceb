import math

import pytest
from hypothesis import given, settings, strategies as st

from qlitho.errors import CapExceeded, DuplicateTerm, EmptyState, ParseError
from qlitho.fock import (
    MAX_TOTAL,
    Mode,
    TwoModeState,
    apply_annihilation,
    apply_creation,
    inner_product,
    make_state,
    norm_sq,
    truncate,
)
from qlitho.states import coherent_truncated, noon

H = 1 / math.sqrt(2)


def poisson_tail(mean, cutoff, extra=100):
    return math.fsum(math.exp(-mean) * mean**n / math.factorial(n) for n in range(cutoff + 1, cutoff + extra))


def test_make_state_normalized_pair():
    s = make_state({(2, 0): H, (0, 2): H}, normalize=False)
    assert s.normalized
    assert len(s) == 2
    assert norm_sq(s) == pytest.approx(1.0, abs=1e-12)


def test_make_state_normalizes_single_term():
    s = make_state({(1, 0): 2}, normalize=True)
    assert dict(s.terms) == {(1, 0): 1 + 0j}


def test_make_state_rejects_all_zero():
    with pytest.raises(EmptyState):
        make_state({(0, 0): 0})


def test_make_state_cap():
    make_state({(MAX_TOTAL, 0): 1})
    with pytest.raises(CapExceeded):
        make_state({(MAX_TOTAL, 1): 1})


def test_make_state_drops_zero_terms_and_sorts():
    s = make_state({(0, 2): 1, (1, 1): 0, (0, 1): 1}, normalize=False)
    assert list(s.terms) == [(0, 1), (0, 2)]
    assert not s.normalized


def test_annihilate_c_on_fock():
    out = apply_annihilation(make_state({(2, 0): 1}), Mode.C)
    assert dict(out.terms) == {(1, 0): pytest.approx(math.sqrt(2))}


def test_annihilate_vacuum_mode_gives_zero_state():
    out = apply_annihilation(make_state({(2, 0): 1}), "d")
    assert out.is_zero
    assert not out.normalized
    assert norm_sq(out) == 0.0


def test_annihilate_superposition():
    out = apply_annihilation(make_state({(1, 0): 1, (0, 1): 1}), Mode.C)
    assert dict(out.terms) == {(0, 0): pytest.approx(H)}


def test_inner_products():
    a = make_state({(2, 0): 1})
    b = make_state({(0, 2): 1})
    assert inner_product(a, a) == 1
    assert inner_product(a, b) == 0
    assert inner_product(noon(5, 0.4), noon(5, 0.4)) == pytest.approx(1.0, abs=1e-12)


def test_inner_product_conjugate_linear_in_first():
    a = make_state({(1, 0): 1})
    assert inner_product(a.scaled(1j), a) == pytest.approx(-1j)
    assert inner_product(a, a.scaled(1j)) == pytest.approx(1j)


def test_norm_sq_examples():
    assert norm_sq(noon(3)) == pytest.approx(1.0, abs=1e-15)
    assert norm_sq(TwoModeState({})) == 0.0
    assert norm_sq(make_state({(1, 0): 2}, normalize=False)) == 4.0


def test_truncate_keeps_small_state():
    s, rep = truncate(noon(2), 2)
    assert dict(s.terms) == pytest.approx(dict(noon(2).terms))
    assert rep.discarded_mass == 0.0


def test_truncate_everything_removed():
    with pytest.raises(EmptyState):
        truncate(noon(4), 3)


def test_truncate_partial_mass():
    s, rep = truncate(make_state({(0, 0): 1, (3, 0): 1}), 2)
    assert rep.discarded_mass == pytest.approx(0.5)
    assert dict(s.terms) == {(0, 0): pytest.approx(1.0)}


def test_truncate_coherent_tail():
    # build a wide coherent(1,1) then cut it at 8
    wide, _ = coherent_truncated(1, 1, 20)
    _, rep = truncate(wide, 8)
    tail = poisson_tail(1.0, 8)
    expected = 2 * tail - tail * tail
    assert rep.discarded_mass < 1e-4
    assert rep.discarded_mass == pytest.approx(expected, rel=1e-6)


def test_from_dict_errors():
    with pytest.raises(DuplicateTerm):
        TwoModeState.from_dict({"terms": [{"nc": 1, "nd": 1, "re": 1, "im": 0}] * 2, "normalized": False})
    with pytest.raises(ParseError, match=r"terms\[0\]\.nc"):
        TwoModeState.from_dict({"terms": [{"nc": "x", "nd": 1, "re": 1, "im": 0}], "normalized": False})
    with pytest.raises(EmptyState):
        TwoModeState.from_dict({"terms": [{"nc": 0, "nd": 1, "re": 0, "im": 0}], "normalized": True})


# properties

small_counts = st.integers(min_value=0, max_value=6)
amps = st.complex_numbers(max_magnitude=2.0, allow_nan=False, allow_infinity=False)
states = st.dictionaries(st.tuples(small_counts, small_counts), amps, min_size=1, max_size=6).filter(
    lambda t: any(abs(a) > 1e-3 for a in t.values())
)


@given(n_c=small_counts, n_d=small_counts, mode=st.sampled_from(list(Mode)))
def test_commutator_is_identity_on_basis(n_c, n_d, mode):
    s = make_state({(n_c, n_d): 1})
    lhs = apply_creation(apply_annihilation(s, mode), mode)  # a† a
    rhs = apply_annihilation(apply_creation(s, mode), mode)  # a a†
    diff = rhs + lhs.scaled(-1)
    assert dict(diff.terms).keys() <= {(n_c, n_d)}
    assert diff.amplitude(n_c, n_d) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=60)
@given(a=states, b=states, x=amps, y=amps, mode=st.sampled_from(list(Mode)))
def test_annihilation_is_linear(a, b, x, y, mode):
    psi = make_state(a, normalize=False)
    chi = make_state(b, normalize=False)
    left = apply_annihilation(psi.scaled(x) + chi.scaled(y), mode)
    right = apply_annihilation(psi, mode).scaled(x) + apply_annihilation(chi, mode).scaled(y)
    keys = set(left.terms) | set(right.terms)
    for n_c, n_d in keys:
        assert abs(left.amplitude(n_c, n_d) - right.amplitude(n_c, n_d)) <= 1e-12


@given(t=states)
def test_make_state_normalizes(t):
    assert norm_sq(make_state(t, normalize=True)) == pytest.approx(1.0, abs=1e-12)


@given(t=states, cutoff=st.integers(0, 6))
def test_truncate_preserves_weight_ordering(t, cutoff):
    s = make_state(t)
    try:
        kept, _ = truncate(s, cutoff)
    except EmptyState:
        return
    keys = list(kept.terms)
    for p in keys:
        for q in keys:
            if abs(s.terms[p]) < abs(s.terms[q]):
                assert abs(kept.terms[p]) <= abs(kept.terms[q])

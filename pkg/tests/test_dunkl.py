"""Dunkl operator calculus: atoms, exact divided differences, commuting
family, Hamiltonian forms, the observable survey, and the coupling
predicate (checked against an enumeration oracle)."""

import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qalg.dunkl import (
    Dunkl,
    Exchange,
    LosevInput,
    Mult,
    Partial,
    XPolynomial,
    apply_atom,
    apply_crea_ann,
    apply_dunkl,
    apply_exchange,
    apply_mult,
    apply_partial,
    apply_word,
    check_dunkl_commutativity,
    compare_hamiltonians,
    exact_divide_by_difference,
    hamiltonian_apply,
    hamiltonian_identity_check,
    losev_simple,
    monomials_up_to,
    observables_span_survey,
    symmetrize,
)
from qalg.errors import BudgetExceeded, DivisionNotExact
from qalg.fields import NuPoly

F = Fraction


def mono(N, *expo):
    return XPolynomial.monomial(N, expo)


def nu_times(k):
    return NuPoly.of([0, k])


# -- atoms ------------------------------------------------------------------------


def test_exchange_swaps_exponents():
    f = mono(2, 2, 1)  # x1^2 x2
    assert apply_exchange(1, 2, f) == mono(2, 1, 2)


def test_partial_derivative():
    assert apply_partial(1, mono(2, 3, 0)) == XPolynomial(2, {(2, 0): NuPoly.constant(3)})


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)),
                min_size=1, max_size=6))
@settings(max_examples=40)
def test_exchange_is_an_involution(expos):
    f = XPolynomial(3, {e: NuPoly.constant(1) for e in expos})
    g = apply_exchange(1, 2, apply_exchange(1, 2, f))
    assert g == f


def test_atom_index_errors():
    with pytest.raises(IndexError):
        apply_mult(3, mono(2, 0, 0))
    with pytest.raises(IndexError):
        apply_exchange(1, 1, mono(2, 0, 0))
    with pytest.raises(IndexError):
        apply_crea_ann(1, 2, mono(2, 0, 0))


def test_exact_division_catches_inexact_input():
    with pytest.raises(DivisionNotExact):
        exact_divide_by_difference(XPolynomial.one(2), 1, 2)


def test_exact_division_round_trip_against_multiplication():
    # multiplication is the oracle: build g = (x1 - x2) h, divide back
    rng = random.Random(2)
    diff = XPolynomial.variable(3, 1) - XPolynomial.variable(3, 2)
    for _ in range(30):
        terms = {}
        for e in monomials_up_to(3, 3):
            if rng.random() < 0.3:
                terms[e] = NuPoly.of([rng.randint(-2, 2), rng.randint(-2, 2)])
        h = XPolynomial(3, terms)
        if h.is_zero():
            continue
        assert exact_divide_by_difference(diff * h, 1, 2) == h


# -- dunkl operators ---------------------------------------------------------------


def test_dunkl_kills_constants():
    assert apply_dunkl(1, XPolynomial.one(3)).is_zero()


def test_dunkl_on_x1_two_particles():
    # D1(x1) = 1 + 2 nu: the derivative plus quotient (x1-x2)/(x1-x2)
    out = apply_dunkl(1, mono(2, 1, 0))
    assert out == XPolynomial(2, {(0, 0): NuPoly.of([1, 2])})


def test_dunkl_on_x2_two_particles():
    # D1(x2) = -2 nu
    out = apply_dunkl(1, mono(2, 0, 1))
    assert out == XPolynomial(2, {(0, 0): NuPoly.of([0, -2])})


def test_dunkl_on_x1_general_particle_count():
    for N in (2, 3, 4):
        out = apply_dunkl(1, XPolynomial.variable(N, 1))
        assert out == XPolynomial(N, {(0,) * N: NuPoly.of([1, 2 * (N - 1)])})


@pytest.mark.parametrize("N", [2, 3, 4])
def test_dunkl_commutativity_degree6(N):
    rep = check_dunkl_commutativity(N, 6)
    assert rep["all_zero"]
    assert rep["identities_checked"] == math.comb(N, 2) * len(monomials_up_to(N, 6))


def test_negative_control_pair_does_not_commute():
    rep = check_dunkl_commutativity(2, 4, negative_control=True)
    assert not rep["all_zero"]
    # [D1, x1] applied to 1 equals 1 + 2 nu, nonzero
    one = XPolynomial.one(2)
    comm = apply_dunkl(1, apply_mult(1, one))
    assert comm == XPolynomial(2, {(0, 0): NuPoly.of([1, 2])})


def test_dunkl_lowers_degree_by_one():
    rng = random.Random(1)
    for N in (2, 3):
        for d in range(1, 6):
            terms = {}
            for e in monomials_up_to(N, d):
                if sum(e) == d and rng.random() < 0.6:
                    terms[e] = NuPoly.constant(rng.randint(-3, 3))
            f = XPolynomial(N, terms)
            if f.is_zero():
                continue
            out = apply_dunkl(1, f)
            if not out.is_zero():
                assert out.degree == d - 1


def test_exchange_conjugation_transports_dunkl_index():
    # K12 D1 K12 = D2 on all monomials of degree <= 5, N <= 3
    for N in (2, 3):
        for e in monomials_up_to(N, 5):
            f = XPolynomial.monomial(N, e)
            lhs = apply_exchange(1, 2, apply_dunkl(1, apply_exchange(1, 2, f)))
            rhs = apply_dunkl(2, f)
            assert lhs == rhs, e


def test_nu_zero_collapses_dunkl_to_partial():
    for N in (2, 3):
        for e in monomials_up_to(N, 4):
            f = XPolynomial.monomial(N, e)
            collapsed = apply_dunkl(1, f).at_nu(0)
            assert collapsed == apply_partial(1, f)


# -- ladder operators and hamiltonians -------------------------------------------------


def test_ladder_on_constants():
    one = XPolynomial.one(2)
    assert apply_crea_ann(1, 1, one) == mono(2, 1, 0)  # x1 - D1 on 1
    assert apply_crea_ann(1, 0, one) == mono(2, 1, 0)


def test_hamiltonian_on_constant():
    for N in (2, 3):
        out = hamiltonian_apply(XPolynomial.one(N))
        want = XPolynomial.zero(N)
        for i in range(N):
            e = [0] * N
            e[i] = 2
            want = want + XPolynomial(N, {tuple(e): NuPoly.of([F(-1, 2)])})
        assert out == want


def test_hamiltonian_raises_degree_by_at_most_two():
    for N in (2, 3):
        for e in monomials_up_to(N, 4):
            f = XPolynomial.monomial(N, e)
            out = hamiltonian_apply(f)
            if not out.is_zero():
                assert out.degree <= sum(e) + 2


def test_hamiltonian_operator_identity():
    # the anticommutator form equals (1/2) sum (D_i^2 - x_i^2) identically
    for N in (2, 3):
        rep = hamiltonian_identity_check(N, 5)
        assert rep["all_equal"]


def test_hamiltonian_preserves_symmetric_inputs():
    for N in (2, 3):
        seen = set()
        for e in monomials_up_to(N, 5):
            key = tuple(sorted(e, reverse=True))
            if key in seen:
                continue
            seen.add(key)
            f = symmetrize(XPolynomial.monomial(N, key))
            hf = hamiltonian_apply(f)
            for i in range(1, N):
                assert apply_exchange(i, i + 1, hf) == hf, key


def test_compare_hamiltonians_records_sign_flip():
    rep = compare_hamiltonians(2, 3)
    assert rep["inputs"] > 0
    by_input = {tuple(e["input"]): e for e in rep["entries"]}
    # on the constant polynomial the two displayed forms are opposite
    const = by_input[(0, 0)]
    assert const["opposite"] and not const["equal"]
    # and the displayed form stays polynomial on every symmetric input
    assert not any("displayed_form_error" in e for e in rep["entries"])


def test_word_application_matches_composition():
    f = mono(2, 1, 1)
    w = [Dunkl(1), Mult(2), Exchange(1, 2)]
    stepwise = apply_dunkl(1, apply_mult(2, apply_exchange(1, 2, f)))
    assert apply_word(w, f) == stepwise
    assert apply_atom(Partial(1), mono(2, 3, 0)) == apply_partial(1, mono(2, 3, 0))


# -- survey -----------------------------------------------------------------------


def test_survey_rank_identity_only_at_word_len_zero():
    rep = observables_span_survey(2, 0, 4)
    assert rep["ranks"]["0"] == 1


def test_survey_monotone_ranks():
    rep = observables_span_survey(2, 2, 5)
    r = rep["ranks"]
    assert r["0"] <= r["1"] <= r["2"]
    assert rep["nu"] == "1/5"


def test_survey_budget():
    with pytest.raises(BudgetExceeded):
        observables_span_survey(4, 1, 4)
    with pytest.raises(BudgetExceeded):
        observables_span_survey(2, 5, 8)


# -- the coupling predicate ------------------------------------------------------------


def oracle_not_simple(c: Fraction, n: int) -> bool:
    """Enumeration oracle: c = q/m for coprime integers with 1 < m <= n."""
    for m in range(2, n + 1):
        q = c * m
        if q.denominator == 1 and math.gcd(int(q), m) == 1:
            return True
    return False


def test_losev_truth_table_against_enumeration_oracle():
    cs = [F(1, 2), F(1, 3), F(2, 5), F(3), F(-7, 2)]
    ns = [2, 3, 5]
    for c in cs:
        for n in ns:
            got = losev_simple(LosevInput(c, n))
            assert got["simple"] == (not oracle_not_simple(c, n)), (c, n)


def test_losev_spec_examples():
    assert losev_simple(LosevInput(F(1, 2), 2))["simple"] is False
    assert losev_simple(LosevInput(F(3), 10))["simple"] is True
    assert losev_simple(LosevInput(F(2, 5), 3))["simple"] is True


def test_losev_reduced_form():
    rep = losev_simple(LosevInput(F(-14, 4), 5))
    assert (rep["q"], rep["m"]) == (-7, 2)
    assert rep["simple"] is False

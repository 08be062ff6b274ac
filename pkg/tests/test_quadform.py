import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from classdiv.classgroup import reduced_forms
from classdiv.quadform import (
    DiscriminantError,
    QuadForm,
    compose,
    discriminant,
    inverse,
    is_principal,
    is_reduced,
    power,
    principal_form,
    reduce,
)
from oracles import dirichlet_compose, naive_reduce


@pytest.mark.parametrize("abc, delta", [((1, 1, 8), -31), ((1, 1, 2), -7), ((2, 1, 4), -31), ((8, 7, 2), -15)])
def test_discriminant(abc, delta):
    assert discriminant(QuadForm(*abc)) == delta


@pytest.mark.parametrize("delta, abc", [(-31, (1, 1, 8)), (-4, (1, 0, 1)), (-7, (1, 1, 2)), (-20, (1, 0, 5))])
def test_principal_form(delta, abc):
    assert tuple(principal_form(delta)) == abc


@pytest.mark.parametrize("delta", [-1, -2, 5, 0])
def test_principal_form_rejects_non_discriminants(delta):
    with pytest.raises(DiscriminantError):
        principal_form(delta)


def test_construction_invariants():
    with pytest.raises(ValueError):
        QuadForm(2, 2, 2)  # imprimitive
    with pytest.raises(ValueError):
        QuadForm(-1, 1, -8)
    with pytest.raises(DiscriminantError):
        QuadForm(1, 3, 1)


@pytest.mark.parametrize("abc, reduced", [
    ((4, 7, 5), (2, 1, 4)),    # delta = -31
    ((1, 1, 8), (1, 1, 8)),
    ((8, 7, 2), (2, 1, 2)),    # delta = -15
    ((4, -3, 2), (2, -1, 3)),  # delta = -23
    ((3, 1, 2), (2, -1, 3)),
    ((2, -2, 3), (2, 2, 3)),   # boundary b = -a flips sign
    ((3, -2, 3), (3, 2, 3)),   # boundary a = c flips sign
])
def test_reduce_examples(abc, reduced):
    assert tuple(reduce(QuadForm(*abc))) == reduced


forms = st.tuples(
    st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6)
).filter(lambda t: t[1] ** 2 - 4 * t[0] * t[2] < 0 and math.gcd(*t) == 1)


@given(forms)
def test_reduce_properties(t):
    f = QuadForm(*t)
    r = reduce(f)
    assert discriminant(r) == discriminant(f)
    assert is_reduced(r)
    assert reduce(r) == r
    assert r.a <= math.isqrt(-discriminant(f) // 3)
    assert tuple(r) == naive_reduce(*t)


def test_compose_examples():
    f, g = QuadForm(2, 1, 4), QuadForm(2, -1, 4)
    assert compose(QuadForm(1, 1, 8), f) == f
    assert compose(f, g) == QuadForm(1, 1, 8)
    assert compose(f, f) == g


def test_compose_rejects_mismatched_discriminants():
    with pytest.raises(DiscriminantError):
        compose(QuadForm(1, 1, 8), QuadForm(1, 1, 2))


def test_compose_matches_dirichlet_oracle():
    for delta in range(-3, -300, -1):
        if delta % 4 not in (0, 1):
            continue
        fs = reduced_forms(delta)
        for f in fs:
            for g in fs:
                assert tuple(compose(f, g)) == dirichlet_compose(tuple(f), tuple(g)), (f, g)


@given(forms, st.integers(0, 10**6))
def test_compose_with_identity_and_inverse(t, shift):
    f = QuadForm(*t)
    e = principal_form(discriminant(f))
    assert compose(f, e) == reduce(f)
    assert compose(f, inverse(f)) == e
    # an equivalent, non-reduced representative composes the same way
    g = QuadForm(f.a, f.b + 2 * f.a * shift, f.a * shift * shift + f.b * shift + f.c)
    assert compose(g, g) == compose(f, f)


def test_power_examples():
    assert power(QuadForm(2, 1, 4), 3) == QuadForm(1, 1, 8)
    assert power(QuadForm(2, 1, 4), 0) == principal_form(-31)
    assert power(QuadForm(4, 7, 5), 1) == reduce(QuadForm(4, 7, 5))
    assert power(QuadForm(1, 1, 2), 5) == QuadForm(1, 1, 2)


@given(forms, st.integers(0, 40), st.integers(0, 40))
def test_power_is_additive(t, m, k):
    f = QuadForm(*t)
    assert power(f, m + k) == compose(power(f, m), power(f, k))


def test_power_matches_repeated_composition():
    f = QuadForm(3, 1, 729)  # delta = -8747
    cur = principal_form(-8747)
    for e in range(30):
        assert power(f, e) == cur
        cur = compose(cur, f)


def test_inverse_examples():
    assert inverse(QuadForm(2, 1, 4)) == QuadForm(2, -1, 4)
    assert inverse(principal_form(-31)) == QuadForm(1, 1, 8)
    assert inverse(QuadForm(1, 1, 2)) == QuadForm(1, 1, 2)


def test_is_principal_examples():
    assert is_principal(QuadForm(1, 1, 8))
    assert not is_principal(QuadForm(2, 1, 4))
    assert not is_principal(QuadForm(8, 7, 2))
    assert is_principal(QuadForm(6, -3, 1))  # delta = -15, equivalent to (1, 1, 4)

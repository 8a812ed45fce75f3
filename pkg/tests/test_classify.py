from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import catalog_spaces
from twofano.classify import (
    Lemma3Input,
    bend_and_break_degree,
    classify,
    fano_index,
    lemma3_bound,
    lemma3_terms,
    oracle_bundle_fano,
    oracle_bundle_two_fano,
    oracle_ci_fano,
    oracle_ci_two_fano,
    oracle_grassmannian_two_fano,
)
from twofano.errors import PreconditionError
from twofano.spaces import CompleteIntersectionSpec, GrassmannianSpec, make_grassmannian, make_projective

CATALOG = catalog_spaces()
CI = CompleteIntersectionSpec.projective


def test_cubic_is_fano_not_two_fano():
    record = classify(CATALOG["cubic fourfold"])
    assert record.is_fano and not record.is_two_fano
    assert record.pairings("ch2")[0].value == Fraction(-9, 2)


def test_bundle_over_cubic_record():
    record = classify(CATALOG["Y over cubic"])
    assert record.is_fano and record.is_two_fano
    assert not record.is_ch2_strictly_positive and record.boundary_flag
    values = {w.label: w.value for w in record.witness_pairings}
    assert values == {
        "fiber": 2,
        "s0([H^3])": 3,
        "s_inf([H^3])": 15,
        "pi^-1([H^3])": 0,
        "s0([H^2])": Fraction(3, 2),
        "s_inf([H^2])": Fraction(3, 2),
    }


def test_p1_vacuous():
    record = classify(make_projective(1))
    assert record.is_fano and record.is_two_fano and record.pairings("ch2") == []


def test_ci_oracles():
    assert oracle_ci_fano(CI(5, (3,)))
    assert not oracle_ci_fano(CI(4, (2, 3)))
    assert oracle_ci_fano(CI(4))
    assert not oracle_ci_two_fano(CI(5, (3,)))
    assert oracle_ci_two_fano(CI(5, (2,)))
    assert oracle_ci_two_fano(CI(7))


def test_grassmannian_oracle():
    assert oracle_grassmannian_two_fano(GrassmannianSpec(2, 4))
    assert not oracle_grassmannian_two_fano(GrassmannianSpec(2, 7))
    for n in range(2, 10):
        assert oracle_grassmannian_two_fano(GrassmannianSpec(1, n))


def test_bundle_oracles():
    X = CATALOG["cubic fourfold"]
    H = X.ring.gen()
    assert oracle_bundle_fano(X, 2 * H)
    assert oracle_bundle_two_fano(X, 2 * H)
    assert not oracle_bundle_two_fano(X, 0 * H)
    P3 = make_projective(3)
    assert oracle_bundle_two_fano(P3, P3.ring.zero())
    assert not oracle_bundle_fano(P3, 4 * P3.ring.gen())


def test_fano_index_examples():
    assert fano_index(make_projective(5)) == 6
    assert fano_index(CATALOG["cubic fourfold"]) == 3
    assert fano_index(CATALOG["G(2,5)"]) == 5
    assert fano_index(CATALOG["P^2 x P^1"]) == 2


def test_fano_index_none_when_not_positive():
    from twofano.spaces import make_complete_intersection

    X = make_complete_intersection(CI(4, (5,)))
    assert fano_index(X) is None


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_strict_implies_two_fano_and_deterministic(name):
    a, b = classify(CATALOG[name]), classify(CATALOG[name])
    assert a == b
    if a.is_ch2_strictly_positive:
        assert a.is_two_fano
    if a.is_two_fano:
        assert a.is_fano


def test_lemma3_examples():
    assert lemma3_bound(Lemma3Input(0, 0, 1, 3, 0, 0)) == 1
    for e in range(1, 6):
        for dim in range(1, 6):
            assert lemma3_bound(Lemma3Input(0, 0, e, dim, 1, 0)) == 0
    assert lemma3_bound(Lemma3Input(2, 18, 3, 4, 0, 2)) == 1
    assert lemma3_terms(Lemma3Input(2, 18, 3, 4, 0, 2)) == (2, 3, -4)


def test_lemma3_validation():
    with pytest.raises(PreconditionError):
        Lemma3Input(0, 0, 0, 3, 0, 0)
    with pytest.raises(PreconditionError):
        Lemma3Input(0, 0, 1, 3, -1, 0)


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@settings(max_examples=150, deadline=None)
@given(
    ch2=rationals,
    c1sq=rationals,
    step=rationals,
    e=st.integers(1, 30),
    dim=st.integers(1, 12),
    g=st.integers(0, 5),
    b=st.integers(0, 5),
)
def test_lemma3_affine(ch2, c1sq, step, e, dim, g, b):
    f = lambda *args: lemma3_bound(Lemma3Input(*args))  # noqa: E731
    base = f(ch2, c1sq, e, dim, g, b)
    # second differences vanish in ch2 and c1sq
    assert f(ch2 + 2 * step, c1sq, e, dim, g, b) - 2 * f(ch2 + step, c1sq, e, dim, g, b) + base == 0
    assert f(ch2, c1sq + 2 * step, e, dim, g, b) - 2 * f(ch2, c1sq + step, e, dim, g, b) + base == 0
    assert f(ch2 + step, c1sq, e, dim, g, b) - base == step
    assert f(ch2, c1sq + step, e, dim, g, b) - base == step / (2 * e)
    # affine in (1 - g - b): one unit more of g or b lowers the bound by e + dim - 3
    assert base - f(ch2, c1sq, e, dim, g + 1, b) == e + dim - 3
    assert base - f(ch2, c1sq, e, dim, g, b + 1) == e + dim - 3
    assert f(ch2, c1sq, e, dim, g + 2, b) - 2 * f(ch2, c1sq, e, dim, g + 1, b) + base == 0


def test_bend_and_break_on_p2():
    P2 = make_projective(2)
    assert bend_and_break_degree(P2, P2.ring.one(), 1) == 6
    values = [bend_and_break_degree(P2, P2.ring.one(), e) for e in (1, 10, 100, 1000)]
    assert values == sorted(values, reverse=True)
    assert values[-1] - Fraction(3, 2) == Fraction(9, 2000)


def test_bend_and_break_errors():
    P2 = make_projective(2)
    with pytest.raises(PreconditionError):
        bend_and_break_degree(P2, P2.ring.one(), 0)
    with pytest.raises(PreconditionError):
        bend_and_break_degree(P2, P2.ring.gen(), 1)


def test_bend_and_break_positive_on_two_fano():
    G = make_grassmannian(GrassmannianSpec(2, 5))
    for gen in G.surface_cone:
        for e in range(1, 21):
            assert bend_and_break_degree(G, gen.cls, e) > 0

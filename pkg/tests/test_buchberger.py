"""Buchberger engine: worked bases, canonicality, idempotence, S-polynomials."""

import random

from hypothesis import given, settings, strategies as st

from msv.algebra import Ring, TermOrder, buchberger, is_groebner, normal_form
from msv.fields import GF, QQ
from msv.serialize import parse_poly

REVLEX = TermOrder.revlex()
FULL2 = Ring(QQ, [("x", 1, 1), ("x", 1, 2), ("x", 2, 1), ("x", 2, 2)])
SYM2 = Ring(QQ, [("u", 1, 1), ("u", 2, 1), ("u", 2, 2)])


def p(s, ring=FULL2):
    return parse_poly(s, ring)


def test_transition_recurrence_basis():
    # <x21*x12 - x11*x22, x11> has reduced basis {x11, x12*x21}
    gb = buchberger([p("x_2_1*x_1_2 - x_1_1*x_2_2"), p("x_1_1")], REVLEX)
    assert [str(g)[5:-1] for g in gb] == ["x_1_1", "x_1_2*x_2_1"]


def test_monomial_generating_set_is_basis():
    gens = [p("x_1_1*x_2_2"), p("x_1_1^2*x_2_2"), p("x_2_1^3")]
    gb = buchberger(gens, REVLEX)
    assert {g.init_mon(REVLEX) for g in gb} == {
        (1, 0, 0, 1),
        (0, 0, 3, 0),
    }


def test_principal_ideal():
    R1 = Ring(QQ, [("x", 1, 1)])
    f = parse_poly("x_1_1 - 3", R1)
    gb = buchberger([f], REVLEX)
    assert len(gb) == 1 and gb[0] == f


def test_zero_and_unit_ideals():
    assert buchberger([], REVLEX) == ()
    assert buchberger([FULL2.zero()], REVLEX) == ()
    gb = buchberger([FULL2.one()], REVLEX)
    assert len(gb) == 1 and gb[0].is_constant()


def test_non_groebner_generating_set_detected():
    # {x1 + x2, x2} generates <x1, x2>; the given set is not a Groebner basis
    R2 = Ring(QQ, [("x", 1, 1), ("x", 1, 2)])
    gens = [parse_poly("x_1_1 + x_1_2", R2), parse_poly("x_1_2", R2)]
    gb = buchberger(gens, REVLEX)
    assert sorted(str(g)[5:-1] for g in gb) == ["x_1_1", "x_1_2"]


def test_sym2_determinant_with_linear():
    gb = buchberger(
        [parse_poly("u_2_1^2 - u_1_1*u_2_2", SYM2), parse_poly("u_1_1", SYM2)],
        REVLEX,
    )
    assert [str(g)[5:-1] for g in gb] == ["u_1_1", "u_2_1^2"]


def test_groebner_over_prime_field():
    F3 = GF(3)
    R = Ring(F3, [("u", 1, 1), ("u", 2, 1), ("u", 2, 2)])
    gens = [parse_poly("u_2_1^2 - u_1_1*u_2_2", R), parse_poly("u_1_1", R)]
    gb = buchberger(gens, REVLEX)
    assert [g.init_mon(REVLEX) for g in gb] == [(1, 0, 0), (0, 2, 0)]


rand_coeff = st.integers(min_value=-3, max_value=3)
rand_mon = st.lists(st.integers(min_value=0, max_value=2), min_size=3, max_size=3).map(tuple)


@st.composite
def rand_poly(draw):
    n = draw(st.integers(min_value=1, max_value=4))
    d = {}
    for _ in range(n):
        d[draw(rand_mon)] = QQ.of_int(draw(rand_coeff))
    return SYM2.from_dict(d)


@settings(max_examples=25)
@given(st.lists(rand_poly(), min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_buchberger_canonical_and_idempotent(gens, rng):
    gb = buchberger(gens, REVLEX)
    assert is_groebner(gb, REVLEX)
    # idempotent
    assert buchberger(list(gb), REVLEX) == gb
    # canonical under generator shuffles
    shuffled = list(gens)
    rng.shuffle(shuffled)
    assert buchberger(shuffled, REVLEX) == gb
    # membership of the generators
    for g in gens:
        if gb:
            assert normal_form(g, list(gb), REVLEX).is_zero()
        else:
            assert g.is_zero()

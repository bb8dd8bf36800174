"""Ideal operations: sums, intersections, quotients, elimination, initial
ideals, and the containment/implication facts they must satisfy."""

from hypothesis import given, settings, strategies as st

from msv.algebra import Ring, TermOrder
from msv.fields import QQ
from msv.ideals import (
    Ideal,
    MonomialIdeal,
    eliminate,
    ideal_sum,
    initial_ideal,
    intersect,
    irrelevant_ideal,
    is_maximal_point_ideal,
    monomial_contains,
    monomial_intersect,
    monomial_quotient,
    quotient,
    saturate,
)
from msv.serialize import parse_poly

REVLEX = TermOrder.revlex()
SYM2 = Ring(QQ, [("u", 1, 1), ("u", 2, 1), ("u", 2, 2)])
FULL2 = Ring(QQ, [("x", 1, 1), ("x", 1, 2), ("x", 2, 1), ("x", 2, 2)])


def p(s, ring=SYM2):
    return parse_poly(s, ring)


def I(*gens, ring=SYM2):
    return Ideal(ring, [parse_poly(g, ring) for g in gens])


def test_initial_ideal_examples():
    assert initial_ideal(I("u_2_1^2 - u_1_1*u_2_2")).mons == ((0, 2, 0),)
    det = Ideal(FULL2, [p("x_1_1*x_2_2 - x_1_2*x_2_1", FULL2)])
    assert initial_ideal(det).mons == ((0, 1, 1, 0),)
    mono = I("u_1_1", "u_2_1^2")
    assert initial_ideal(mono).mons == initial_ideal(mono.groebner().elements and mono).mons
    assert initial_ideal(mono) == MonomialIdeal(SYM2, [(1, 0, 0), (0, 2, 0)])


def test_sum_examples():
    s = ideal_sum(I("u_2_1^2 - u_1_1*u_2_2"), I("u_1_1"))
    assert s.equals(I("u_1_1", "u_2_1^2"))
    zero = Ideal(SYM2, [])
    base = I("u_2_1 - u_1_1")
    assert ideal_sum(base, zero).equals(base)
    d = Ideal(FULL2, [p("x_2_1*x_1_2 - x_1_1*x_2_2", FULL2)])
    s2 = ideal_sum(d, Ideal(FULL2, [p("x_1_1", FULL2)]))
    assert s2.equals(Ideal(FULL2, [p("x_1_1", FULL2), p("x_2_1*x_1_2", FULL2)]))


def test_intersect_examples():
    a = Ideal(FULL2, [p("x_1_1", FULL2), p("x_2_1", FULL2)])
    b = Ideal(FULL2, [p("x_1_1", FULL2), p("x_1_2", FULL2)])
    meet = intersect(a, b)
    assert meet.equals(Ideal(FULL2, [p("x_1_1", FULL2), p("x_2_1*x_1_2", FULL2)]))
    assert intersect(a, a).equals(a)
    c = Ideal(FULL2, [p("x_1_1", FULL2), p("x_1_2", FULL2)])
    d = Ideal(FULL2, [p("x_1_1", FULL2), p("x_2_1", FULL2)])
    assert intersect(c, d).equals(
        Ideal(FULL2, [p("x_1_1", FULL2), p("x_1_2*x_2_1", FULL2)])
    )


def test_quotient_examples():
    R1 = Ring(QQ, [("x", 1, 1)])
    xs = Ideal(R1, [parse_poly("x_1_1^4", R1)])
    q = quotient(xs, parse_poly("x_1_1", R1))
    assert q.equals(Ideal(R1, [parse_poly("x_1_1^3", R1)]))

    # maximal ideal with f outside it is unchanged
    M = I("u_1_1", "u_2_1", "u_2_2 - 1")
    q2 = quotient(M, p("u_2_2"))
    assert q2.equals(M)

    q3 = quotient(I("u_1_1", "u_2_1^2"), p("u_2_1"))
    assert q3.equals(I("u_1_1", "u_2_1"))

    # (I : f) is the whole ring iff f lies in I
    q4 = quotient(I("u_1_1"), p("u_1_1"))
    assert q4.is_whole_ring()


def test_eliminate_examples():
    R = Ring(QQ, [("t", 0, 1), ("u", 1, 1), ("u", 2, 1)])
    gens = [parse_poly("t_0_1*u_1_1", R), parse_poly("u_2_1 - t_0_1*u_2_1", R)]
    e = eliminate(Ideal(R, gens), [0])
    assert e.canonical_key() == Ideal(R, [parse_poly("u_1_1*u_2_1", R)]).canonical_key()

    base = I("u_1_1*u_2_1 - u_2_2")
    assert eliminate(base, []) is base

    graph = Ideal(R, [parse_poly("t_0_1 - u_1_1", R)])
    assert eliminate(graph, [0]).is_zero()


def test_is_maximal_point_ideal():
    pt = is_maximal_point_ideal(I("u_1_1", "u_2_1", "u_2_2"))
    assert pt == (QQ.zero, QQ.zero, QQ.zero)
    assert is_maximal_point_ideal(I("u_1_1")) is None
    pt2 = is_maximal_point_ideal(I("u_1_1 - 1", "u_2_1", "u_2_2"))
    assert pt2 == (QQ.one, QQ.zero, QQ.zero)
    # non-linear basis is rejected
    assert is_maximal_point_ideal(I("u_1_1", "u_2_1^2", "u_2_2")) is None


def test_monomial_fast_paths_examples():
    a = MonomialIdeal(SYM2, [(1, 0, 0)])
    b = MonomialIdeal(SYM2, [(0, 2, 0)])
    assert monomial_intersect(a, b).mons == ((1, 2, 0),)
    q = monomial_quotient(MonomialIdeal(SYM2, [(1, 0, 0), (0, 2, 0)]), (0, 1, 0))
    assert q == MonomialIdeal(SYM2, [(1, 0, 0), (0, 1, 0)])
    big = MonomialIdeal(SYM2, [(1, 0, 0), (0, 1, 1)])
    assert monomial_contains(big, big)
    assert irrelevant_ideal(SYM2).is_irrelevant()


def test_saturate():
    K = I("u_1_1", "u_2_2*u_2_1", "u_2_1^2")
    sat, n = saturate(K, p("u_2_2"))
    assert n == 1
    assert sat.equals(I("u_1_1", "u_2_1"))


def test_hilbert_lemma_counterexample_regression():
    # inhomogeneous failure: f = x1, I = <x2>, J = <x2 - x1*x2^2>
    R2 = Ring(QQ, [("x", 1, 1), ("x", 1, 2)])
    f = parse_poly("x_1_1", R2)
    A = Ideal(R2, [parse_poly("x_1_2", R2)])
    B = Ideal(R2, [parse_poly("x_1_2 - x_1_1*x_1_2^2", R2)])
    # both hypotheses hold ...
    assert ideal_sum(A, Ideal(R2, [f])).equals(ideal_sum(B, Ideal(R2, [f])))
    assert intersect(A, Ideal(R2, [f])).equals(
        Ideal(R2, [parse_poly("x_1_1*x_1_2", R2)])
    )
    fA = Ideal(R2, [f * g for g in A.gens])
    assert intersect(A, Ideal(R2, [f])).equals(fA)
    # ... but the conclusion fails for the inhomogeneous pair
    assert not A.equals(B)


# -- random ideal properties ---------------------------------------------------

rand_mon = st.lists(st.integers(min_value=0, max_value=2), min_size=3, max_size=3).map(tuple)


@st.composite
def rand_ideal(draw):
    ngens = draw(st.integers(min_value=1, max_value=3))
    gens = []
    for _ in range(ngens):
        nterms = draw(st.integers(min_value=1, max_value=3))
        d = {}
        for _ in range(nterms):
            d[draw(rand_mon)] = QQ.of_int(draw(st.integers(min_value=-3, max_value=3)))
        gens.append(SYM2.from_dict(d))
    return Ideal(SYM2, gens)


@settings(max_examples=40)
@given(rand_ideal(), rand_ideal())
def test_init_containments_and_plus_vs_intersection(A, B):
    """init(I)+init(J) <= init(I+J); init(I meet J) <= init(I) meet init(J);
    and equality on the sum side forces equality on the intersection side."""
    iA, iB = initial_ideal(A), initial_ideal(B)
    iSum = initial_ideal(ideal_sum(A, B))
    for m in iA.sum(iB).mons:
        assert iSum.contains_mon(m)
    meet = intersect(A, B)
    iMeet = initial_ideal(meet)
    cap = iA.intersect(iB)
    for m in iMeet.mons:
        assert cap.contains_mon(m)
    if iSum == iA.sum(iB):
        assert iMeet == cap


@settings(max_examples=40)
@given(rand_ideal(), rand_ideal())
def test_init_monotone_and_rigid(A, B):
    """I <= J gives init(I) <= init(J); equality of initials forces I = J."""
    S = ideal_sum(A, B)  # A <= S by construction
    iA, iS = initial_ideal(A), initial_ideal(S)
    for m in iA.mons:
        assert iS.contains_mon(m)
    if iA == iS:
        assert A.equals(S)

"""Ideal-level algebra: sums, intersections, quotients, elimination, initial
ideals, equality and membership, plus fast combinatorial paths for monomial
ideals.

Ideal equality is decided by reduced-Groebner-basis identity in the canonical
(revlex) order; bases are cached write-once per (ideal, order).
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .algebra import (
    BudgetExceeded,
    Mon,
    Poly,
    Ring,
    TermOrder,
    buchberger,
    mon_div,
    mon_divides,
    mon_gcd,
    mon_lcm,
    mon_mul,
    normal_form,
)

_REVLEX = TermOrder.revlex()


class AmbientMismatch(ValueError):
    pass


class GroebnerBasis:
    """A reduced monic Groebner basis together with its order."""

    __slots__ = ("elements", "order")

    def __init__(self, elements: tuple[Poly, ...], order: TermOrder):
        self.elements = elements
        self.order = order

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def is_zero_ideal(self) -> bool:
        return not self.elements

    def is_whole_ring(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant() and not self.elements[0].is_zero()

    def init_mons(self) -> tuple[Mon, ...]:
        return tuple(g.init_mon(self.order) for g in self.elements)

    def reduce(self, f: Poly) -> Poly:
        if not self.elements:
            return f
        return normal_form(f, self.elements, self.order)

    def contains(self, f: Poly) -> bool:
        return self.reduce(f).is_zero()

    def canonical_key(self):
        return tuple(g.canonical_key(self.order) for g in self.elements)


class Ideal:
    """Generator list with write-once cached reduced Groebner bases."""

    __slots__ = ("ring", "gens", "space", "_gb")

    def __init__(self, ring: Ring, gens: Iterable[Poly], space=None):
        self.ring = ring
        seen = set()
        out = []
        for g in gens:
            if g.is_zero():
                continue
            k = frozenset(g.terms.items())
            if k in seen:
                continue
            seen.add(k)
            out.append(g)
        self.gens = tuple(out)
        self.space = space
        self._gb: dict = {}

    # -- basis & membership --------------------------------------------------
    def groebner(self, order: TermOrder = _REVLEX, deadline=None) -> GroebnerBasis:
        gb = self._gb.get(order.tag)
        if gb is None:
            gb = GroebnerBasis(buchberger(self.gens, order, deadline=deadline), order)
            self._gb.setdefault(order.tag, gb)
        return gb

    def seed_groebner(self, gb: GroebnerBasis) -> "Ideal":
        self._gb.setdefault(gb.order.tag, gb)
        return self

    def contains(self, f: Poly, order: TermOrder = _REVLEX) -> bool:
        return self.groebner(order).contains(f)

    def contains_ideal(self, other: "Ideal", order: TermOrder = _REVLEX) -> bool:
        gb = self.groebner(order)
        return all(gb.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return self.groebner().is_zero_ideal()

    def is_whole_ring(self) -> bool:
        return self.groebner().is_whole_ring()

    def is_proper(self) -> bool:
        return not self.is_whole_ring()

    def canonical_key(self):
        return self.groebner().canonical_key()

    def equals(self, other: "Ideal") -> bool:
        if self.ring != other.ring:
            return False
        return self.canonical_key() == other.canonical_key()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.groebner().elements)

    def with_space(self, space) -> "Ideal":
        ideal = Ideal(self.ring, self.gens, space=space)
        ideal._gb.update(self._gb)
        return ideal

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens over {self.ring!r})"


class MonomialIdeal:
    """Minimal-generator antichain under divisibility; canonical form."""

    __slots__ = ("ring", "mons")

    def __init__(self, ring: Ring, mons: Iterable[Mon], *, _minimal: bool = False):
        self.ring = ring
        if _minimal:
            self.mons = tuple(mons)
        else:
            self.mons = _minimalize(ring, mons)

    # -- membership -----------------------------------------------------------
    def contains_mon(self, m: Mon) -> bool:
        return any(mon_divides(g, m) for g in self.mons)

    def contains_poly(self, f: Poly) -> bool:
        return all(self.contains_mon(m) for m in f.terms)

    def contains(self, other: "MonomialIdeal") -> bool:
        return all(self.contains_mon(m) for m in other.mons)

    def is_zero(self) -> bool:
        return not self.mons

    def is_proper(self) -> bool:
        return self.ring.one_mon not in self.mons

    def is_irrelevant(self) -> bool:
        """Generated by all the variables."""
        return len(self.mons) == self.ring.nvars and all(sum(m) == 1 for m in self.mons)

    # -- operations ------------------------------------------------------------
    def sum(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ring(self, other)
        return MonomialIdeal(self.ring, self.mons + other.mons)

    def add_mon(self, m: Mon) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, self.mons + (m,))

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        _same_ring(self, other)
        return MonomialIdeal(
            self.ring, (mon_lcm(a, b) for a in self.mons for b in other.mons)
        )

    def quotient_mon(self, m: Mon) -> "MonomialIdeal":
        return MonomialIdeal(self.ring, (mon_div(mon_lcm(g, m), m) for g in self.mons))

    def to_ideal(self, space=None) -> Ideal:
        ideal = Ideal(self.ring, [self.ring.monomial(m) for m in self.mons], space=space)
        gb = GroebnerBasis(tuple(self.ring.monomial(m) for m in self.mons), _REVLEX)
        ideal.seed_groebner(gb)
        return ideal

    def __eq__(self, other):
        return (
            isinstance(other, MonomialIdeal)
            and other.ring == self.ring
            and other.mons == self.mons
        )

    def __hash__(self):
        return hash((self.ring, self.mons))

    def __repr__(self):
        return f"MonomialIdeal({len(self.mons)} gens)"


def _same_ring(a, b):
    if a.ring != b.ring:
        raise AmbientMismatch("operands live in different ambient rings")


def _minimalize(ring: Ring, mons: Iterable[Mon]) -> tuple[Mon, ...]:
    key = _REVLEX.key
    ms = sorted(set(mons), key=lambda m: (sum(m), key(m)))
    kept: list[Mon] = []
    for m in ms:
        if not any(mon_divides(k, m) for k in kept):
            kept.append(m)
    kept.sort(key=key)
    return tuple(kept)


# ---------------------------------------------------------------------------
# spec operations

def initial_ideal(ideal: Ideal, order: TermOrder = _REVLEX, deadline=None) -> MonomialIdeal:
    """Monomial ideal of leading terms, as a minimal antichain."""
    gb = ideal.groebner(order, deadline=deadline)
    return MonomialIdeal(ideal.ring, gb.init_mons())


def ideal_sum(a: Ideal, b: Ideal) -> Ideal:
    _same_ring(a, b)
    if a.space is not None and b.space is not None and a.space is not b.space:
        raise AmbientMismatch("ideal sum across different ambient spaces")
    return Ideal(a.ring, a.gens + b.gens, space=a.space or b.space)


def ideal_sum_poly(a: Ideal, f: Poly) -> Ideal:
    return Ideal(a.ring, a.gens + (f,), space=a.space)


def _extend_ring(ring: Ring, extra_labels: Sequence[tuple]) -> Ring:
    return Ring(ring.field, tuple(extra_labels) + ring.labels)


def _inject(p: Poly, ext: Ring, k: int) -> Poly:
    pad = (0,) * k
    return Poly(ext, {pad + m: c for m, c in p.terms.items()})


def _strip(p: Poly, ring: Ring, k: int) -> Poly:
    return Poly(ring, {m[k:]: c for m, c in p.terms.items()})


def intersect(a: Ideal, b: Ideal, deadline=None) -> Ideal:
    """Exact ideal intersection via elimination of one auxiliary variable."""
    _same_ring(a, b)
    ext = _extend_ring(a.ring, [("t", 0, 0)])
    t = ext.var(0)
    one = ext.one()
    gens = [t * _inject(g, ext, 1) for g in a.gens]
    gens += [(one - t) * _inject(g, ext, 1) for g in b.gens]
    order = TermOrder.elimination(1)
    gb = buchberger(gens, order, deadline=deadline)
    kept = [g for g in gb if not any(m[0] for m in g.terms)]
    out_gb = tuple(_strip(g, a.ring, 1) for g in kept)
    ideal = Ideal(a.ring, out_gb, space=a.space or b.space)
    ideal.seed_groebner(GroebnerBasis(out_gb, _REVLEX))
    return ideal


def eliminate(ideal: Ideal, drop_positions: Iterable[int], deadline=None) -> Ideal:
    """ideal ∩ K[remaining variables], expressed in the same ambient ring."""
    drop = sorted(set(drop_positions))
    if any(d < 0 or d >= ideal.ring.nvars for d in drop):
        raise ValueError("drop variables outside the ambient ring")
    if not drop:
        return ideal
    ring = ideal.ring
    keep = [v for v in range(ring.nvars) if v not in set(drop)]
    perm = drop + keep  # new position -> old position
    ext = Ring(ring.field, tuple(ring.labels[v] for v in perm))

    def to_ext(p: Poly) -> Poly:
        return Poly(ext, {tuple(m[v] for v in perm): c for m, c in p.terms.items()})

    k = len(drop)
    order = TermOrder.elimination(k)
    gb = buchberger([to_ext(g) for g in ideal.gens], order, deadline=deadline)
    kept_polys = [g for g in gb if not any(any(m[:k]) for m in g.terms)]

    inv = {newpos: oldpos for newpos, oldpos in enumerate(perm)}

    def from_ext(p: Poly) -> Poly:
        d = {}
        for m, c in p.terms.items():
            mm = [0] * ring.nvars
            for newpos, e in enumerate(m):
                if e:
                    mm[inv[newpos]] = e
            d[tuple(mm)] = c
        return Poly(ring, d)

    out_gb = tuple(sorted((from_ext(g) for g in kept_polys),
                          key=lambda p: _REVLEX.key(p.init_mon(_REVLEX))))
    out = Ideal(ring, out_gb, space=ideal.space)
    out.seed_groebner(GroebnerBasis(out_gb, _REVLEX))
    return out


def exact_divide(f: Poly, g: Poly, order: TermOrder = _REVLEX) -> Poly:
    """f / g when g divides f exactly; raises ValueError otherwise."""
    from .algebra import divide_with_remainder

    qs, r = divide_with_remainder(f, [g], order)
    if not r.is_zero():
        raise ValueError("inexact polynomial division")
    return qs[0]


def quotient(ideal: Ideal, f: Poly, deadline=None) -> Ideal:
    """(I : <f>) = {g : f*g in I}; the whole ring iff f in I."""
    if f.is_zero():
        raise ZeroDivisionError("ideal quotient by zero")
    if f.is_constant():
        return ideal
    if ideal.contains(f):
        one = ideal.ring.one()
        out = Ideal(ideal.ring, (one,), space=ideal.space)
        out.seed_groebner(GroebnerBasis((one,), _REVLEX))
        return out
    fI = Ideal(ideal.ring, (f,))
    meet = intersect(ideal, fI, deadline=deadline)
    gens = tuple(exact_divide(g, f) for g in meet.groebner().elements)
    return Ideal(ideal.ring, gens, space=ideal.space)


def saturate(ideal: Ideal, f: Poly, deadline=None, max_steps: int = 64):
    """(I : f^inf) by iterated quotient; returns (saturation, exponent)."""
    cur = ideal
    n = 0
    while n < max_steps:
        nxt = quotient(cur, f, deadline=deadline)
        if nxt.canonical_key() == cur.canonical_key():
            return cur, n
        cur = nxt
        n += 1
    raise BudgetExceeded("saturation did not stabilize within the step cap")


def is_maximal_point_ideal(ideal: Ideal) -> Optional[tuple]:
    """The point (c_v per variable) iff the reduced basis is {x_v - c_v : v}."""
    ring = ideal.ring
    gb = ideal.groebner()
    if len(gb.elements) != ring.nvars:
        return None
    field = ring.field
    point = [None] * ring.nvars
    for g in gb.elements:
        lead = g.init_mon(_REVLEX)
        if sum(lead) != 1:
            return None
        v = lead.index(1)
        rest = {m: c for m, c in g.terms.items() if m != lead}
        if not rest:
            c = field.zero
        elif len(rest) == 1 and ring.one_mon in rest:
            c = field.neg(rest[ring.one_mon])
        else:
            return None
        if point[v] is not None:
            return None
        point[v] = c
    if any(c is None for c in point):
        return None
    return tuple(point)


def monomial_part(ideal: Ideal) -> Optional[MonomialIdeal]:
    """The ideal as a MonomialIdeal when its reduced basis is monomial, else None."""
    gb = ideal.groebner()
    if all(g.is_monomial() for g in gb.elements):
        return MonomialIdeal(ideal.ring, [g.init_mon(_REVLEX) for g in gb.elements])
    return None


# -- monomial fast paths -------------------------------------------------------

def monomial_intersect(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    return a.intersect(b)


def monomial_quotient(a: MonomialIdeal, m: Mon) -> MonomialIdeal:
    return a.quotient_mon(m)


def monomial_contains(a: MonomialIdeal, b: MonomialIdeal) -> bool:
    return a.contains(b)


def irrelevant_ideal(ring: Ring) -> MonomialIdeal:
    return MonomialIdeal(ring, (ring.var_mon(v) for v in range(ring.nvars)))

"""Sparse multivariate polynomials, term orders, division, and Buchberger's algorithm.

Monomials are dense exponent tuples over a fixed variable list.  Variables are
identified by position; each Ring carries labels like ("u", 2, 1) that map
positions to matrix coordinates.  The variable list is always sorted so that
position order equals the lexicographic order of the (i, j) labels, which is
the single global convention every term order here builds on.

Polynomials are immutable dicts {exponent tuple: coefficient}; zero
coefficients are never stored.  The leading monomial of the zero polynomial
is represented by None.
"""

from __future__ import annotations

import heapq
import itertools
import operator
import time
from typing import Optional, Sequence

Mon = tuple  # exponent vector, one entry per ring variable


# ---------------------------------------------------------------------------
# monomial helpers

def mon_mul(a: Mon, b: Mon) -> Mon:
    return tuple(map(operator.add, a, b))


def mon_divides(a: Mon, b: Mon) -> bool:
    """True iff a | b."""
    return all(map(operator.le, a, b))


def mon_div(a: Mon, b: Mon) -> Optional[Mon]:
    """a / b, or None when b does not divide a."""
    q = tuple(map(operator.sub, a, b))
    if any(e < 0 for e in q):
        return None
    return q


def mon_lcm(a: Mon, b: Mon) -> Mon:
    return tuple(map(max, a, b))


def mon_gcd(a: Mon, b: Mon) -> Mon:
    return tuple(map(min, a, b))


def mon_degree(a: Mon) -> int:
    return sum(a)


def mon_support_mask(a: Mon) -> int:
    m = 0
    for i, e in enumerate(a):
        if e:
            m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# term orders

class TermOrder:
    """Total multiplicative monomial order with 1 as unique minimum.

    kinds:
      * "revlex": graded reverse lexicographic (degree first; ties broken by
        the rule that having a larger exponent at the lexicographically
        largest differing variable makes a monomial smaller).
      * "lex":    plain lexicographic on exponent vectors in variable order.
      * "elim:k": block order eliminating the first k ring variables; revlex
        inside each block.  Internal plumbing for elimination and
        intersection; not one of the two published orders.

    key(mon) returns an int tuple that sorts monomials in increasing order.
    """

    __slots__ = ("kind", "block", "tag")

    def __init__(self, kind: str, block: int = 0):
        self.kind = kind
        self.block = block
        self.tag = kind if kind != "elim" else f"elim:{block}"

    @staticmethod
    def revlex() -> "TermOrder":
        return _REVLEX

    @staticmethod
    def lex() -> "TermOrder":
        return _LEX

    @staticmethod
    def elimination(k: int) -> "TermOrder":
        return TermOrder("elim", k)

    @staticmethod
    def by_name(name: str) -> "TermOrder":
        if name == "revlex":
            return _REVLEX
        if name == "lex":
            return _LEX
        raise ValueError(f"unknown term order {name!r}")

    def key(self, m: Mon):
        kind = self.kind
        if kind == "revlex":
            return (sum(m), *[-e for e in reversed(m)])
        if kind == "lex":
            return m
        k = self.block
        hi, lo = m[:k], m[k:]
        return (sum(hi), *[-e for e in reversed(hi)], sum(lo), *[-e for e in reversed(lo)])

    def compare(self, m1: Mon, m2: Mon) -> int:
        """-1, 0, or 1 as m1 <, =, > m2."""
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __repr__(self):
        return f"TermOrder({self.tag})"

    def __eq__(self, other):
        return isinstance(other, TermOrder) and other.tag == self.tag

    def __hash__(self):
        return hash(self.tag)


_REVLEX = TermOrder("revlex")
_LEX = TermOrder("lex")


def compare(m1: Mon, m2: Mon, order: TermOrder) -> int:
    return order.compare(m1, m2)


# ---------------------------------------------------------------------------
# rings and polynomials

class Ring:
    """A polynomial ring over an exact field with labelled variables.

    labels: tuple of (letter, i, j) triples; the tuple must already be in the
    global position order (lexicographic by (i, j) for ambient rings).
    """

    __slots__ = ("field", "labels", "names", "nvars", "one_mon", "_label_pos")

    def __init__(self, field, labels: Sequence[tuple]):
        self.field = field
        self.labels = tuple(labels)
        self.names = tuple(f"{l[0]}_{l[1]}_{l[2]}" for l in self.labels)
        self.nvars = len(self.labels)
        self.one_mon = (0,) * self.nvars
        self._label_pos = {lab: i for i, lab in enumerate(self.labels)}

    def position(self, label) -> int:
        return self._label_pos[label]

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {self.one_mon: self.field.one})

    def constant(self, c) -> "Poly":
        if c == self.field.zero:
            return self.zero()
        return Poly(self, {self.one_mon: c})

    def var(self, pos: int) -> "Poly":
        return Poly(self, {self.var_mon(pos): self.field.one})

    def var_mon(self, pos: int) -> Mon:
        m = [0] * self.nvars
        m[pos] = 1
        return tuple(m)

    def monomial(self, m: Mon, c=None) -> "Poly":
        if c is None:
            c = self.field.one
        if c == self.field.zero:
            return self.zero()
        return Poly(self, {m: c})

    def from_dict(self, d: dict) -> "Poly":
        zero = self.field.zero
        return Poly(self, {m: c for m, c in d.items() if c != zero})

    def __repr__(self):
        return f"Ring({self.field!r}, {len(self.labels)} vars)"

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and other.field == self.field
            and other.labels == self.labels
        )

    def __hash__(self):
        return hash((self.field, self.labels))


class Poly:
    """Immutable sparse polynomial.  Do not mutate .terms."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one_mon in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def lead(self, order: TermOrder):
        """(monomial, coefficient) of the initial term, or None for 0."""
        if not self.terms:
            return None
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def init_mon(self, order: TermOrder) -> Optional[Mon]:
        """Leading monomial; None is the zero marker."""
        if not self.terms:
            return None
        return max(self.terms, key=order.key)

    def sorted_terms(self, order: TermOrder, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=reverse)

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        zero = field.zero
        add = field.add
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = add(v, c)
                if v == zero:
                    del d[m]
                else:
                    d[m] = v
        return Poly(self.ring, d)

    def __sub__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        zero = field.zero
        sub = field.sub
        neg = field.neg
        d = dict(self.terms)
        for m, c in other.terms.items():
            v = d.get(m)
            if v is None:
                d[m] = neg(c)
            else:
                v = sub(v, c)
                if v == zero:
                    del d[m]
                else:
                    d[m] = v
        return Poly(self.ring, d)

    def __neg__(self) -> "Poly":
        neg = self.ring.field.neg
        return Poly(self.ring, {m: neg(c) for m, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        field = self.ring.field
        zero = field.zero
        mul = field.mul
        add = field.add
        if len(self.terms) > len(other.terms):
            big, small = self.terms, other.terms
        else:
            big, small = other.terms, self.terms
        d: dict = {}
        for m1, c1 in small.items():
            for m2, c2 in big.items():
                m = tuple(map(operator.add, m1, m2))
                c = mul(c1, c2)
                v = d.get(m)
                if v is None:
                    d[m] = c
                else:
                    v = add(v, c)
                    if v == zero:
                        del d[m]
                    else:
                        d[m] = v
        return Poly(self.ring, d)

    def scale(self, c) -> "Poly":
        field = self.ring.field
        if c == field.zero:
            return self.ring.zero()
        mul = field.mul
        return Poly(self.ring, {m: mul(coef, c) for m, coef in self.terms.items()})

    def mul_term(self, m: Mon, c) -> "Poly":
        field = self.ring.field
        if c == field.zero:
            return self.ring.zero()
        mul = field.mul
        return Poly(self.ring, {mon_mul(mm, m): mul(cc, c) for mm, cc in self.terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def monic(self, order: TermOrder) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.lead(order)
        if lc == self.ring.field.one:
            return self
        return self.scale(self.ring.field.inv(lc))

    def content_mon(self) -> Mon:
        """gcd of all monomials (the largest monomial factor of the polynomial)."""
        it = iter(self.terms)
        g = next(it)
        for m in it:
            g = mon_gcd(g, m)
            if not any(g):
                break
        return g

    def canonical_key(self, order: TermOrder):
        return tuple(self.sorted_terms(order))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        from .serialize import format_poly

        return f"Poly({format_poly(self, _REVLEX)})"


# ---------------------------------------------------------------------------
# budget plumbing

class BudgetExceeded(RuntimeError):
    """Raised when a computation overruns its wall-clock deadline."""


def _check_deadline(deadline):
    if deadline is not None and time.monotonic() > deadline:
        raise BudgetExceeded("computation exceeded its time budget")


# ---------------------------------------------------------------------------
# division

def divide_with_remainder(f: Poly, divisors: Sequence[Poly], order: TermOrder,
                          want_quotients: bool = True):
    """Multivariate division: f = sum q_k * divisors[k] + r.

    No term of r is divisible by any divisor's leading monomial.  The divisor
    chosen at each step is the first in list order whose lead divides the
    current monomial, so the output is deterministic.
    """
    ring = f.ring
    field = ring.field
    zero = field.zero
    if any(d.is_zero() for d in divisors):
        raise ZeroDivisionError("zero divisor in division")
    key = order.key
    red = []
    for idx, d in enumerate(divisors):
        lm, lc = d.lead(order)
        tail = [(m, c) for m, c in d.terms.items() if m != lm]
        red.append((lm, mon_support_mask(lm), field.inv(lc), tail, idx))

    work = dict(f.terms)
    heap = [(tuple(-x for x in key(m)), m) for m in work]
    heapq.heapify(heap)
    rem: dict = {}
    quots: list = [dict() for _ in divisors] if want_quotients else None
    add = field.add
    sub = field.sub
    mul = field.mul
    neg = field.neg

    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None or c == zero:
            continue
        mmask = mon_support_mask(m)
        hit = None
        for lm, lmask, invlc, tail, idx in red:
            if lmask & ~mmask:
                continue
            q = mon_div(m, lm)
            if q is not None:
                hit = (q, invlc, tail, idx)
                break
        if hit is None:
            rem[m] = c
            continue
        q, invlc, tail, idx = hit
        coef = mul(c, invlc)
        if want_quotients:
            qd = quots[idx]
            prev = qd.get(q)
            qd[q] = coef if prev is None else add(prev, coef)
        for tm, tc in tail:
            mm = mon_mul(tm, q)
            delta = mul(coef, tc)
            v = work.get(mm)
            if v is None:
                work[mm] = neg(delta)
                heapq.heappush(heap, (tuple(-x for x in key(mm)), mm))
            else:
                v = sub(v, delta)
                if v == zero:
                    del work[mm]
                else:
                    work[mm] = v

    r = Poly(ring, rem)
    if want_quotients:
        return [ring.from_dict(q) for q in quots], r
    return None, r


def normal_form(f: Poly, divisors: Sequence[Poly], order: TermOrder) -> Poly:
    return divide_with_remainder(f, divisors, order, want_quotients=False)[1]


def init_term(f: Poly, order: TermOrder) -> Optional[Mon]:
    """Leading monomial of f, or None (the zero marker) when f = 0."""
    return f.init_mon(order)


# ---------------------------------------------------------------------------
# Buchberger

def _prepare(basis_polys, order):
    """Internal reducer table: (lead, mask, tail items) per monic element."""
    table = []
    for p in basis_polys:
        lm, _ = p.lead(order)
        tail = [(m, c) for m, c in p.terms.items() if m != lm]
        table.append((lm, mon_support_mask(lm), tail))
    return table


def _nf_terms(fterms: dict, table, order, field):
    """Normal form of the term dict fterms against monic reducers in table."""
    zero = field.zero
    key = order.key
    mul = field.mul
    sub = field.sub
    neg = field.neg
    work = dict(fterms)
    heap = [(tuple(-x for x in key(m)), m) for m in work]
    heapq.heapify(heap)
    rem: dict = {}
    push = heapq.heappush
    while heap:
        _, m = heapq.heappop(heap)
        c = work.pop(m, None)
        if c is None or c == zero:
            continue
        mmask = mon_support_mask(m)
        q = None
        hit_tail = None
        for lm, lmask, tail in table:
            if lmask & ~mmask:
                continue
            q = mon_div(m, lm)
            if q is not None:
                hit_tail = tail
                break
        if q is None:
            rem[m] = c
            continue
        for tm, tc in hit_tail:
            mm = mon_mul(tm, q)
            delta = mul(c, tc)
            v = work.get(mm)
            if v is None:
                work[mm] = neg(delta)
                push(heap, (tuple(-x for x in key(mm)), mm))
            else:
                v = sub(v, delta)
                if v == zero:
                    del work[mm]
                else:
                    work[mm] = v
    return rem


def interreduce(polys: Sequence[Poly], order: TermOrder, deadline=None) -> list[Poly]:
    """Monic generators with each reduced against the others; drops zeros."""
    ps = [p for p in polys if not p.is_zero()]
    if not ps:
        return []
    ring = ps[0].ring
    field = ring.field
    ps = [p.monic(order) for p in ps]
    changed = True
    while changed:
        _check_deadline(deadline)
        changed = False
        out: list[Poly] = []
        for i, p in enumerate(ps):
            others = out + ps[i + 1:]
            if others:
                table = _prepare(others, order)
                nf = _nf_terms(p.terms, table, order, field)
                np = Poly(ring, nf).monic(order)
            else:
                np = p
            if np.is_zero():
                changed = True
                continue
            if np.terms != p.terms:
                changed = True
            out.append(np)
        ps = out
    return ps


def buchberger(gens: Sequence[Poly], order: TermOrder, deadline=None) -> tuple[Poly, ...]:
    """Reduced monic Groebner basis of <gens>; canonical for (ideal, order).

    Normal selection strategy (smallest lcm first) with the coprime-lead and
    chain criteria.  The empty tuple is the basis of the zero ideal.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ring = gens[0].ring
    field = ring.field
    key = order.key

    basis = interreduce(gens, order, deadline)
    if not basis:
        return ()
    if any(b.is_constant() for b in basis):
        return (ring.one(),)

    leads: list[Mon] = []
    masks: list[int] = []
    table: list = []

    def register(p: Poly):
        lm, _ = p.lead(order)
        leads.append(lm)
        masks.append(mon_support_mask(lm))
        table.append((lm, masks[-1], [(m, c) for m, c in p.terms.items() if m != lm]))

    for p in basis:
        register(p)

    pending: dict = {}
    heap: list = []

    def add_pairs(t: int):
        lt = leads[t]
        for i in range(t):
            l = mon_lcm(leads[i], lt)
            pending[(i, t)] = l
            heapq.heappush(heap, (key(l), i, t))

    for t in range(len(basis)):
        add_pairs(t)

    ticks = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        l = pending.pop((i, j), None)
        if l is None:
            continue
        ticks += 1
        if ticks % 64 == 0:
            _check_deadline(deadline)
        # coprime leads: S-polynomial reduces to zero
        if mon_mul(leads[i], leads[j]) == l:
            continue
        # chain criterion
        skip = False
        lmask = mon_support_mask(l)
        for t in range(len(basis)):
            if t == i or t == j:
                continue
            if masks[t] & ~lmask:
                continue
            if mon_divides(leads[t], l):
                a = (i, t) if i < t else (t, i)
                b = (j, t) if j < t else (t, j)
                if a not in pending and b not in pending:
                    skip = True
                    break
        if skip:
            continue
        # S-polynomial of two monic elements
        qi = mon_div(l, leads[i])
        qj = mon_div(l, leads[j])
        s: dict = {}
        for m, c in basis[i].terms.items():
            s[mon_mul(m, qi)] = c
        for m, c in basis[j].terms.items():
            mm = mon_mul(m, qj)
            v = s.get(mm)
            if v is None:
                s[mm] = field.neg(c)
            else:
                v = field.sub(v, c)
                if v == field.zero:
                    del s[mm]
                else:
                    s[mm] = v
        if not s:
            continue
        nf = _nf_terms(s, table, order, field)
        if not nf:
            continue
        p = Poly(ring, nf).monic(order)
        if p.is_constant():
            return (ring.one(),)
        t = len(basis)
        basis.append(p)
        register(p)
        add_pairs(t)

    return _reduce_basis(basis, leads, order)


def _reduce_basis(basis, leads, order) -> tuple[Poly, ...]:
    """Minimalize leads to an antichain, tail-reduce, sort ascending by lead."""
    ring = basis[0].ring
    field = ring.field
    key = order.key
    idxs = sorted(range(len(basis)), key=lambda i: key(leads[i]))
    kept: list[int] = []
    kept_leads: list[Mon] = []
    for i in idxs:
        li = leads[i]
        if any(mon_divides(kl, li) for kl in kept_leads):
            continue
        kept.append(i)
        kept_leads.append(li)
    out = []
    for i in kept:
        others = [basis[j] for j in kept if j != i]
        if others:
            table = _prepare(others, order)
            nf = _nf_terms(basis[i].terms, table, order, field)
            out.append(Poly(ring, nf).monic(order))
        else:
            out.append(basis[i])
    out.sort(key=lambda p: key(p.init_mon(order)))
    return tuple(out)


def is_groebner(basis: Sequence[Poly], order: TermOrder) -> bool:
    """Every S-polynomial reduces to zero modulo the basis."""
    bs = [b for b in basis if not b.is_zero()]
    if len(bs) <= 1:
        return True
    one = bs[0].ring.field.one
    for f, g in itertools.combinations(bs, 2):
        lf, _ = f.lead(order)
        lg, _ = g.lead(order)
        l = mon_lcm(lf, lg)
        s = f.monic(order).mul_term(mon_div(l, lf), one) - \
            g.monic(order).mul_term(mon_div(l, lg), one)
        if not normal_form(s, list(bs), order).is_zero():
            return False
    return True

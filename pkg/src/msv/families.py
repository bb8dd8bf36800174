"""Ambient coordinate rings, the ideal constructors for all three families,
and the orbit-closure operation computed by elimination.

The Borel group of invertible lower-triangular matrices factors as
(unipotent) x (torus).  Closure under the full group is computed in two
elimination stages: first the torus (diagonal scaling, inverted through
auxiliary z-variables with t*z = 1), then the unipotent part (whose inverse
action is polynomial, so the source variables can be substituted away
entirely).  An ideal is stable under the product group iff it is stable under
both factors, and each stage returns the largest stable subideal, so the
composite equals the one-shot elimination the definition prescribes; the
one-shot form is kept alongside as a cross-check for small cases.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebra import Mon, Poly, Ring, TermOrder, buchberger
from .fields import QQ
from .ideals import GroebnerBasis, Ideal, MonomialIdeal
from .indices import CLASSICAL, SKEW, SYMMETRIC, SchubertIndex, rank_table

_REVLEX = TermOrder.revlex()


class ClosureUnsupported(ValueError):
    """Orbit closure refused (symmetric flavor in characteristic two)."""


@dataclass(frozen=True, eq=False)
class AmbientSpace:
    """One coordinate ring K[Mat], K[Mat^ss], or K[Mat^sym] with conventions."""

    flavor: str
    m: int
    n: int
    ring: Ring
    positions: tuple[tuple[int, int], ...]
    order: TermOrder = dc_field(default_factory=TermOrder.revlex)

    def pos(self, i: int, j: int) -> int:
        return self.ring.position((self.letter, i, j))

    @property
    def letter(self) -> str:
        return "x" if self.flavor == CLASSICAL else "u"

    def var(self, i: int, j: int) -> Poly:
        return self.ring.var(self.pos(i, j))

    def var_mon(self, i: int, j: int) -> Mon:
        return self.ring.var_mon(self.pos(i, j))

    def zero_ideal(self) -> Ideal:
        return Ideal(self.ring, [], space=self)

    def __repr__(self):
        return f"AmbientSpace({self.flavor}, {self.m}x{self.n}, {self.ring.field!r})"


@lru_cache(maxsize=None)
def _space_cached(flavor: str, m: int, n: int, field_name: str) -> AmbientSpace:
    from .fields import field_by_name

    field = field_by_name(field_name)
    if flavor == CLASSICAL:
        positions = tuple((i, j) for i in range(1, m + 1) for j in range(1, n + 1))
        letter = "x"
    elif flavor == SKEW:
        if m != n:
            raise ValueError("skew flavor requires m == n")
        positions = tuple((i, j) for i in range(1, n + 1) for j in range(1, i))
        positions = tuple(sorted(positions))
        letter = "u"
    elif flavor == SYMMETRIC:
        if m != n:
            raise ValueError("symmetric flavor requires m == n")
        positions = tuple(sorted((i, j) for i in range(1, n + 1) for j in range(1, i + 1)))
        letter = "u"
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    ring = Ring(field, [(letter, i, j) for (i, j) in positions])
    return AmbientSpace(flavor, m, n, ring, positions)


def ambient_space(flavor: str, m: int, n: int, field=QQ) -> AmbientSpace:
    return _space_cached(flavor, m, n, field.name)


# ---------------------------------------------------------------------------
# structured matrix entries

def _entry(space: AmbientSpace, i: int, j: int) -> Poly:
    """The (i, j) entry of the generic (structured) matrix of variables."""
    if space.flavor == CLASSICAL:
        return space.var(i, j)
    if space.flavor == SYMMETRIC:
        return space.var(max(i, j), min(i, j))
    if i == j:
        return space.ring.zero()
    if i > j:
        return space.var(i, j)
    return -space.var(j, i)


def _det(space: AmbientSpace, rows: tuple, cols: tuple, memo: dict) -> Poly:
    if not rows:
        return space.ring.one()
    key = (rows, cols)
    got = memo.get(key)
    if got is not None:
        return got
    r0 = rows[0]
    rest = rows[1:]
    total = space.ring.zero()
    sign = 1
    for t, c in enumerate(cols):
        e = _entry(space, r0, c)
        if not e.is_zero():
            sub = _det(space, rest, cols[:t] + cols[t + 1:], memo)
            term = e * sub
            total = total + term if sign > 0 else total - term
        sign = -sign
    memo[key] = total
    return total


def _size_range(rt) -> range:
    top = rt[-1][-1]
    return range(1, top + 2)


# ---------------------------------------------------------------------------
# ideal constructors

def point_ideal(space: AmbientSpace, idx: SchubertIndex) -> Ideal:
    """The maximal ideal of the representative matrix."""
    mat = idx.matrix()
    field = space.ring.field
    gens = []
    for (i, j) in space.positions:
        c = mat[i - 1][j - 1]
        v = space.var(i, j)
        gens.append(v if c == 0 else v - space.ring.constant(field.of_int(c)))
    return Ideal(space.ring, gens, space=space)


def _pair_included(rt, max_r: int, max_c: int, k: int) -> bool:
    """Whether submatrix rows/cols with the given maxima occur among the
    (rank + 1)-size constraints of some northwest corner."""
    return rt[max_r - 1][max_c - 1] < k


def minor_ideal(space: AmbientSpace, idx: SchubertIndex) -> Ideal:
    """All (rank w_[i][j] + 1)-minors of the northwest corners, deduplicated,
    monic, in a deterministic order."""
    rt = rank_table(idx)
    m, n = space.m, space.n
    memo: dict = {}
    seen = set()
    gens = []
    for k in _size_range(rt):
        for rows in itertools.combinations(range(1, m + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                if not _pair_included(rt, rows[-1], cols[-1], k):
                    continue
                d = _det(space, rows, cols, memo)
                if d.is_zero():
                    continue
                d = d.monic(space.order)
                key = d.canonical_key(space.order)
                if key in seen:
                    continue
                seen.add(key)
                gens.append(d)
    return Ideal(space.ring, gens, space=space)


def antidiagonal_ideal(space: AmbientSpace, idx: SchubertIndex) -> MonomialIdeal:
    """Monomial ideal of antidiagonal products of the same submatrices."""
    if space.flavor == SKEW:
        raise ValueError("antidiagonal ideals exist for the classical and symmetric flavors")
    rt = rank_table(idx)
    m, n = space.m, space.n
    mons = set()
    nv = space.ring.nvars
    for k in _size_range(rt):
        for rows in itertools.combinations(range(1, m + 1), k):
            for cols in itertools.combinations(range(1, n + 1), k):
                if not _pair_included(rt, rows[-1], cols[-1], k):
                    continue
                expo = [0] * nv
                for a in range(k):
                    i, j = rows[a], cols[k - 1 - a]
                    if space.flavor == SYMMETRIC:
                        i, j = max(i, j), min(i, j)
                    expo[space.pos(i, j)] += 1
                mons.add(tuple(expo))
    return MonomialIdeal(space.ring, mons)


def skew_monomial(space: AmbientSpace, A, B) -> Mon | None:
    """The square-free monomial u^ss_{A,B}; None encodes the zero value."""
    A = tuple(sorted(A))
    B = tuple(sorted(B))
    if len(A) != len(B) or not A:
        raise ValueError("need |A| = |B| >= 1")
    r = len(A) - 1
    box = set()
    for t in range(r + 1):
        for (i, j) in ((A[t], B[r - t]), (B[t], A[r - t])):
            if i > j:
                box.add((i, j))
            elif i == j:
                return None
    expo = [0] * space.ring.nvars
    for (i, j) in box:
        expo[space.pos(i, j)] = 1
    return tuple(expo)


def skew_J_ideal(space: AmbientSpace, idx: SchubertIndex) -> MonomialIdeal:
    """J^ss_w: the monomial ideal generated by the u^ss_{A,B} for all corner
    constraints i >= j, A in [i], B in [j], |A| = |B| = 1 + rank w_[i][j]."""
    if space.flavor != SKEW:
        raise ValueError("skew_J_ideal needs the skew flavor")
    rt = rank_table(idx)
    n = space.n
    mons = set()
    for k in _size_range(rt):
        for A in itertools.combinations(range(1, n + 1), k):
            for B in itertools.combinations(range(1, n + 1), k):
                j0 = B[-1]
                i0 = max(A[-1], j0)
                if rt[i0 - 1][j0 - 1] >= k:
                    continue
                mon = skew_monomial(space, A, B)
                if mon is not None:
                    mons.add(mon)
    return MonomialIdeal(space.ring, mons)


# ---------------------------------------------------------------------------
# group actions and orbit closure

@dataclass(frozen=True)
class ActionSpec:
    """The Borel action for one flavor: (g,h).M = g M h^T classically,
    g.M = g M g^T on the skew/symmetric spaces; carries the pullback data
    used by the two elimination stages."""

    space: AmbientSpace

    @property
    def flavor(self) -> str:
        return self.space.flavor

    def torus_rank(self) -> int:
        return self.space.m + self.space.n if self.flavor == CLASSICAL else self.space.n

    def torus_char(self, i: int, j: int) -> tuple[int, ...]:
        """Exponent of the torus character scaling the (i, j) matrix entry."""
        k = self.torus_rank()
        e = [0] * k
        if self.flavor == CLASSICAL:
            e[i - 1] += 1
            e[self.space.m + j - 1] += 1
        else:
            e[i - 1] += 1
            e[j - 1] += 1
        return tuple(e)


def action_for(space: AmbientSpace) -> ActionSpec:
    return ActionSpec(space)


def _poly_substitute(g: Poly, images: list[Poly], dst: Ring) -> Poly:
    pows: dict[tuple[int, int], Poly] = {}

    def power(v: int, e: int) -> Poly:
        got = pows.get((v, e))
        if got is None:
            got = images[v] ** e
            pows[(v, e)] = got
        return got

    total = dst.zero()
    for m, c in g.terms.items():
        term = dst.constant(c)
        for v, e in enumerate(m):
            if e:
                term = term * power(v, e)
        total = total + term
    return total


def _strip_to_ambient(polys, space: AmbientSpace, k: int) -> tuple[Poly, ...]:
    ring = space.ring
    out = []
    for p in polys:
        if any(any(m[:k]) for m in p.terms):
            continue
        out.append(Poly(ring, {m[k:]: c for m, c in p.terms.items()}))
    return tuple(sorted(out, key=lambda p: _REVLEX.key(p.init_mon(_REVLEX))))


def _torus_closure(I: Ideal, act: ActionSpec, deadline=None) -> Ideal:
    space = act.space
    k = act.torus_rank()
    labels = [("t", i, 0) for i in range(1, k + 1)]
    labels += [("z", i, 0) for i in range(1, k + 1)]
    ext = Ring(space.ring.field, tuple(labels) + space.ring.labels)
    chars = [act.torus_char(i, j) for (i, j) in space.positions]
    zero_t = (0,) * k

    def subs(g: Poly) -> Poly:
        d = {}
        for m, c in g.terms.items():
            zexp = [0] * k
            for v, e in enumerate(m):
                if e:
                    ch = chars[v]
                    for a in range(k):
                        zexp[a] += e * ch[a]
            d[zero_t + tuple(zexp) + m] = c
        return Poly(ext, d)

    gens = [subs(g) for g in I.gens]
    one = ext.one()
    for i in range(k):
        t = ext.var(i)
        z = ext.var(k + i)
        gens.append(t * z - one)
    gb = buchberger(gens, TermOrder.elimination(2 * k), deadline=deadline)
    out = _strip_to_ambient(gb, space, 2 * k)
    ideal = Ideal(space.ring, out, space=space)
    ideal.seed_groebner(GroebnerBasis(out, _REVLEX))
    return ideal


def _unit_lower_inverse(ring: Ring, size: int, pos_of: dict) -> list[list[Poly]]:
    """Inverse of the unit lower-triangular matrix with entries b_(i,k)."""
    one = ring.one()
    zero = ring.zero()
    L = [[zero] * size for _ in range(size)]
    for i in range(size):
        L[i][i] = one
        for kk in range(i):
            L[i][kk] = ring.var(pos_of[(i + 1, kk + 1)])
    inv = [[zero] * size for _ in range(size)]
    for col in range(size):
        for i in range(size):
            if i == col:
                acc = one
            else:
                acc = zero
            for j in range(i):
                if not (L[i][j].is_zero() or inv[j][col].is_zero()):
                    acc = acc - L[i][j] * inv[j][col]
            inv[i][col] = acc if i >= col else zero
    return inv


def _unipotent_closure(I: Ideal, act: ActionSpec, deadline=None) -> Ideal:
    space = act.space
    m, n = space.m, space.n
    flavor = space.flavor
    blabels = []
    if flavor == CLASSICAL:
        blabels += [("b", i, kk) for i in range(2, m + 1) for kk in range(1, i)]
        blabels += [("c", j, ll) for j in range(2, n + 1) for ll in range(1, j)]
    else:
        blabels += [("b", i, kk) for i in range(2, n + 1) for kk in range(1, i)]
    nb = len(blabels)
    ext = Ring(space.ring.field, tuple(blabels) + space.ring.labels)

    def bpos(letter, i, kk):
        return ext.position((letter, i, kk))

    # generic matrix of ambient variables inside the extended ring
    def xent(i, j):
        if flavor == CLASSICAL:
            return ext.var(nb + space.pos(i, j))
        if flavor == SYMMETRIC:
            return ext.var(nb + space.pos(max(i, j), min(i, j)))
        if i == j:
            return ext.zero()
        if i > j:
            return ext.var(nb + space.pos(i, j))
        return -ext.var(nb + space.pos(j, i))

    X = [[xent(i + 1, j + 1) for j in range(n)] for i in range(m)]

    ginv = _unit_lower_inverse(ext, m, {(i, kk): bpos("b", i, kk) for i in range(2, m + 1) for kk in range(1, i)})
    if flavor == CLASSICAL:
        hinv = _unit_lower_inverse(ext, n, {(j, ll): bpos("c", j, ll) for j in range(2, n + 1) for ll in range(1, j)})
    else:
        hinv = ginv

    # A = Ginv X Hinv^T: the source point written in target coordinates
    GX = [[None] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            acc = ext.zero()
            for t in range(m):
                if not (ginv[i][t].is_zero() or X[t][j].is_zero()):
                    acc = acc + ginv[i][t] * X[t][j]
            GX[i][j] = acc
    A = [[None] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            acc = ext.zero()
            for t in range(n):
                if not (GX[i][t].is_zero() or hinv[j][t].is_zero()):
                    acc = acc + GX[i][t] * hinv[j][t]
            A[i][j] = acc

    images = [A[i - 1][j - 1] for (i, j) in space.positions]
    gens = [_poly_substitute(g, images, ext) for g in I.gens]
    gb = buchberger(gens, TermOrder.elimination(nb), deadline=deadline)
    out = _strip_to_ambient(gb, space, nb)
    ideal = Ideal(space.ring, out, space=space)
    ideal.seed_groebner(GroebnerBasis(out, _REVLEX))
    return ideal


def orbit_closure(I: Ideal, act: ActionSpec, deadline=None) -> Ideal:
    """cl_G(I): the largest G-stable ideal inside I, by staged elimination."""
    space = act.space
    if I.ring != space.ring:
        raise ValueError("ideal and action live on different spaces")
    if space.flavor == SYMMETRIC and space.ring.field.characteristic == 2:
        raise ClosureUnsupported(
            "symmetric orbit closures are unavailable in characteristic 2: "
            "the cells may split into several orbits"
        )
    return _unipotent_closure(_torus_closure(I, act, deadline), act, deadline)


def orbit_closure_direct(I: Ideal, act: ActionSpec, deadline=None) -> Ideal:
    """One-shot elimination over the full Borel group (cross-check path)."""
    space = act.space
    if space.flavor == SYMMETRIC and space.ring.field.characteristic == 2:
        raise ClosureUnsupported("characteristic 2 symmetric closure")
    m, n = space.m, space.n
    flavor = space.flavor
    blabels = []
    if flavor == CLASSICAL:
        blabels += [("b", i, kk) for i in range(1, m + 1) for kk in range(1, i + 1)]
        blabels += [("c", j, ll) for j in range(1, n + 1) for ll in range(1, j + 1)]
        blabels += [("y", i, 0) for i in range(1, m + 1)]
        blabels += [("w", j, 0) for j in range(1, n + 1)]
    else:
        blabels += [("b", i, kk) for i in range(1, n + 1) for kk in range(1, i + 1)]
        blabels += [("y", i, 0) for i in range(1, n + 1)]
    alabels = [("a",) + p for p in space.positions]
    nb = len(blabels) + len(alabels)
    ext = Ring(space.ring.field, tuple(blabels) + tuple(alabels) + space.ring.labels)

    def bvar(letter, i, kk):
        return ext.var(ext.position((letter, i, kk)))

    def gent(letter, i, kk):
        if kk > i:
            return ext.zero()
        return bvar(letter, i, kk)

    def aent(i, j):
        if flavor == CLASSICAL:
            return ext.var(ext.position(("a", i, j)))
        if flavor == SYMMETRIC:
            i, j = max(i, j), min(i, j)
            return ext.var(ext.position(("a", i, j)))
        if i == j:
            return ext.zero()
        if i > j:
            return ext.var(ext.position(("a", i, j)))
        return -ext.var(ext.position(("a", j, i)))

    G = [[gent("b", i, kk) for kk in range(1, m + 1)] for i in range(1, m + 1)]
    H = (
        [[gent("c", j, ll) for ll in range(1, n + 1)] for j in range(1, n + 1)]
        if flavor == CLASSICAL
        else G
    )
    Amat = [[aent(i, j) for j in range(1, n + 1)] for i in range(1, m + 1)]

    def matmul(P, Q):
        rows, mid, cols = len(P), len(Q), len(Q[0])
        out = [[ext.zero()] * cols for _ in range(rows)]
        for i in range(rows):
            for j in range(cols):
                acc = ext.zero()
                for t in range(mid):
                    if not (P[i][t].is_zero() or Q[t][j].is_zero()):
                        acc = acc + P[i][t] * Q[t][j]
                out[i][j] = acc
        return out

    GA = matmul(G, Amat)
    GAHt = matmul(GA, [[H[j][t] for j in range(len(H))] for t in range(len(H))])

    gens = []
    for (i, j) in space.positions:
        gens.append(ext.var(nb + space.pos(i, j)) - GAHt[i - 1][j - 1])
    # source copy of the ideal
    amap = [ext.var(ext.position(("a",) + p)) for p in space.positions]
    for g in I.gens:
        gens.append(_poly_substitute(g, amap, ext))
    one = ext.one()
    for i in range(1, m + 1):
        gens.append(bvar("y", i, 0) * bvar("b", i, i) - one)
    if flavor == CLASSICAL:
        for j in range(1, n + 1):
            gens.append(bvar("w", j, 0) * bvar("c", j, j) - one)
    gb = buchberger(gens, TermOrder.elimination(nb), deadline=deadline)
    out = _strip_to_ambient(gb, space, nb)
    ideal = Ideal(space.ring, out, space=space)
    ideal.seed_groebner(GroebnerBasis(out, _REVLEX))
    return ideal


def apply_triangular(I: Ideal, act: ActionSpec, lower, lower2=None) -> Ideal:
    """Substitute the explicit group element into every generator.

    lower (and lower2 for the classical two-sided action) are lower-
    triangular matrices of field values with invertible diagonal.
    """
    space = act.space
    m, n = space.m, space.n
    field = space.ring.field
    g = lower
    h = lower2 if lower2 is not None else lower
    if space.flavor == CLASSICAL and lower2 is None:
        raise ValueError("classical action needs both triangular factors")

    def entry(mat, i, j):
        v = mat[i - 1][j - 1] if j <= i else field.zero
        return v

    images = []
    for (i, j) in space.positions:
        acc = space.ring.zero()
        for p in range(1, m + 1):
            gip = entry(g, i, p)
            if gip == field.zero:
                continue
            for q in range(1, n + 1):
                hjq = entry(h, j, q)
                if hjq == field.zero:
                    continue
                e = _entry(space, p, q)
                if not e.is_zero():
                    acc = acc + e.scale(field.mul(gip, hjq))
        images.append(acc)
    gens = [_poly_substitute(gg, images, space.ring) for gg in I.gens]
    return Ideal(space.ring, gens, space=space)

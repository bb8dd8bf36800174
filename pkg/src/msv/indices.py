"""Index combinatorics for the three ideal families.

Indices are finitely supported bijections of the positive integers stored as
one-line words on a window [1, W] chosen large enough that every construction
used here (zero matrices, canonical completions, covers t_pr with r beyond n)
stays inside:

  * classical(m, n): w with Des_R(w) in [m], Des_L(w) in [n]; W = m + n.
  * skew(n):        fixed-point-free involutions w with w(k) = k - (-1)^k for
                    large k and visible descents in [n]; W = 2n + 2.
  * symmetric(n):   involutions with Des_R(w) in [n]; W = 2n + 2.

Each flavor is in bijection with its matrix data (partial permutation
matrices, partial fpf matchings, partial involutions); canonical words are
the minimal-length completions of that data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

CLASSICAL = "classical"
SKEW = "skew"
SYMMETRIC = "symmetric"

FLAVORS = (CLASSICAL, SKEW, SYMMETRIC)


class IndexError_(ValueError):
    pass


@dataclass(frozen=True)
class SchubertIndex:
    """One member of an ideal family: flavor plus a window one-line word."""

    flavor: str
    m: int
    n: int
    word: tuple[int, ...]

    # -- basic permutation access -------------------------------------------
    def w(self, i: int) -> int:
        if 1 <= i <= len(self.word):
            return self.word[i - 1]
        if self.flavor == SKEW:
            return i - (-1) ** i
        return i

    def window(self) -> int:
        return len(self.word)

    def inverse_word(self) -> tuple[int, ...]:
        inv = [0] * len(self.word)
        for i, v in enumerate(self.word, start=1):
            inv[v - 1] = i
        return tuple(inv)

    # -- matrix data -----------------------------------------------------------
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """The representative matrix (0/1, or 0/1/-1 in the skew flavor)."""
        m, n = self.m, self.n
        rows = [[0] * n for _ in range(m)]
        if self.flavor == CLASSICAL:
            for i in range(1, m + 1):
                j = self.w(i)
                if j <= n:
                    rows[i - 1][j - 1] = 1
        elif self.flavor == SYMMETRIC:
            for i in range(1, n + 1):
                j = self.w(i)
                if j <= n:
                    rows[i - 1][j - 1] = 1
        else:  # skew: ss_n(w)
            for i in range(1, n + 1):
                j = self.w(i)
                if j <= n and j != i:
                    rows[i - 1][j - 1] = 1 if i < j else -1
        return tuple(tuple(r) for r in rows)

    def length(self) -> int:
        """Coxeter length for classical/symmetric; fpf-involution length for skew."""
        if self.flavor == SKEW:
            return fpf_length(self)
        w = self.word
        return sum(
            1
            for a in range(len(w))
            for b in range(a + 1, len(w))
            if w[a] > w[b]
        )

    def sort_key(self):
        return (self.length(), self.word)

    def label(self) -> str:
        return index_to_string(self)

    def __repr__(self):
        return f"SchubertIndex({self.flavor}, {self.m}x{self.n}, {index_to_string(self)!r})"


# ---------------------------------------------------------------------------
# canonical completions

def _classical_from_cells(m: int, n: int, cells: dict[int, int]) -> SchubertIndex:
    """Canonical w in the classical index set from row -> column matches."""
    W = m + n
    word = [0] * (W + 1)
    used = set()
    for i, j in cells.items():
        word[i] = j
        used.add(j)
    nxt = n + 1
    for i in range(1, m + 1):
        if word[i] == 0:
            word[i] = nxt
            used.add(nxt)
            nxt += 1
    free = [v for v in range(1, W + 1) if v not in used]
    for pos, v in zip(range(m + 1, W + 1), free):
        word[pos] = v
    return SchubertIndex(CLASSICAL, m, n, tuple(word[1:]))


def _skew_from_matching(n: int, pairs: frozenset[frozenset[int]]) -> SchubertIndex:
    W = 2 * n + 2
    word = [0] * (W + 1)
    matched = set()
    for pr in pairs:
        a, b = sorted(pr)
        word[a], word[b] = b, a
        matched.update((a, b))
    free = [i for i in range(1, n + 1) if i not in matched]
    for k, f in enumerate(free, start=1):
        word[f] = n + k
        word[n + k] = f
    start = n + len(free) + 1
    for a in range(start, W + 1, 2):
        word[a], word[a + 1] = a + 1, a
    return SchubertIndex(SKEW, n, n, tuple(word[1:]))


def _symmetric_from_involution(n: int, pairs: frozenset[frozenset[int]],
                               fixed: frozenset[int]) -> SchubertIndex:
    W = 2 * n + 2
    word = [0] * (W + 1)
    support = set(fixed)
    for pr in pairs:
        a, b = sorted(pr)
        word[a], word[b] = b, a
        support.update((a, b))
    for f in fixed:
        word[f] = f
    free = [i for i in range(1, n + 1) if i not in support]
    for k, f in enumerate(free, start=1):
        word[f] = n + k
        word[n + k] = f
    for i in range(1, W + 1):
        if word[i] == 0:
            word[i] = i
    return SchubertIndex(SYMMETRIC, n, n, tuple(word[1:]))


def index_from_matrix(flavor: str, m: int, n: int, matrix) -> SchubertIndex:
    """Canonical index from a representative matrix."""
    if flavor == CLASSICAL:
        cells = {}
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if matrix[i - 1][j - 1]:
                    cells[i] = j
        return _classical_from_cells(m, n, cells)
    if flavor == SKEW:
        pairs = set()
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if matrix[i - 1][j - 1]:
                    pairs.add(frozenset((i, j)))
        return _skew_from_matching(n, frozenset(pairs))
    if flavor == SYMMETRIC:
        pairs = set()
        fixed = set()
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                if matrix[i - 1][j - 1]:
                    if i == j:
                        fixed.add(i)
                    else:
                        pairs.add(frozenset((i, j)))
        return _symmetric_from_involution(n, frozenset(pairs), frozenset(fixed))
    raise IndexError_(f"unknown flavor {flavor!r}")


def canonicalize(idx: SchubertIndex) -> SchubertIndex:
    """Canonical index with the same matrix data."""
    return index_from_matrix(idx.flavor, idx.m, idx.n, idx.matrix())


def in_index_set(idx: SchubertIndex) -> bool:
    return canonicalize(idx).word == idx.word


# ---------------------------------------------------------------------------
# enumeration

def _matchings(elems: tuple[int, ...]):
    """All partial fpf matchings (sets of disjoint pairs) on elems."""
    if not elems:
        yield frozenset()
        return
    first, rest = elems[0], elems[1:]
    # first unmatched
    for mm in _matchings(rest):
        yield mm
    # first matched with some later element
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for mm in _matchings(remaining):
            yield mm | {frozenset((first, other))}


def _partial_involutions(elems: tuple[int, ...]):
    """(pairs, fixed) for all partial involutions on elems."""
    if not elems:
        yield frozenset(), frozenset()
        return
    first, rest = elems[0], elems[1:]
    for pairs, fixed in _partial_involutions(rest):
        yield pairs, fixed                      # first not in support
        yield pairs, fixed | {first}            # first a fixed point
    for k, other in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for pairs, fixed in _partial_involutions(remaining):
            yield pairs | {frozenset((first, other))}, fixed


@lru_cache(maxsize=None)
def enumerate_indices(flavor: str, m: int, n: int) -> tuple[SchubertIndex, ...]:
    """Complete duplicate-free enumeration, sorted by (length, word)."""
    if m < 1 or n < 1:
        raise IndexError_("need m, n >= 1")
    out: list[SchubertIndex] = []
    if flavor == CLASSICAL:
        for k in range(min(m, n) + 1):
            for rows in itertools.combinations(range(1, m + 1), k):
                for cols in itertools.combinations(range(1, n + 1), k):
                    for perm in itertools.permutations(cols):
                        out.append(_classical_from_cells(m, n, dict(zip(rows, perm))))
    elif flavor == SKEW:
        if m != n:
            raise IndexError_("skew flavor requires m == n")
        for mm in _matchings(tuple(range(1, n + 1))):
            out.append(_skew_from_matching(n, mm))
    elif flavor == SYMMETRIC:
        if m != n:
            raise IndexError_("symmetric flavor requires m == n")
        for pairs, fixed in _partial_involutions(tuple(range(1, n + 1))):
            out.append(_symmetric_from_involution(n, pairs, fixed))
    else:
        raise IndexError_(f"unknown flavor {flavor!r}")
    uniq = {idx.word: idx for idx in out}
    return tuple(sorted(uniq.values(), key=SchubertIndex.sort_key))


# ---------------------------------------------------------------------------
# rank tables and dominant components

def rank_table(idx: SchubertIndex) -> tuple[tuple[int, ...], ...]:
    """Northwest corner ranks of the representative matrix."""
    mat = idx.matrix()
    m, n = len(mat), len(mat[0])
    table = [[0] * n for _ in range(m)]
    for i in range(m):
        run = 0
        for j in range(n):
            run += 1 if mat[i][j] else 0
            table[i][j] = run + (table[i - 1][j] if i else 0)
    return tuple(tuple(r) for r in table)


def dominant_component(idx: SchubertIndex) -> tuple[tuple[int, int], ...]:
    """Cells (i, j) of the ambient rectangle with corner rank zero (a Young diagram)."""
    rt = rank_table(idx)
    cells = []
    for i, row in enumerate(rt, start=1):
        for j, r in enumerate(row, start=1):
            if r == 0:
                cells.append((i, j))
    return tuple(cells)


def _dom_row_lengths(idx: SchubertIndex) -> list[int]:
    rt = rank_table(idx)
    lam = []
    for row in rt:
        ln = 0
        for r in row:
            if r == 0:
                ln += 1
            else:
                break
        lam.append(ln)
    return lam


def outer_corners(idx: SchubertIndex, constraint: str = "any") -> tuple[tuple[int, int], ...]:
    """Cells whose addition keeps dom(w) a Young diagram, inside the ambient
    rectangle; constraint "strictly-below-diagonal" keeps only p > q."""
    lam = _dom_row_lengths(idx)
    m = len(lam)
    n = len(rank_table(idx)[0])
    corners = []
    for i in range(1, m + 2):
        cur = lam[i - 1] if i <= m else 0
        prev = lam[i - 2] if i >= 2 else None
        if prev is not None and cur >= prev:
            continue
        corners.append((i, cur + 1))
    corners = [c for c in corners if c[0] <= m and c[1] <= n]
    if constraint == "strictly-below-diagonal":
        corners = [c for c in corners if c[0] > c[1]]
    elif constraint != "any":
        raise IndexError_(f"unknown corner constraint {constraint!r}")
    return tuple(sorted(corners))


def canonical_outer_corner(idx: SchubertIndex) -> tuple[int, int]:
    """Lexicographically minimal admissible outer corner."""
    constraint = "strictly-below-diagonal" if idx.flavor == SKEW else "any"
    cs = outer_corners(idx, constraint)
    if not cs:
        raise IndexError_(f"no admissible outer corner for {idx!r}")
    return cs[0]


# ---------------------------------------------------------------------------
# lengths and covers

def fpf_length(idx: SchubertIndex) -> int:
    """Number of pairs (i, j) with w(i) > w(j) < i < j (skew flavor)."""
    if idx.flavor != SKEW:
        raise IndexError_("fpf length is defined for the skew flavor")
    w = idx.word
    W = len(w)
    count = 0
    for j in range(1, W + 1):
        wj = w[j - 1]
        if wj >= j - 1:
            continue
        for i in range(wj + 1, j):
            if w[i - 1] > wj:
                count += 1
    return count


def _is_classical_cover(word: tuple[int, ...], p: int, r: int) -> bool:
    """w lessdot w t_{pr}: w(p) < w(r) and nothing in between inside (p, r)."""
    wp, wr = word[p - 1], word[r - 1]
    if wp >= wr:
        return False
    return not any(wp < word[e - 1] < wr for e in range(p + 1, r))


def bruhat_cover_set(idx: SchubertIndex, p: int) -> tuple[SchubertIndex, ...]:
    """Covers moving row p: classical {w t_pr}, skew {t_pr w t_pr}.

    Every returned index lies in the enumerated ambient set; an empty result
    signals a combinatorics bug and raises.
    """
    W = idx.window()
    out = []
    if idx.flavor == CLASSICAL:
        for r in range(p + 1, W + 1):
            if not _is_classical_cover(idx.word, p, r):
                continue
            word = list(idx.word)
            word[p - 1], word[r - 1] = word[r - 1], word[p - 1]
            cand = SchubertIndex(CLASSICAL, idx.m, idx.n, tuple(word))
            if in_index_set(cand):
                out.append(cand)
    elif idx.flavor == SKEW:
        base_len = fpf_length(idx)
        for r in range(p + 1, W + 1):
            if idx.w(p) == r:
                continue
            word = list(idx.word)
            word[p - 1], word[r - 1] = word[r - 1], word[p - 1]
            for i in range(W):
                if word[i] == p:
                    word[i] = r
                elif word[i] == r:
                    word[i] = p
            cand = SchubertIndex(SKEW, idx.m, idx.n, tuple(word))
            if fpf_length(cand) != base_len + 1:
                continue
            if in_index_set(cand):
                out.append(cand)
    else:
        raise IndexError_("cover sets exist for the classical and skew flavors")
    if not out:
        raise IndexError_(f"empty cover set at row {p} for {idx!r}")
    return tuple(sorted(out, key=SchubertIndex.sort_key))


# ---------------------------------------------------------------------------
# distinguished indices

def zero_index(flavor: str, m: int, n: int) -> SchubertIndex:
    """The index of the zero matrix (the maximal ideal member)."""
    if flavor == CLASSICAL:
        return _classical_from_cells(m, n, {})
    if flavor == SKEW:
        return _skew_from_matching(n, frozenset())
    return _symmetric_from_involution(n, frozenset(), frozenset())


# ---------------------------------------------------------------------------
# serialization

def index_to_string(idx: SchubertIndex) -> str:
    if idx.flavor == SKEW:
        cycles = []
        for i in range(1, idx.n + 1):
            j = idx.w(i)
            if i < j:
                cycles.append((i, j))
        return "".join(f"({a},{b})" for a, b in sorted(cycles))
    w = idx.word
    k = max((i for i in range(1, len(w) + 1) if w[i - 1] != i), default=1)
    vals = w[:k]
    if max(vals) <= 9:
        return "".join(str(v) for v in vals)
    return ",".join(str(v) for v in vals)


def index_from_string(flavor: str, m: int, n: int, s: str) -> SchubertIndex:
    s = s.strip()
    if flavor == SKEW:
        pairs = set()
        body = s.replace(" ", "")
        if body:
            if not (body.startswith("(") and body.endswith(")")):
                raise IndexError_(f"bad skew index {s!r}")
            for part in body[1:-1].split(")("):
                a, b = part.split(",")
                pairs.add(frozenset((int(a), int(b))))
        pairs = frozenset(pr for pr in pairs if max(pr) <= n)
        idx = _skew_from_matching(n, pairs)
        return idx
    if "," in s:
        vals = [int(v) for v in s.split(",")]
    else:
        vals = [int(ch) for ch in s]
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise IndexError_(f"{s!r} is not a permutation one-line word")
    W = m + n if flavor == CLASSICAL else 2 * n + 2
    if len(vals) > W:
        raise IndexError_(f"word {s!r} does not fit the ambient window")
    word = tuple(vals) + tuple(range(len(vals) + 1, W + 1))
    idx = SchubertIndex(flavor, m, n, word)
    canon = canonicalize(idx)
    if canon.word != idx.word:
        raise IndexError_(f"{s!r} is not in the {flavor} ({m}, {n}) index set")
    return canon

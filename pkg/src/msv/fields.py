"""Exact coefficient fields: the rationals and prime fields F_p.

Coefficients are stored as raw values (gmpy2.mpq for rationals, ints in
[0, p) for prime fields); the field object supplies the arithmetic.  Hot
loops fetch the operations into locals once, so the per-op cost is a single
call into gmpy2 / int arithmetic.
"""

from __future__ import annotations

import operator

try:
    from gmpy2 import mpq as _rat
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as _rat


class FieldError(ValueError):
    pass


class RationalField:
    """The field of rationals, always stored in lowest terms with positive denominator."""

    name = "q"
    characteristic = 0

    def __init__(self):
        self.zero = _rat(0)
        self.one = _rat(1)
        self.add = operator.add
        self.sub = operator.sub
        self.mul = operator.mul
        self.neg = operator.neg

    def inv(self, a):
        return self.one / a

    def div(self, a, b):
        return a / b

    def of_int(self, n: int):
        return _rat(n)

    def parse(self, s: str):
        return _rat(s)

    def to_str(self, a) -> str:
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """F_p with residues stored in [0, p)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"fp:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.mul = lambda a, b: (a * b) % p
        self.neg = lambda a: (-a) % p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0 in prime field")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def of_int(self, n: int):
        return n % self.p

    def parse(self, s: str):
        return int(s) % self.p

    def to_str(self, a) -> str:
        return str(a % self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(self.name)


QQ = RationalField()

_gf_cache: dict[int, PrimeField] = {}


def GF(p: int) -> PrimeField:
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_by_name(name: str):
    """Resolve the CLI field tag: "q" or "fp:P"."""
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return GF(int(name[3:]))
    raise FieldError(f"unknown field tag {name!r}")

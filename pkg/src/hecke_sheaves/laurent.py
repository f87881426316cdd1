"""
Exact arithmetic in the ring of Laurent polynomials Z[v, 1/v] and in its
fraction field Q(v).

Both types are immutable value objects. ``LaurentPoly`` is a sparse map from
exponents to nonzero integers; ``FracLaurent`` is a reduced quotient of two
such maps. The same class is used for polynomials in ``q``: the variable name
only matters when printing, and ``substitute_square`` turns ``p(q)`` into
``p(v^2)``.

>>> v = LaurentPoly.v()
>>> (v + v**-1) * (v - v**-1)
LaurentPoly('-v^-2+v^2')
>>> (v**2 + 1).bar()
LaurentPoly('1+v^-2')
"""

__all__ = [
    "LaurentPoly", "FracLaurent", "OddExponent",
    "specialize", "specialize_surd",
]

from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Mapping, Union


class OddExponent(ValueError):
    """Raised when evaluating at v^2 = t needs a square root of t."""


Scalar = Union[int, Fraction]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], int, None] = None):
        if coeffs is None:
            c = {}
        elif isinstance(coeffs, int):
            c = {0: coeffs} if coeffs else {}
        else:
            c = {}
            for e, a in coeffs.items():
                if a:
                    c[int(e)] = int(a)
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # caller guarantees no zero coefficients
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def v(cls) -> "LaurentPoly":
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exp: coeff} if coeff else {})

    # -- inspection --------------------------------------------------------

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == 1

    @property
    def low(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no lowest exponent")
        return min(self._c)

    @property
    def high(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no highest exponent")
        return max(self._c)

    def content(self) -> int:
        g = 0
        for a in self._c.values():
            g = gcd(g, a)
        return g

    def __len__(self):
        return len(self._c)

    def __bool__(self):
        return bool(self._c)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for e, a in other._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({e: a * other for e, a in self._c.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return LaurentPoly._raw({})
        c: dict = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
        return LaurentPoly._raw({e: a for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible in Z[v, 1/v]")
            (e, a), = self._c.items()
            if a not in (1, -1):
                raise ValueError("only units are invertible in Z[v, 1/v]")
            return LaurentPoly._raw({e * n: a ** (-n)})
        result = LaurentPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by v^k."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def bar(self) -> "LaurentPoly":
        """The involution v -> 1/v."""
        return LaurentPoly._raw({-e: a for e, a in self._c.items()})

    def substitute_square(self) -> "LaurentPoly":
        """p(q) -> p(v^2)."""
        return LaurentPoly._raw({2 * e: a for e, a in self._c.items()})

    def halve_exponents(self) -> "LaurentPoly":
        """Inverse of ``substitute_square``; all exponents must be even."""
        if any(e % 2 for e in self._c):
            raise OddExponent("odd exponent in %r" % self)
        return LaurentPoly._raw({e // 2: a for e, a in self._c.items()})

    def truncate_below(self, bound: int) -> "LaurentPoly":
        """Keep the terms with exponent < bound."""
        return LaurentPoly._raw({e: a for e, a in self._c.items() if e < bound})

    def evaluate(self, t: Scalar) -> Fraction:
        """Value at v = t (t nonzero if negative exponents occur)."""
        t = Fraction(t)
        return sum((a * t ** e for e, a in self._c.items()), Fraction(0))

    # -- comparison, hashing, printing -------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, FracLaurent):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def format(self, var: str = "v") -> str:
        if not self._c:
            return "0"
        out = []
        for e, a in self.items():
            if e == 0:
                term = str(abs(a))
            else:
                mono = var if e == 1 else "%s^%d" % (var, e)
                term = mono if abs(a) == 1 else "%d%s" % (abs(a), mono)
            sign = "-" if a < 0 else "+"
            out.append((sign, term))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, term in out[1:]:
            s += sign + term
        return s

    def __str__(self):
        return self.format("v")

    def __repr__(self):
        return "LaurentPoly(%r)" % self.format("v")

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"coeffs": [[e, a] for e, a in self.items()]}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        return cls({int(e): int(a) for e, a in obj["coeffs"]})

    # -- polynomial helpers used by FracLaurent ----------------------------

    def _dense(self) -> list:
        """Coefficients from exponent 0 up; requires low >= 0."""
        out = [0] * (self.high + 1)
        for e, a in self._c.items():
            out[e] = a
        return out


def _poly_gcd(a: list, b: list) -> list:
    """Primitive gcd of two dense integer polynomials (constant term first)."""
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    def primitive(p):
        g = 0
        for x in p:
            g = gcd(g, x)
        if g == 0:
            return p
        if p[-1] < 0:
            g = -g
        return [x // g for x in p]

    a = primitive(trim(list(a)))
    b = primitive(trim(list(b)))
    while b:
        # pseudo-remainder of a by b over Z
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for i, y in enumerate(b):
                r[i + shift] -= lr * y
            trim(r)
        a, b = b, primitive(r)
    return a


def _exact_div(a: list, b: list) -> list:
    """Exact quotient a / b of dense integer polynomials."""
    r = [Fraction(x) for x in a]
    db = len(b) - 1
    q = [Fraction(0)] * max(len(a) - db, 1)
    lb = b[-1]
    for i in range(len(a) - 1 - db, -1, -1):
        c = r[i + db] / lb
        q[i] = c
        if c:
            for j, y in enumerate(b):
                r[i + j] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    if any(x.denominator != 1 for x in q):
        raise ArithmeticError("quotient is not integral")
    return [int(x) for x in q]


def _from_dense(d: list, shift: int = 0) -> LaurentPoly:
    return LaurentPoly._raw({i + shift: a for i, a in enumerate(d) if a})


_ONE = LaurentPoly(1)


class FracLaurent:
    """
    A quotient num/den of Laurent polynomials in canonical form: the
    denominator has lowest exponent 0 and positive leading coefficient, and
    num and den share no common factor (including integer content).
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1, _reduced: bool = False):
        if isinstance(den, Fraction):
            num, den = Fraction(den.denominator) * num if isinstance(num, (int, Fraction)) \
                else num * den.denominator, den.numerator
        if isinstance(num, Fraction):
            den = den * num.denominator if isinstance(den, LaurentPoly) \
                else LaurentPoly(int(den) * num.denominator)
            num = num.numerator
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly(int(num))
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly(int(den))
        self._hash = None
        if _reduced:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, _ONE
            return
        if den.is_one():
            self.num, self.den = num, _ONE
            return
        # move powers of v from den into num
        k = den.low
        num, den = num.shift(-k), den.shift(-k)
        if len(den) == 1:
            a = den.coeff(0)
            g = gcd(num.content(), a)
            if a < 0:
                g = -g
            self.num = LaurentPoly._raw({e: c // g for e, c in num._c.items()})
            self.den = LaurentPoly(a // g)
            return
        m = num.low
        nd, dd = num.shift(-m)._dense(), den._dense()
        g = _poly_gcd(nd, dd)
        if len(g) > 1:
            nd, dd = _exact_div(nd, g), _exact_div(dd, g)
        c = 0
        for x in nd:
            c = gcd(c, x)
        for x in dd:
            c = gcd(c, x)
        if dd[-1] < 0:
            c = -c
        nd = [x // c for x in nd]
        dd = [x // c for x in dd]
        self.num, self.den = _from_dense(nd, m), _from_dense(dd)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "FracLaurent":
        return cls(p, _ONE, _reduced=True)

    @staticmethod
    def _coerce(other):
        if isinstance(other, FracLaurent):
            return other
        if isinstance(other, LaurentPoly):
            return FracLaurent(other, _ONE, _reduced=True)
        if isinstance(other, (int, Fraction)):
            return FracLaurent(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentPoly:
        if not self.den.is_one():
            raise ValueError("%s is not a Laurent polynomial" % self)
        return self.num

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return FracLaurent(self.num + other.num, _ONE, _reduced=True)
        if self.den == other.den:
            return FracLaurent(self.num + other.num, self.den)
        return FracLaurent(self.num * other.den + other.num * self.den,
                           self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FracLaurent(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and self.den.is_one():
            return FracLaurent(self.num * other, _ONE, _reduced=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return FracLaurent(self.num * other.num, _ONE, _reduced=True)
        return FracLaurent(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FracLaurent":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FracLaurent(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FracLaurent(self.num ** n, self.den ** n)

    def bar(self) -> "FracLaurent":
        return FracLaurent(self.num.bar(), self.den.bar())

    def shift(self, k: int) -> "FracLaurent":
        return FracLaurent(self.num.shift(k), self.den, _reduced=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # canonical forms make this structural; cross-multiplication kept as
        # the definition for safety
        if self.num == other.num and self.den == other.den:
            return True
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def format(self, var: str = "v") -> str:
        if self.den.is_one():
            return self.num.format(var)
        return "(%s)/(%s)" % (self.num.format(var), self.den.format(var))

    def __str__(self):
        return self.format()

    def __repr__(self):
        return "FracLaurent(%r)" % self.format()

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "FracLaurent":
        if "coeffs" in obj:
            return cls.from_laurent(LaurentPoly.from_json(obj))
        return cls(LaurentPoly.from_json(obj["num"]), LaurentPoly.from_json(obj["den"]))


def _rational_sqrt(t: Fraction):
    n, d = t.numerator, t.denominator
    if n < 0:
        return None
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _split_parity(p: LaurentPoly, t: Fraction) -> tuple:
    """p(v) = a + b v with a, b evaluated at v^2 = t."""
    even = sum((c * t ** (e // 2) for e, c in p._c.items() if e % 2 == 0), Fraction(0))
    odd = sum((c * t ** ((e - 1) // 2) for e, c in p._c.items() if e % 2), Fraction(0))
    return even, odd


def specialize(p, t: Scalar, mode: str = "v") -> Fraction:
    """
    Evaluate ``p`` at ``v = t`` (mode ``"v"``) or at ``v^2 = t`` (mode
    ``"v2"``). Accepts LaurentPoly and FracLaurent.

    >>> specialize(LaurentPoly({4: 1, 2: -1}), 3, mode="v2")
    Fraction(6, 1)
    """
    t = Fraction(t)
    if t == 0:
        raise ZeroDivisionError("specialization point must be nonzero")
    if isinstance(p, int):
        return Fraction(p)
    if isinstance(p, FracLaurent):
        den = specialize(p.den, t, mode)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at %s" % t)
        return specialize(p.num, t, mode) / den
    if mode == "v":
        return p.evaluate(t)
    if mode != "v2":
        raise ValueError("mode must be 'v' or 'v2'")
    even, odd = _split_parity(p, t)
    if not odd:
        return even
    root = _rational_sqrt(t)
    if root is None:
        raise OddExponent("odd exponent and %s is not a rational square" % t)
    return even + odd * root


def specialize_surd(p, t: Scalar) -> tuple:
    """
    Evaluate at ``v = sqrt(t)`` exactly in Q(sqrt t): returns ``(a, b)`` with
    value ``a + b*sqrt(t)``. For a FracLaurent the quotient is rationalized.
    """
    t = Fraction(t)
    if isinstance(p, int):
        return Fraction(p), Fraction(0)
    if isinstance(p, FracLaurent):
        a, b = _split_parity(p.num, t)
        c, d = _split_parity(p.den, t)
        norm = c * c - d * d * t
        if norm == 0:
            if d == 0 or _rational_sqrt(t) is None:
                raise ZeroDivisionError("denominator vanishes at v^2 = %s" % t)
            # t is a square: collapse to a rational value
            r = _rational_sqrt(t)
            return (a + b * r) / (c + d * r), Fraction(0)
        # (a + b s)(c - d s) / norm
        return (a * c - b * d * t) / norm, (b * c - a * d) / norm
    return _split_parity(p, t)


def laurent_sum(terms: Iterable[LaurentPoly]) -> LaurentPoly:
    c: dict = {}
    for p in terms:
        for e, a in p._c.items():
            c[e] = c.get(e, 0) + a
    return LaurentPoly._raw({e: a for e, a in c.items() if a})

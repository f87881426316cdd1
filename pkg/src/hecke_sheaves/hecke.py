"""
The Iwahori-Hecke algebra H of a finite Coxeter group in the T-basis.

Normalization: ``(T_s + 1)(T_s - v^2) = 0`` and ``T_w T_w' = T_ww'`` when
lengths add. Coefficients are ``FracLaurent`` throughout, so the same type
also serves the extension of scalars to Q(v).

Products are computed by applying generators one at a time:

    T_s T_w = T_sw                        if sw > w
    T_s T_w = (v^2 - 1) T_w + v^2 T_sw    if sw < w
"""

__all__ = [
    "HeckeElt", "T", "t_inverse", "mul", "bar", "transpose", "dagger",
    "is_central",
]

from typing import Dict, Iterable, Union

from .coxeter import CoxeterElement, CoxeterGroup, GroupMismatch, coxeter_group
from .laurent import FracLaurent, LaurentPoly

ScalarLike = Union[int, LaurentPoly, FracLaurent]

V2 = FracLaurent.from_laurent(LaurentPoly.monomial(2))
V2_MINUS_1 = FracLaurent.from_laurent(LaurentPoly({2: 1, 0: -1}))
VM2 = FracLaurent.from_laurent(LaurentPoly.monomial(-2))
VM2_MINUS_1 = FracLaurent.from_laurent(LaurentPoly({-2: 1, 0: -1}))
ONE = FracLaurent(1)


def _as_coeff(c: ScalarLike) -> FracLaurent:
    if isinstance(c, FracLaurent):
        return c
    if isinstance(c, LaurentPoly):
        return FracLaurent.from_laurent(c)
    return FracLaurent(c)


def _acc(d: dict, k: int, c: FracLaurent):
    old = d.get(k)
    if old is None:
        d[k] = c
    else:
        s = old + c
        if s.is_zero():
            del d[k]
        else:
            d[k] = s


class HeckeElt:
    """
    A finitely supported map W -> Q(v), read as an element of H in the
    T-basis. Keys are element indices of ``group``.
    """

    __slots__ = ("group", "coeffs")

    def __init__(self, group: CoxeterGroup, coeffs: Dict[int, ScalarLike] = None):
        self.group = group
        self.coeffs = {}
        if coeffs:
            for k, c in coeffs.items():
                c = _as_coeff(c)
                if not c.is_zero():
                    self.coeffs[int(k)] = c

    @classmethod
    def _raw(cls, group, coeffs):
        h = object.__new__(cls)
        h.group = group
        h.coeffs = coeffs
        return h

    # -- construction ------------------------------------------------------

    @classmethod
    def zero(cls, group: CoxeterGroup) -> "HeckeElt":
        return cls._raw(group, {})

    @classmethod
    def one(cls, group: CoxeterGroup) -> "HeckeElt":
        return cls._raw(group, {0: ONE})

    @classmethod
    def basis(cls, w: CoxeterElement) -> "HeckeElt":
        return cls._raw(w.group, {w.index: ONE})

    # -- inspection --------------------------------------------------------

    def coeff(self, w: Union[CoxeterElement, int]) -> FracLaurent:
        i = w.index if isinstance(w, CoxeterElement) else w
        return self.coeffs.get(i, FracLaurent(0))

    def items(self):
        """(element, coefficient) pairs in ShortLex order."""
        return [(CoxeterElement(self.group, i), self.coeffs[i]) for i in sorted(self.coeffs)]

    def support(self) -> list:
        return [CoxeterElement(self.group, i) for i in sorted(self.coeffs)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "HeckeElt"):
        if self.group is not other.group:
            raise GroupMismatch("%r vs %r" % (self.group, other.group))

    # -- linear structure --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        self._check(other)
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            _acc(d, k, c)
        return HeckeElt._raw(self.group, d)

    def __neg__(self):
        return HeckeElt._raw(self.group, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarLike) -> "HeckeElt":
        c = _as_coeff(c)
        if c.is_zero():
            return HeckeElt.zero(self.group)
        return HeckeElt._raw(self.group, {k: a * c for k, a in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElt):
            return mul(self, other)
        if isinstance(other, (int, LaurentPoly, FracLaurent)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, FracLaurent)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.group), frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for w, c in self.items():
            terms.append("(%s)*T%s" % (c, list(w.word)))
        return " + ".join(terms)

    # -- generator actions -------------------------------------------------

    def left_mul_generator(self, s: int) -> "HeckeElt":
        """T_s * self (generators numbered from 1)."""
        G = self.group
        ls, lens = G.left[s - 1], G.lengths
        d: dict = {}
        for w, c in self.coeffs.items():
            sw = ls[w]
            if lens[sw] > lens[w]:
                _acc(d, sw, c)
            else:
                _acc(d, w, c * V2_MINUS_1)
                _acc(d, sw, c * V2)
        return HeckeElt._raw(G, d)

    def right_mul_generator(self, s: int) -> "HeckeElt":
        """self * T_s (generators numbered from 1)."""
        G = self.group
        rs, lens = G.right[s - 1], G.lengths
        d: dict = {}
        for w, c in self.coeffs.items():
            ws = rs[w]
            if lens[ws] > lens[w]:
                _acc(d, ws, c)
            else:
                _acc(d, w, c * V2_MINUS_1)
                _acc(d, ws, c * V2)
        return HeckeElt._raw(G, d)

    def left_mul_generator_inverse(self, s: int) -> "HeckeElt":
        """T_s^-1 * self, using T_s^-1 = v^-2 T_s + (v^-2 - 1)."""
        return self.left_mul_generator(s).scale(VM2) + self.scale(VM2_MINUS_1)

    def left_mul_word(self, word: Iterable[int]) -> "HeckeElt":
        """T_{s1} ... T_{sk} * self for a 1-based word (s1, ..., sk)."""
        h = self
        for s in reversed(tuple(word)):
            h = h.left_mul_generator(s)
        return h

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": self.group.label,
            "coeffs": [{"w": list(w.word), "c": c.to_json()} for w, c in self.items()],
        }

    @classmethod
    def from_json(cls, obj) -> "HeckeElt":
        G = coxeter_group(obj["type"])
        h = {}
        for entry in obj["coeffs"]:
            i = G.element(entry["w"]).index
            h[i] = FracLaurent.from_json(entry["c"])
        return cls(G, h)


def T(w: CoxeterElement) -> HeckeElt:
    """The basis element T_w."""
    return HeckeElt.basis(w)


def mul(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in H, expanding ``a`` generator by generator onto ``b``."""
    a._check(b)
    G = a.group
    result: dict = {}
    # group terms of ``a`` by canonical word prefix to reuse partial products:
    # T_u b for u = s1..sk is computed as T_{s1}(T_{s2..sk} b), so we cache
    # suffix products keyed by element index of the suffix
    cache = {0: b}

    def tb(u: int) -> HeckeElt:
        h = cache.get(u)
        if h is None:
            word = G.words[u]
            rest = G._index_of_word(word[1:])
            h = tb(rest).left_mul_generator(word[0])
            cache[u] = h
        return h

    for u, c in a.coeffs.items():
        for k, x in tb(u).coeffs.items():
            _acc(result, k, x * c)
    return HeckeElt._raw(G, result)


class _Tables:
    """Per-group caches of T_w^-1."""
    _by_group: dict = {}

    @classmethod
    def t_inverse(cls, G: CoxeterGroup, i: int) -> HeckeElt:
        store = cls._by_group.setdefault(G.label, {})
        h = store.get(i)
        if h is None:
            h = HeckeElt.one(G)
            for s in G.words[i]:
                h = h.left_mul_generator_inverse(s)
            store[i] = h
        return h


def t_inverse(w: CoxeterElement) -> HeckeElt:
    """T_w^-1 = T_{sk}^-1 ... T_{s1}^-1 for the canonical word s1..sk of w."""
    return _Tables.t_inverse(w.group, w.index)


def bar(h: HeckeElt) -> HeckeElt:
    """The ring involution v^j T_w -> v^-j T_{w^-1}^-1."""
    G = h.group
    inv = G.inverse_index
    result: dict = {}
    for w, c in h.coeffs.items():
        cb = c.bar()
        for k, x in _Tables.t_inverse(G, inv[w]).coeffs.items():
            _acc(result, k, x * cb)
    return HeckeElt._raw(G, result)


def transpose(h: HeckeElt) -> HeckeElt:
    """The antiautomorphism T_w -> T_{w^-1}."""
    inv = h.group.inverse_index
    return HeckeElt._raw(h.group, {inv[w]: c for w, c in h.coeffs.items()})


def dagger(h: HeckeElt) -> HeckeElt:
    """The involution T_w -> (-v^2)^l(w) T_{w^-1}^-1."""
    G = h.group
    inv = G.inverse_index
    result: dict = {}
    for w, c in h.coeffs.items():
        l = G.lengths[w]
        f = c * FracLaurent.from_laurent(LaurentPoly.monomial(2 * l, (-1) ** l))
        for k, x in _Tables.t_inverse(G, inv[w]).coeffs.items():
            _acc(result, k, x * f)
    return HeckeElt._raw(G, result)


def is_central(h: HeckeElt) -> bool:
    """True iff h commutes with every T_s."""
    return all(h.left_mul_generator(s) == h.right_mul_generator(s)
               for s in range(1, h.group.rank + 1))

"""
The dual module H* = Hom(H, A) with the basis dual to the c-basis, the
twisted action ``h * phi = (transpose(dagger(h))) phi``, the map Lambda and
the coefficient matrices of left multiplication by T_w0^{+-1} in the c-basis.

The dual basis is normalized by ``ct_x(c_y) = (-1)^l(x) delta_{x,y}``.
"""

__all__ = [
    "DualElt", "dual_basis", "pair", "star_action", "star_rule", "lambda_map",
    "a_coeffs", "b_coeffs",
]

from functools import lru_cache
from typing import Dict

from .coxeter import CoxeterElement, CoxeterGroup, GroupMismatch
from .hecke import HeckeElt, dagger, mul, transpose
from .klbasis import KLTable, expand_in_c
from .laurent import FracLaurent, LaurentPoly

_V = FracLaurent.from_laurent(LaurentPoly.v())
_V2 = FracLaurent.from_laurent(LaurentPoly.monomial(2))


class DualElt:
    """An element of H* in coordinates of the basis ct_w."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: CoxeterGroup, coeffs: Dict[int, FracLaurent] = None):
        self.group = group
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            if not isinstance(c, FracLaurent):
                c = FracLaurent(c) if not isinstance(c, LaurentPoly) else FracLaurent.from_laurent(c)
            if c:
                self.coeffs[int(k)] = c

    def _check(self, other):
        if self.group is not other.group:
            raise GroupMismatch("%r vs %r" % (self.group, other.group))

    def __add__(self, other):
        if not isinstance(other, DualElt):
            return NotImplemented
        self._check(other)
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, FracLaurent(0)) + c
        return DualElt(self.group, d)

    def __neg__(self):
        return DualElt(self.group, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DualElt":
        return DualElt(self.group, {k: a * c for k, a in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, DualElt):
            return NotImplemented
        return self.group is other.group and self.coeffs == other.coeffs

    def items(self):
        return [(CoxeterElement(self.group, i), self.coeffs[i]) for i in sorted(self.coeffs)]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join("(%s)*ct%s" % (c, list(w.word)) for w, c in self.items())


def dual_basis(w: CoxeterElement) -> DualElt:
    return DualElt(w.group, {w.index: FracLaurent(1)})


def pair(phi: DualElt, h: HeckeElt) -> FracLaurent:
    """Evaluate the functional phi at h."""
    if phi.group is not h.group:
        raise GroupMismatch("%r vs %r" % (phi.group, h.group))
    lens = h.group.lengths
    total = FracLaurent(0)
    for x, a in expand_in_c(h).items():
        b = phi.coeffs.get(x.index)
        if b is not None:
            term = a * b
            total = total + (term if lens[x.index] % 2 == 0 else -term)
    return total


def star_action(h: HeckeElt, phi: DualElt) -> DualElt:
    """h * phi, i.e. h_1 -> phi(transpose(dagger(h)) h_1)."""
    if phi.group is not h.group:
        raise GroupMismatch("%r vs %r" % (phi.group, h.group))
    G = h.group
    g = transpose(dagger(h))
    table = KLTable.of(G)
    out = {}
    for y in range(len(G)):
        val = pair(phi, mul(g, table.c(y)))
        if val:
            out[y] = val if G.lengths[y] % 2 == 0 else -val
    return DualElt(G, out)


def star_rule(s: int, w: CoxeterElement) -> DualElt:
    """
    T_s * ct_w by the closed rule:

        T_s * ct_w = v^2 ct_w                                     if sw > w
        T_s * ct_w = -ct_w + sum_{y; sy>y} mu(w,y) v ct_y         if sw < w
    """
    G = w.group
    table = KLTable.of(G)
    lens, ls = G.lengths, G.left[s - 1]
    i = w.index
    if lens[ls[i]] > lens[i]:
        return DualElt(G, {i: _V2})
    out = {i: FracLaurent(-1)}
    for y, m in table.mu_neighbours(i):
        if lens[ls[y]] > lens[y]:
            out[y] = _V * m
    return DualElt(G, out)


def lambda_map(phi: DualElt) -> HeckeElt:
    """Lambda: ct_w -> c_{w w0}, extended linearly."""
    G = phi.group
    table = KLTable.of(G)
    w0 = G.longest_index()
    h = HeckeElt.zero(G)
    for w, a in phi.coeffs.items():
        h = h + table.c(G.mul_index(w, w0)).scale(a)
    return h


def _coeff_matrix(G: CoxeterGroup, apply) -> list:
    N = len(G)
    table = KLTable.of(G)
    M = []
    for x in range(N):
        row = [FracLaurent(0)] * N
        for y, a in expand_in_c(apply(table.c(x))).items():
            row[y.index] = a
        M.append(row)
    return M


@lru_cache(maxsize=None)
def a_coeffs(G: CoxeterGroup) -> list:
    """``a[x][y]`` with T_w0^-1 c_x = sum_y a[x][y] c_y (index order)."""
    word = G.words[G.longest_index()]

    def apply(h):
        for s in word:
            h = h.left_mul_generator_inverse(s)
        return h

    return _coeff_matrix(G, apply)


@lru_cache(maxsize=None)
def b_coeffs(G: CoxeterGroup) -> list:
    """``b[x][y]`` with (-v^2)^-l(w0) T_w0 c_x = sum_y b[x][y] c_y."""
    w0 = G.longest_index()
    l0 = G.lengths[w0]
    factor = FracLaurent.from_laurent(LaurentPoly.monomial(-2 * l0, (-1) ** l0))
    word = G.words[w0]
    return _coeff_matrix(G, lambda h: h.left_mul_word(word).scale(factor))

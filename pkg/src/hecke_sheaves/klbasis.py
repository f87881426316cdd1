"""
Kazhdan-Lusztig polynomials, the mu-function, the c-basis and the change of
basis between T- and c-coordinates.

Polynomials P_{y,w} are ``LaurentPoly`` objects in the variable q; the
c-basis element is

    c_w = v^-l(w) * sum_y P_{y,w}(v^2) T_y.

Two independent computations are provided. ``kl_polynomial`` runs the
classical recursion along a left descent s of w (with w' = sw):

    P_{y,w} = q^(1-c) P_{sy,w'} + q^c P_{y,w'}
              - sum_{z; sz<z} mu(z,w') q^((l(w)-l(z))/2) P_{y,z}

where c = 1 if sy < y and 0 otherwise. ``kl_oracle`` instead solves the
bar-invariance condition column by column, using only ``hecke.bar``.
"""

__all__ = [
    "KLTable", "NoSolution", "kl_polynomial", "kl_oracle", "kl_oracle_column", "mu",
    "c_basis", "mul_ts_c", "inverse_kl", "expand_in_c", "expand_in_T",
]

import threading
from typing import Dict

from .coxeter import CoxeterElement, CoxeterGroup, GroupMismatch
from .hecke import HeckeElt, T, bar
from .laurent import FracLaurent, LaurentPoly

_ZERO = LaurentPoly()
_ONE = LaurentPoly(1)


class NoSolution(ArithmeticError):
    """The bar-invariance system had no solution of the required shape."""


class KLTable:
    """
    Lazily filled table of P_{y,w} for one group. A column (all y for fixed
    w) is computed at once; concurrent fills may duplicate work but always
    store the same value.
    """

    _tables: Dict[str, "KLTable"] = {}
    _lock = threading.Lock()

    def __init__(self, group: CoxeterGroup):
        self.group = group
        self._cols: Dict[int, Dict[int, LaurentPoly]] = {}
        self._mu_below: Dict[int, list] = {}
        self._c: Dict[int, HeckeElt] = {}

    @classmethod
    def of(cls, group: CoxeterGroup) -> "KLTable":
        with cls._lock:
            t = cls._tables.get(group.label)
            if t is None:
                t = cls._tables[group.label] = KLTable(group)
            return t

    def column(self, w: int) -> Dict[int, LaurentPoly]:
        """{y: P_{y,w}} over y <= w (nonzero entries only)."""
        col = self._cols.get(w)
        if col is not None:
            return col
        G = self.group
        if w == 0:
            col = {0: _ONE}
        else:
            # c_s c_{sw} = c_w + sum of mu terms, with sw < w
            s = G.words[w][0] - 1
            wp = G.left[s][w]
            prev = self.column(wp)
            mus = self.mu_below(wp)
            leq = G.bruhat_table()
            lens, ls = G.lengths, G.left[s]
            lw = lens[w]
            col = {}
            for y in range(len(G)):
                if not leq[y][w]:
                    continue
                sy = ls[y]
                a = prev.get(sy, _ZERO)
                b = prev.get(y, _ZERO)
                if lens[sy] < lens[y]:
                    p = a + b.shift(1)
                else:
                    p = a.shift(1) + b
                for z, m in mus:
                    if lens[ls[z]] < lens[z]:
                        pz = self.column(z).get(y)
                        if pz is not None:
                            p = p - pz.shift((lw - lens[z]) // 2) * m
                if p:
                    col[y] = p
            self._validate(w, col)
        self._cols[w] = col
        return col

    def _validate(self, w: int, col: Dict[int, LaurentPoly]):
        lens = self.group.lengths
        if col.get(w) != _ONE:
            raise AssertionError("P_{w,w} != 1 for w=%r" % (self.group.words[w],))
        for y, p in col.items():
            if y == w:
                continue
            if any(a < 0 for _, a in p.items()):
                raise AssertionError("negative KL coefficient at %r" % ((y, w),))
            if p.low < 0 or 2 * p.high > lens[w] - lens[y] - 1:
                raise AssertionError("degree bound violated at %r" % ((y, w),))

    def P(self, y: int, w: int) -> LaurentPoly:
        return self.column(w).get(y, _ZERO)

    def mu(self, y: int, w: int) -> int:
        """The symmetric mu-function."""
        lens = self.group.lengths
        if lens[y] > lens[w]:
            y, w = w, y
        d = lens[w] - lens[y]
        if d % 2 == 0:
            return 0
        return self.P(y, w).coeff((d - 1) // 2)

    def mu_below(self, w: int) -> list:
        """[(z, mu(z,w))] for z < w with mu nonzero."""
        out = self._mu_below.get(w)
        if out is None:
            col = self.column(w)
            lens = self.group.lengths
            out = []
            for z, p in col.items():
                d = lens[w] - lens[z]
                if z != w and d % 2 == 1:
                    m = p.coeff((d - 1) // 2)
                    if m:
                        out.append((z, m))
            out.sort()
            self._mu_below[w] = out
        return out

    def mu_neighbours(self, w: int) -> list:
        """[(y, mu(y,w))] over all y with mu nonzero (both y < w and y > w)."""
        out = list(self.mu_below(w))
        lens = self.group.lengths
        for y in range(len(self.group)):
            if lens[y] > lens[w] and (lens[y] - lens[w]) % 2 == 1:
                m = self.P(w, y).coeff((lens[y] - lens[w] - 1) // 2)
                if m:
                    out.append((y, m))
        out.sort()
        return out

    def c(self, w: int) -> HeckeElt:
        h = self._c.get(w)
        if h is None:
            lw = self.group.lengths[w]
            h = HeckeElt(self.group, {
                y: FracLaurent.from_laurent(p.substitute_square().shift(-lw))
                for y, p in self.column(w).items()
            })
            self._c[w] = h
        return h


def _same_group(y: CoxeterElement, w: CoxeterElement):
    if y.group is not w.group:
        raise GroupMismatch("%r vs %r" % (y.group, w.group))


def kl_polynomial(y: CoxeterElement, w: CoxeterElement) -> LaurentPoly:
    """P_{y,w} as a polynomial in q (zero unless y <= w)."""
    _same_group(y, w)
    return KLTable.of(w.group).P(y.index, w.index)


def mu(y: CoxeterElement, w: CoxeterElement) -> int:
    _same_group(y, w)
    return KLTable.of(w.group).mu(y.index, w.index)


def c_basis(w: CoxeterElement) -> HeckeElt:
    return KLTable.of(w.group).c(w.index)


# -- independent oracle ---------------------------------------------------

class _BarData:
    """R~_{x,y}: bar(v^-l(y) T_y) = sum_x R~_{x,y} v^-l(x) T_x."""
    _cache: Dict[str, list] = {}

    @classmethod
    def of(cls, G: CoxeterGroup) -> list:
        R = cls._cache.get(G.label)
        if R is None:
            lens = G.lengths
            R = []
            for y in G:
                col = {}
                for x, c in bar(T(y)).items():
                    col[x.index] = c.as_laurent().shift(lens[y.index] + lens[x.index])
                R.append(col)
            cls._cache[G.label] = R
        return R


def _oracle_column(G: CoxeterGroup, w: int) -> Dict[int, LaurentPoly]:
    R = _BarData.of(G)
    lens = G.lengths
    h = {w: _ONE}
    solved = [w]
    order = sorted((x for x in range(len(G)) if x != w),
                   key=lambda x: (-lens[x], x))
    for x in order:
        r = _ZERO
        for y in solved:
            rxy = R[y].get(x)
            if rxy is not None:
                r = r + rxy * h[y].bar()
        if r.bar() != -r:
            raise NoSolution("right side not bar-antisymmetric at x=%r" % (G.words[x],))
        hx = r.truncate_below(0)
        if hx:
            h[x] = hx
            solved.append(x)
    out = {}
    for x, hx in h.items():
        p = hx.shift(lens[w] - lens[x])
        if p.low < 0:
            raise NoSolution("negative power of q at x=%r" % (G.words[x],))
        out[x] = p.halve_exponents()
    return out


def kl_oracle(y: CoxeterElement, w: CoxeterElement) -> LaurentPoly:
    """P_{y,w} from the bar-invariance characterization of c_w."""
    _same_group(y, w)
    return _oracle_column(w.group, w.index).get(y.index, _ZERO)


def kl_oracle_column(w: CoxeterElement) -> Dict[CoxeterElement, LaurentPoly]:
    col = _oracle_column(w.group, w.index)
    return {CoxeterElement(w.group, x): p for x, p in sorted(col.items())}


# -- c-basis arithmetic ----------------------------------------------------

_V = FracLaurent.from_laurent(LaurentPoly.v())
_V2 = FracLaurent.from_laurent(LaurentPoly.monomial(2))


def mul_ts_c(s: int, w: CoxeterElement) -> Dict[CoxeterElement, FracLaurent]:
    """
    c-coordinates of T_s c_w by the closed rule:

        T_s c_w = v^2 c_w                                  if sw < w
        T_s c_w = -c_w + sum_{y; sy<y} mu(y,w) v c_y       if sw > w
    """
    G = w.group
    table = KLTable.of(G)
    lens, ls = G.lengths, G.left[s - 1]
    i = w.index
    if lens[ls[i]] < lens[i]:
        return {w: _V2}
    out = {w: FracLaurent(-1)}
    for y, m in table.mu_neighbours(i):
        if lens[ls[y]] < lens[y]:
            out[CoxeterElement(G, y)] = _V * m
    return dict(sorted(out.items()))


def inverse_kl(y: CoxeterElement, w: CoxeterElement) -> LaurentPoly:
    """Q_{y,w} = (-1)^(l(w)-l(y)) P_{w0 w, w0 y}."""
    _same_group(y, w)
    w0 = w.group.longest_element()
    sign = -1 if (w.length() - y.length()) % 2 else 1
    return kl_polynomial(w0 * w, w0 * y) * sign


def expand_in_c(h: HeckeElt) -> Dict[CoxeterElement, FracLaurent]:
    """Coordinates of h in the c-basis (unitriangular solve)."""
    G = h.group
    table = KLTable.of(G)
    lens = G.lengths
    rest = dict(h.coeffs)
    out = {}
    while rest:
        w = max(rest)  # ShortLex index order: longest elements last
        a = rest[w].shift(lens[w])
        out[CoxeterElement(G, w)] = a
        for y, c in table.c(w).coeffs.items():
            new = rest.get(y, FracLaurent(0)) - c * a
            if new.is_zero():
                rest.pop(y, None)
            else:
                rest[y] = new
        assert w not in rest
    return dict(sorted(out.items()))


def expand_in_T(coords: Dict[CoxeterElement, FracLaurent]) -> HeckeElt:
    """sum_w coords[w] c_w as an element of H."""
    if not coords:
        raise ValueError("empty coordinates carry no group; use HeckeElt.zero")
    G = next(iter(coords)).group
    table = KLTable.of(G)
    h = HeckeElt.zero(G)
    for w, a in coords.items():
        if w.group is not G:
            raise GroupMismatch("mixed groups in c-coordinates")
        h = h + table.c(w.index).scale(a)
    return h

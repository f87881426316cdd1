"""
Grothendieck-group coordinates attached to the varieties Z and Z'.

Geometry is never computed here. An element of the (A-extended) Grothendieck
group of Z is stored by its coordinates in the basis L^w[[M_w]], and the
isomorphism Psi: H -> K(Z) is

    Psi((-1)^l(w) c_w) = L^w[[M_w]],

so the coordinate of w is (-1)^l(w) times the c-coordinate of w. The same
holds for Z' with Psi'. The transfer operators, duality and the beta
expansion are then Hecke-algebra operations on these coordinates.

Multiplicity data (the numbers (A : H^j(K-bar^{w0 x}))) and the rational
numbers gamma_{A,E} are inputs, read from JSON and validated but never
derived.
"""

__all__ = [
    "GrElt", "MultTable", "GammaTable",
    "NonLaurentCoefficient", "SideMismatch", "ParityViolation",
    "SymmetryViolation", "MalformedInput",
    "psi", "psi_prime", "psi_inverse", "psi_prime_inverse", "relabel",
    "gr_tau", "gr_tau_tilde", "duality", "dimension_shift",
    "phi_base_change", "phi_base_change_inverse", "pairing",
    "beta_expansion", "dual_table", "beta_twist_check", "beta_twist_sides", "beta_from_gamma",
    "gr1_minimal_support", "random_symmetric_table",
]

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Tuple

from .coxeter import CoxeterElement, CoxeterGroup, GroupMismatch, coxeter_group
from .hecke import HeckeElt, bar, mul, t_inverse
from .klbasis import KLTable, expand_in_c, inverse_kl
from .laurent import FracLaurent, LaurentPoly

Z, ZP = "Z", "Z'"
_SIDES = (Z, ZP)
_ZERO = LaurentPoly()


class NonLaurentCoefficient(ValueError):
    """A c-coordinate is a proper fraction, so it has no Grothendieck image."""


class SideMismatch(ValueError):
    """An operation received coordinates for the wrong variety."""


class ParityViolation(ValueError):
    """A multiplicity table has mult(x, j) != 0 with j of the wrong parity."""


class SymmetryViolation(ValueError):
    """A multiplicity table is not symmetric under j -> 2*delta + 2*l(w0 x) - j."""


class MalformedInput(ValueError):
    """A JSON table does not have the expected shape."""


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


@dataclass(eq=False)
class GrElt:
    """Coordinates sum_w coeffs[w] L^w[[M_w]] on Z (or L'^w on Z')."""
    group: CoxeterGroup
    side: str
    coeffs: Dict[int, LaurentPoly] = field(default_factory=dict)

    def __post_init__(self):
        if self.side not in _SIDES:
            raise SideMismatch("side must be 'Z' or \"Z'\", got %r" % (self.side,))
        self.coeffs = {int(k): LaurentPoly(c) if isinstance(c, int) else c
                       for k, c in self.coeffs.items() if c}

    def _check(self, other: "GrElt"):
        if self.group is not other.group:
            raise GroupMismatch("%r vs %r" % (self.group, other.group))
        if self.side != other.side:
            raise SideMismatch("%s vs %s" % (self.side, other.side))

    def coeff(self, w: CoxeterElement) -> LaurentPoly:
        return self.coeffs.get(w.index, _ZERO)

    def items(self):
        return [(CoxeterElement(self.group, i), self.coeffs[i]) for i in sorted(self.coeffs)]

    def __add__(self, other):
        self._check(other)
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, _ZERO) + c
        return GrElt(self.group, self.side, d)

    def __neg__(self):
        return GrElt(self.group, self.side, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GrElt":
        return GrElt(self.group, self.side, {k: a * c for k, a in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, GrElt):
            return NotImplemented
        return (self.group is other.group and self.side == other.side
                and self.coeffs == other.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0[%s]" % self.side
        return " + ".join("(%s)*L%s%s" % (c.format(), "'" if self.side == ZP else "", list(w.word))
                          for w, c in self.items())

    def to_json(self) -> dict:
        return {
            "type": self.group.label, "side": self.side,
            "coeffs": [{"w": list(w.word), "c": c.to_json()} for w, c in self.items()],
        }


def dimension_shift(w: CoxeterElement, delta: int) -> int:
    """M_w = delta - l(w0 w)."""
    return delta - (w.group.longest_element() * w).length()


# -- Psi and its inverse ---------------------------------------------------

def _psi(h: HeckeElt, side: str) -> GrElt:
    G = h.group
    out = {}
    for w, a in expand_in_c(h).items():
        if not a.is_laurent():
            raise NonLaurentCoefficient("c-coordinate %s at %r is not in A" % (a, w))
        out[w.index] = a.as_laurent() * _sign(G.lengths[w.index])
    return GrElt(G, side, out)


def psi(h: HeckeElt) -> GrElt:
    return _psi(h, Z)


def psi_prime(h: HeckeElt) -> GrElt:
    return _psi(h, ZP)


def _psi_inverse(g: GrElt, side: str) -> HeckeElt:
    if g.side != side:
        raise SideMismatch("expected side %s, got %s" % (side, g.side))
    G = g.group
    table = KLTable.of(G)
    h = HeckeElt.zero(G)
    for w, a in g.coeffs.items():
        h = h + table.c(w).scale(a * _sign(G.lengths[w]))
    return h


def psi_inverse(g: GrElt) -> HeckeElt:
    return _psi_inverse(g, Z)


def psi_prime_inverse(g: GrElt) -> HeckeElt:
    return _psi_inverse(g, ZP)


def relabel(g: GrElt, side: str) -> GrElt:
    """The same coordinates read on the other variety."""
    return GrElt(g.group, side, dict(g.coeffs))


# -- transfer operators and duality ---------------------------------------

def gr_tau(g: GrElt) -> GrElt:
    """Psi' o (left multiplication by T_w0) o Psi^-1."""
    h = psi_inverse(g)
    return psi_prime(h.left_mul_word(g.group.longest_element().word))


def gr_tau_tilde(g: GrElt) -> GrElt:
    """Psi' o (left multiplication by T_w0^-1) o Psi^-1."""
    h = psi_inverse(g)
    return psi_prime(mul(t_inverse(g.group.longest_element()), h))


def duality(g: GrElt) -> GrElt:
    """Psi o bar o Psi^-1 on either side."""
    return _psi(bar(_psi_inverse(g, g.side)), g.side)


# -- base change and pairing ----------------------------------------------

def _group_of(coords: dict):
    for w in coords:
        return w.group
    return None


def phi_base_change(kcoords: Dict[CoxeterElement, LaurentPoly]) -> Dict[CoxeterElement, LaurentPoly]:
    """K-coordinates to K-bar-coordinates: out(w) = sum_y P_{y,w}(v^2) in(y)."""
    G = _group_of(kcoords)
    if G is None:
        return {}
    table = KLTable.of(G)
    sq = {y.index: a for y, a in kcoords.items() if a}
    out = {}
    for w in range(len(G)):
        acc = _ZERO
        for y, p in table.column(w).items():
            a = sq.get(y)
            if a is not None:
                acc = acc + p.substitute_square() * a
        if acc:
            out[CoxeterElement(G, w)] = acc
    return out


def phi_base_change_inverse(kbar: Dict[CoxeterElement, LaurentPoly]) -> Dict[CoxeterElement, LaurentPoly]:
    """Inverse of phi_base_change: in(y) = sum_w Q_{w,y}(v^2) out(w)."""
    G = _group_of(kbar)
    if G is None:
        return {}
    out = {}
    for y in G:
        acc = _ZERO
        for w, a in kbar.items():
            if a and w.bruhat_leq(y):
                acc = acc + inverse_kl(w, y).substitute_square() * a
        if acc:
            out[y] = acc
    return out


def pairing(x: CoxeterElement, y: CoxeterElement) -> LaurentPoly:
    """sum_z P_{z,x} P_{z,y} q^-l(w0 z), a Laurent polynomial in q."""
    if x.group is not y.group:
        raise GroupMismatch("%r vs %r" % (x.group, y.group))
    G = x.group
    table = KLTable.of(G)
    l0 = G.lengths[G.longest_index()]
    cx, cy = table.column(x.index), table.column(y.index)
    acc = _ZERO
    for z, p in cx.items():
        r = cy.get(z)
        if r is not None:
            acc = acc + (p * r).shift(G.lengths[z] - l0)
    return acc


# -- multiplicity tables and the beta expansion ----------------------------

@dataclass(frozen=True)
class MultTable:
    """
    The multiplicities (A : H^j(K-bar^{w0 x})) indexed by (x, j), together
    with delta = dim G, d_A and d'_A. Missing keys mean zero.
    """
    group: CoxeterGroup
    delta: int
    dA: int
    dprimeA: int = 0
    mult: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        for (x, j), m in self.mult.items():
            if not (isinstance(m, int) and m >= 0):
                raise MalformedInput("multiplicity at %r must be a nonnegative int" % ((x, j),))
            if not 0 <= x < len(self.group):
                raise MalformedInput("element index %r out of range" % x)
        object.__setattr__(self, "mult", {k: m for k, m in self.mult.items() if m})

    def w0x_length(self, x: int) -> int:
        G = self.group
        return G.lengths[G.mul_index(G.longest_index(), x)]

    def parity_violations(self) -> list:
        return sorted(k for k in self.mult if (k[1] - self.dA) % 2)

    def mirror(self, x: int, j: int) -> int:
        return 2 * self.delta + 2 * self.w0x_length(x) - j

    def is_lefschetz_symmetric(self) -> bool:
        return all(self.mult.get((x, self.mirror(x, j)), 0) == m
                   for (x, j), m in self.mult.items())

    @classmethod
    def from_json(cls, obj) -> "MultTable":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            G = coxeter_group(obj["type"])
            mult = {}
            for entry in obj.get("mult", []):
                key = (G.element(entry["x"]).index, int(entry["j"]))
                mult[key] = mult.get(key, 0) + int(entry["m"])
            return cls(G, int(obj["delta"]), int(obj["dA"]), int(obj.get("dprimeA", 0)), mult)
        except (KeyError, TypeError) as exc:
            raise MalformedInput("bad multiplicity table: %s" % exc) from None

    def to_json(self) -> dict:
        G = self.group
        return {
            "type": G.label, "delta": self.delta, "dA": self.dA, "dprimeA": self.dprimeA,
            "mult": [{"x": list(G.words[x]), "j": j, "m": m}
                     for (x, j), m in sorted(self.mult.items())],
        }


def beta_expansion(m: MultTable) -> GrElt:
    """gr(beta(A)) on Z': coordinate x is sum_j mult(x, j) v^(j - l(w0 x))."""
    bad = m.parity_violations()
    if bad:
        x, j = bad[0]
        raise ParityViolation("mult(%r, %d) != 0 but j != d_A mod 2"
                              % (list(m.group.words[x]), j))
    out: Dict[int, LaurentPoly] = {}
    for (x, j), k in m.mult.items():
        out[x] = out.get(x, _ZERO) + LaurentPoly.monomial(j - m.w0x_length(x), k)
    return GrElt(m.group, ZP, out)


def dual_table(m: MultTable) -> MultTable:
    """Multiplicities of the Verdier dual: mult*(x, j) = mult(x, 2 delta + 2 l(w0 x) - j)."""
    return MultTable(m.group, m.delta, m.dA, m.dprimeA,
                     {(x, m.mirror(x, j)): k for (x, j), k in m.mult.items()})


def beta_twist_check(m: MultTable, strict: bool = True) -> bool:
    """
    Compare gr(D beta(A*)) with v^(-2 delta) gr(beta(A)). The left side is
    the beta expansion of the dual table with v -> v^-1 applied to every
    coordinate. With ``strict`` the table must be Lefschetz symmetric.
    """
    lhs, rhs = beta_twist_sides(m, strict)
    return lhs == rhs


def beta_twist_sides(m: MultTable, strict: bool = True) -> Tuple[GrElt, GrElt]:
    """The two sides compared by ``beta_twist_check``."""
    if strict and not m.is_lefschetz_symmetric():
        raise SymmetryViolation("table is not symmetric under j -> 2*delta + 2*l(w0 x) - j")
    lhs = beta_expansion(dual_table(m))
    lhs = GrElt(m.group, ZP, {x: c.bar() for x, c in lhs.coeffs.items()})
    rhs = beta_expansion(m).scale(LaurentPoly.monomial(-2 * m.delta))
    return lhs, rhs


def random_symmetric_table(G: CoxeterGroup, delta: int, dA: int, rng: random.Random,
                           entries: int = 4, max_mult: int = 3) -> MultTable:
    """A random table satisfying the parity and Lefschetz constraints."""
    mult: Dict[Tuple[int, int], int] = {}
    probe = MultTable(G, delta, dA)
    for _ in range(entries):
        x = rng.randrange(len(G))
        centre = delta + probe.w0x_length(x)
        # j and its mirror 2*centre - j share parity, so pick j = dA mod 2
        j = centre - rng.randrange(0, delta + 1)
        if (j - dA) % 2:
            j -= 1
        k = rng.randint(1, max_mult)
        for key in {(x, j), (x, 2 * centre - j)}:
            mult[key] = mult.get(key, 0) + k
    return MultTable(G, delta, dA, 0, mult)


# -- gamma tables ----------------------------------------------------------

@dataclass(frozen=True)
class GammaTable:
    """Rational numbers gamma_E indexed by irreducible labels, plus delta."""
    delta: int
    gamma: Dict[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "gamma", {k: Fraction(c) for k, c in self.gamma.items() if c})

    @classmethod
    def from_json(cls, obj) -> "GammaTable":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            gamma = {}
            for entry in obj.get("gamma", []):
                gamma[str(entry["E"])] = gamma.get(str(entry["E"]), 0) + Fraction(str(entry["c"]))
            return cls(int(obj["delta"]), gamma)
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise MalformedInput("bad gamma table: %s" % exc) from None

    def to_json(self) -> dict:
        return {"delta": self.delta,
                "gamma": [{"E": k, "c": str(c)} for k, c in sorted(self.gamma.items())]}


def beta_from_gamma(g: GammaTable, group: CoxeterGroup, dprime_parity: int = 0) -> HeckeElt:
    """(-1)^d' v^delta sum_E gamma_E c_E as an element of H^v."""
    from .heckerep import c_E, irreducibles

    reps = {r.label: r for r in irreducibles(group)}
    h = HeckeElt.zero(group)
    for label, c in sorted(g.gamma.items()):
        if label not in reps:
            raise MalformedInput("unknown irreducible %r for %s" % (label, group.label))
        h = h + c_E(reps[label]).scale(FracLaurent(c))
    factor = LaurentPoly.monomial(g.delta, _sign(dprime_parity))
    return h.scale(factor)


# -- specialization at v = 1 -------------------------------------------------

def gr1_minimal_support(kbar_at_1: Dict[CoxeterElement, int]) -> Tuple[set, bool]:
    """
    Solve kbar(w) = sum_{y <= w} P_{y,w}(1) k(y) for k, then return the
    nonzero entries of k of minimal length and whether they lie in a single
    conjugacy class of W.
    """
    G = _group_of(kbar_at_1)
    if G is None:
        return set(), True
    table = KLTable.of(G)
    given = {w.index: int(a) for w, a in kbar_at_1.items()}
    k = {}
    # P is unitriangular in index order, so solve forwards
    for w in range(len(G)):
        acc = given.get(w, 0)
        for y, p in table.column(w).items():
            if y != w and k.get(y):
                acc -= int(p.evaluate(1)) * k[y]
        if acc:
            k[w] = acc
    if not k:
        return set(), True
    lmin = min(G.lengths[w] for w in k)
    support = {CoxeterElement(G, w) for w in k if G.lengths[w] == lmin}
    classes = G.class_of_index()
    return support, len({classes[w.index] for w in support}) == 1

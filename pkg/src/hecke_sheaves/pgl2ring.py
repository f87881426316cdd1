"""
The stratified Grothendieck ring for G = PGL_2.

There are three strata: regular semisimple (``rs``), regular unipotent
(``ru``) and the identity (``one``). The group of rank-one local systems on
the torus is modelled by Z/N (N even), so that both kinds of characters
occur: eps with 2*eps != 0, giving one class [L_eps] = [L_{-eps}], and eps
with 2*eps == 0, giving the split pair [L'_eps], [L''_eps].

Multiplication of B_G classes:

    [L_e][L_f]   = [L_{e+f}] + [L_{e-f}]
    [L'_e][L_f]  = [L''_e][L_f] = [L_{e+f}]                (2e = 0)
    [L'_e][L'_f] = [L''_e][L''_f] = [L'_{e+f}]             (2e = 2f = 0)
    [L'_e][L''_f] = [L''_{e+f}]
    [Q^ru]^2 = v [Q^ru],   [Q^1]^2 = v^3 [Q^1]

and products across strata vanish. A symbol [L_chi] with 2*chi = 0 on a
right hand side stands for [L'_chi] + [L''_chi].

Each simple perverse sheaf A_c has a class Gr(A_c) whose leading term is the
B_G class c; ``structure_constants`` rewrites products of these classes in
the Gr basis by back-substitution, top stratum first.
"""

__all__ = [
    "CharIndex", "StratumClass", "RingElt", "KindMismatch",
    "L", "Lp", "Lpp", "Q_RU", "Q_ONE", "basis_product", "gr_expansion",
    "structure_constants", "basis_classes", "parse_class", "parse_gr_label",
    "load_golden", "check_golden",
]

import json
import re
from dataclasses import dataclass
from functools import total_ordering
from importlib import resources
from typing import Dict, Iterable

from .laurent import LaurentPoly

DEFAULT_N = 12
_STRATA = ("rs", "ru", "one")
_KINDS = ("pair", "prime", "doubleprime", "unit")
_ZERO = LaurentPoly()
_ONE = LaurentPoly(1)
_V = LaurentPoly.v()


class KindMismatch(ValueError):
    """A character of the wrong kind was supplied (split vs. non-split)."""


@dataclass(frozen=True)
class CharIndex:
    """An element of Z/N standing for a rank-one local system on T."""
    value: int
    N: int = DEFAULT_N

    def __post_init__(self):
        if self.N <= 0 or self.N % 2:
            raise ValueError("character order N must be a positive even integer")
        object.__setattr__(self, "value", self.value % self.N)

    def star(self) -> "CharIndex":
        return CharIndex(-self.value, self.N)

    def is_split(self) -> bool:
        """True iff eps^2 is trivial."""
        return (2 * self.value) % self.N == 0

    def __add__(self, other: "CharIndex") -> "CharIndex":
        if self.N != other.N:
            raise ValueError("characters of different orders")
        return CharIndex(self.value + other.value, self.N)

    def __sub__(self, other: "CharIndex") -> "CharIndex":
        return self + other.star()


@total_ordering
@dataclass(frozen=True)
class StratumClass:
    """
    An element of B_G. For the ``pair`` kind ``char`` is the smaller of
    eps and eps* so that [L_eps] = [L_eps*] compare equal.
    """
    stratum: str
    kind: str
    char: int = 0
    N: int = DEFAULT_N

    def __post_init__(self):
        if self.stratum not in _STRATA or self.kind not in _KINDS:
            raise ValueError("bad stratum class %r/%r" % (self.stratum, self.kind))
        if self.stratum != "rs":
            if self.kind != "unit":
                raise KindMismatch("strata ru and one carry only the unit class")
            object.__setattr__(self, "char", 0)
            return
        chi = CharIndex(self.char, self.N)
        if self.kind == "pair":
            if chi.is_split():
                raise KindMismatch("[L_eps] needs eps^2 nontrivial; use L' and L''")
            object.__setattr__(self, "char", min(chi.value, chi.star().value))
        elif self.kind in ("prime", "doubleprime"):
            if not chi.is_split():
                raise KindMismatch("[L'_eps], [L''_eps] need eps^2 trivial")
            object.__setattr__(self, "char", chi.value)
        else:
            raise KindMismatch("stratum rs has no unit class")

    def _key(self):
        return (_STRATA.index(self.stratum), _KINDS.index(self.kind), self.char)

    def __lt__(self, other):
        return self._key() < other._key()

    def label(self) -> str:
        if self.stratum == "ru":
            return "Q^ru"
        if self.stratum == "one":
            return "Q^1"
        mark = {"pair": "", "prime": "'", "doubleprime": "''"}[self.kind]
        return "L%s[%d]" % (mark, self.char)

    def gr_label(self) -> str:
        """Name of the Gr basis element with this leading class."""
        if self.stratum == "ru":
            return "A_ru"
        if self.stratum == "one":
            return "A_1"
        return "A" + self.label()[1:]

    def __repr__(self):
        return self.label()


def L(eps: int, N: int = DEFAULT_N) -> StratumClass:
    return StratumClass("rs", "pair", eps, N)


def Lp(eps: int, N: int = DEFAULT_N) -> StratumClass:
    return StratumClass("rs", "prime", eps, N)


def Lpp(eps: int, N: int = DEFAULT_N) -> StratumClass:
    return StratumClass("rs", "doubleprime", eps, N)


def Q_RU(N: int = DEFAULT_N) -> StratumClass:
    return StratumClass("ru", "unit", 0, N)


def Q_ONE(N: int = DEFAULT_N) -> StratumClass:
    return StratumClass("one", "unit", 0, N)


class RingElt:
    """A finite A-linear combination of B_G classes."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[StratumClass, LaurentPoly] = None):
        self.coeffs = {}
        for k, c in (coeffs or {}).items():
            if isinstance(c, int):
                c = LaurentPoly(c)
            if c:
                self.coeffs[k] = self.coeffs.get(k, _ZERO) + c
        self.coeffs = {k: c for k, c in self.coeffs.items() if c}

    @classmethod
    def of(cls, c: StratumClass, coeff=1) -> "RingElt":
        return cls({c: coeff})

    def __add__(self, other: "RingElt") -> "RingElt":
        d = dict(self.coeffs)
        for k, c in other.coeffs.items():
            d[k] = d.get(k, _ZERO) + c
        return RingElt(d)

    def __neg__(self):
        return RingElt({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RingElt":
        return RingElt({k: a * c for k, a in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        out = RingElt()
        for a, x in self.coeffs.items():
            for b, y in other.coeffs.items():
                out = out + basis_product(a, b).scale(x * y)
        return out

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, RingElt):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def items(self):
        return sorted(self.coeffs.items())

    def format(self, gr: bool = False) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.items():
            name = k.gr_label() if gr else "[%s]" % k.label()
            parts.append(name if c.is_one() else "(%s)%s" % (c.format(), name))
        return " + ".join(parts)

    def __repr__(self):
        return self.format()

    def to_json(self, gr: bool = False) -> list:
        return [[k.gr_label() if gr else k.label(), c.to_json()] for k, c in self.items()]


def _local_system(chi: CharIndex) -> RingElt:
    """[L_chi], split into [L'_chi] + [L''_chi] when 2*chi = 0."""
    if chi.is_split():
        return RingElt({Lp(chi.value, chi.N): 1, Lpp(chi.value, chi.N): 1})
    return RingElt.of(L(chi.value, chi.N))


def basis_product(a: StratumClass, b: StratumClass) -> RingElt:
    """Product of two B_G classes."""
    if a.N != b.N:
        raise ValueError("classes for different character orders")
    if a.stratum != b.stratum:
        return RingElt()
    if a.stratum == "ru":
        return RingElt.of(a, _V)
    if a.stratum == "one":
        return RingElt.of(a, _V ** 3)
    e, f = CharIndex(a.char, a.N), CharIndex(b.char, b.N)
    if a.kind == "pair" and b.kind == "pair":
        return _local_system(e + f) + _local_system(e - f)
    if a.kind == "pair" or b.kind == "pair":
        return _local_system(e + f)
    if a.kind == b.kind:
        return RingElt.of(Lp((e + f).value, a.N))
    return RingElt.of(Lpp((e + f).value, a.N))


def gr_expansion(c: StratumClass) -> RingElt:
    """Gr(A_c) in the B_G basis."""
    N = c.N
    ru, one = Q_RU(N), Q_ONE(N)
    vm1, vm2, vm3 = (LaurentPoly.monomial(-k) for k in (1, 2, 3))
    if c.stratum == "one":
        return RingElt.of(one)
    if c.stratum == "ru":
        return RingElt({ru: 1, one: vm2})
    if c.kind == "pair":
        return RingElt({c: 1, ru: vm1, one: vm1 + vm3})
    if c.kind == "prime":
        return RingElt({c: 1, ru: vm1, one: vm3})
    return RingElt({c: 1, one: vm1})


def structure_constants(a: StratumClass, b: StratumClass) -> Dict[StratumClass, LaurentPoly]:
    """f with Gr(A_a) Gr(A_b) = sum_c f[c] Gr(A_c)."""
    rest = gr_expansion(a) * gr_expansion(b)
    out: Dict[StratumClass, LaurentPoly] = {}
    for stratum in _STRATA:
        for c, f in rest.items():
            if c.stratum != stratum:
                continue
            out[c] = f
            rest = rest - gr_expansion(c).scale(f)
    if rest.coeffs:
        raise AssertionError("back-substitution left a remainder: %r" % rest)
    return dict(sorted(out.items()))


def basis_classes(N: int = DEFAULT_N) -> list:
    """All of B_G for the given character order, in stratum order."""
    out = []
    for e in range(N):
        chi = CharIndex(e, N)
        if chi.is_split():
            out += [Lp(e, N), Lpp(e, N)]
        elif e <= chi.star().value:
            out.append(L(e, N))
    return sorted(out) + [Q_RU(N), Q_ONE(N)]


_CLASS_RE = re.compile(r"^(L|L'|L''|A|A'|A'')\[(-?\d+)\]$")
_CLI_RE = re.compile(r"^(eps|eps'|eps'')\s*:\s*(-?\d+)$")


def parse_class(text: str, N: int = DEFAULT_N) -> StratumClass:
    """Parse 'L[3]', "L'[0]", 'Q^ru', 'Q^1' (or the Gr names 'A[3]', 'A_ru', ...)."""
    t = text.strip()
    if t in ("Q^ru", "A_ru", "ru"):
        return Q_RU(N)
    if t in ("Q^1", "A_1", "one", "1"):
        return Q_ONE(N)
    m = _CLASS_RE.match(t) or _CLI_RE.match(t)
    if not m:
        raise ValueError("cannot parse class %r" % text)
    marks = m.group(1).count("'")
    make = (L, Lp, Lpp)[marks]
    return make(int(m.group(2)), N)


parse_gr_label = parse_class


# -- golden table ------------------------------------------------------------

def load_golden(version: str = "v1") -> dict:
    ref = resources.files("hecke_sheaves") / "golden" / version / "pgl2_table.json"
    return json.loads(ref.read_text())


_TERM_RE = re.compile(r"^(L|L'|L''|A|A'|A'')\[([^\]]+)\]$")


def _eval_char(expr: str, env: Dict[str, int]) -> int:
    total, sign, token = 0, 1, ""
    for ch in expr.replace(" ", "") + "+":
        if ch in "+-":
            if token:
                total += sign * env[token]
            sign, token = (1 if ch == "+" else -1), ""
        else:
            token += ch
    return total


def _instantiate(term: str, env: Dict[str, int], N: int) -> RingElt:
    t = term.strip()
    if t in ("Q^ru", "Q^1", "A_ru", "A_1"):
        return RingElt.of(parse_class(t, N))
    m = _TERM_RE.match(t)
    if not m:
        raise ValueError("bad golden term %r" % term)
    chi = CharIndex(_eval_char(m.group(2), env), N)
    marks = m.group(1).count("'")
    if marks == 0:
        return _local_system(chi)
    return RingElt.of((Lp, Lpp)[marks - 1](chi.value, N))


def _requirements_hold(reqs: Iterable[str], env: Dict[str, int], N: int) -> bool:
    for r in reqs:
        expr, kind = r.rsplit(" ", 1)
        split = CharIndex(_eval_char(expr, env), N).is_split()
        if split != (kind == "split"):
            return False
    return True


def _combination(entries, env, N) -> RingElt:
    out = RingElt()
    for term, coeff in entries:
        out = out + _instantiate(term, env, N).scale(LaurentPoly.from_json(coeff))
    return out


def check_golden(N: int = DEFAULT_N, golden: dict = None):
    """
    Instantiate every golden entry at all characters satisfying its
    requirements and compare with this module. Returns (instances,
    failures) where failures are JSON-ready witnesses.
    """
    golden = golden or load_golden()
    instances, failures = 0, []
    envs = [{"e": e, "f": f} for e in range(N) for f in range(N)]
    for section in ("products", "expansions", "structure_constants"):
        for entry in golden.get(section, []):
            seen = set()
            for env in envs:
                if not _requirements_hold(entry.get("requires", []), env, N):
                    continue
                left = _instantiate(entry["a"], env, N)
                expected = _combination(entry["result"], env, N)
                if section == "products":
                    right = _instantiate(entry["b"], env, N)
                    got = left * right
                    key = (left, right)
                elif section == "expansions":
                    (c, _), = left.items()
                    got = gr_expansion(c)
                    key = (left,)
                else:
                    right = _instantiate(entry["b"], env, N)
                    (c1, _), = left.items()
                    (c2, _), = right.items()
                    got = RingElt(structure_constants(c1, c2))
                    key = (left, right)
                if key in seen:
                    continue
                seen.add(key)
                instances += 1
                if got != expected:
                    failures.append({
                        "section": section, "entry": entry.get("name", ""),
                        "chars": env, "expected": expected.to_json(section == "structure_constants"),
                        "got": got.to_json(section == "structure_constants"),
                    })
    failures.sort(key=lambda w: json.dumps(w, sort_keys=True))
    return instances, failures

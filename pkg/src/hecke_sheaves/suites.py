"""
Exhaustive identity suites, one per algebraic identity checked by this
package. Each suite yields instances ``(witness, lhs, rhs)`` where both
sides are small dicts of exact scalars; ``run_suite`` compares them exactly
or, with ``points``, after specialization at each point (the value of v^2).
"""

__all__ = ["SuiteReport", "SUITES", "run_suite"]

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

from .coxeter import CoxeterGroup, coxeter_group
from .dual import a_coeffs, b_coeffs, dual_basis, lambda_map, star_action, star_rule
from .hecke import HeckeElt, T, dagger, mul, t_inverse
from .klbasis import (KLTable, expand_in_c, inverse_kl, kl_oracle_column,
                      kl_polynomial, mul_ts_c)
from .laurent import FracLaurent, LaurentPoly, specialize, specialize_surd

DEFAULT_TYPES = {
    "kl-inverse": "A2", "kl-oracle": "A2", "lambda": "A2", "ab-symmetry": "A2",
    "ts-rules": "A2", "centrality": "A2", "dagger-identity": "A2",
    "beta-twist": "A2", "pairing-specialize": "A2", "pgl2-table": None,
}
SUITES = tuple(DEFAULT_TYPES)
SPECIALIZATION_POINTS = (2, 3, 4, 5, 7, 9)


@dataclass
class SuiteReport:
    suite: str
    type_label: Optional[str]
    instances: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "type": self.type_label,
                "instances": self.instances, "failures": self.failures}

    def summary(self) -> str:
        return "%s [%s]: %d instances, %d failures" % (
            self.suite, self.type_label or "-", self.instances, len(self.failures))


def _w(G: CoxeterGroup, i: int) -> str:
    return str(list(G.words[i]))


def _h_coords(h: HeckeElt) -> dict:
    return {_w(h.group, i): c for i, c in h.coeffs.items()}


def _c_coords(d: dict) -> dict:
    return {str(list(w.word)): c for w, c in d.items() if c}


def _as_json(x):
    if isinstance(x, (LaurentPoly, FracLaurent)):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, tuple):
        return [_as_json(y) for y in x]
    return x


def _dict_json(d: dict) -> dict:
    return {k: _as_json(v) for k, v in sorted(d.items())}


# -- the suites ------------------------------------------------------------
#
# Each generator yields (witness, lhs, rhs, var) with var "q" when the values
# are polynomials in q = v^2 and "v" when they are in v.

def _kl_inverse(G: CoxeterGroup) -> Iterator[Tuple]:
    table = KLTable.of(G)
    elems = G.all_elements()
    for x in elems:
        for y in elems:
            acc = LaurentPoly()
            for z in elems:
                p = table.P(x.index, z.index)
                if p and z.bruhat_leq(y):
                    acc = acc + p * inverse_kl(z, y)
            yield ({"x": list(x.word), "y": list(y.word)},
                   {"PQ": acc}, {"PQ": LaurentPoly(int(x == y))}, "q")


def _kl_oracle(G: CoxeterGroup):
    for w in G:
        col = kl_oracle_column(w)
        for y in G:
            yield ({"y": list(y.word), "w": list(w.word)},
                   {"P": kl_polynomial(y, w)}, {"P": col.get(y, LaurentPoly())}, "q")


def _lambda(G: CoxeterGroup):
    for s in range(1, G.rank + 1):
        Ts = T(G.element((s,)))
        for w in G:
            phi = dual_basis(w)
            lhs = lambda_map(star_action(Ts, phi))
            rhs = lambda_map(phi).left_mul_generator(s)
            yield ({"s": s, "w": list(w.word)}, _h_coords(lhs), _h_coords(rhs), "v")


def _ab_symmetry(G: CoxeterGroup):
    a, b = a_coeffs(G), b_coeffs(G)
    w0 = G.longest_index()
    for x in range(len(G)):
        for z in range(len(G)):
            sign = -1 if (G.lengths[x] - G.lengths[z]) % 2 else 1
            target = b[z][x] * sign
            lhs = {"a(w0x,w0z)": a[G.mul_index(w0, x)][G.mul_index(w0, z)],
                   "a(xw0,zw0)": a[G.mul_index(x, w0)][G.mul_index(z, w0)]}
            rhs = {"a(w0x,w0z)": target, "a(xw0,zw0)": target}
            yield ({"x": _w(G, x), "z": _w(G, z)}, lhs, rhs, "v")


def _ts_rules(G: CoxeterGroup):
    table = KLTable.of(G)
    for s in range(1, G.rank + 1):
        Ts = T(G.element((s,)))
        for w in G:
            generic = expand_in_c(table.c(w.index).left_mul_generator(s))
            yield ({"rule": "T_s c_w", "s": s, "w": list(w.word)},
                   _c_coords(generic), _c_coords(mul_ts_c(s, w)), "v")
            star = star_action(Ts, dual_basis(w))
            yield ({"rule": "T_s * ct_w", "s": s, "w": list(w.word)},
                   {_w(G, i): c for i, c in star.coeffs.items()},
                   {_w(G, i): c for i, c in star_rule(s, w).coeffs.items()}, "v")


def _reps(G: CoxeterGroup):
    from .heckerep import irreducibles
    return irreducibles(G)


def _centrality(G: CoxeterGroup):
    from .heckerep import c_E, c_prime_E
    w0 = G.longest_element()
    for rep in _reps(G):
        cE = c_E(rep)
        elements = {
            "T_w0^-1 c_E": mul(t_inverse(w0), cE),
            "T_w0 c_E": cE.left_mul_word(w0.word),
            "c'_E": c_prime_E(rep),
        }
        for name, h in elements.items():
            for s in range(1, G.rank + 1):
                yield ({"E": rep.label, "element": name, "s": s},
                       _h_coords(h.left_mul_generator(s)),
                       _h_coords(h.right_mul_generator(s)), "v")


def _dagger_identity(G: CoxeterGroup):
    from .heckerep import c_E, c_prime_E
    w0 = G.longest_element()
    l0 = w0.length()
    factor = FracLaurent.from_laurent(LaurentPoly.monomial(-l0, -1 if l0 % 2 else 1))
    for rep in _reps(G):
        lhs = dagger(mul(t_inverse(w0), c_E(rep)))
        rhs = c_prime_E(rep).scale(factor)
        yield ({"E": rep.label}, _h_coords(lhs), _h_coords(rhs), "v")


def _beta_twist(G: CoxeterGroup, seed: int = 0, count: int = 100, deltas=(3, 8)):
    from .grfunctor import beta_twist_sides, random_symmetric_table
    rng = random.Random(seed)
    for delta in deltas:
        for k in range(count):
            m = random_symmetric_table(G, delta, rng.randrange(2), rng)
            lhs, rhs = beta_twist_sides(m)
            yield ({"delta": delta, "table": k, "mult": m.to_json()["mult"]},
                   {_w(G, i): c for i, c in lhs.coeffs.items()},
                   {_w(G, i): c for i, c in rhs.coeffs.items()}, "v")


def _pairing_specialize(G: CoxeterGroup, points=SPECIALIZATION_POINTS):
    from .grfunctor import pairing
    table = KLTable.of(G)
    l0 = G.lengths[G.longest_index()]
    for x in G:
        for y in G:
            poly = pairing(x, y)
            for t in points:
                direct = Fraction(0)
                for z in range(len(G)):
                    px, py = table.P(z, x.index), table.P(z, y.index)
                    if px and py:
                        direct += px.evaluate(t) * py.evaluate(t) * Fraction(t) ** (G.lengths[z] - l0)
                yield ({"x": list(x.word), "y": list(y.word), "q": t},
                       {"value": specialize(poly, t), "swapped": specialize(pairing(y, x), t)},
                       {"value": direct, "swapped": direct}, "exact")


_GENERATORS = {
    "kl-inverse": _kl_inverse, "kl-oracle": _kl_oracle, "lambda": _lambda,
    "ab-symmetry": _ab_symmetry, "ts-rules": _ts_rules, "centrality": _centrality,
    "dagger-identity": _dagger_identity, "beta-twist": _beta_twist,
    "pairing-specialize": _pairing_specialize,
}


def _specialize_value(x, var: str, t: int):
    if var == "exact" or isinstance(x, Fraction):
        return x
    if var == "q":
        return specialize(x, t, mode="v")
    return specialize_surd(x, t)


def _compare(lhs: dict, rhs: dict, var: str, points) -> bool:
    keys = set(lhs) | set(rhs)
    if points is None:
        return all(lhs.get(k, 0) == rhs.get(k, 0) for k in keys)
    for t in points:
        for k in keys:
            a = _specialize_value(lhs.get(k, FracLaurent(0)), var, t)
            b = _specialize_value(rhs.get(k, FracLaurent(0)), var, t)
            if a != b:
                return False
    return True


def run_suite(name: str, type_label: Optional[str] = None, seed: int = 0,
              points: Optional[Sequence[int]] = None) -> SuiteReport:
    """
    Run one suite exhaustively. With ``points`` both sides of every
    instance are compared after specialization v^2 = t at each point.
    """
    if name not in DEFAULT_TYPES:
        raise ValueError("unknown suite %r (choose from %s)" % (name, ", ".join(SUITES)))
    if name == "pgl2-table":
        from .pgl2ring import check_golden
        n, failures = check_golden()
        return SuiteReport(name, None, n, failures)
    label = type_label or DEFAULT_TYPES[name]
    G = coxeter_group(label)
    gen = _GENERATORS[name]
    instances = gen(G, seed=seed) if name == "beta-twist" else gen(G)
    report = SuiteReport(name, G.label)
    for witness, lhs, rhs, var in instances:
        report.instances += 1
        if not _compare(lhs, rhs, var, points):
            report.failures.append({"input": witness, "lhs": _dict_json(lhs),
                                    "rhs": _dict_json(rhs)})
    report.failures.sort(key=lambda w: json.dumps(w, sort_keys=True))
    return report

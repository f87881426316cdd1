"""
Explicit irreducible representations of the Hecke algebra over Q(v), their
traces, the sign twist, and the central elements built from traces.

Models:

* type A_n: a q-deformation of Young's seminormal form (q = v^2). For a
  standard tableau t and generator s_i, let a be the content difference
  c(i+1) - c(i). Then T_i v_t = alpha(a) v_t + beta v_{s_i t} with
  alpha(a) = (q-1) q^a / (q^a - 1), beta = 1 when i lies in a higher row
  than i+1, and beta = q + alpha(a) alpha(-a) otherwise.
* dihedral I2(m), m in {3, 4, 6} (so also B2 and G2): four or two linear
  characters, and 2-dimensional representations with
  T_1 -> [[-1, 0], [1, q]], T_2 -> [[q, y], [0, -1]] where
  y = q (2 + 2 cos(2 pi k / m)).

Neither model is trusted: the tests check the quadratic and braid
relations, and the characters at v = 1 against a brute-force character
table of W.
"""

__all__ = [
    "HeckeRep", "irreducibles", "trace_T", "trace_c", "sign_twist",
    "c_E", "c_prime_E",
]

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List

from .coxeter import CoxeterElement, CoxeterGroup, UnsupportedType
from .hecke import HeckeElt
from .klbasis import KLTable
from .laurent import FracLaurent, LaurentPoly

Matrix = List[List[FracLaurent]]

_ZERO = FracLaurent(0)
_ONE = FracLaurent(1)
_Q = FracLaurent.from_laurent(LaurentPoly.monomial(2))


def _q_pow(a: int) -> FracLaurent:
    return FracLaurent.from_laurent(LaurentPoly.monomial(2 * a))


def mat_identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0])
    out = []
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            acc = _ZERO
            for t in range(k):
                a = Ai[t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = acc + a * b
            row.append(acc)
        out.append(row)
    return out


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A: Matrix, c) -> Matrix:
    return [[a * c for a in r] for r in A]


def mat_trace(A: Matrix) -> FracLaurent:
    acc = _ZERO
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


@dataclass(eq=False)
class HeckeRep:
    """A matrix representation T_s -> matrices[s] (generators from 1)."""
    group: CoxeterGroup
    label: str
    dim: int
    matrices: Dict[int, Matrix]
    _cache: Dict[int, Matrix] = field(default_factory=dict, repr=False)

    def matrix_of(self, w: int) -> Matrix:
        """rho(T_w) for the element with index w."""
        M = self._cache.get(w)
        if M is None:
            word = self.group.words[w]
            if not word:
                M = mat_identity(self.dim)
            else:
                prefix = self.group._index_of_word(word[:-1])
                M = mat_mul(self.matrix_of(prefix), self.matrices[word[-1]])
            self._cache[w] = M
        return M

    def evaluate(self, h: HeckeElt) -> Matrix:
        """rho(h)."""
        out = [[_ZERO] * self.dim for _ in range(self.dim)]
        for w, c in h.coeffs.items():
            out = mat_add(out, mat_scale(self.matrix_of(w), c))
        return out

    def specialize_at_one(self, w: int) -> Fraction:
        """Character value of the v = 1 specialization at w."""
        from .laurent import specialize
        return specialize(mat_trace(self.matrix_of(w)), 1)

    def __repr__(self):
        return "HeckeRep(%s, %r, dim=%d)" % (self.group.label, self.label, self.dim)


# -- type A ---------------------------------------------------------------

def _partitions(n: int, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _standard_tableaux(shape) -> list:
    """Standard tableaux as tuples pos[k] = (row, col) for entries k = 1..n."""
    n = sum(shape)
    out = []

    def rec(filled, pos):
        k = len(pos) + 1
        if k > n:
            out.append(tuple(pos))
            return
        for r, length in enumerate(shape):
            c = filled[r]
            if c < length and (r == 0 or filled[r - 1] > c):
                filled[r] += 1
                pos.append((r, c))
                rec(filled, pos)
                pos.pop()
                filled[r] -= 1

    rec([0] * len(shape), [])
    return out


def _partition_label(shape, n: int) -> str:
    if shape == (n,):
        return "triv"
    if shape == (1,) * n:
        return "sgn"
    return "".join(str(p) for p in shape)


def _seminormal_rep(G: CoxeterGroup, shape) -> HeckeRep:
    n = sum(shape)
    tabs = _standard_tableaux(shape)
    index = {t: k for k, t in enumerate(tabs)}
    d = len(tabs)
    mats = {}
    for i in range(1, n):
        M = [[_ZERO] * d for _ in range(d)]
        for t, k in index.items():
            (ri, ci), (rj, cj) = t[i - 1], t[i]
            a = (cj - rj) - (ci - ri)
            if ri == rj:
                M[k][k] = _Q
                continue
            if ci == cj:
                M[k][k] = FracLaurent(-1)
                continue
            swapped = list(t)
            swapped[i - 1], swapped[i] = t[i], t[i - 1]
            k2 = index[tuple(swapped)]
            qa, qma = _q_pow(a), _q_pow(-a)
            alpha = (_Q - 1) * qa / (qa - 1)
            alpha_neg = (_Q - 1) * qma / (qma - 1)
            M[k][k] = alpha
            if ri < rj:
                M[k2][k] = _ONE
            else:
                M[k2][k] = _Q + alpha * alpha_neg
        mats[i] = M
    return HeckeRep(G, _partition_label(shape, n), d, mats)


# -- dihedral -------------------------------------------------------------

_TWO_COS = {
    # 2 cos(2 pi k / m) for the rational cases
    (3, 1): -1, (4, 1): 0, (6, 1): 1, (6, 2): -1,
}


def _dihedral_reps(G: CoxeterGroup, m: int) -> list:
    q, neg = _Q, FracLaurent(-1)
    reps = [
        HeckeRep(G, "triv", 1, {1: [[q]], 2: [[q]]}),
        HeckeRep(G, "sgn", 1, {1: [[neg]], 2: [[neg]]}),
    ]
    if m % 2 == 0:
        reps.append(HeckeRep(G, "(1,1)", 1, {1: [[q]], 2: [[neg]]}))
        reps.append(HeckeRep(G, "(1,2)", 1, {1: [[neg]], 2: [[q]]}))
    for k in range(1, (m - 1) // 2 + 1):
        if (m, k) not in _TWO_COS:
            raise UnsupportedType("I2(%d) needs irrational traces" % m)
        y = q * (2 + _TWO_COS[(m, k)])
        T1 = [[neg, _ZERO], [_ONE, q]]
        T2 = [[q, y], [_ZERO, neg]]
        reps.append(HeckeRep(G, "(2,%d)" % k, 2, {1: T1, 2: T2}))
    return reps


@lru_cache(maxsize=None)
def _irreducibles(G: CoxeterGroup) -> tuple:
    label = G.label
    if label.startswith("A"):
        n = G.rank + 1
        return tuple(_seminormal_rep(G, shape) for shape in _partitions(n))
    if label in ("B2", "G2") or label.startswith("I2"):
        return tuple(_dihedral_reps(G, G.coxeter_matrix[0][1]))
    raise UnsupportedType("no representations for %s" % label)


def irreducibles(G: CoxeterGroup) -> list:
    """One representation per isomorphism class of simple H^v-modules."""
    return list(_irreducibles(G))


def rep_by_label(G: CoxeterGroup, label: str) -> HeckeRep:
    for r in _irreducibles(G):
        if r.label == label:
            return r
    raise KeyError("no irreducible %r for %s" % (label, G.label))


# -- traces and central elements ------------------------------------------

def trace_T(rep: HeckeRep, w: CoxeterElement) -> FracLaurent:
    return mat_trace(rep.matrix_of(w.index))


def trace_c(rep: HeckeRep, w: CoxeterElement) -> FracLaurent:
    """tr(c_w) = v^-l(w) sum_y P_{y,w}(v^2) tr(T_y)."""
    G = rep.group
    lw = G.lengths[w.index]
    acc = _ZERO
    for y, p in KLTable.of(G).column(w.index).items():
        acc = acc + FracLaurent.from_laurent(p.substitute_square()) * mat_trace(rep.matrix_of(y))
    return acc.shift(-lw)


def sign_twist(rep: HeckeRep) -> HeckeRep:
    """h -> rho(dagger(h)); on generators T_s -> -rho(T_s) + (v^2 - 1)."""
    mats = {}
    for s, M in rep.matrices.items():
        I = mat_identity(rep.dim)
        mats[s] = mat_add(mat_scale(M, -1), mat_scale(I, _Q - 1))
    return HeckeRep(rep.group, rep.label + "^dagger", rep.dim, mats)


def c_E(rep: HeckeRep) -> HeckeElt:
    """sum_x (-1)^l(x) tr(c_{w0 x}, E) c_x."""
    G = rep.group
    table = KLTable.of(G)
    w0 = G.longest_element()
    h = HeckeElt.zero(G)
    for x in G:
        t = trace_c(rep, w0 * x)
        if t:
            if x.length() % 2:
                t = -t
            h = h + table.c(x.index).scale(t)
    return h


def c_prime_E(rep: HeckeRep) -> HeckeElt:
    """sum_u v^(-2 l(u)) tr(T_{u^-1}, E) T_u."""
    G = rep.group
    out = {}
    for u in range(len(G)):
        t = mat_trace(rep.matrix_of(G.inverse_index[u]))
        if t:
            out[u] = t.shift(-2 * G.lengths[u])
    return HeckeElt(G, out)

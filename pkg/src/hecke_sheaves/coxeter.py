"""
Finite Coxeter groups of small rank with exact element arithmetic.

A group is enumerated once by breadth-first search from the identity,
appending generators on the right. Elements are then plain indices into
precomputed tables (multiplication by generators, lengths, canonical words),
and index order coincides with ShortLex order on canonical reduced words.

Faithful models used for the search:

* types A_n, B2, G2: the reflection action on the root lattice, written
  with the integer Cartan matrix;
* I2(m): the dihedral group acting on Z/m by ``x -> eps*x + r``, with the
  two generators ``x -> -x`` and ``x -> 1 - x``.

Generators are numbered 1..rank. This numbering is a convention of this
package; identities involving w0 are labeling independent.

>>> W = CoxeterGroup.from_label("A2")
>>> len(W), W.longest_element().word
(6, (1, 2, 1))
"""

__all__ = [
    "CoxeterGroup", "CoxeterElement", "GroupMismatch", "UnsupportedType",
    "coxeter_group",
]

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class GroupMismatch(ValueError):
    """Operands belong to different groups."""


class UnsupportedType(ValueError):
    """The requested Coxeter type is not available."""


def _cartan_matrix(label: str) -> list:
    if label.startswith("A"):
        n = int(label[1:])
        if not 1 <= n <= 4:
            raise UnsupportedType("type A_n is supported for n <= 4, got %s" % label)
        C = [[0] * n for _ in range(n)]
        for i in range(n):
            C[i][i] = 2
            if i + 1 < n:
                C[i][i + 1] = C[i + 1][i] = -1
        return C
    if label == "B2":
        return [[2, -2], [-1, 2]]
    if label == "G2":
        return [[2, -3], [-1, 2]]
    raise UnsupportedType("no Cartan matrix for %s" % label)


def _coxeter_matrix_from_cartan(C: list) -> list:
    bond = {0: 2, 1: 3, 2: 4, 3: 6}
    n = len(C)
    return [[1 if i == j else bond[C[i][j] * C[j][i]] for j in range(n)]
            for i in range(n)]


def _classical_order(label: str, M: list) -> int:
    if label.startswith("A"):
        n = int(label[1:])
        out = 1
        for k in range(2, n + 2):
            out *= k
        return out
    return 2 * M[0][1]


class CoxeterGroup:
    """
    A finite Coxeter group with all elements enumerated.

    Tables (all indexed by element index, generators 0-based internally):

    * ``words[i]``: canonical (ShortLex-minimal) reduced word, generators 1-based
    * ``lengths[i]``
    * ``right[s][i]``: index of w_i * s
    * ``left[s][i]``: index of s * w_i
    """

    def __init__(self, label: str, coxeter_matrix: Sequence[Sequence[int]],
                 act, start, gens: list):
        self.label = label
        self.coxeter_matrix = tuple(tuple(r) for r in coxeter_matrix)
        self.rank = len(self.coxeter_matrix)
        self._check_matrix()
        self._enumerate(act, start, gens)
        if len(self.words) != _classical_order(label, self.coxeter_matrix):
            raise AssertionError("group order mismatch for %s" % label)
        self._bruhat = None
        self._classes = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_label(cls, label: str) -> "CoxeterGroup":
        return coxeter_group(label)

    def _check_matrix(self):
        M = self.coxeter_matrix
        for i in range(self.rank):
            if M[i][i] != 1:
                raise ValueError("Coxeter matrix diagonal must be 1")
            for j in range(self.rank):
                if M[i][j] != M[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and M[i][j] < 2:
                    raise ValueError("off-diagonal Coxeter entries must be >= 2")

    def _enumerate(self, act, start, gens):
        n = self.rank
        index = {start: 0}
        keys = [start]
        words = [()]
        lengths = [0]
        right = [[None] for _ in range(n)]
        level = [0]
        while level:
            nxt = []
            for i in level:
                for s in range(n):
                    key = act(keys[i], gens[s])
                    j = index.get(key)
                    if j is None:
                        j = len(keys)
                        index[key] = j
                        keys.append(key)
                        words.append(words[i] + (s + 1,))
                        lengths.append(lengths[i] + 1)
                        for r in right:
                            r.append(None)
                        nxt.append(j)
                    right[s][i] = j
            level = nxt
        self.words = words
        self.lengths = lengths
        self.right = right
        self._word_index = {w: i for i, w in enumerate(words)}
        N = len(words)
        # left multiplication: s * w, by walking the word of w
        self.left = [[self._apply_right(right[s][0], words[i]) for i in range(N)]
                     for s in range(n)]
        self.inverse_index = [self._index_of_word(tuple(reversed(w))) for w in words]

    def _apply_right(self, i: int, word) -> int:
        for s in word:
            i = self.right[s - 1][i]
        return i

    def _index_of_word(self, word) -> int:
        return self._apply_right(0, word)

    # -- basic access ------------------------------------------------------

    def __len__(self):
        return len(self.words)

    def __iter__(self) -> Iterator["CoxeterElement"]:
        return (CoxeterElement(self, i) for i in range(len(self.words)))

    def __repr__(self):
        return "CoxeterGroup(%r)" % self.label

    def __reduce__(self):
        return (coxeter_group, (self.label,))

    def element(self, word: Sequence[int] = ()) -> "CoxeterElement":
        """The element given by any (not necessarily reduced) word."""
        for s in word:
            if not 1 <= s <= self.rank:
                raise ValueError("generator index %r out of range 1..%d" % (s, self.rank))
        return CoxeterElement(self, self._index_of_word(tuple(word)))

    def identity(self) -> "CoxeterElement":
        return CoxeterElement(self, 0)

    def generators(self) -> list:
        return [self.element((s,)) for s in range(1, self.rank + 1)]

    def all_elements(self) -> list:
        return list(self)

    def longest_index(self) -> int:
        return len(self.words) - 1

    def longest_element(self) -> "CoxeterElement":
        return CoxeterElement(self, self.longest_index())

    # -- index-level operations (used by the algebra modules) --------------

    def mul_index(self, i: int, j: int) -> int:
        return self._apply_right(i, self.words[j])

    def left_descents_index(self, i: int) -> list:
        l = self.lengths[i]
        return [s for s in range(self.rank) if self.lengths[self.left[s][i]] < l]

    def right_descents_index(self, i: int) -> list:
        l = self.lengths[i]
        return [s for s in range(self.rank) if self.lengths[self.right[s][i]] < l]

    def bruhat_table(self) -> list:
        """``table[y][w]`` is True iff y <= w in Bruhat order."""
        if self._bruhat is None:
            N = len(self)
            table = [[False] * N for _ in range(N)]
            # process w by increasing length; reduce by a left descent s:
            # y <= w  iff  min(y, sy) <= sw
            for w in sorted(range(N), key=self.lengths.__getitem__):
                if w == 0:
                    table[0][0] = True
                    continue
                s = self.left_descents_index(w)[0]
                sw = self.left[s][w]
                ls = self.left[s]
                lens = self.lengths
                for y in range(N):
                    sy = ls[y]
                    m = sy if lens[sy] < lens[y] else y
                    table[y][w] = table[m][sw]
            self._bruhat = table
        return self._bruhat

    def conjugacy_class_indices(self) -> list:
        """Conjugacy classes as sorted lists of indices, ordered by minimum."""
        if self._classes is None:
            N = len(self)
            seen = [False] * N
            classes = []
            for i in range(N):
                if seen[i]:
                    continue
                orbit = {i}
                stack = [i]
                while stack:
                    x = stack.pop()
                    for s in range(self.rank):
                        y = self.right[s][self.left[s][x]]
                        if y not in orbit:
                            orbit.add(y)
                            stack.append(y)
                for x in orbit:
                    seen[x] = True
                classes.append(sorted(orbit))
            self._classes = classes
        return self._classes

    def conjugacy_classes(self) -> list:
        return [[CoxeterElement(self, i) for i in c] for c in self.conjugacy_class_indices()]

    def class_of_index(self) -> list:
        out = [0] * len(self)
        for k, c in enumerate(self.conjugacy_class_indices()):
            for i in c:
                out[i] = k
        return out


def _dihedral_act(key, g):
    # compose x -> e*x + r with generator x -> ge*x + gr on the right:
    # (w * g)(x) = w(g(x)) = e*(ge*x + gr) + r
    e, r, m = key
    ge, gr = g
    return (e * ge, (e * gr + r) % m, m)


def _matrix_act(key, g):
    # key: tuple of rows of the matrix of w; right multiplication by g
    n = len(g)
    return tuple(
        tuple(sum(row[k] * g[k][j] for k in range(n)) for j in range(n))
        for row in key
    )


def coxeter_group(label: str) -> CoxeterGroup:
    """
    Build (and cache) the group with the given label: ``A1``..``A4``,
    ``B2``, ``G2``, or ``I2:m`` (also accepted: ``I2(m)``).
    """
    label = label.strip()
    if label.startswith("I2"):
        rest = label[2:].strip(":()")
        try:
            m = int(rest)
        except ValueError:
            raise UnsupportedType("bad dihedral label %r" % label) from None
        label = "I2:%d" % m
    return _build_group(label)


@lru_cache(maxsize=None)
def _build_group(label: str) -> CoxeterGroup:
    if label.startswith("I2:"):
        m = int(label[3:])
        if m < 3:
            raise UnsupportedType("I2(m) needs m >= 3")
        gens = [(-1, 0), (-1, 1)]
        return CoxeterGroup(label, [[1, m], [m, 1]], _dihedral_act, (1, 0, m), gens)
    C = _cartan_matrix(label)
    n = len(C)
    gens = []
    for i in range(n):
        # s_i(alpha_j) = alpha_j - C[i][j] alpha_i ; matrix acting on columns
        g = [[int(r == c) for c in range(n)] for r in range(n)]
        for j in range(n):
            g[i][j] -= C[i][j]
        gens.append(tuple(tuple(row) for row in g))
    ident = tuple(tuple(int(r == c) for c in range(n)) for r in range(n))
    return CoxeterGroup(label, _coxeter_matrix_from_cartan(C), _matrix_act, ident, gens)


@dataclass(frozen=True, eq=False)
class CoxeterElement:
    """An element of a finite Coxeter group, identified by its index."""
    group: CoxeterGroup
    index: int

    def __eq__(self, other):
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        return self.group is other.group and self.index == other.index

    def __hash__(self):
        return hash((id(self.group), self.index))

    def __lt__(self, other):
        # ShortLex order on canonical words
        self._check(other)
        return self.index < other.index

    def _check(self, other):
        if self.group is not other.group:
            raise GroupMismatch("%r vs %r" % (self.group, other.group))

    @property
    def word(self) -> tuple:
        return self.group.words[self.index]

    def length(self) -> int:
        return self.group.lengths[self.index]

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        if not isinstance(other, CoxeterElement):
            return NotImplemented
        self._check(other)
        return CoxeterElement(self.group, self.group.mul_index(self.index, other.index))

    def product(self, other):
        return self * other

    def inverse(self) -> "CoxeterElement":
        return CoxeterElement(self.group, self.group.inverse_index[self.index])

    def descents_left(self) -> set:
        return {s + 1 for s in self.group.left_descents_index(self.index)}

    def descents_right(self) -> set:
        return {s + 1 for s in self.group.right_descents_index(self.index)}

    def bruhat_leq(self, other: "CoxeterElement") -> bool:
        self._check(other)
        return self.group.bruhat_table()[self.index][other.index]

    def omega(self) -> "CoxeterElement":
        """w0 * w * w0."""
        w0 = self.group.longest_element()
        return w0 * self * w0

    def is_identity(self) -> bool:
        return self.index == 0

    def __repr__(self):
        return "%s%s" % (self.group.label, list(self.word))

    def to_json(self) -> list:
        return list(self.word)


def bruhat_leq(y: CoxeterElement, w: CoxeterElement) -> bool:
    return y.bruhat_leq(w)

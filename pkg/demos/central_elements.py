"""Irreducible representations, traces and central elements of H(S3)."""

from hecke_sheaves import coxeter_group, is_central, mul
from hecke_sheaves.hecke import dagger, t_inverse
from hecke_sheaves.heckerep import c_E, c_prime_E, irreducibles, trace_T
from hecke_sheaves.laurent import FracLaurent, LaurentPoly

G = coxeter_group("A2")
w0 = G.longest_element()
l0 = w0.length()
factor = FracLaurent.from_laurent(LaurentPoly.monomial(-l0, -1 if l0 % 2 else 1))

for rep in irreducibles(G):
    print("E = %s (dim %d)" % (rep.label, rep.dim))
    print("  traces:", ", ".join("%s: %s" % (list(w.word), trace_T(rep, w)) for w in G))
    z = mul(t_inverse(w0), c_E(rep))
    print("  T_w0^-1 c_E central:", is_central(z))
    print("  c'_E =", c_prime_E(rep))
    print("  dagger identity:", dagger(z) == c_prime_E(rep).scale(factor))

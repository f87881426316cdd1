"""The dual module: the star action, its closed rule, and Lambda."""

from hecke_sheaves import T, coxeter_group
from hecke_sheaves.dual import a_coeffs, b_coeffs, dual_basis, lambda_map, star_action, star_rule

G = coxeter_group("B2")
s = 1
Ts = T(G.element((s,)))
for w in G:
    phi = dual_basis(w)
    generic = star_action(Ts, phi)
    assert generic == star_rule(s, w)
    assert lambda_map(generic) == lambda_map(phi).left_mul_generator(s)
    print("T_%d * ct%s = %r" % (s, list(w.word), generic))

a, b = a_coeffs(G), b_coeffs(G)
print("a-matrix entries nonzero:", sum(1 for row in a for x in row if x))
print("b-matrix entries nonzero:", sum(1 for row in b for x in row if x))

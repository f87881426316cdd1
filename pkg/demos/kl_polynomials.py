"""Kazhdan-Lusztig polynomials of S4 and the canonical basis element c_w."""

from hecke_sheaves import c_basis, coxeter_group, kl_oracle, kl_polynomial, mu

G = coxeter_group("A3")
w = G.element([2, 1, 3, 2])
print("w =", list(w.word), "length", w.length())
for y in G:
    if y.bruhat_leq(w):
        p = kl_polynomial(y, w)
        assert p == kl_oracle(y, w)
        print("  P_{%s,w} = %s   mu = %d" % (list(y.word), p.format("q"), mu(y, w)))

print("c_w =", c_basis(w))

nontrivial = [(y, x) for x in G for y in G if y.bruhat_leq(x) and not kl_polynomial(y, x).is_constant()]
print("pairs with nonconstant P in S4:", len(nontrivial))

"""Coordinates on Z and Z', the transfer operators and the beta expansion."""

import random

from hecke_sheaves import c_basis, coxeter_group
from hecke_sheaves.grfunctor import (GammaTable, beta_expansion, beta_from_gamma,
                                     beta_twist_check, duality, gr_tau, gr_tau_tilde, pairing,
                                     psi, random_symmetric_table)

G = coxeter_group("A2")
e = G.identity()
g = psi(c_basis(e))
print("psi(c_e)          =", g)
print("gr_tau(psi(c_e))  =", gr_tau(g))
print("gr_tau_tilde      =", gr_tau_tilde(g))
print("duality fixes it:", duality(g) == g)

print("pairing(e, e) =", pairing(e, e).format("q"))

rng = random.Random(1)
m = random_symmetric_table(G, 8, 1, rng)
print("random table:", m.to_json()["mult"])
print("beta expansion:", beta_expansion(m))
print("twist identity holds:", beta_twist_check(m))

h = beta_from_gamma(GammaTable(8, {"21": "1/3", "sgn": 1}), G)
print("v^8 (c_21 / 3 + c_sgn) =", h)

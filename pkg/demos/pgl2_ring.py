"""The stratified Grothendieck ring of PGL_2 with characters in Z/12."""

from hecke_sheaves.pgl2ring import (L, Lp, Lpp, Q_ONE, Q_RU, RingElt, basis_classes,
                                    check_golden, gr_expansion, structure_constants)

for c in basis_classes(12):
    print("Gr(%s) = %s" % (c.gr_label(), gr_expansion(c)))

for a, b in [(L(1), L(2)), (L(1), L(5)), (Lp(6), L(1)), (Lp(0), Lpp(6)), (Q_RU(), Q_ONE())]:
    f = RingElt(structure_constants(a, b))
    print("Gr(%s) Gr(%s) = %s" % (a.gr_label(), b.gr_label(), f.format(gr=True)))

n, failures = check_golden(12)
print("golden table: %d instances, %d failures" % (n, len(failures)))

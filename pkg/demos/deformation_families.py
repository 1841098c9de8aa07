"""
One-parameter deformation families
==================================

Four worked families deform an absolutely irreducible residual
representation along the trace coordinate x.  A certificate checks that
each family is the universal deformation of its residual point.
"""

from twobridge.deformations import (
    build_family,
    specialize_family,
    trace_axioms,
    universality_certificate,
)

# rho1: trefoil at p=3, expanded around x = 2
fam = build_family("rho1")
print("rho1 over Z_%d[[x - %s]], character point %s" % (fam.p, fam.alpha, fam.char_point))
print("rho1(g1) residual:", fam.rep.residue_matrices()[0])

# the certificate: the character point is off the abelian line, the
# curve is y-simple there, and the family's traces hit the tangent data
cert = universality_certificate(fam)
print("certificate ok:", cert.ok, " (dpsi/dy =", cert.psi_derivative, ")")

# the p=11 family carries a cubic root s(x); its leading coefficients
fam3 = build_family("rho3")
print("rho3 s(x) =", fam3.params["s"])

# specialization sends the series parameter to a p-adic point; at x=5
# the family collapses to a single representation over Z_11
spec = specialize_family(fam3, 5)
print("rho3 at x=5, g1 =")
m = spec.rep.matrices[1]
print("  [%s  %s]" % (m.a, m.b))
print("  [%s  %s]" % (m.c, m.d))
print("trace:", m.a + m.d)

# trace functions of any family satisfy the pseudo-representation
# axioms; the checker samples words and reports per-axiom counts
report = trace_axioms(fam.rep, max_len=3, budget=40, seed=0)
print("trace axioms ok:", report.ok, " checks:", report.checks)

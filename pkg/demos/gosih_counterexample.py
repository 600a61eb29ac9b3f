"""
A lower map that is not idempotent
==================================

Inclusion on the power set of three points, the fixed ideal {∅}, and a
granulation where each point sees its right neighbour.  Applying the lower
map twice shrinks {p,q} to the empty set.
"""

from roughideals import approx as ap
from roughideals import harness as hz
from roughideals.universe import Universe

base = Universe(("p", "q", "r"))
st = ap.powerset_structure(base)
gamma = ap.Granulation(base, (base.mask("pq"), base.mask("qr"), base.mask("r")))
fixed = ap.family_mask([0])

A = base.mask("pq")
for step in range(3):
    r = ap.approx_gosih(st, base, gamma, fixed, A)
    print(f"l({base.format(A)}) = {base.format(r.lower)}")
    A = r.lower

# the harness finds the same failure on random instances
rep = hz.run_suite(hz.get_suite("gosih"))
print(rep.failed_laws(), rep.laws["gosih.idempotent_lower"][1])

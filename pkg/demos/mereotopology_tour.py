"""
Clans and approximations in a discrete space
============================================

Four points, two of them actual.  List the clans, keep the actual ones,
and approximate a region with each scheme.
"""

from roughideals import mereo as mo
from roughideals.universe import Universe

u = Universe(("a", "b", "c", "d"))
s = mo.build_discrete_contact(mo.DiscreteSpace.from_labels(u, ["a", "b"]))

print({block: all(v is None for v in mo.check_axioms(s, block).values()) for block in ("C", "Ca", "AE")})

# in a discrete space every clan is the ultrafilter of one point
cl = mo.clans(s)
actual = mo.clans(s, mo.ACTUAL)
print(len(cl), "clans,", len(actual), "actual")

A = u.mask("ac")
for K in actual:
    point = u.labels(min(K.regions(), key=lambda h: bin(h).count("1")))
    for scheme in mo.SCHEMES:
        r = mo.mereo_approx(s, K, A, scheme, clan_list=cl)
        print(f"clan at {point}  {scheme:4s} lower {u.format(r.lower):8s} upper {u.format(r.upper)}")

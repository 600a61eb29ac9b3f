"""
The six-point example
=====================

Bounds, neighborhoods, sigma-ideals and one co-granular approximation on
the shipped six-point instance.
"""

from roughideals import approx as ap
from roughideals import sigma as sg
from roughideals import worked_examples as wx
from roughideals.instance import parse_instance
from roughideals.universe import min_neighborhood

doc = parse_instance(wx.load_s6())
u = doc.universe
st = sg.SigmaStructure(doc.relation)

# common upper and lower bounds of a few pairs
for x, z in [("a", "b"), ("b", "c"), ("c", "e")]:
    print(f"U({x},{z}) = {u.format(sg.upper_bounds(st, x, z))}   L({x},{z}) = {u.format(sg.lower_bounds(st, x, z))}")

# minimal neighborhoods; g has none, so <g> is empty
for x in u.elements:
    print(f"<{x}> = {u.format(min_neighborhood(doc.relation, x))}")

# the weak clause skips pairs without upper bounds, the strict one does not
for mode in sg.MODES:
    fam = sg.enumerate_sigma_ideals(st.with_options(mode=mode))
    print(mode, [u.format(K) for K in fam])

# GOSI approximations of {a,b}; the result carries a deviation record
r = ap.approx_gosi(st, doc.granulation, doc.set_mask("A"))
print("lower", u.format(r.lower), "upper", u.format(r.upper))
for d in r.deviations:
    print("deviation:", d["quantity"], d["computed"], "vs", d["reference"])

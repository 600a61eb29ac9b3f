"""
Checking approximation laws by brute force
==========================================

Run the kappa and IAD law suites over every reflexive relation on three
points, then look at the counterexamples the IAD search finds on rings
that are not the whole power set.
"""

from roughideals import harness as hz

for sid in ("kappa", "iad"):
    rep = hz.run_suite(hz.get_suite(sid))
    print(f"{sid}: {rep.instances} instances, ok={rep.ok}")

# searched laws never fail a suite; they only report what was found
rep = hz.run_suite(hz.get_suite("iad"))
for law, tally in rep.laws.values():
    if law.status == hz.SEARCHED:
        print(f"  {law.id:32s} {tally.violations}/{tally.checked}")

first = next(c for c in rep.counterexamples if c["status"] == hz.SEARCHED)
print("example:", first["law"], first["witness"])

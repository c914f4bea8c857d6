"""Which quartics come from prehomogeneous vector spaces?

For small rank or dimension the quartic is a relative invariant of a
classical prehomogeneous space; past that, it is provably not, which is the
interesting regime.  This tour prints the verdict across the enumeration.
"""

from cqforms import classify, irrep_catalog
from cqforms.suite import enumerate_cases

print(f"{'module':>20s} {'m':>4s}  verdict")
shown = 0
for p, q, mults in enumerate_cases(max_pq=11, max_total_mult=2, max_m=32):
    r = classify(p, q, mults)
    verdict = "degenerate" if r.degenerate else ("exceptional" if r.exceptional else "generic")
    pv = r.pv_entry if r.prehomogeneous else "-- not prehomogeneous --"
    # print a representative slice: everything with p + q in {5, 9, 10}
    if p + q in (5, 9, 10):
        print(f"({p},{q}) x {str(mults):>12s} {r.m:4d}  {verdict:11s} {pv}")
        shown += 1
print(f"\n({shown} of {len(enumerate_cases())} enumerated modules shown)")
print()

# ---------------------------------------------------------------------------
# Counts over the whole enumeration
# ---------------------------------------------------------------------------

tally = {"degenerate": 0, "exceptional": 0, "generic": 0, "prehomogeneous": 0}
for p, q, mults in enumerate_cases():
    r = classify(p, q, mults)
    if r.degenerate:
        tally["degenerate"] += 1
    elif r.exceptional:
        tally["exceptional"] += 1
    else:
        tally["generic"] += 1
    tally["prehomogeneous"] += bool(r.prehomogeneous)
print("tally over p+q <= 11, total multiplicity <= 2, m <= 32:", tally)
print()

# the first non-prehomogeneous quartic: rank 5 at doubled multiplicity
r = classify(3, 2, (2,))
print(f"(3,2) with two copies (m = {r.m}): generic = {r.generic}, "
      f"prehomogeneous = {r.prehomogeneous}")
print("  -> a local functional equation without a prehomogeneous space behind it")

# the rank-12 wall: never prehomogeneous regardless of multiplicities
cat = irrep_catalog(12, 0)
r = classify(12, 0, (1,))
print(f"(12,0) minimal module (m = {r.m}): prehomogeneous = {r.prehomogeneous}")

"""
Almost cross bipartitions and one-box bumps
===========================================

Almost (m|n)-cross bipartitions are the minimal ones that are not cross.
Their black and white parts glue into an (m+1) x (n+1) rectangle, and
moving one box across the seam walks between any two of them.
"""

from math import comb

from repgl import bump_path, classify, enumerate_almost, parse_bipartition
from repgl.cross import apply_bump

for m, n in [(0, 0), (1, 0), (2, 2)]:
    family = enumerate_almost(m, n)
    print(f"({m}|{n}): {len(family)} almost-cross bipartitions, expected {comb(m + n + 2, m + 1)}")
    if len(family) <= 3:
        print("   ", *family)

lam = parse_bipartition("[3,3,1|2]")
mu = parse_bipartition("[2,2,2|1,1,1]")
print("\n", lam, classify(lam, 2, 2), "|", mu, classify(mu, 2, 2))

path = bump_path(lam, mu, 2, 2)
current = lam
for move in path:
    current = apply_bump(current, move, 2, 2)
    print(f"  {move}  ->  {current}")

"""
Weight diagrams and cap diagrams
================================

Every bipartition draws a labelling of the integer line once the
parameter delta is fixed.  Caps join a ``v`` to a later ``^`` and decide
which other bipartitions are linked to it.
"""

from repgl import cap_diagram, m_delta, parse_bipartition, weight_diagram
from repgl.textio import RenderSpec, render

# The unit has the standard diagram: ^ up to 0, v from 1 on.
unit = parse_bipartition("[|]")
print(render(weight_diagram(unit, 0)))

# One black box and one white box: a single cap at delta = 0 ...
lam = parse_bipartition("[1|1]")
print(render(cap_diagram(weight_diagram(lam, 0))))

# ... which disappears at delta = 1.
print(render(cap_diagram(weight_diagram(lam, 1))))

# Nested caps, and the four bipartitions they link together.
big = parse_bipartition("[2,2|2,2]")
print(render(cap_diagram(weight_diagram(big, 0))))
for mu, _ in m_delta(big, 0).sorted_items():
    print("  linked:", mu)

# The same caps as JSON, handy for other tools.
print(render(cap_diagram(weight_diagram(big, 0)), RenderSpec("json")))

"""
Switching plans, validation reports, and graph interchange
==========================================================

A switching plan is plain data: the graph order plus the vertex
classes.  Plans serialize to JSON, graphs serialize to graph6 text, and
an inadmissible plan is rejected with a structured report instead of a
silently wrong graph.
"""

from fractions import Fraction

from specpairs import (
    SwitchingPlan,
    decode_graph6,
    encode_graph6,
    path_graph,
    second_smallest_laplacian_eigenvalue,
    switch,
    validate_plan,
    vertex_connectivity,
    vertex_pair,
)

# plans round-trip through JSON
fi = vertex_pair(2)
text = fi.plan.to_json()
print("plan JSON:", text)
assert SwitchingPlan.from_json(text).classes == fi.plan.classes

# graphs round-trip through graph6 one-liners
line = encode_graph6(fi.gamma)
print("gamma as graph6:", line)
assert decode_graph6(line) == fi.gamma

# an inadmissible plan produces a full violation report
g = path_graph(5)
report = validate_plan(g, SwitchingPlan(5, [[0, 1, 2]]))
print(f"\nplan admissible: {report.valid}")
for v in report.violations:
    print(f"  [{v.condition}] {v.detail}")

# admissible plans can be applied to any graph, not just family members
plan = SwitchingPlan(5, [[0, 1]])
h = switch(g, plan)
print("\n5-path switched on class {0,1}:", h.edges())

# certified algebraic connectivity: a rational interval, not a float
iv = second_smallest_laplacian_eigenvalue(fi.gamma_prime)
kv = vertex_connectivity(fi.gamma_prime).value
print(f"\nmu2 of the switched graph lies in [{iv.lo}, {iv.hi}]")
print(f"interval width {float(iv.width):.2e}, below kappa={kv}: "
      f"{iv.hi <= kv + Fraction(1, 1 << 20)}")

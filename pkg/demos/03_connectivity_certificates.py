"""
Connectivity values that carry their own proof
==============================================

A connectivity number alone is easy to misreport.  Every value here
comes with a witness -- a concrete deletion set that disconnects the
graph -- and the claim "nothing smaller works" is cross-checked by raw
subset enumeration on small graphs and by disjoint path systems.
"""

from specpairs import (
    brute_force_connectivity,
    complete_bipartite,
    cycle_graph,
    delete_vertices,
    components,
    edge_connectivity,
    max_edge_disjoint_paths,
    max_vertex_disjoint_paths,
    vertex_connectivity,
    verify_disconnecting_set,
)

g = complete_bipartite(3, 5)

kv = vertex_connectivity(g)
ke = edge_connectivity(g)
print(f"K(3,5): kappa={kv.value} witness={kv.witness}")
print(f"        kappa'={ke.value} witness={ke.witness}")

# the witness really disconnects; one vertex fewer really does not
assert verify_disconnecting_set(g, kv.witness)
assert components(delete_vertices(g, kv.witness)[0]).count >= 2
assert verify_disconnecting_set(g, ke.witness)
print("witnesses re-checked by actually deleting them")

# the independent oracle scans all small subsets and lands on the same value
assert brute_force_connectivity(g, "vertex", 8) == kv.value
assert brute_force_connectivity(g, "edge", 3) == ke.value
print("brute-force enumeration agrees")

# Menger's view: the same numbers appear as maximum disjoint path systems
ps = max_vertex_disjoint_paths(g, 0, 1)
print(f"\n{ps.count} internally disjoint paths between the two degree-5 "
      f"vertices:")
for path in ps.paths:
    print("  ", " -> ".join(map(str, path)))
ps.validate(g)

eps = max_edge_disjoint_paths(cycle_graph(8), 0, 4)
print(f"\nC8 carries {eps.count} edge-disjoint paths between opposite "
      f"vertices: {eps.paths}")

"""
Exact characteristic polynomials and what they reveal
=====================================================

Floating point eigenvalues can't certify that two spectra are *equal*.
Here every characteristic polynomial is computed over the integers --
by a modular method cross-checked against a division-free one -- so
cospectrality, bipartiteness and component counts become exact yes/no
questions about integer coefficients.
"""

import numpy as np

from specpairs import (
    berkowitz_char_poly,
    char_poly_adjacency,
    char_poly_laplacian,
    complete_bipartite,
    cycle_graph,
    disjoint_union,
    empty_graph,
    laplacian_matrix,
    spectrum_symmetric,
    two_coloring,
    zero_root_multiplicity,
)

# the classic smallest cospectral pair: C4 + an isolated vertex vs the
# 4-pointed star.  Same adjacency spectrum, different shapes.
a = disjoint_union(cycle_graph(4), empty_graph(1))
b = complete_bipartite(1, 4)
pa, pb = char_poly_adjacency(a), char_poly_adjacency(b)
print("C4+K1 coefficients:", pa.coeffs)
print("K1,4  coefficients:", pb.coeffs)
print("equal:", pa == pb, "- digests:", pa.digest()[:12], pb.digest()[:12])

# the Laplacian tells them apart, and its zero roots count components
la, lb = char_poly_laplacian(a), char_poly_laplacian(b)
print("\nLaplacian polynomials equal:", la == lb)
print("components of C4+K1 from the spectrum:", zero_root_multiplicity(la))
print("components of K1,4  from the spectrum:", zero_root_multiplicity(lb))

# a symmetric adjacency spectrum is the same thing as 2-colorability
for g, name in [(cycle_graph(6), "C6"), (cycle_graph(5), "C5")]:
    sym = spectrum_symmetric(char_poly_adjacency(g))
    print(f"\n{name}: spectrum symmetric = {sym}, "
          f"2-colorable = {two_coloring(g) is not None}")

# two independent exact routes agree coefficient-for-coefficient
g = cycle_graph(9)
assert char_poly_adjacency(g) == berkowitz_char_poly(g.adj.astype(np.int64))
assert char_poly_laplacian(g) == berkowitz_char_poly(laplacian_matrix(g))
print("\nmodular and division-free computations agree on C9")

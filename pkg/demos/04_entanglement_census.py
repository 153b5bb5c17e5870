"""Entanglement structure of MUB families, read off the graphs.

Separability is visible in the adjacency matrices: no edges means a
product basis; a bipartition with an all-zero connectivity block means
biseparable elements.  Reduced purities are p^{-rank} exactly, and the
averaged purity over a complete family reproduces the Haar value, a
consequence of complete MUB families being 2-designs.
"""

from fractions import Fraction

from graphmub import (
    Bipartition,
    MatZp,
    all_bipartitions,
    census,
    classify_basis,
    design_purity_check,
    mub_set,
    numeric_purity,
    reduced_purity,
    shift_set,
)

family = mub_set(2, 3, method="tridiag", d=(1, 0, 0))
print("three-qubit family census:", census(family))
print("with the computational basis:", census(family, include_computational=True))

b = Bipartition.of((1,), 3)
print("\nper-graph data at the bipartition (1|23):")
for idx, a in enumerate(family.matrices):
    exact = reduced_purity(a, b)
    dense = numeric_purity(a, b)
    print(f"  graph {idx}: purity {str(exact):>3} "
          f"(dense check {dense:.6f}), {classify_basis(a)}")

check = design_purity_check(family, b)
print(f"\naveraged purity: {check.lhs} = (d_X + d_Y)/(d_X d_Y + 1) = "
      f"{check.rhs} -> {'exact match' if check.passed else 'MISMATCH'}")
assert check.lhs == Fraction(6, 9)

# A collective controlled-phase on qubits 1,2 shifts every adjacency
# matrix by the same symmetric matrix; unbiasedness survives but the
# entanglement pattern changes.
shift = MatZp(2, [[0, 1, 0], [1, 0, 0], [0, 0, 0]])
shifted = shift_set(family, shift)
print("\nafter the collective two-qubit phase gate:", census(shifted))
for bb in all_bipartitions(3):
    assert design_purity_check(shifted, bb).passed
print("design identity still exact on every bipartition: True")

# Tripartite rule for any prime: p product bases, p^3 - p entangled ones.
for p in (3, 5):
    fam = mub_set(p, 3)
    print(f"\n(p={p}, n=3) census: {census(fam)}  "
          f"(expected {{{p} separable, {p**3 - p} entangled}})")

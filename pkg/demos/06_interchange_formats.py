"""The serialization surfaces: family documents, DOT graphs, circuit text.

Families serialize to canonical JSON (sorted keys, compact separators),
so identical inputs always produce identical bytes; adjacency matrices
export as DOT multigraphs with multiplicity labels; measurement circuits
have a strict line format.  The curated diagonal table re-derives its
polynomial column from the stored diagonals on every call.
"""

import json

from graphmub import (
    canonical_json,
    circuit_to_text,
    derive_rows,
    emit_measurement_circuit,
    from_document,
    mub_set,
    to_document,
)
from graphmub.cli import adjacency_to_dot

family = mub_set(3, 2)
doc = to_document(family)
text = canonical_json(doc)
print(f"document: {len(text)} bytes, keys {sorted(doc)}")

# round trip is exact: parse, re-serialize, compare bytes
again = canonical_json(to_document(from_document(json.loads(text))))
print("byte-identical after a parse/serialize round trip:", again == text)

# DOT export of one member: vertices 1..n, multiplicity labels, loop edges
print("\nDOT form of family member 4:")
print(adjacency_to_dot(family.matrices[4], "g4"), end="")

print("\nmeasurement circuit for the same member:")
print(circuit_to_text(emit_measurement_circuit(family.matrices[4])), end="")

# the curated table: stored diagonals, re-derived polynomials
rows = derive_rows(5)
print(f"\ncurated rows for p = 5: {len(rows)}")
for row in rows[:4]:
    print(f"  n={row['n']} d={row['d']} -> coefficients {row['polynomial']} "
          f"(irreducible={row['irreducible']}, primitive={row['primitive']})")

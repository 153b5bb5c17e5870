"""Measurement circuits: three gate types realize every basis of the family.

Measuring in a graph basis takes only inverse controlled-phase gates,
inverse local phases, and an inverse Fourier transform per qupit; the
joint computational outcome then equals the basis label.  For qubits
these are CZ, the pi/4 phase gate, and the Hadamard.
"""

import numpy as np

from graphmub import (
    basis_element,
    circuit_from_text,
    circuit_to_text,
    emit_measurement_circuit,
    mub_set,
    simulate_measurement,
)
from graphmub.states import state_index

family = mub_set(2, 3, method="tridiag", d=(1, 0, 0))

a = family.matrices[2]  # the seed graph Q itself
circuit = emit_measurement_circuit(a)
print("circuit measuring in the basis of graph Q:")
print(circuit_to_text(circuit))

# Text form is bit-exact and order-preserving.
assert circuit_from_text(circuit_to_text(circuit)) == circuit

# Feeding each basis element through its own measurement circuit gives
# its label with certainty.
print("roundtrip: basis element -> circuit -> outcome")
for label in ((0, 0, 0), (1, 0, 1), (1, 1, 1)):
    probs = simulate_measurement(circuit, basis_element(a, label))
    outcome = int(np.argmax(probs))
    print(f"  label {label}: outcome index {outcome} "
          f"with probability {probs[outcome]:.10f} "
          f"(expected index {state_index(label, 2)})")

# A computational basis state is maximally uncertain in any graph basis.
e0 = np.zeros(8, dtype=complex)
e0[0] = 1.0
probs = simulate_measurement(circuit, e0)
print(f"\n|000> measured in the graph basis: outcome distribution "
      f"uniform at 1/8? {np.allclose(probs, 1 / 8)}")

# Qutrits work identically with p = 3 gates.
family3 = mub_set(3, 2)
a3 = family3.matrices[4]
circuit3 = emit_measurement_circuit(a3)
print("\na two-qutrit example circuit:")
print(circuit_to_text(circuit3))
probs = simulate_measurement(circuit3, basis_element(a3, (2, 1)))
print(f"label (2,1) recovered with probability "
      f"{probs[state_index((2, 1), 3)]:.10f}")

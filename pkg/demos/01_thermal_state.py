"""Build the two-qubit model and inspect its thermal state.

Walks from the Hamiltonian to the exact spectrum and the closed-form
Gibbs state, then confirms the closed form against a dense matrix
exponential.
"""

import numpy as np

from gravcat import (
    ModelParams,
    build_hamiltonian,
    eigensystem,
    gibbs_xstate,
    ground_state,
    partition_function,
)
from gravcat.oracles import matrix_exponential

p = ModelParams(omega=1.0, gamma=2.0)
T = 0.75

print("Hamiltonian:")
print(build_hamiltonian(p))

es = eigensystem(p)
print("\nspectrum:", (es.lambda1, es.lambda2, es.lambda3, es.lambda4))
print("mixing angles: kappa+ = %.6f, kappa- = %.6f" % (es.kappa_plus, es.kappa_minus))
print("partition function Z(T=%.2f) = %.6f" % (T, partition_function(p, T)))

rho = gibbs_xstate(p, T)
print("\nthermal X state at T = %.2f:" % T)
print(rho.to_matrix())
print("purity:", rho.purity())

# the same state, brute force: expm(-H/T) normalized
dense = matrix_exponential(build_hamiltonian(p), scale=-1.0 / T)
dense = (dense / np.trace(dense).real).real
print("\nmax |closed form - expm|:", np.max(np.abs(rho.to_matrix() - dense)))

# at very low temperature only the ground level survives
cold = gibbs_xstate(p, 1e-3)
g = ground_state(p)
print("cold-state distance from the ground projector:",
      max(abs(getattr(cold, f) - getattr(g, f))
          for f in ("r11", "r22", "r33", "r44", "r14", "r23")))

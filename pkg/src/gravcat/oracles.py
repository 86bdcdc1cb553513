"""Brute-force 4x4 linear algebra used to cross-validate the closed forms.

Everything here goes through a dense eigendecomposition or a generic index
contraction, with none of the model's algebraic shortcuts, so agreement
between this module and the closed-form layer is a real check.  Nothing
in the production paths imports from here; it runs only in tests and in
ad-hoc verification.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "SIGMA",
    "Spectrum4",
    "hermitian_eigensystem",
    "matrix_exponential",
    "wootters_concurrence",
    "partial_trace",
    "trace_norm",
    "pauli_expectation",
]

HERMITICITY_TOL = 1e-12
PSD_TOL = 1e-10

# sigma_0 .. sigma_3
SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class Spectrum4:
    """Ascending eigenvalues and the matching orthonormal column vectors."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def _require_hermitian(m, tol=HERMITICITY_TOL):
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    dev = np.max(np.abs(m - m.conj().T))
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    return m


def hermitian_eigensystem(m):
    """Eigendecomposition of a Hermitian 4x4 matrix.

    Ascending eigenvalues; reconstruction V diag(w) V+ and orthonormality
    V+ V = I both hold to 1e-10 (asserted in the test suite).
    """
    m = _require_hermitian(m)
    w, v = np.linalg.eigh(m)
    return Spectrum4(eigenvalues=w, eigenvectors=v)


def matrix_exponential(m, scale=1.0):
    """exp(scale * m) for Hermitian m, via the spectral decomposition."""
    spec = hermitian_eigensystem(m)
    v = spec.eigenvectors
    out = (v * np.exp(scale * spec.eigenvalues)) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def _require_density_matrix(rho):
    rho = _require_hermitian(rho)
    if abs(np.trace(rho).real - 1.0) > 1e-10:
        raise ValueError(f"trace must be 1, got {np.trace(rho).real!r}")
    w = np.linalg.eigvalsh(rho)
    if w.min() < -PSD_TOL:
        raise ValueError(f"not positive semidefinite (min eigenvalue {w.min():.3e})")
    return rho


def wootters_concurrence(rho):
    """Entanglement of formation monotone for an arbitrary two-qubit state.

    Builds the spin-flipped product rho (sy x sy) rho* (sy x sy), takes its
    eigenvalues xi_i in decreasing order (tiny negatives from round-off are
    clamped before the square roots) and returns
    max(sqrt(xi_1) - sqrt(xi_2) - sqrt(xi_3) - sqrt(xi_4), 0).
    """
    rho = _require_density_matrix(rho)
    flip = np.kron(SIGMA[2], SIGMA[2])
    rho_tilde = rho @ flip @ rho.conj() @ flip
    xi = np.sort(np.linalg.eigvals(rho_tilde).real)[::-1]
    xi = np.clip(xi, 0.0, None)
    roots = np.sqrt(xi)
    return float(max(roots[0] - roots[1] - roots[2] - roots[3], 0.0))


def partial_trace(rho, side):
    """Trace out one qubit; side is the qubit being removed ("A" or "B")."""
    rho = np.asarray(rho, dtype=complex).reshape(2, 2, 2, 2)
    if side == "A":
        return np.einsum("ijik->jk", rho)
    if side == "B":
        return np.einsum("ijkj->ik", rho)
    raise ValueError(f"side must be 'A' or 'B', got {side!r}")


def trace_norm(m):
    """Schatten 1-norm of a Hermitian matrix: sum of |eigenvalues|."""
    m = _require_hermitian(m)
    return float(np.sum(np.abs(np.linalg.eigvalsh(m))))


def pauli_expectation(rho, mu, nu):
    """Tr[(sigma_mu x sigma_nu) rho] for mu, nu in 0..3 (real part)."""
    op = np.kron(SIGMA[mu], SIGMA[nu])
    return float(np.trace(op @ np.asarray(rho, dtype=complex)).real)

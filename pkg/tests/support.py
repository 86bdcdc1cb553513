"""Shared samplers and small helpers for the test suite."""

import numpy as np

from gravcat import ModelParams, XState, build_hamiltonian
from gravcat.oracles import matrix_exponential


def random_xstate(rng):
    """Valid X state: populations off a flat simplex, coherences inside the
    two positivity disks (uniform, sign included)."""
    r11, r22, r33, r44 = rng.dirichlet(np.ones(4))
    r14 = rng.uniform(-1.0, 1.0) * np.sqrt(r11 * r44)
    r23 = rng.uniform(-1.0, 1.0) * np.sqrt(r22 * r33)
    return XState(r11=r11, r22=r22, r33=r33, r44=r44, r14=r14, r23=r23)


def random_params(rng, lo=0.0, hi=5.0):
    while True:
        omega, gamma = rng.uniform(lo, hi, size=2)
        if omega > 0 or gamma > 0:
            return ModelParams(omega, gamma)


def random_hermitian(rng, scale=10.0):
    a = rng.uniform(-scale, scale, (4, 4)) + 1j * rng.uniform(-scale, scale, (4, 4))
    return 0.5 * (a + a.conj().T)


def random_density_matrix(rng):
    """Full-rank random state via the Ginibre construction."""
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_local_unitary(rng):
    """Haar-ish U_A x U_B from QR of complex Gaussians."""
    us = []
    for _ in range(2):
        q, r = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
        us.append(q * (np.diag(r) / np.abs(np.diag(r))))
    return np.kron(us[0], us[1])


def oracle_gibbs(p, temperature):
    """expm(-H/T)/Z straight from the Hamiltonian matrix."""
    rho = matrix_exponential(build_hamiltonian(p), scale=-1.0 / temperature)
    return (rho / np.trace(rho).real).real


def bell_state():
    return XState(r11=0.5, r22=0.0, r33=0.0, r44=0.5, r14=0.5, r23=0.0)


def maximally_mixed():
    return XState(r11=0.25, r22=0.25, r33=0.25, r44=0.25, r14=0.0, r23=0.0)

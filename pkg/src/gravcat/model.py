"""Two coupled gravcat qubits: Hamiltonian, exact eigensystem, thermal state.

Conventions
-----------
Basis order |00>, |01>, |10>, |11>; hbar = k_B = 1, so omega, gamma and the
temperature T share one dimensionless energy scale.  The Hamiltonian is

    H = (omega/2) (sz x I + I x sz) - gamma (sx x sx)

      = [[ omega,      0,      0, -gamma ],
         [     0,      0, -gamma,      0 ],
         [     0, -gamma,      0,      0 ],
         [-gamma,      0,      0, -omega ]]

with spectrum {-gamma, +gamma, -s, +s}, s = sqrt(omega^2 + gamma^2).  The
odd-parity eigenvectors are the Bell pair (|01> +- |10>)/sqrt(2); the
even-parity pair mixes |00> and |11> through the angles

    kappa_pm = arctan( gamma / (omega +- s) ),

so tan(2 kappa_plus) = gamma/omega, i.e. cos(2k+) = omega/s and
sin(2k+) = gamma/s.  Since |00> carries the +omega diagonal entry, the
ground level (energy -s) leans on |11>:

    |g> = sin(kappa_plus)|00> + cos(kappa_plus)|11>.

The thermal-state entries below are the exact eigenprojection weights of
this basis and reproduce expm(-H/T)/Z entrywise; the oracle suite enforces
that to 1e-10.  Boltzmann factors are always evaluated with the ground
energy subtracted, so nothing here overflows at any temperature.
"""

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ModelParams",
    "PhysicalGeometry",
    "EigenSystem",
    "XState",
    "build_hamiltonian",
    "eigensystem",
    "partition_function",
    "log_partition_function",
    "gibbs_xstate",
    "ground_state",
    "gamma_from_geometry",
]

TRACE_TOL = 1e-12
POSITIVITY_TOL = 1e-12
PURITY_TOL = 1e-12

# exp(x) overflows double precision just above x = 709.78
_EXP_OVERFLOW = 709.0


@dataclass(frozen=True)
class ModelParams:
    """Excitation energy and gravitational coupling, in common energy units.

    Both must be non-negative and not both zero (a zero Hamiltonian has no
    thermal structure; the maximally mixed state is still reachable as the
    large-T limit of any valid parameter pair).
    """

    omega: float
    gamma: float

    def __post_init__(self):
        if not (math.isfinite(self.omega) and math.isfinite(self.gamma)):
            raise ValueError("omega and gamma must be finite")
        if self.omega < 0 or self.gamma < 0:
            raise ValueError("omega and gamma must be non-negative")
        if self.omega == 0 and self.gamma == 0:
            raise ValueError("omega and gamma must not both be zero")


@dataclass(frozen=True)
class PhysicalGeometry:
    """Double-well geometry fixing the gravitational coupling strength.

    G is the gravitational constant in units consistent with the mass m
    and the separations; d1 is the near inter-well separation and d the
    transverse well spacing, so the far separation is d2 = sqrt(d1^2 + d^2).
    """

    G: float
    m: float
    d1: float
    d: float

    def __post_init__(self):
        for name in ("G", "m", "d1", "d"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be finite and > 0")

    @property
    def d2(self):
        return math.hypot(self.d1, self.d)


@dataclass(frozen=True)
class EigenSystem:
    """Exact spectrum and mixing angles of the two-qubit Hamiltonian.

    lambda1 = -gamma, lambda2 = +gamma, lambda3 = -s, lambda4 = +s with
    s = sqrt(omega^2 + gamma^2); kappa_plus in [0, pi/4] and
    kappa_minus in (-pi/2, 0], with kappa_plus - kappa_minus = pi/2
    whenever gamma > 0.
    """

    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    kappa_plus: float
    kappa_minus: float


@dataclass(frozen=True)
class XState:
    """Two-qubit X-shaped density matrix with real entries.

    r11..r44 are the populations in the |00>, |01>, |10>, |11> order; r14
    and r23 are the outer and inner anti-diagonal coherences.  The thermal
    states of this model are always real X states; general complex states
    live only on the oracle side.
    """

    r11: float
    r22: float
    r33: float
    r44: float
    r14: float
    r23: float

    def __post_init__(self):
        pops = (self.r11, self.r22, self.r33, self.r44)
        if abs(sum(pops) - 1.0) > TRACE_TOL:
            raise ValueError(f"trace must be 1, got {sum(pops)!r}")
        if min(pops) < -POSITIVITY_TOL:
            raise ValueError(f"negative population: {min(pops)!r}")
        if self.r11 * self.r44 < self.r14**2 - POSITIVITY_TOL:
            raise ValueError("outer block not positive: r11*r44 < r14^2")
        if self.r22 * self.r33 < self.r23**2 - POSITIVITY_TOL:
            raise ValueError("inner block not positive: r22*r33 < r23^2")
        if self.purity() > 1.0 + PURITY_TOL:
            raise ValueError("purity exceeds 1")

    def purity(self):
        """Tr(rho^2); equals 1 only for pure states."""
        return (
            self.r11**2 + self.r22**2 + self.r33**2 + self.r44**2
            + 2.0 * self.r14**2 + 2.0 * self.r23**2
        )

    def to_matrix(self):
        """Embed into the full 4x4 array (float64)."""
        m = np.zeros((4, 4))
        m[0, 0], m[1, 1], m[2, 2], m[3, 3] = self.r11, self.r22, self.r33, self.r44
        m[0, 3] = m[3, 0] = self.r14
        m[1, 2] = m[2, 1] = self.r23
        return m


def build_hamiltonian(p):
    """Return the 4x4 Hamiltonian matrix for parameters p."""
    h = np.zeros((4, 4))
    h[0, 0] = p.omega
    h[3, 3] = -p.omega
    h[0, 3] = h[3, 0] = h[1, 2] = h[2, 1] = -p.gamma
    return h


def eigensystem(p):
    """Exact eigenenergies and mixing angles.

    At gamma = 0 the arctan argument of kappa_minus degenerates to 0/0;
    the gamma -> 0+ limit is -pi/2 and is adopted by convention (it keeps
    sin(2 kappa_minus) = 0, consistent with a diagonal thermal state).
    """
    s = math.hypot(p.omega, p.gamma)
    kappa_plus = math.atan2(p.gamma, p.omega + s)
    if p.gamma == 0:
        kappa_minus = -math.pi / 2
    else:
        kappa_minus = math.atan(p.gamma / (p.omega - s))
    return EigenSystem(-p.gamma, p.gamma, -s, s, kappa_plus, kappa_minus)


def _relative_weights(p, temperature):
    """Boltzmann weights relative to the ground level -s.

    Returns (w1, w2, w3, w4, z) for the levels -gamma, +gamma, -s, +s,
    each divided by exp(+beta*s); z is their sum.  All four weights lie in
    (0, 1], so this never overflows.
    """
    if not (math.isfinite(temperature) and temperature > 0):
        raise ValueError(f"temperature must be > 0, got {temperature!r}")
    beta = 1.0 / temperature
    s = math.hypot(p.omega, p.gamma)
    w1 = math.exp(-beta * (s - p.gamma))
    w2 = math.exp(-beta * (s + p.gamma))
    w3 = 1.0
    w4 = math.exp(-2.0 * beta * s)
    return w1, w2, w3, w4, w1 + w2 + w3 + w4


def log_partition_function(p, temperature):
    """log Z, stable at any temperature."""
    w1, w2, _, w4, _ = _relative_weights(p, temperature)
    s = math.hypot(p.omega, p.gamma)
    return s / temperature + math.log1p(w1 + w2 + w4)


def partition_function(p, temperature):
    """Z = 2 cosh(beta*gamma) + 2 cosh(beta*s) = sum_i exp(-beta*lambda_i).

    Always >= 4; returns inf where Z genuinely exceeds the double range
    (log_partition_function stays finite there).
    """
    lz = log_partition_function(p, temperature)
    return math.exp(lz) if lz < _EXP_OVERFLOW else math.inf


def gibbs_xstate(p, temperature):
    """Thermal X state exp(-H/T)/Z in closed form.

    The entries are the eigenprojection weights of the module docstring's
    basis; sin/cos of the mixing angles enter only through the algebraic
    identities cos(2k+) = omega/s, sin(2k+) = gamma/s.
    """
    w1, w2, w3, w4, z = _relative_weights(p, temperature)
    s = math.hypot(p.omega, p.gamma)
    cos2k = p.omega / s
    sin2k = p.gamma / s
    pop_lo = 0.5 * (1.0 - cos2k)  # sin^2(kappa_plus), weight of |00> in the ground state
    pop_hi = 0.5 * (1.0 + cos2k)  # cos^2(kappa_plus)
    r22 = (w1 + w2) / (2.0 * z)
    return XState(
        r11=(pop_lo * w3 + pop_hi * w4) / z,
        r22=r22,
        r33=r22,
        r44=(pop_hi * w3 + pop_lo * w4) / z,
        r14=sin2k * (w3 - w4) / (2.0 * z),
        r23=(w1 - w2) / (2.0 * z),
    )


def ground_state(p):
    """Pure ground-level X state, the T -> 0 limit of gibbs_xstate.

    Valid only for omega > 0: at omega = 0 the ground level is degenerate
    with the -gamma Bell level and the T -> 0 state is their equal mixture,
    not a projector.
    """
    if p.omega <= 0:
        raise ValueError("ground state is degenerate at omega = 0")
    s = math.hypot(p.omega, p.gamma)
    pop_lo = 0.5 * (1.0 - p.omega / s)
    pop_hi = 0.5 * (1.0 + p.omega / s)
    return XState(
        r11=pop_lo, r22=0.0, r33=0.0, r44=pop_hi,
        r14=0.5 * p.gamma / s, r23=0.0,
    )


def gamma_from_geometry(g):
    """Coupling energy G m^2 / 2 * (1/d1 - 1/d2) for a double-well layout."""
    return 0.5 * g.G * g.m**2 * (1.0 / g.d1 - 1.0 / g.d2)

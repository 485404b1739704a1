"""Kinematics and torque balance of a three-output open differential.

The train splits one input into three outputs through paired open
differentials.  Every ring gear turns at the mean of its two side gears;
the input drives three rings at ``omega_u / k``, and crossed side-gear
pairs feed three output rings that multiply by ``j``.  The mean of the
three output speeds is therefore pinned to ``j * omega_u / k`` no matter
how the loads split -- only the distribution about that mean is free.

Angular speeds are rpm, torques N*mm.  Conversion to rad/s^2 happens only
inside the torque balance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

RPM_S_TO_RAD_S2 = math.pi / 30.0  # (rev/min)/s -> rad/s^2


class ConstraintViolation(ValueError):
    """Side-gear speeds break the pair-sum rule."""


class UnreachableDemand(ValueError):
    """Requested output speeds move the fixed mean; no gear state exists."""


@dataclass(frozen=True)
class GearTrainParams:
    """Static configuration of the gear train."""

    k: float = 20.0  # input-to-ring reduction: ring speed = omega_u / k
    j: float = 2.0   # ring-to-output multiplication
    inertias: tuple[float, ...] = (1.0,) * 6  # side-gear inertias I1..I6, mass*mm^2

    def __post_init__(self) -> None:
        if self.k <= 0 or self.j <= 0:
            raise ValueError("gear ratios k and j must be positive")
        if len(self.inertias) != 6:
            raise ValueError("exactly six side-gear inertias required")
        if any(i < 0 for i in self.inertias):
            raise ValueError("inertias must be non-negative")

    def ring_speed(self, omega_u: float) -> float:
        return omega_u / self.k

    def equal_output_speed(self, omega_u: float) -> float:
        """Output speed when all three outputs carry equal load."""
        return self.j * omega_u / self.k


@dataclass(frozen=True)
class DifferentialState:
    """Speeds and torques of every gear at one instant."""

    omega_u: float                          # input speed, rpm
    omega_ring: tuple[float, float, float]  # input-side ring speeds, rpm
    omega_side: tuple[float, ...]           # side gears 1..12, rpm
    omega_out: tuple[float, float, float]   # output speeds, rpm
    tau_u: float                            # input torque, N*mm
    tau_out: tuple[float, float, float]     # output torques, N*mm


@dataclass(frozen=True)
class OutputDemand:
    """Per-output speed ratios relative to the equal-load output speed.

    A reachable demand has mean ratio 1: the train trades speed between
    outputs but cannot move their mean.
    """

    ratios: tuple[float, float, float]

    def __post_init__(self) -> None:
        mean = (self.ratios[0] + self.ratios[1] + self.ratios[2]) / 3.0
        if abs(mean - 1.0) > 1e-9:
            raise UnreachableDemand(f"demand ratios must average 1, got {mean!r}")

    def output_speeds(self, omega_u: float, params: GearTrainParams) -> tuple[float, float, float]:
        base = params.equal_output_speed(omega_u)
        return (self.ratios[0] * base, self.ratios[1] * base, self.ratios[2] * base)


# Rear side gears 7..12 are rigidly coupled to front gears (1, 3, 4, 6, 5, 2).
# The couplings (1,7), (3,8), (5,11) are fixed by construction; (4,9),
# (6,10), (2,12) are the only assignment consistent with the crossed output
# sums (derivation in docs/kinematics.md).
_REAR_COUPLING = (0, 2, 3, 5, 4, 1)

# Constraints on the side-gear deviations x_i = omega_i - omega_u/k:
# rows 0-2 are the pair sums (each zero), rows 3-5 the crossed sums that
# set the three outputs.  Rank 5 with null direction (1,-1,-1,1,1,-1);
# the pseudo-inverse picks the minimum-norm deviation, the unique
# solution orthogonal to that direction.
_CONSTRAINTS = np.array(
    [
        [1, 1, 0, 0, 0, 0],
        [0, 0, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [0, 1, 0, 1, 0, 0],
        [0, 0, 1, 0, 1, 0],
        [1, 0, 0, 0, 0, 1],
    ],
    dtype=float,
)
_MIN_NORM = np.linalg.pinv(_CONSTRAINTS)


def ring_kinematics(omega_u: float, tau_u: float, params: GearTrainParams) -> tuple[float, float]:
    """Speed and torque of each of the three input-side ring gears.

    The input splits evenly: every ring runs at ``omega_u / k`` and
    carries ``k * tau_u / 3``.
    """
    return omega_u / params.k, params.k * tau_u / 3.0


def outputs_from_side_gears(
    omega_side_1_to_6: tuple[float, ...] | list[float],
    omega_u: float,
    params: GearTrainParams,
    tol: float = 1e-9,
) -> tuple[float, float, float]:
    """Forward map: output speeds from the six front side-gear speeds.

    Each output ring averages one crossed pair, giving
    ``2*j*omega_u/k - j*(w_a + w_b)/2`` with pairs (2,4), (3,5), (1,6).

    Raises ConstraintViolation when the pair sums w1+w2, w3+w4, w5+w6 do
    not all equal 2*omega_u/k within ``tol``.
    """
    if len(omega_side_1_to_6) != 6:
        raise ValueError("exactly six side-gear speeds required")
    w1, w2, w3, w4, w5, w6 = omega_side_1_to_6
    pair_sum = 2.0 * omega_u / params.k
    for name, total in (("w1+w2", w1 + w2), ("w3+w4", w3 + w4), ("w5+w6", w5 + w6)):
        if abs(total - pair_sum) > tol:
            raise ConstraintViolation(
                f"pair sum {name}={total!r} must equal 2*omega_u/k={pair_sum!r}"
            )
    j = params.j
    base = 2.0 * j * omega_u / params.k
    return (
        base - j * (w2 + w4) / 2.0,
        base - j * (w3 + w5) / 2.0,
        base - j * (w1 + w6) / 2.0,
    )


def side_gears_from_outputs(
    omega_out: tuple[float, float, float] | list[float],
    omega_u: float,
    params: GearTrainParams,
    tol: float = 1e-9,
) -> tuple[float, ...]:
    """Inverse map: the twelve side-gear speeds realizing three output speeds.

    The constraint system (pair sums plus crossed output sums) is rank 5,
    leaving a one-parameter family; the minimum-norm deviation from the
    uniform speed ``omega_u / k`` is returned.  Equal demands therefore
    reduce to the uniform state.

    Raises UnreachableDemand when mean(omega_out) differs from
    ``j * omega_u / k`` by more than ``tol``.
    """
    o1, o2, o3 = omega_out
    uniform = omega_u / params.k
    target = params.equal_output_speed(omega_u)
    if abs((o1 + o2 + o3) / 3.0 - target) > tol:
        raise UnreachableDemand(
            f"mean output {(o1 + o2 + o3) / 3.0!r} must equal j*omega_u/k={target!r}"
        )
    scale = 2.0 / params.j
    rhs = np.array(
        [0.0, 0.0, 0.0, scale * (target - o1), scale * (target - o2), scale * (target - o3)]
    )
    front = tuple(uniform + dev for dev in (_MIN_NORM @ rhs).tolist())
    return front + tuple(front[i] for i in _REAR_COUPLING)


def output_torques(
    tau_u: float,
    side_accel_7_to_12: tuple[float, ...] | list[float],
    params: GearTrainParams,
) -> tuple[float, float, float]:
    """Output torques from the input torque and rear side-gear accelerations.

    Accelerations are rpm/s for gears 7..12 in order and are converted to
    rad/s^2 internally.  Each output sheds the inertial torque of its two
    rear gears; the inertia indexing across the crossed pairs is
    (I1, w7)+(I3, w8) -> output 1, (I4, w9)+(I6, w10) -> output 2,
    (I2, w12)+(I5, w11) -> output 3.
    """
    if len(side_accel_7_to_12) != 6:
        raise ValueError("exactly six rear side-gear accelerations required")
    a7, a8, a9, a10, a11, a12 = (a * RPM_S_TO_RAD_S2 for a in side_accel_7_to_12)
    inertia = params.inertias
    j = params.j
    base = params.k * tau_u / (3.0 * j)
    return (
        base - (inertia[0] * a7 + inertia[2] * a8) / j,
        base - (inertia[3] * a9 + inertia[5] * a10) / j,
        base - (inertia[1] * a12 + inertia[4] * a11) / j,
    )


def equal_load_state(omega_u: float, tau_u: float, params: GearTrainParams) -> DifferentialState:
    """Steady state with all three outputs under equal load.

    Every side gear runs at the uniform speed ``omega_u / k``, outputs at
    ``j * omega_u / k``, and each output carries ``k * tau_u / (3*j)``.
    """
    uniform = omega_u / params.k
    out = params.equal_output_speed(omega_u)
    return DifferentialState(
        omega_u=omega_u,
        omega_ring=(uniform,) * 3,
        omega_side=(uniform,) * 12,
        omega_out=(out,) * 3,
        tau_u=tau_u,
        tau_out=output_torques(tau_u, (0.0,) * 6, params),
    )


def check_mean_invariant(state: DifferentialState, params: GearTrainParams, tol: float = 1e-9) -> bool:
    """True iff the mean output speed equals ``j * omega_u / k`` within tol."""
    mean = (state.omega_out[0] + state.omega_out[1] + state.omega_out[2]) / 3.0
    return abs(mean - params.equal_output_speed(state.omega_u)) <= tol

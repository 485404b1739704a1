"""Robot body model: sprocket drive, spring-loaded modules, asymmetry limit.

Track speeds are linear (mm/s), obtained from output shaft speeds through
the sprocket circumference.  Springs press the modules against the bore;
the only compression model is the observed one: a straight-pipe preload
plus a fixed extra deflection for modules whose speed ratio departs from
the centerline in bends.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geartrain import GearTrainParams
from .pipes import Bend, NotABend, Segment, Straight

# Two-decimal pi for the sprocket circumference: the 12 rpm equal-load case
# must land exactly on 50.24 mm/s, the reference speed every published
# ratio, speed and timing of this robot derives from.
TRACK_SPEED_PI = 3.14


@dataclass(frozen=True)
class SpringModel:
    """Piecewise spring deflection observed on the module linkages."""

    preload_straight_mm: float = 1.25   # constant deflection in straight pipe
    bend_extra_mm: float = 1.5          # added for off-centerline modules in bends
    max_compression_mm: float = 16.0    # hard stop of the linkage
    bend_trigger: float = 0.05          # |ratio - 1| above which the extra applies

    def __post_init__(self) -> None:
        if not 0.0 <= self.preload_straight_mm:
            raise ValueError("spring preload must be non-negative")
        if self.bend_extra_mm < 0:
            raise ValueError("bend extra deflection must be non-negative")
        if self.preload_straight_mm + self.bend_extra_mm > self.max_compression_mm:
            raise ValueError("preload plus bend extra must not exceed max compression")
        if self.bend_trigger < 0:
            raise ValueError("bend trigger threshold must be non-negative")


@dataclass(frozen=True)
class RobotParams:
    """Physical parameters of the robot body."""

    sprocket_diameter_mm: float = 80.0
    robot_length_mm: float = 200.0
    input_speed_rpm: float = 120.0
    geartrain: GearTrainParams = field(default_factory=GearTrainParams)
    spring: SpringModel = field(default_factory=SpringModel)
    asym_yz_mm: float = 12.0    # vertical travel available for asymmetric tilt
    asym_xz_mm: float = 150.0   # lever arm of the module over that travel
    input_torque: float = 0.0   # N*mm at the input shaft; free operating value

    def __post_init__(self) -> None:
        if self.sprocket_diameter_mm <= 0 or self.robot_length_mm <= 0:
            raise ValueError("sprocket diameter and robot length must be positive")
        if self.asym_xz_mm <= 0:
            raise ValueError("asymmetry lever arm must be positive")
        if self.asym_yz_mm < 0:
            raise ValueError("asymmetry travel must be non-negative")
        if self.input_speed_rpm < 0:
            raise ValueError("input speed must be non-negative")


def sprocket_to_track_speed(omega_out_rpm: float, params: RobotParams) -> float:
    """Linear track speed (mm/s) of an output shaft turning at omega_out_rpm."""
    return TRACK_SPEED_PI * params.sprocket_diameter_mm * omega_out_rpm / 60.0


def robot_speed(track_speeds: tuple[float, float, float] | list[float]) -> float:
    """Centerline speed of the robot: the mean of the three track speeds."""
    return (track_speeds[0] + track_speeds[1] + track_speeds[2]) / 3.0


def max_asym_angle(params: RobotParams) -> float:
    """Largest angle (degrees) one module can tilt by compressing asymmetrically."""
    return math.degrees(math.atan(params.asym_yz_mm / params.asym_xz_mm))


def spring_compression(segment: Segment, module_ratio: float, spring: SpringModel) -> float:
    """Spring deflection of one module given its current speed ratio.

    Straight pipe holds the preload.  In bends, modules pushed off the
    centerline (ratio far from 1) deflect by the fixed bend extra; a
    module riding the centerline stays at preload.  Clamped to
    [0, max_compression].
    """
    value = spring.preload_straight_mm
    if isinstance(segment, Bend) and abs(module_ratio - 1.0) > spring.bend_trigger:
        value += spring.bend_extra_mm
    return min(max(value, 0.0), spring.max_compression_mm)


def asym_feasibility(
    bend: Segment, contact_length_mm: float, params: RobotParams
) -> tuple[float, bool]:
    """Tilt a rigid contact span of one module would need to follow a bend.

    The span subtends ``contact_length / R`` of centerline angle; its
    chord tilts by half that (small-angle).  Returns the required tilt in
    degrees and whether it fits inside the asymmetric-compression limit.
    Advisory only: real tracks conform through spring deflection.
    """
    if not isinstance(bend, Bend):
        raise NotABend("asymmetry check is defined only for bends")
    if contact_length_mm < 0:
        raise ValueError("contact length must be non-negative")
    required = math.degrees(contact_length_mm / (2.0 * bend.radius_mm))
    return required, required <= max_asym_angle(params)

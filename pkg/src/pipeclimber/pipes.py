"""Pipe networks as ordered straight and bend segments.

A bend is described by its centerline curvature radius R and subtended
angle; the pipe bore has radius r.  A track whose contact line sits at
angle mu from the inward bend normal runs at effective radius
``R - r*cos(mu)``, so its speed ratio to the centerline is
``(R - r*cos(mu)) / R``.  The three track modules sit 120 degrees apart,
which makes the mean ratio exactly 1 for every orientation.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import cached_property

MODULE_OFFSETS_DEG = (0.0, 120.0, 240.0)  # modules A, B, C around the bore


class NotABend(TypeError):
    """Operation requires a bend segment."""


class OutOfRange(ValueError):
    """Arc-length coordinate outside the network."""


@dataclass(frozen=True)
class PipeSpec:
    """Bore geometry shared by every segment of a network."""

    inner_radius_mm: float

    def __post_init__(self) -> None:
        if self.inner_radius_mm <= 0:
            raise ValueError("pipe inner radius must be positive")


@dataclass(frozen=True)
class Straight:
    length_mm: float

    def __post_init__(self) -> None:
        if self.length_mm <= 0:
            raise ValueError("straight segment length must be positive")


@dataclass(frozen=True)
class Bend:
    theta_deg: float        # subtended angle of the bend
    radius_mm: float        # centerline curvature radius R
    roll_deg: float = 0.0   # orientation of the bend plane about the pipe axis

    def __post_init__(self) -> None:
        if not 0.0 < self.theta_deg <= 360.0:
            raise ValueError("bend angle must be in (0, 360] degrees")
        if self.radius_mm <= 0:
            raise ValueError("bend curvature radius must be positive")


Segment = Straight | Bend


@dataclass(frozen=True)
class PathPosition:
    segment_index: int
    s_local_mm: float   # along the current segment
    s_global_mm: float  # along the whole network


@dataclass(frozen=True)
class PipeNetwork:
    spec: PipeSpec
    segments: tuple[Segment, ...]

    def __post_init__(self) -> None:
        if not self.segments:
            raise ValueError("network must contain at least one segment")
        object.__setattr__(self, "segments", tuple(self.segments))
        for i, seg in enumerate(self.segments):
            if isinstance(seg, Bend) and seg.radius_mm <= self.spec.inner_radius_mm:
                raise ValueError(
                    f"segment {i}: bend radius {seg.radius_mm} must exceed "
                    f"pipe radius {self.spec.inner_radius_mm}"
                )

    @cached_property
    def segment_starts_mm(self) -> tuple[float, ...]:
        starts = [0.0]
        for seg in self.segments[:-1]:
            starts.append(starts[-1] + arc_length(seg))
        return tuple(starts)

    @cached_property
    def total_arc_length_mm(self) -> float:
        return self.segment_starts_mm[-1] + arc_length(self.segments[-1])


def arc_length(segment: Segment) -> float:
    """Centerline length of a segment: straight length or R * theta."""
    if isinstance(segment, Straight):
        return segment.length_mm
    return segment.radius_mm * math.radians(segment.theta_deg)


def effective_radius(module_index: int, mu_deg: float, bend: Segment, spec: PipeSpec) -> float:
    """Distance from the bend's center of curvature to one module's contact line.

    ``mu_deg`` is the robot roll measured in the bend plane; mu = 0 puts
    module A (index 0) nearest the center of curvature.
    """
    if not isinstance(bend, Bend):
        raise NotABend("effective radius is defined only for bends")
    if module_index not in (0, 1, 2):
        raise ValueError("module index must be 0, 1 or 2")
    angle = math.radians(mu_deg + MODULE_OFFSETS_DEG[module_index])
    return bend.radius_mm - spec.inner_radius_mm * math.cos(angle)


def track_speed_ratios(segment: Segment, mu_deg: float, spec: PipeSpec) -> tuple[float, float, float]:
    """Per-module track speed ratios relative to the centerline speed.

    Straights need no modulation: (1, 1, 1).  In a bend each module runs
    at its effective radius over the centerline radius; the three ratios
    always average exactly 1.
    """
    if isinstance(segment, Straight):
        return (1.0, 1.0, 1.0)
    r_over_R = spec.inner_radius_mm / segment.radius_mm
    return tuple(
        1.0 - r_over_R * math.cos(math.radians(mu_deg + off)) for off in MODULE_OFFSETS_DEG
    )


def locate(network: PipeNetwork, s_global_mm: float) -> PathPosition:
    """Map a network arc-length coordinate to (segment, local offset).

    Points on a joint belong to the downstream segment; the network end
    belongs to the last segment.
    """
    total = network.total_arc_length_mm
    if not 0.0 <= s_global_mm <= total:
        raise OutOfRange(f"s={s_global_mm!r} outside [0, {total!r}]")
    starts = network.segment_starts_mm
    index = min(bisect_right(starts, s_global_mm) - 1, len(starts) - 1)
    return PathPosition(index, s_global_mm - starts[index], s_global_mm)


def effective_mu(global_roll_deg: float, bend: Segment) -> float:
    """Robot roll expressed in a bend's own plane, normalized to [0, 360)."""
    if not isinstance(bend, Bend):
        raise NotABend("effective roll is defined only for bends")
    return (global_roll_deg - bend.roll_deg) % 360.0

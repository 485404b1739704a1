"""Reference network and robot used by the reports and the acceptance suite.

The fixture encodes the standard test network: a 550 mm vertical run, a
90 degree elbow, a 350 mm horizontal run, a 180 degree U-section and a
final 150 mm run, all sharing one bend radius.  Its geometry is pinned by
two measured quantities (derivations in docs/geometry.md):

* the elbow arc length, 657.83 mm, which fixes R = 2 * 657.83 / pi;
* the inner-track speed ratio at mu = 0, 33.69 / 50.24, which fixes
  r = R * (1 - 33.69 / 50.24).
"""

from __future__ import annotations

import math
from importlib import resources
from pathlib import Path

from .pipes import Bend, PipeNetwork, PipeSpec, Straight
from .robot import RobotParams
from .sim import SimConfig

ELBOW_ARC_MM = 657.83
INNER_SPEED_RATIO = 33.69 / 50.24

BEND_RADIUS_MM = ELBOW_ARC_MM * 2.0 / math.pi          # 418.78758485656607
PIPE_RADIUS_MM = BEND_RADIUS_MM * (1.0 - INNER_SPEED_RATIO)  # 137.95649939044924


def reference_network() -> PipeNetwork:
    return PipeNetwork(
        spec=PipeSpec(inner_radius_mm=PIPE_RADIUS_MM),
        segments=(
            Straight(length_mm=550.0),
            Bend(theta_deg=90.0, radius_mm=BEND_RADIUS_MM),
            Straight(length_mm=350.0),
            Bend(theta_deg=180.0, radius_mm=BEND_RADIUS_MM),
            Straight(length_mm=150.0),
        ),
    )


def reference_robot() -> RobotParams:
    return RobotParams()


def reference_sim_config(mu_deg: float = 0.0, dt_s: float = 0.01, record_stride: int = 10) -> SimConfig:
    return SimConfig(
        network=reference_network(),
        robot=reference_robot(),
        initial_roll_deg=mu_deg,
        dt_s=dt_s,
        record_stride=record_stride,
    )


def reference_config_path() -> Path:
    """Path of the shipped reference config file."""
    return Path(str(resources.files("pipeclimber").joinpath("data/reference.cfg")))

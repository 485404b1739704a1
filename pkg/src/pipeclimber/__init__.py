"""Deterministic kinematic simulator for a track-driven in-pipe climbing
robot whose three tracks are driven through a three-output open
differential.

The differential pins the mean output speed to the input; pipe bends fix
the per-track speed ratios geometrically.  Composing the two advances the
robot through arbitrary straight/bend networks with no track slip or
drag, which this package simulates and reports on.
"""

from .config import ParseError, ValidationError, parse_config, serialize_config
from .fixtures import (
    BEND_RADIUS_MM,
    ELBOW_ARC_MM,
    INNER_SPEED_RATIO,
    PIPE_RADIUS_MM,
    reference_config_path,
    reference_network,
    reference_robot,
    reference_sim_config,
)
from .geartrain import (
    ConstraintViolation,
    DifferentialState,
    GearTrainParams,
    OutputDemand,
    UnreachableDemand,
    check_mean_invariant,
    equal_load_state,
    output_torques,
    outputs_from_side_gears,
    ring_kinematics,
    side_gears_from_outputs,
)
from .pipes import (
    Bend,
    NotABend,
    OutOfRange,
    PathPosition,
    PipeNetwork,
    PipeSpec,
    Segment,
    Straight,
    arc_length,
    effective_mu,
    effective_radius,
    locate,
    track_speed_ratios,
)
from .reports import CSV_HEADER, emit_csv, summary_report, table1_report
from .robot import (
    RobotParams,
    SpringModel,
    asym_feasibility,
    max_asym_angle,
    robot_speed,
    spring_compression,
    sprocket_to_track_speed,
)
from .sim import (
    ConfigError,
    SegmentTiming,
    SegmentTimingRow,
    SimConfig,
    TraceRow,
    TraversalSummary,
    TraversalTrace,
    ape,
    run,
    segment_timing,
    slip_drag_metric,
)

__version__ = "0.1.0"

__all__ = [
    "BEND_RADIUS_MM",
    "Bend",
    "CSV_HEADER",
    "ConfigError",
    "ConstraintViolation",
    "DifferentialState",
    "ELBOW_ARC_MM",
    "GearTrainParams",
    "INNER_SPEED_RATIO",
    "NotABend",
    "OutOfRange",
    "OutputDemand",
    "PIPE_RADIUS_MM",
    "ParseError",
    "PathPosition",
    "PipeNetwork",
    "PipeSpec",
    "RobotParams",
    "Segment",
    "SegmentTiming",
    "SegmentTimingRow",
    "SimConfig",
    "SpringModel",
    "Straight",
    "TraceRow",
    "TraversalSummary",
    "TraversalTrace",
    "UnreachableDemand",
    "ValidationError",
    "ape",
    "arc_length",
    "asym_feasibility",
    "check_mean_invariant",
    "effective_mu",
    "effective_radius",
    "emit_csv",
    "equal_load_state",
    "locate",
    "max_asym_angle",
    "output_torques",
    "outputs_from_side_gears",
    "parse_config",
    "reference_config_path",
    "reference_network",
    "reference_robot",
    "reference_sim_config",
    "ring_kinematics",
    "robot_speed",
    "run",
    "segment_timing",
    "serialize_config",
    "side_gears_from_outputs",
    "slip_drag_metric",
    "spring_compression",
    "sprocket_to_track_speed",
    "summary_report",
    "table1_report",
    "track_speed_ratios",
]

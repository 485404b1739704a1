"""Time-stepped traversal of a pipe network.

Each step is closed form: the segment under the robot center fixes the
track speed ratios, the differential realizes them about its fixed mean
speed, and the robot advances by the mean track speed.  The runnable path
spans half a body length after the pipe start to half a body length
before its end, so the path length is the pipe length minus the robot
length.

A run is strictly sequential but touches no global state; independent
runs (orientation sweeps) can execute concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geartrain import output_torques, side_gears_from_outputs
from .pipes import Bend, PipeNetwork, effective_mu, locate, track_speed_ratios
from .robot import RobotParams, robot_speed, spring_compression, sprocket_to_track_speed

Triple = tuple[float, float, float]


class ConfigError(ValueError):
    """Simulation configuration cannot produce a run."""


@dataclass(frozen=True)
class SimConfig:
    network: PipeNetwork
    robot: RobotParams
    initial_roll_deg: float = 0.0
    dt_s: float = 0.01
    record_stride: int = 10  # steps per telemetry row

    def __post_init__(self) -> None:
        if self.dt_s <= 0:
            raise ConfigError("dt must be positive")
        if int(self.record_stride) != self.record_stride or self.record_stride < 1:
            raise ConfigError("record stride must be an integer >= 1")


@dataclass(frozen=True)
class TraceRow:
    t_s: float
    s_mm: float            # arc-length position of the robot center in the network
    segment_index: int
    mu_deg: float          # roll in the current bend's plane; global roll in straights
    v_track_mm_s: Triple
    v_robot_mm_s: float
    dist_track_mm: Triple  # accumulated per-track travel
    compression_mm: Triple
    tau_out: Triple


@dataclass
class TraversalTrace:
    rows: list[TraceRow] = field(default_factory=list)


@dataclass(frozen=True)
class SegmentTiming:
    segment_index: int
    enter_t_s: float
    exit_t_s: float
    path_mm: float  # centerline path covered inside the segment


@dataclass(frozen=True)
class SegmentTimingRow:
    segment_index: int
    enter_t_s: float
    exit_t_s: float
    duration_s: float
    path_mm: float
    mean_speed_mm_s: float


@dataclass(frozen=True)
class TraversalSummary:
    total_time_s: float
    segment_times: tuple[SegmentTiming, ...]
    track_distance_mm: Triple
    compression_min_mm: float
    compression_max_mm: float
    compression_limit_mm: float
    v_robot_mm_s: float            # constant centerline speed of the run
    ape_per_track_pct: Triple      # worst bend-segment deviation from theory
    slip_drag_mm: Triple
    slip_bound_mm: float           # one-step integration slack, v_max * dt


@dataclass(frozen=True)
class _SegmentSpan:
    index: int
    enter: tuple[float, float, Triple]  # t, s, per-track distance at entry
    exit: tuple[float, float, Triple]


def run(config: SimConfig) -> tuple[TraversalTrace, TraversalSummary]:
    """Traverse the configured network and return telemetry plus summary.

    Raises ConfigError when the geometry or drive cannot produce motion;
    every step is closed form, so a started run always terminates.
    """
    net = config.network
    robot = config.robot
    gt = robot.geartrain
    dt = config.dt_s
    stride = int(config.record_stride)
    half_body = robot.robot_length_mm / 2.0
    path_len = net.total_arc_length_mm - robot.robot_length_mm

    trace = TraversalTrace()
    if path_len <= 0.0:
        return trace, _empty_summary(robot)

    omega_u = robot.input_speed_rpm
    out_equal = gt.equal_output_speed(omega_u)
    v_equal = sprocket_to_track_speed(out_equal, robot)
    if v_equal <= 0.0:
        raise ConfigError("input speed must be positive to traverse the network")

    roll = config.initial_roll_deg % 360.0
    t = 0.0
    s = 0.0  # path distance of the robot center past its start point
    dist = [0.0, 0.0, 0.0]
    prev_rear: tuple[float, ...] | None = None
    step = 0
    comp_lo, comp_hi = math.inf, -math.inf
    v_max = 0.0

    current = -1
    enter = (0.0, 0.0, (0.0, 0.0, 0.0))
    spans: list[_SegmentSpan] = []
    last_row_state: tuple | None = None

    while s < path_len:
        pos = locate(net, half_body + s)
        seg = net.segments[pos.segment_index]
        if isinstance(seg, Bend):
            mu = effective_mu(roll, seg)
            g = track_speed_ratios(seg, mu, net.spec)
        else:
            mu = roll
            g = (1.0, 1.0, 1.0)
        outs = (g[0] * out_equal, g[1] * out_equal, g[2] * out_equal)
        side = side_gears_from_outputs(outs, omega_u, gt)
        v = (
            sprocket_to_track_speed(outs[0], robot),
            sprocket_to_track_speed(outs[1], robot),
            sprocket_to_track_speed(outs[2], robot),
        )
        v_r = robot_speed(v)
        rear = side[6:]
        if prev_rear is None:
            accel = (0.0,) * 6
        else:
            accel = tuple((a - b) / dt for a, b in zip(rear, prev_rear))
        taus = output_torques(robot.input_torque, accel, gt)
        comp = (
            spring_compression(seg, g[0], robot.spring),
            spring_compression(seg, g[1], robot.spring),
            spring_compression(seg, g[2], robot.spring),
        )

        if pos.segment_index != current:
            if current >= 0:
                spans.append(_SegmentSpan(current, enter, (t, s, tuple(dist))))
            current = pos.segment_index
            enter = (t, s, tuple(dist))

        comp_lo = min(comp_lo, *comp)
        comp_hi = max(comp_hi, *comp)
        v_max = max(v_max, *v)

        if step % stride == 0:
            trace.rows.append(
                TraceRow(t, half_body + s, current, mu, v, v_r, tuple(dist), comp, taus)
            )

        dist[0] += v[0] * dt
        dist[1] += v[1] * dt
        dist[2] += v[2] * dt
        s += v_r * dt
        step += 1
        t = step * dt
        prev_rear = rear
        last_row_state = (current, mu, v, v_r, comp, taus)

    spans.append(_SegmentSpan(current, enter, (t, s, tuple(dist))))
    index, mu, v, v_r, comp, taus = last_row_state
    trace.rows.append(TraceRow(t, half_body + s, index, mu, v, v_r, tuple(dist), comp, taus))

    summary = TraversalSummary(
        total_time_s=t,
        segment_times=tuple(
            SegmentTiming(sp.index, sp.enter[0], sp.exit[0], sp.exit[1] - sp.enter[1])
            for sp in spans
        ),
        track_distance_mm=tuple(dist),
        compression_min_mm=comp_lo,
        compression_max_mm=comp_hi,
        compression_limit_mm=robot.spring.max_compression_mm,
        v_robot_mm_s=v_equal,
        ape_per_track_pct=_bend_apes(spans, net, roll, v_equal),
        slip_drag_mm=slip_drag_metric(trace, net),
        slip_bound_mm=v_max * dt,
    )
    return trace, summary


def _empty_summary(robot: RobotParams) -> TraversalSummary:
    v_equal = sprocket_to_track_speed(
        robot.geartrain.equal_output_speed(robot.input_speed_rpm), robot
    )
    return TraversalSummary(
        total_time_s=0.0,
        segment_times=(),
        track_distance_mm=(0.0, 0.0, 0.0),
        compression_min_mm=0.0,
        compression_max_mm=0.0,
        compression_limit_mm=robot.spring.max_compression_mm,
        v_robot_mm_s=v_equal,
        ape_per_track_pct=(0.0, 0.0, 0.0),
        slip_drag_mm=(0.0, 0.0, 0.0),
        slip_bound_mm=0.0,
    )


def _bend_apes(
    spans: list[_SegmentSpan], net: PipeNetwork, roll: float, v_equal: float
) -> Triple:
    """Worst per-track deviation of mean bend speed from theory, percent."""
    worst = [0.0, 0.0, 0.0]
    for sp in spans:
        seg = net.segments[sp.index]
        if not isinstance(seg, Bend):
            continue
        duration = sp.exit[0] - sp.enter[0]
        if duration <= 0:
            continue
        g = track_speed_ratios(seg, effective_mu(roll, seg), net.spec)
        for i in range(3):
            sim_v = (sp.exit[2][i] - sp.enter[2][i]) / duration
            err = ape(sim_v, g[i] * v_equal)
            if abs(err) > abs(worst[i]):
                worst[i] = err
    return (worst[0], worst[1], worst[2])


def slip_drag_metric(trace: TraversalTrace, network: PipeNetwork) -> Triple:
    """Per-track worst mismatch between accumulated travel and geometry.

    Within each segment the required travel is that segment's speed ratio
    times the centerline arc advanced; the metric is the max over
    segments of |actual - required|.  A clean trace stays within one step
    of integration slack (v_max * dt); genuine slip or drag accumulates
    with time and stands out.
    """
    worst = [0.0, 0.0, 0.0]
    for first, last in _segment_row_spans(trace.rows):
        seg = network.segments[first.segment_index]
        if isinstance(seg, Bend):
            g = track_speed_ratios(seg, first.mu_deg, network.spec)
        else:
            g = (1.0, 1.0, 1.0)
        ds = last.s_mm - first.s_mm
        for i in range(3):
            err = abs((last.dist_track_mm[i] - first.dist_track_mm[i]) - g[i] * ds)
            worst[i] = max(worst[i], err)
    return (worst[0], worst[1], worst[2])


def _segment_row_spans(rows: list[TraceRow]):
    """Yield (first, last) row of each contiguous same-segment run."""
    if not rows:
        return
    first = rows[0]
    prev = rows[0]
    for row in rows[1:]:
        if row.segment_index != prev.segment_index:
            yield first, prev
            first = row
        prev = row
    yield first, prev


def ape(sim_value: float, theory_value: float) -> float:
    """Percent deviation of a simulated value from its theoretical one."""
    if theory_value == 0:
        raise ZeroDivisionError("theoretical value is zero")
    return (sim_value - theory_value) / theory_value * 100.0


def segment_timing(summary: TraversalSummary) -> list[SegmentTimingRow]:
    """Per-segment enter/exit report rows with mean centerline speed."""
    rows = []
    for st in summary.segment_times:
        duration = st.exit_t_s - st.enter_t_s
        mean = st.path_mm / duration if duration > 0 else 0.0
        rows.append(
            SegmentTimingRow(st.segment_index, st.enter_t_s, st.exit_t_s, duration, st.path_mm, mean)
        )
    return rows

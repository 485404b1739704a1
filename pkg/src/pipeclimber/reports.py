"""Report rendering: orientation table, telemetry CSV, run summary.

Text formats are versioned in docs/formats.md; the CSV header is part of
the external contract and must not change.
"""

from __future__ import annotations

from pathlib import Path

from .pipes import Bend, PipeNetwork, track_speed_ratios
from .robot import RobotParams, sprocket_to_track_speed
from .sim import TraversalSummary, TraversalTrace, segment_timing

CSV_HEADER = (
    "t_s,s_mm,segment,mu_deg,vA_mm_s,vB_mm_s,vC_mm_s,vR_mm_s,"
    "dA_mm,dB_mm,dC_mm,cA_mm,cB_mm,cC_mm,tau1,tau2,tau3"
)


def table1_report(network: PipeNetwork, robot: RobotParams, mu_list: list[float]) -> str:
    """Track speed ratios and speeds in this network's bends, per orientation.

    Uses the network's first bend (the whole reference network shares one
    bend radius).  Ratios are printed to 3 decimals, speeds to 2.
    """
    bend = next((seg for seg in network.segments if isinstance(seg, Bend)), None)
    if bend is None:
        raise ValueError("network has no bend segment to tabulate")
    spec = network.spec
    v_base = sprocket_to_track_speed(
        robot.geartrain.equal_output_speed(robot.input_speed_rpm), robot
    )
    lines = [
        "track speed table (report format v1)",
        f"bend R={bend.radius_mm:.3f} mm, pipe r={spec.inner_radius_mm:.3f} mm, "
        f"centerline speed vR={v_base:.2f} mm/s",
        f"{'mu_deg':>7} {'gA':>7} {'gB':>7} {'gC':>7} "
        f"{'vA_mm_s':>9} {'vB_mm_s':>9} {'vC_mm_s':>9}",
    ]
    for mu in mu_list:
        mu = mu % 360.0
        g = track_speed_ratios(bend, mu, spec)
        v = tuple(gi * v_base for gi in g)
        lines.append(
            f"{mu:>7g} {g[0]:>7.3f} {g[1]:>7.3f} {g[2]:>7.3f} "
            f"{v[0]:>9.2f} {v[1]:>9.2f} {v[2]:>9.2f}"
        )
    return "\n".join(lines)


def emit_csv(trace: TraversalTrace, destination: str | Path) -> int:
    """Write trace rows to CSV at ``destination``; returns rows written.

    Fixed 6-decimal notation with a dot separator, rows in time order;
    identical traces produce byte-identical files.
    """
    dest = Path(destination)
    with open(dest, "w", encoding="utf-8", newline="") as handle:
        handle.write(CSV_HEADER + "\n")
        count = 0
        for row in trace.rows:
            fields = [
                f"{row.t_s:.6f}",
                f"{row.s_mm:.6f}",
                str(row.segment_index),
                f"{row.mu_deg:.6f}",
            ]
            for group in (row.v_track_mm_s, (row.v_robot_mm_s,), row.dist_track_mm,
                          row.compression_mm, row.tau_out):
                fields.extend(f"{value:.6f}" for value in group)
            handle.write(",".join(fields) + "\n")
            count += 1
    return count


def summary_report(summary: TraversalSummary, ape_bound_pct: float = 5.0) -> str:
    """Human-readable run summary (report format v1).

    Any value that breaks a model invariant or exceeds the given bound is
    flagged with ``[!]`` on its line; clean runs print no flags.
    """
    lines = ["traversal summary (report format v1)"]
    lines.append(f"total time        : {summary.total_time_s:.2f} s")
    lines.append(f"centerline speed  : {summary.v_robot_mm_s:.2f} mm/s")

    dist = summary.track_distance_mm
    flag = ""
    if summary.total_time_s > 0:
        mean_speed = (dist[0] + dist[1] + dist[2]) / 3.0 / summary.total_time_s
        if abs(mean_speed - summary.v_robot_mm_s) > 1e-6 * max(1.0, summary.v_robot_mm_s):
            flag = "  [!] mean track speed differs from centerline speed"
    lines.append(
        f"track distance mm : A={dist[0]:.2f} B={dist[1]:.2f} C={dist[2]:.2f}{flag}"
    )

    lines.append("segment timings:")
    lines.append(
        f"  {'idx':>3} {'enter_s':>9} {'exit_s':>9} {'duration_s':>11} "
        f"{'path_mm':>9} {'mean_mm_s':>10}"
    )
    for row in segment_timing(summary):
        lines.append(
            f"  {row.segment_index:>3} {row.enter_t_s:>9.2f} {row.exit_t_s:>9.2f} "
            f"{row.duration_s:>11.2f} {row.path_mm:>9.2f} {row.mean_speed_mm_s:>10.2f}"
        )

    comp_flag = ""
    if summary.compression_max_mm > summary.compression_limit_mm or summary.compression_min_mm < 0:
        comp_flag = f"  [!] outside [0, {summary.compression_limit_mm:g}]"
    lines.append(
        f"compression mm    : min={summary.compression_min_mm:.2f} "
        f"max={summary.compression_max_mm:.2f} "
        f"(limit {summary.compression_limit_mm:g}){comp_flag}"
    )

    slip = summary.slip_drag_mm
    slip_flag = ""
    if summary.slip_bound_mm > 0 and max(slip) > summary.slip_bound_mm:
        slip_flag = f"  [!] exceeds one-step slack {summary.slip_bound_mm:.3f} mm"
    lines.append(
        f"slip/drag mm      : A={slip[0]:.4f} B={slip[1]:.4f} C={slip[2]:.4f}{slip_flag}"
    )

    apes = summary.ape_per_track_pct
    if max(abs(a) for a in apes) > ape_bound_pct:
        ape_flag = f"  [!] above {ape_bound_pct:g}% bound"
    elif apes == (0.0, 0.0, 0.0):
        ape_flag = "  exact (0%)"
    else:
        ape_flag = ""
    lines.append(
        f"bend APE %        : A={apes[0]:+.3f} B={apes[1]:+.3f} C={apes[2]:+.3f}{ape_flag}"
    )
    return "\n".join(lines)

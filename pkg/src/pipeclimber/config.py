"""Line-oriented run configuration.

Plain ``directive key=value ...`` lines, one segment per line in network
order; ``#`` starts a comment.  The full grammar with defaults lives in
docs/formats.md.  Example::

    pipe r_mm=138.0
    robot Ds_mm=80 LR_mm=200 input_rpm=120 k=20 j=2
    segment straight len_mm=550
    segment bend theta_deg=90 R_mm=418.85 roll_deg=0
"""

from __future__ import annotations

from .geartrain import GearTrainParams
from .pipes import Bend, PipeNetwork, PipeSpec, Segment, Straight
from .robot import RobotParams, SpringModel
from .sim import ConfigError, SimConfig


class ParseError(ValueError):
    """Malformed config text; message carries the line number."""


class ValidationError(ValueError):
    """Well-formed config text that violates a model invariant."""


_ROBOT_KEYS = ("Ds_mm", "LR_mm", "input_rpm", "k", "j", "tau_u", "asym_yz_mm", "asym_xz_mm", "inertias")
_SPRING_KEYS = ("preload_mm", "bend_extra_mm", "max_mm", "trigger")
_SIM_KEYS = ("dt_s", "stride", "mu_deg")


def parse_config(text: str) -> SimConfig:
    """Parse config text into a fully validated SimConfig.

    Raises ParseError (with line number) for malformed text or unknown
    keys, ValidationError for values that break a model invariant.
    """
    pipe: dict[str, float] | None = None
    robot: dict[str, object] | None = None
    spring: dict[str, float] | None = None
    sim: dict[str, float] | None = None
    segments: list[tuple[int, str, dict[str, float]]] = []

    seen_any = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        seen_any = True
        tokens = line.split()
        directive = tokens[0]
        if directive == "segment":
            if len(tokens) < 2 or tokens[1] not in ("straight", "bend"):
                raise ParseError(f"line {lineno}: segment kind must be 'straight' or 'bend'")
            kind = tokens[1]
            allowed = ("len_mm",) if kind == "straight" else ("theta_deg", "R_mm", "roll_deg")
            segments.append((lineno, kind, _parse_pairs(tokens[2:], allowed, lineno)))
        elif directive == "pipe":
            if pipe is not None:
                raise ParseError(f"line {lineno}: duplicate 'pipe' line")
            pipe = _parse_pairs(tokens[1:], ("r_mm",), lineno)
        elif directive == "robot":
            if robot is not None:
                raise ParseError(f"line {lineno}: duplicate 'robot' line")
            robot = _parse_pairs(tokens[1:], _ROBOT_KEYS, lineno)
        elif directive == "spring":
            if spring is not None:
                raise ParseError(f"line {lineno}: duplicate 'spring' line")
            spring = _parse_pairs(tokens[1:], _SPRING_KEYS, lineno)
        elif directive == "sim":
            if sim is not None:
                raise ParseError(f"line {lineno}: duplicate 'sim' line")
            sim = _parse_pairs(tokens[1:], _SIM_KEYS, lineno)
        else:
            raise ParseError(f"line {lineno}: unknown directive {directive!r}")

    if not seen_any:
        raise ParseError("empty config: no directives found")
    if pipe is None or "r_mm" not in pipe:
        raise ValidationError("config must declare the pipe bore: 'pipe r_mm=...'")
    if not segments:
        raise ValidationError("config must declare at least one segment")

    try:
        return _build(pipe, robot or {}, spring or {}, sim or {}, segments)
    except (ValueError, ConfigError) as exc:
        if isinstance(exc, (ParseError, ValidationError)):
            raise
        raise ValidationError(str(exc)) from exc


def _parse_pairs(tokens: list[str], allowed: tuple[str, ...], lineno: int) -> dict:
    pairs: dict[str, object] = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise ParseError(f"line {lineno}: expected key=value, got {token!r}")
        if key not in allowed:
            raise ParseError(f"line {lineno}: unknown key {key!r} (allowed: {', '.join(allowed)})")
        if key in pairs:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        try:
            if key == "inertias":
                pairs[key] = tuple(float(part) for part in value.split(","))
            else:
                pairs[key] = float(value)
        except ValueError:
            raise ParseError(f"line {lineno}: {key!r} needs a numeric value, got {value!r}") from None
    return pairs


def _build(pipe, robot, spring, sim, segment_lines) -> SimConfig:
    spec = PipeSpec(inner_radius_mm=pipe["r_mm"])
    segments: list[Segment] = []
    for lineno, kind, pairs in segment_lines:
        if kind == "straight":
            if "len_mm" not in pairs:
                raise ParseError(f"line {lineno}: straight segment needs len_mm")
            segments.append(Straight(length_mm=pairs["len_mm"]))
        else:
            if "theta_deg" not in pairs or "R_mm" not in pairs:
                raise ParseError(f"line {lineno}: bend segment needs theta_deg and R_mm")
            segments.append(
                Bend(
                    theta_deg=pairs["theta_deg"],
                    radius_mm=pairs["R_mm"],
                    roll_deg=pairs.get("roll_deg", 0.0),
                )
            )
    network = PipeNetwork(spec=spec, segments=tuple(segments))

    geartrain_kwargs = {}
    if "k" in robot:
        geartrain_kwargs["k"] = robot["k"]
    if "j" in robot:
        geartrain_kwargs["j"] = robot["j"]
    if "inertias" in robot:
        geartrain_kwargs["inertias"] = robot["inertias"]
    spring_kwargs = {}
    if "preload_mm" in spring:
        spring_kwargs["preload_straight_mm"] = spring["preload_mm"]
    if "bend_extra_mm" in spring:
        spring_kwargs["bend_extra_mm"] = spring["bend_extra_mm"]
    if "max_mm" in spring:
        spring_kwargs["max_compression_mm"] = spring["max_mm"]
    if "trigger" in spring:
        spring_kwargs["bend_trigger"] = spring["trigger"]
    robot_kwargs = {
        "geartrain": GearTrainParams(**geartrain_kwargs),
        "spring": SpringModel(**spring_kwargs),
    }
    if "Ds_mm" in robot:
        robot_kwargs["sprocket_diameter_mm"] = robot["Ds_mm"]
    if "LR_mm" in robot:
        robot_kwargs["robot_length_mm"] = robot["LR_mm"]
    if "input_rpm" in robot:
        robot_kwargs["input_speed_rpm"] = robot["input_rpm"]
    if "tau_u" in robot:
        robot_kwargs["input_torque"] = robot["tau_u"]
    if "asym_yz_mm" in robot:
        robot_kwargs["asym_yz_mm"] = robot["asym_yz_mm"]
    if "asym_xz_mm" in robot:
        robot_kwargs["asym_xz_mm"] = robot["asym_xz_mm"]

    sim_kwargs = {}
    if "dt_s" in sim:
        sim_kwargs["dt_s"] = sim["dt_s"]
    if "stride" in sim:
        stride = sim["stride"]
        if int(stride) != stride:
            raise ValidationError("sim stride must be an integer")
        sim_kwargs["record_stride"] = int(stride)
    if "mu_deg" in sim:
        sim_kwargs["initial_roll_deg"] = sim["mu_deg"]

    return SimConfig(network=network, robot=RobotParams(**robot_kwargs), **sim_kwargs)


def serialize_config(config: SimConfig) -> str:
    """Render a SimConfig back to canonical config text.

    ``parse_config(serialize_config(c)) == c``: floats are written with
    repr so they round-trip exactly.
    """
    robot = config.robot
    gt = robot.geartrain
    spring = robot.spring
    lines = [
        f"pipe r_mm={config.network.spec.inner_radius_mm!r}",
        "robot "
        f"Ds_mm={robot.sprocket_diameter_mm!r} LR_mm={robot.robot_length_mm!r} "
        f"input_rpm={robot.input_speed_rpm!r} k={gt.k!r} j={gt.j!r} "
        f"tau_u={robot.input_torque!r} asym_yz_mm={robot.asym_yz_mm!r} "
        f"asym_xz_mm={robot.asym_xz_mm!r} "
        f"inertias={','.join(repr(i) for i in gt.inertias)}",
        "spring "
        f"preload_mm={spring.preload_straight_mm!r} bend_extra_mm={spring.bend_extra_mm!r} "
        f"max_mm={spring.max_compression_mm!r} trigger={spring.bend_trigger!r}",
        f"sim dt_s={config.dt_s!r} stride={config.record_stride} mu_deg={config.initial_roll_deg!r}",
    ]
    for seg in config.network.segments:
        if isinstance(seg, Straight):
            lines.append(f"segment straight len_mm={seg.length_mm!r}")
        else:
            lines.append(
                f"segment bend theta_deg={seg.theta_deg!r} R_mm={seg.radius_mm!r} "
                f"roll_deg={seg.roll_deg!r}"
            )
    return "\n".join(lines) + "\n"

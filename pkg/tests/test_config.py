"""Config text parsing, validation and round-trip serialization."""

from __future__ import annotations

import pytest

from pipeclimber.config import ParseError, ValidationError, parse_config, serialize_config
from pipeclimber.fixtures import reference_config_path, reference_sim_config

MINIMAL = """
pipe r_mm=138.0
segment straight len_mm=550
"""


class TestParse:
    def test_reference_fixture_file(self):
        config = parse_config(reference_config_path().read_text(encoding="utf-8"))
        assert config.network.total_arc_length_mm == pytest.approx(3023.49, abs=1e-6)
        assert len(config.network.segments) == 5
        assert config.robot.sprocket_diameter_mm == 80.0
        assert config.robot.robot_length_mm == 200.0
        assert config.robot.input_speed_rpm == 120.0
        assert config.robot.geartrain.k == 20.0
        assert config.robot.geartrain.j == 2.0
        assert config.dt_s == 0.01
        assert config.record_stride == 10

    def test_fixture_file_matches_programmatic_fixture(self):
        parsed = parse_config(reference_config_path().read_text(encoding="utf-8"))
        assert parsed == reference_sim_config(0.0)

    def test_minimal_config_uses_defaults(self):
        config = parse_config(MINIMAL)
        assert config.robot.input_speed_rpm == 120.0
        assert config.initial_roll_deg == 0.0
        assert config.robot.spring.preload_straight_mm == 1.25

    def test_empty_file(self):
        with pytest.raises(ParseError):
            parse_config("")
        with pytest.raises(ParseError):
            parse_config("\n# only a comment\n")

    def test_unknown_directive_reports_line(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_config("pipe r_mm=138\nnonsense a=1\nsegment straight len_mm=10\n")

    def test_unknown_key_reports_line(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_config("pipe radius=138\nsegment straight len_mm=10\n")

    def test_non_numeric_value(self):
        with pytest.raises(ParseError):
            parse_config("pipe r_mm=wide\nsegment straight len_mm=10\n")

    def test_duplicate_pipe_line(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_config("pipe r_mm=138\npipe r_mm=139\nsegment straight len_mm=10\n")

    def test_bend_tighter_than_pipe_is_validation_error(self):
        text = "pipe r_mm=138\nsegment bend theta_deg=90 R_mm=100\n"
        with pytest.raises(ValidationError):
            parse_config(text)

    def test_missing_pipe_is_validation_error(self):
        with pytest.raises(ValidationError):
            parse_config("segment straight len_mm=10\n")

    def test_missing_segments_is_validation_error(self):
        with pytest.raises(ValidationError):
            parse_config("pipe r_mm=138\n")

    def test_bad_dt_is_validation_error(self):
        with pytest.raises(ValidationError):
            parse_config(MINIMAL + "sim dt_s=0\n")

    def test_fractional_stride_is_validation_error(self):
        with pytest.raises(ValidationError):
            parse_config(MINIMAL + "sim stride=2.5\n")

    def test_segment_missing_required_key(self):
        with pytest.raises(ParseError):
            parse_config("pipe r_mm=138\nsegment bend theta_deg=90\n")
        with pytest.raises(ParseError):
            parse_config("pipe r_mm=138\nsegment straight\n")

    def test_inertias_list(self):
        config = parse_config(MINIMAL + "robot inertias=1,2,3,4,5,6\n")
        assert config.robot.geartrain.inertias == (1.0, 2.0, 3.0, 4.0, 5.0, 6.0)


class TestRoundTrip:
    def test_reference_round_trips(self):
        config = reference_sim_config(30.0, dt_s=0.02, record_stride=5)
        assert parse_config(serialize_config(config)) == config

    def test_rolled_bend_round_trips(self):
        text = (
            "pipe r_mm=100\n"
            "robot Ds_mm=75 LR_mm=180 input_rpm=90 k=15 j=3 tau_u=2.5\n"
            "spring preload_mm=1 bend_extra_mm=2 max_mm=12 trigger=0.1\n"
            "sim dt_s=0.02 stride=4 mu_deg=45\n"
            "segment straight len_mm=300\n"
            "segment bend theta_deg=45 R_mm=500 roll_deg=90\n"
        )
        config = parse_config(text)
        assert parse_config(serialize_config(config)) == config
        assert config.network.segments[1].roll_deg == 90.0
        assert config.robot.input_torque == 2.5

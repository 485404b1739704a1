"""Pipe geometry: arc lengths, effective radii, speed ratios, path lookup."""

from __future__ import annotations

import math
import random

import pytest

from pipeclimber.fixtures import BEND_RADIUS_MM, PIPE_RADIUS_MM, reference_network
from pipeclimber.pipes import (
    Bend,
    NotABend,
    OutOfRange,
    PipeNetwork,
    PipeSpec,
    Straight,
    arc_length,
    effective_mu,
    effective_radius,
    locate,
    track_speed_ratios,
)

NET = reference_network()
SPEC = NET.spec
ELBOW = NET.segments[1]

# rounded published cells: ratio triples and the distinct speed values
TABLE_RATIOS = {
    0.0: (0.670, 1.165, 1.165),
    30.0: (0.715, 1.285, 1.000),
    60.0: (0.835, 1.329, 0.835),
}


class TestArcLength:
    def test_rounded_elbow_radius_reproduces_arc(self):
        assert arc_length(Bend(90.0, 418.77)) == pytest.approx(657.83, rel=5e-4)

    def test_straight(self):
        assert arc_length(Straight(550.0)) == 550.0

    def test_linear_in_angle(self):
        assert arc_length(Bend(180.0, 300.0)) == pytest.approx(
            2.0 * arc_length(Bend(90.0, 300.0)), rel=1e-12
        )

    def test_network_additivity(self):
        total = sum(arc_length(seg) for seg in NET.segments)
        assert NET.total_arc_length_mm == pytest.approx(total, rel=1e-12)
        assert NET.total_arc_length_mm == pytest.approx(3023.49, abs=1e-9)


class TestEffectiveRadius:
    def test_inner_module_at_zero_roll(self):
        assert effective_radius(0, 0.0, ELBOW, SPEC) == pytest.approx(
            BEND_RADIUS_MM - PIPE_RADIUS_MM, abs=1e-9
        )

    def test_outer_modules_at_zero_roll(self):
        expected = BEND_RADIUS_MM + PIPE_RADIUS_MM / 2.0
        assert effective_radius(1, 0.0, ELBOW, SPEC) == pytest.approx(expected, abs=1e-9)
        assert effective_radius(2, 0.0, ELBOW, SPEC) == pytest.approx(expected, abs=1e-9)

    def test_center_module_at_30(self):
        # module C sits at 30 + 240 = 270 deg: on the bend axis, radius R
        assert effective_radius(2, 30.0, ELBOW, SPEC) == pytest.approx(BEND_RADIUS_MM, abs=1e-9)

    def test_straight_raises(self):
        with pytest.raises(NotABend):
            effective_radius(0, 0.0, Straight(100.0), SPEC)

    def test_bad_module_index(self):
        with pytest.raises(ValueError):
            effective_radius(3, 0.0, ELBOW, SPEC)

    @pytest.mark.parametrize("seed", range(10))
    def test_bounded_by_radius_band(self, seed):
        rng = random.Random(seed)
        for _ in range(50):
            mu = rng.uniform(0.0, 360.0)
            for module in range(3):
                radius = effective_radius(module, mu, ELBOW, SPEC)
                assert BEND_RADIUS_MM - PIPE_RADIUS_MM - 1e-9 <= radius
                assert radius <= BEND_RADIUS_MM + PIPE_RADIUS_MM + 1e-9


class TestTrackSpeedRatios:
    def test_straight_is_unity(self):
        assert track_speed_ratios(Straight(100.0), 123.4, SPEC) == (1.0, 1.0, 1.0)

    @pytest.mark.parametrize("mu", sorted(TABLE_RATIOS))
    def test_published_cells(self, mu):
        ratios = track_speed_ratios(ELBOW, mu, SPEC)
        for got, want in zip(ratios, TABLE_RATIOS[mu]):
            assert got == pytest.approx(want, abs=0.002)

    @pytest.mark.parametrize("seed", range(10))
    def test_mean_is_always_one(self, seed):
        rng = random.Random(seed)
        for _ in range(100):
            ratios = track_speed_ratios(ELBOW, rng.uniform(-720.0, 720.0), SPEC)
            assert sum(ratios) / 3.0 == pytest.approx(1.0, abs=1e-12)

    def test_cyclic_shift_of_roll_permutes_modules(self):
        rng = random.Random(3)
        for _ in range(20):
            mu = rng.uniform(0.0, 360.0)
            base = track_speed_ratios(ELBOW, mu, SPEC)
            shifted = track_speed_ratios(ELBOW, mu + 120.0, SPEC)
            assert shifted == pytest.approx((base[1], base[2], base[0]), abs=1e-12)

    def test_matches_effective_radius_over_centerline(self):
        mu = 47.0
        ratios = track_speed_ratios(ELBOW, mu, SPEC)
        for module in range(3):
            expected = effective_radius(module, mu, ELBOW, SPEC) / ELBOW.radius_mm
            assert ratios[module] == pytest.approx(expected, rel=1e-12)


class TestLocate:
    def test_network_start(self):
        pos = locate(NET, 0.0)
        assert (pos.segment_index, pos.s_local_mm) == (0, 0.0)

    def test_joint_belongs_to_downstream_segment(self):
        pos = locate(NET, 550.0)
        assert pos.segment_index == 1
        assert pos.s_local_mm == pytest.approx(0.0, abs=1e-9)

    def test_network_end_belongs_to_last_segment(self):
        pos = locate(NET, NET.total_arc_length_mm)
        assert pos.segment_index == len(NET.segments) - 1
        assert pos.s_local_mm == pytest.approx(arc_length(NET.segments[-1]), abs=1e-9)

    def test_out_of_range(self):
        with pytest.raises(OutOfRange):
            locate(NET, -1.0)
        with pytest.raises(OutOfRange):
            locate(NET, NET.total_arc_length_mm + 1.0)

    def test_prefix_sum_consistency(self):
        rng = random.Random(11)
        for _ in range(100):
            s = rng.uniform(0.0, NET.total_arc_length_mm)
            pos = locate(NET, s)
            start = NET.segment_starts_mm[pos.segment_index]
            assert pos.s_global_mm == s
            assert pos.s_local_mm == pytest.approx(s - start, abs=1e-9)
            assert 0.0 <= pos.s_local_mm <= arc_length(NET.segments[pos.segment_index]) + 1e-9


class TestEffectiveMu:
    def test_aligned(self):
        assert effective_mu(0.0, ELBOW) == 0.0

    def test_inserted_roll_passes_through_planar_bend(self):
        assert effective_mu(30.0, ELBOW) == 30.0

    def test_rolled_bend_plane(self):
        assert effective_mu(0.0, Bend(90.0, 400.0, roll_deg=90.0)) == 270.0

    def test_straight_raises(self):
        with pytest.raises(NotABend):
            effective_mu(0.0, Straight(10.0))


class TestValidation:
    def test_bend_radius_must_exceed_pipe_radius(self):
        with pytest.raises(ValueError):
            PipeNetwork(PipeSpec(100.0), (Bend(90.0, 99.0),))

    def test_empty_network(self):
        with pytest.raises(ValueError):
            PipeNetwork(PipeSpec(100.0), ())

    def test_segment_invariants(self):
        with pytest.raises(ValueError):
            Straight(0.0)
        with pytest.raises(ValueError):
            Bend(0.0, 300.0)
        with pytest.raises(ValueError):
            Bend(400.0, 300.0)
        with pytest.raises(ValueError):
            PipeSpec(0.0)

    def test_fitted_pipe_radius_value(self):
        assert PIPE_RADIUS_MM == pytest.approx(138.0, abs=0.1)
        assert BEND_RADIUS_MM == pytest.approx(657.83 * 2.0 / math.pi, abs=1e-12)

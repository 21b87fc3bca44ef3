"""Smoke tests for the python bindings and the installed CLI.

Values cross-checked against the native unit suite; tolerances cover double
rounding only.
"""

import json
import math
import os
import subprocess
import sys

import pytest

import fsolink as fl


def reference_channel():
    beam = fl.BeamParams(waist_radius_m=1.25e-2, wavelength_m=1.55e-6)
    return fl.aperture_params(beam, 4.085e6, 0.2)


def test_channel_constants():
    ch = reference_channel()
    assert ch.peak_gain == pytest.approx(3.0772411968019612e-6, rel=1e-12)
    assert ch.equiv_beam_radius_m == pytest.approx(161.23682012783603, rel=1e-12)
    model = fl.make_pointing_model(ch, 8e-6, 0.0)
    assert model.width_jitter_ratio**2 == pytest.approx(6.0856134344854726, rel=1e-12)


def test_gain_cdf_series():
    model = fl.make_pointing_model(reference_channel(), 8e-6, 100.0)
    cdf = fl.gain_cdf_series(model, 0.5 * model.peak_gain)
    assert cdf == pytest.approx(0.62797552987075426, rel=1e-12)
    assert fl.gain_cdf_series(model, -1.0) == 0.0
    assert fl.gain_cdf_series(model, model.peak_gain) == 1.0


def test_outage_matches_cdf_at_threshold():
    model = fl.make_pointing_model(reference_channel(), 8e-6, 30.0)
    t = fl.TransceiverParams()
    p_w = fl.dbm_to_watts(28.0)
    h_th = fl.threshold_gain(p_w, t)
    assert fl.outage_probability(model, p_w, t) == fl.gain_cdf_series(model, h_th)


def test_monte_carlo_reproducible():
    model = fl.make_pointing_model(reference_channel(), 8e-6, 50.0)
    t = fl.TransceiverParams()
    p_w = fl.dbm_to_watts(20.0)
    a = fl.estimate_outage(model, p_w, t, seed=11, stream_id=0, n=50_000)
    b = fl.estimate_outage(model, p_w, t, seed=11, stream_id=0, n=50_000)
    c = fl.estimate_outage(model, p_w, t, seed=11, stream_id=1, n=50_000)
    assert a.point_estimate == b.point_estimate
    assert (a.ci_low, a.ci_high) == (b.ci_low, b.ci_high)
    assert a.point_estimate != c.point_estimate
    analytic = fl.outage_probability(model, p_w, t)
    assert a.ci_low <= analytic <= a.ci_high


def test_constellation_geometry():
    spec = fl.starlink_spec()
    assert (spec.num_planes, spec.sats_per_plane) == (72, 22)
    d = fl.link_distances(spec)
    assert d.intra_chord_m == pytest.approx(1969921.991379, rel=1e-9)
    assert d.intra_chord_m < d.intra_arc_m
    geom = fl.scenario_links(spec, fl.adjacent_intra_link())
    assert geom.chord_distance_m == pytest.approx(d.intra_chord_m, rel=1e-12)
    assert geom.displacement_m == pytest.approx(7.096451008229, abs=1e-6)
    assert geom.arrival_time_s == pytest.approx(geom.chord_distance_m / 299792458.0, rel=1e-3)


def test_design_search_trivial_target():
    result = fl.design_search(1.0, fl.DesignSearchParams())
    assert result.feasible
    assert (result.num_planes, result.sats_per_plane) == (1, 2)


def test_config_round_trip_and_errors():
    canonical = fl.default_config_json()
    assert fl.canonicalize_config(canonical) == canonical
    digest = fl.config_hash_hex("{}")
    assert len(digest) == 16 and int(digest, 16) >= 0
    with pytest.raises(fl.ConfigError):
        fl.canonicalize_config('{"not_a_field": 1}')


def test_zero_jitter_density_rejected():
    model = fl.make_pointing_model(reference_channel(), 0.0, 10.0)
    assert model.deterministic()
    with pytest.raises(Exception):
        fl.gain_pdf(model, 0.5 * model.peak_gain)


def test_cli_outage_sweep_deterministic(tmp_path):
    cli = os.environ.get("FSOLINK_CLI")
    if not cli:
        pytest.skip("FSOLINK_CLI not set")
    cfg = tmp_path / "scenario.json"
    cfg.write_text(json.dumps({"sweep": {"values": [14.0, 16.0, 18.0]}}))
    outputs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        subprocess.run([cli, "outage-sweep", "-c", str(cfg), "-o", str(out)],
                       check=True, capture_output=True)
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    header = outputs[0].decode().splitlines()
    assert header[0].startswith("# fsolink.")
    assert len(header) == 5  # tag + column row + three sweep points

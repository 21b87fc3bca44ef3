#include "fsolink/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include "fsolink/errors.hpp"

namespace fsolink {

namespace {

void parallel_rows(size_t n, const std::function<void(size_t)>& body) {
    const unsigned hw = std::thread::hardware_concurrency();
    const size_t workers = std::min<size_t>(hw == 0 ? 1 : hw, n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= n) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) {
                        first_error = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

struct ResolvedGeometry {
    std::string constellation = "none";
    std::string link_type = "none";
    double distance_m = 0.0;
    double displacement_m = 0.0;
    double tau_s = 0.0;
};

double pick_link_distance(const ScenarioConfig& c, const ConstellationSpec& spec,
                          const LinkGeometry& geom) {
    if (!c.geometry.use_arc_distance) {
        return geom.chord_distance_m;
    }
    const LinkDistances d = link_distances(spec);
    return c.geometry.link_type == LinkType::intra_plane ? d.intra_arc_m : d.inter_arc_m;
}

ResolvedGeometry resolve_geometry(const ScenarioConfig& c) {
    ResolvedGeometry r;
    if (c.geometry.mode == GeometryConfig::Mode::constellation) {
        const ConstellationSpec spec = resolve_constellation(c.geometry);
        const LinkSelection sel = c.geometry.link_type == LinkType::intra_plane
                                      ? adjacent_intra_link()
                                      : adjacent_inter_link();
        const LinkGeometry geom = scenario_links(spec, sel);
        r.constellation = c.geometry.constellation;
        r.link_type = c.geometry.link_type == LinkType::intra_plane ? "intra" : "inter";
        r.distance_m = pick_link_distance(c, spec, geom);
        r.tau_s = geom.arrival_time_s;
        if (c.misalignment.mode == MisalignmentConfig::Mode::computed) {
            r.displacement_m = geom.displacement_m;
        } else if (c.misalignment.mode == MisalignmentConfig::Mode::fixed) {
            r.displacement_m = c.misalignment.displacement_m;
        }
    } else {
        r.distance_m = c.geometry.distance_m;
        r.tau_s = c.geometry.distance_m / PhysicalConstants{}.light_speed_m_s;
        if (c.misalignment.mode == MisalignmentConfig::Mode::fixed) {
            r.displacement_m = c.misalignment.displacement_m;
        }
    }
    return r;
}

struct AnalyticOutage {
    bool ok = true;
    double value = 0.0;
    int terms = 0;
};

AnalyticOutage analytic_outage(const PointingModel& model, double threshold,
                               const TruncationPolicy& policy) {
    AnalyticOutage out;
    if (threshold >= model.peak_gain) {
        out.value = 1.0;
        return out;
    }
    try {
        const SeriesEvaluation eval = gain_cdf_series_detail(model, threshold, policy);
        out.value = eval.value;
        out.terms = eval.terms_used;
    } catch (const ConvergenceError&) {
        out.ok = false;
        out.value = std::numeric_limits<double>::quiet_NaN();
        out.terms = -1;
    }
    return out;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_e(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9e", v);
    return buf;
}

}  // namespace

SweepResult run_outage_sweep(const ScenarioConfig& config) {
    const ResolvedGeometry base = resolve_geometry(config);
    const std::string hash = config_hash(config);
    const size_t n = config.sweep.values.size();
    SweepResult result;
    result.rows.resize(n);

    parallel_rows(n, [&](size_t i) {
        const double axis = config.sweep.values[i];
        double power_dbm = config.transmit_power_dbm;
        BeamParams beam = config.beam;
        TransceiverParams transceiver = config.transceiver;
        double distance = base.distance_m;
        double tau = base.tau_s;
        switch (config.sweep.axis) {
            case SweepAxis::transmit_power_dbm: power_dbm = axis; break;
            case SweepAxis::beam_waist_m: beam.waist_radius_m = axis; break;
            case SweepAxis::target_rate_bps: transceiver.target_rate_bps = axis; break;
            case SweepAxis::distance_m:
                distance = axis;
                tau = axis / PhysicalConstants{}.light_speed_m_s;
                break;
        }
        const ApertureChannel channel =
            aperture_params(beam, distance, config.aperture_radius_m);
        const PointingModel model =
            make_pointing_model(channel, config.jitter_angle_rad, base.displacement_m);
        const double threshold = threshold_gain(dbm_to_watts(power_dbm), transceiver);
        const AnalyticOutage analytic = analytic_outage(model, threshold, config.truncation);

        SweepRow& row = result.rows[i];
        row.axis_value = axis;
        row.link_type = base.link_type;
        row.constellation = base.constellation;
        row.distance_m = distance;
        row.displacement_m = base.displacement_m;
        row.tau_s = tau;
        row.analytic_ok = analytic.ok;
        row.outage_analytic = analytic.value;
        row.trunc_n = analytic.terms;
        row.config_hash = hash;
        if (config.monte_carlo.enabled) {
            const RngStream stream{config.monte_carlo.seed, static_cast<std::uint64_t>(i)};
            const OutageEstimate est = estimate_outage_at_threshold(
                model, threshold, stream, config.monte_carlo.samples);
            row.mc_enabled = true;
            row.outage_mc = est.point_estimate;
            row.mc_ci_low = est.ci_low;
            row.mc_ci_high = est.ci_high;
        }
    });
    for (const SweepRow& row : result.rows) {
        if (!row.analytic_ok) {
            result.any_convergence_failure = true;
        }
    }
    return result;
}

std::vector<DisplacementRow> run_displacement(const ScenarioConfig& config) {
    if (config.geometry.mode != GeometryConfig::Mode::constellation) {
        throw ConfigError("config: geometry.mode: displacement requires \"constellation\"");
    }
    const ConstellationSpec spec = resolve_constellation(config.geometry);
    const std::string hash = config_hash(config);
    std::vector<DisplacementRow> rows;
    const auto add_row = [&](const LinkSelection& sel, const char* name) {
        const LinkGeometry geom = scenario_links(spec, sel);
        DisplacementRow r;
        r.constellation = config.geometry.constellation;
        r.link_type = name;
        r.distance_m = geom.chord_distance_m;
        r.displacement_m = geom.displacement_m;
        r.tau_s = geom.arrival_time_s;
        r.config_hash = hash;
        rows.push_back(r);
    };
    if (spec.sats_per_plane >= 2) {
        add_row(adjacent_intra_link(), "intra");
    }
    if (spec.num_planes >= 2) {
        add_row(adjacent_inter_link(), "inter");
    }
    if (rows.empty()) {
        throw ConfigError("config: geometry: constellation has no intra- or inter-plane link");
    }
    return rows;
}

std::vector<DesignRow> run_design_search(const ScenarioConfig& config) {
    if (config.geometry.mode != GeometryConfig::Mode::constellation) {
        throw ConfigError("config: geometry.mode: design search requires \"constellation\"");
    }
    const ConstellationSpec spec = resolve_constellation(config.geometry);
    DesignSearchParams params;
    params.altitude_m = spec.altitude_m;
    params.inclination_rad = spec.inclination_rad;
    params.pattern = spec.pattern;
    params.beam = config.beam;
    params.aperture_radius_m = config.aperture_radius_m;
    params.jitter_angle_rad = config.jitter_angle_rad;
    params.transmit_power_w = dbm_to_watts(config.transmit_power_dbm);
    params.transceiver = config.transceiver;
    params.truncation = config.truncation;
    params.max_planes = config.design_search.max_planes;
    params.min_sats_per_plane = config.design_search.min_sats_per_plane;
    params.max_sats_per_plane = config.design_search.max_sats_per_plane;
    params.use_arc_distance = config.geometry.use_arc_distance;

    const std::string hash = config_hash(config);
    std::vector<DesignRow> rows(config.design_search.targets.size());
    parallel_rows(rows.size(), [&](size_t i) {
        rows[i].target = config.design_search.targets[i];
        rows[i].result = design_search(config.design_search.targets[i], params);
        rows[i].config_hash = hash;
    });
    return rows;
}

McEstimateRow run_mc_estimate(const ScenarioConfig& config) {
    const ResolvedGeometry base = resolve_geometry(config);
    const ApertureChannel channel =
        aperture_params(config.beam, base.distance_m, config.aperture_radius_m);
    const PointingModel model =
        make_pointing_model(channel, config.jitter_angle_rad, base.displacement_m);
    const double threshold =
        threshold_gain(dbm_to_watts(config.transmit_power_dbm), config.transceiver);
    McEstimateRow row;
    const AnalyticOutage analytic = analytic_outage(model, threshold, config.truncation);
    row.analytic_ok = analytic.ok;
    row.outage_analytic = analytic.value;
    row.trunc_n = analytic.terms;
    row.samples = config.monte_carlo.samples;
    row.seed = config.monte_carlo.seed;
    row.estimate = estimate_outage_at_threshold(model, threshold,
                                                RngStream{config.monte_carlo.seed, 0},
                                                config.monte_carlo.samples);
    row.config_hash = config_hash(config);
    return row;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "# fsolink.outage_sweep.v1\n";
    out += "axis_value,link_type,constellation,distance_m,displacement_m,tau_s,outage_analytic,"
           "outage_mc,mc_ci_low,mc_ci_high,trunc_N,config_hash\n";
    for (const SweepRow& r : result.rows) {
        out += fmt_g(r.axis_value) + "," + r.link_type + "," + r.constellation + "," +
               fmt_g(r.distance_m) + "," + fmt_g(r.displacement_m) + "," + fmt_g(r.tau_s) + ",";
        out += r.analytic_ok ? fmt_e(r.outage_analytic) : std::string();
        out += ",";
        if (r.mc_enabled) {
            out += fmt_e(r.outage_mc) + "," + fmt_e(r.mc_ci_low) + "," + fmt_e(r.mc_ci_high);
        } else {
            out += ",,";
        }
        out += ",";
        out += r.analytic_ok ? std::to_string(r.trunc_n) : std::string();
        out += "," + r.config_hash + "\n";
    }
    return out;
}

std::string displacement_csv(const std::vector<DisplacementRow>& rows) {
    std::string out = "# fsolink.displacement.v1\n";
    out += "constellation,link_type,distance_m,displacement_m,tau_s,config_hash\n";
    for (const DisplacementRow& r : rows) {
        out += r.constellation + "," + r.link_type + "," + fmt_g(r.distance_m) + "," +
               fmt_g(r.displacement_m) + "," + fmt_g(r.tau_s) + "," + r.config_hash + "\n";
    }
    return out;
}

std::string design_csv(const std::vector<DesignRow>& rows) {
    std::string out = "# fsolink.design_search.v1\n";
    out += "target,feasible,num_planes,sats_per_plane,total_satellites,intra_outage,inter_outage,"
           "config_hash\n";
    for (const DesignRow& r : rows) {
        out += fmt_e(r.target) + ",";
        if (r.result.feasible) {
            out += "1," + std::to_string(r.result.num_planes) + "," +
                   std::to_string(r.result.sats_per_plane) + "," +
                   std::to_string(r.result.total_satellites) + "," + fmt_e(r.result.intra_outage) +
                   "," + fmt_e(r.result.inter_outage);
        } else {
            out += "0,,,,,";
        }
        out += "," + r.config_hash + "\n";
    }
    return out;
}

std::string mc_estimate_csv(const McEstimateRow& row) {
    std::string out = "# fsolink.mc_estimate.v1\n";
    out += "samples,seed,outage_analytic,outage_mc,mc_ci_low,mc_ci_high,trunc_N,config_hash\n";
    out += std::to_string(row.samples) + "," + std::to_string(row.seed) + ",";
    out += row.analytic_ok ? fmt_e(row.outage_analytic) : std::string();
    out += "," + fmt_e(row.estimate.point_estimate) + "," + fmt_e(row.estimate.ci_low) + "," +
           fmt_e(row.estimate.ci_high) + ",";
    out += row.analytic_ok ? std::to_string(row.trunc_n) : std::string();
    out += "," + row.config_hash + "\n";
    return out;
}

}  // namespace fsolink

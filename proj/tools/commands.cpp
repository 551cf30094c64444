#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirrad/effective_action.hpp"
#include "mirrad/emission.hpp"
#include "mirrad/io.hpp"
#include "mirrad/kernels.hpp"
#include "mirrad/trajectory.hpp"
#include "mirrad/validate.hpp"

namespace mirrad::cli {
namespace {

Orientation parse_orientation(const std::string& name) {
    if (name == "perp" || name == "perpendicular") return Orientation::Perpendicular;
    if (name == "par" || name == "parallel") return Orientation::Parallel;
    throw std::invalid_argument("unknown orientation: " + name);
}

SpectrumMode parse_mode(const std::string& name) {
    if (name == "decay") return SpectrumMode::Decay;
    if (name == "excitation") return SpectrumMode::Excitation;
    if (name == "full") return SpectrumMode::Full;
    throw std::invalid_argument("unknown spectrum mode: " + name);
}

PolarizationConvention parse_polarization(const std::string& name) {
    if (name == "averaged") return PolarizationConvention::Averaged;
    if (name == "summed") return PolarizationConvention::Summed;
    throw std::invalid_argument("unknown polarization convention: " + name);
}

MotionSpec build_motion(const MotionOpts& opts) {
    if (!opts.traj.empty()) return load_trajectory(opts.traj);
    return MonochromaticMotion{opts.y0, opts.omega_cm, opts.duration};
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace

PhysicalConfig CommonOpts::physical() const {
    PhysicalConfig cfg;
    cfg.e2 = e2;
    cfg.mass = mass;
    cfg.omega = omega;
    cfg.distance_a = a;
    cfg.validate();
    return cfg;
}

void CommonOpts::apply_threads() const {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
}

int run_kernels(const CommonOpts& common, const KernelsOpts& opts) {
    common.apply_threads();
    const PhysicalConfig cfg = common.physical();
    if (opts.points < 2) throw std::invalid_argument("kernels: at least 2 points required");
    if (!(opts.x_min > 0.0) || !(opts.x_max > opts.x_min))
        throw std::invalid_argument("kernels: need 0 < x-min < x-max");

    std::vector<Channel> channels;
    if (opts.channel == "all")
        channels.assign(kChannels.begin(), kChannels.end());
    else if (opts.channel == "ee")
        channels = {Channel::EE};
    else if (opts.channel == "eb")
        channels = {Channel::EB};
    else if (opts.channel == "bb")
        channels = {Channel::BB};
    else
        throw std::invalid_argument("unknown channel: " + opts.channel);

    std::vector<double> xs(opts.points);
    for (int i = 0; i < opts.points; ++i)
        xs[i] = opts.x_min +
                (opts.x_max - opts.x_min) * static_cast<double>(i) / (opts.points - 1);

    Table table;
    table.columns.push_back("x");
    std::vector<std::vector<RatioPoint>> curves;
    for (Channel c : channels) {
        const std::string prefix = channels.size() > 1 ? to_string(c) + "_" : "";
        table.columns.push_back(prefix + "m1");
        table.columns.push_back(prefix + "m2");
        curves.push_back(kernel_ratio_curve(c, cfg, xs));
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<std::string> row{format_sci(xs[i])};
        for (const auto& curve : curves) {
            row.push_back(format_sci(curve[i].parallel));
            row.push_back(format_sci(curve[i].perpendicular));
        }
        table.rows.push_back(std::move(row));
    }
    write_table_file(common.out, table, parse_format(common.format));
    return 0;
}

int run_angular(const CommonOpts& common, const AngularOpts& opts) {
    common.apply_threads();
    AngularDensity density;
    if (opts.process == "decay")
        density = decay_angular_density(opts.ka, opts.omega_a, opts.theta_points);
    else if (opts.process == "excitation")
        density = excitation_angular_density(opts.ka, opts.omega_a, opts.theta_points);
    else
        throw std::invalid_argument("unknown process: " + opts.process);

    Table table;
    table.columns = {"theta", "p1", "p2", "total"};
    for (std::size_t i = 0; i < density.cos_theta.size(); ++i) {
        table.rows.push_back({format_sci(std::acos(density.cos_theta[i])),
                              format_sci(density.p1[i]), format_sci(density.p2[i]),
                              format_sci(density.p1[i] + density.p2[i])});
    }
    write_table_file(common.out, table, parse_format(common.format));
    return 0;
}

int run_spectrum(const CommonOpts& common, const SpectrumOpts& opts) {
    common.apply_threads();
    const PhysicalConfig cfg = common.physical();
    const MotionSpec motion = build_motion(opts.motion);
    const SpectrumTable spectrum =
        full_spectrum(cfg, motion, parse_orientation(opts.orientation), parse_mode(opts.mode),
                      parse_polarization(opts.polarization));
    print_warnings(spectrum.warnings);

    Table table;
    table.columns = {"k", "probability", "rate", "kind", "channel"};
    for (const SpectrumEntry& e : spectrum.entries)
        table.rows.push_back({format_sci(e.k), format_sci(e.probability), format_sci(e.rate),
                              to_string(e.kind), to_string(e.tag)});
    write_table_file(common.out, table, parse_format(common.format));
    return 0;
}

int run_imgamma(const CommonOpts& common, const ImGammaOpts& opts) {
    common.apply_threads();
    const PhysicalConfig cfg = common.physical();
    const MotionSpec motion = build_motion(opts.motion);
    const ImGammaReport report = im_gamma(cfg, motion, parse_orientation(opts.orientation));
    print_warnings(report.warnings);

    Table table;
    table.columns = {"quantity", "value"};
    for (Channel c : kChannels) {
        const std::size_t ci = channel_index(c);
        table.rows.push_back({to_string(c) + "_free", format_sci(report.free_parts[ci])});
        table.rows.push_back(
            {to_string(c) + "_reflected", format_sci(report.reflected_parts[ci])});
    }
    table.rows.push_back({"im_gamma_total", format_sci(report.total)});
    table.rows.push_back({"rate", format_sci(report.rate)});
    table.rows.push_back({"vacuum_persistence", format_sci(report.vacuum_persistence)});
    write_table_file(common.out, table, parse_format(common.format));
    return 0;
}

int run_validate(const CommonOpts& common, const ValidateOpts& opts) {
    common.apply_threads();
    const ValidationReport report = run_validation(opts.tol);

    std::ostringstream ss;
    for (const CheckResult& check : report.checks) {
        const char* status = check.report_only ? "REPORT" : (check.passed ? "PASS" : "FAIL");
        ss << status << " " << check.name << ": " << check.detail << "\n";
    }
    if (common.out.empty() || common.out == "-") {
        std::cout << ss.str();
    } else {
        std::ofstream file(common.out);
        if (!file) throw IoError("cannot open output file: " + common.out);
        file << ss.str();
    }
    return report.all_passed ? 0 : 4;
}

}  // namespace mirrad::cli

#include "mirrad/trajectory.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>

#include "mirrad/io.hpp"
#include "mirrad/parallel.hpp"

namespace mirrad {
namespace {

constexpr double kPi = 3.14159265358979323846;

double uniform_step(const SampledMotion& motion) {
    const auto& t = motion.times;
    if (t.size() < 16)
        throw std::invalid_argument("sampled_spectrum: at least 16 samples required");
    if (motion.displacements.size() != t.size())
        throw std::invalid_argument("sampled_spectrum: times and displacements differ in length");
    const double dt = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    if (!(dt > 0.0)) throw std::invalid_argument("sampled_spectrum: times must increase");
    for (std::size_t n = 1; n < t.size(); ++n) {
        if (std::abs(t[n] - t[n - 1] - dt) > 1e-6 * dt)
            throw std::invalid_argument("sampled_spectrum: time grid must be uniform");
    }
    return dt;
}

std::vector<double> window_values(Window window, std::size_t n) {
    std::vector<double> w(n, 1.0);
    if (window == Window::Hann) {
        for (std::size_t i = 0; i < n; ++i)
            w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                         static_cast<double>(n)));
    }
    double mean_sq = 0.0;
    for (double v : w) mean_sq += v * v;
    mean_sq /= static_cast<double>(n);
    const double scale = 1.0 / std::sqrt(mean_sq);
    for (double& v : w) v *= scale;
    return w;
}

template <typename Loop>
GriddedSpectrum periodogram(const SampledMotion& motion, Window window, Loop&& loop) {
    const double dt = uniform_step(motion);
    const std::size_t n = motion.times.size();
    const std::vector<double> w = window_values(window, n);

    std::vector<double> wy(n);
    for (std::size_t i = 0; i < n; ++i) wy[i] = w[i] * motion.displacements[i];

    GriddedSpectrum spec;
    spec.duration = dt * static_cast<double>(n);
    const std::size_t bins = n / 2 + 1;
    spec.nu.resize(bins);
    spec.density.resize(bins);

    loop(bins, [&](std::size_t m) {
        // Phasor recurrence for exp(i nu_m t_j) with t_j = j dt; the time
        // origin drops out of |y(nu)|^2.
        const double step = 2.0 * kPi * static_cast<double>(m) / static_cast<double>(n);
        const double c = std::cos(step);
        const double s = std::sin(step);
        double pr = 1.0, pi = 0.0;
        double re = 0.0, im = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            re += wy[j] * pr;
            im += wy[j] * pi;
            const double nr = pr * c - pi * s;
            pi = pr * s + pi * c;
            pr = nr;
        }
        re *= dt;
        im *= dt;
        spec.nu[m] = step / dt;
        spec.density[m] = re * re + im * im;
    });
    return spec;
}

}  // namespace

LineSpectrum line_spectrum(const MonochromaticMotion& motion) {
    if (!(motion.duration > 0.0))
        throw std::invalid_argument("line_spectrum: duration must be positive");
    if (motion.amplitude < 0.0)
        throw std::invalid_argument("line_spectrum: amplitude must be non-negative");
    LineSpectrum spec;
    spec.duration = motion.duration;
    if (motion.amplitude > 0.0 && motion.omega_cm > 0.0)
        spec.lines.push_back(
            {motion.omega_cm, motion.amplitude * motion.amplitude * motion.duration / 4.0});
    return spec;
}

GriddedSpectrum sampled_spectrum(const SampledMotion& motion, Window window) {
    return periodogram(motion, window,
                       [](std::size_t n, auto&& f) { for_each_index(n, f); });
}

GriddedSpectrum sampled_spectrum_serial(const SampledMotion& motion, Window window) {
    return periodogram(motion, window,
                       [](std::size_t n, auto&& f) { for_each_index_serial(n, f); });
}

SampledMotion load_trajectory(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open trajectory file: " + path);

    SampledMotion motion;
    std::string line;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (!header_seen) {
            if (line.substr(start) != "# units: natural")
                throw IoError(path + ": first line must be '# units: natural'");
            header_seen = true;
            continue;
        }
        if (line[start] == '#') continue;
        std::istringstream ss(line.substr(start));
        double t = 0.0, y = 0.0;
        if (!(ss >> t >> y))
            throw IoError(path + ":" + std::to_string(line_no) + ": expected 't y'");
        std::string rest;
        if (ss >> rest && rest[0] != '#')
            throw IoError(path + ":" + std::to_string(line_no) + ": trailing data");
        motion.times.push_back(t);
        motion.displacements.push_back(y);
    }
    if (!header_seen) throw IoError(path + ": missing '# units: natural' header");
    if (motion.times.empty()) throw IoError(path + ": no samples");
    return motion;
}

double mean_square_displacement(const MotionSpec& motion) {
    if (const auto* mono = std::get_if<MonochromaticMotion>(&motion)) {
        if (mono->omega_cm > 0.0) return 0.5 * mono->amplitude * mono->amplitude;
        return mono->amplitude * mono->amplitude;
    }
    const auto& sampled = std::get<SampledMotion>(motion);
    double acc = 0.0;
    for (double y : sampled.displacements) acc += y * y;
    return sampled.displacements.empty() ? 0.0 : acc / static_cast<double>(sampled.displacements.size());
}

std::vector<std::string> motion_warnings(const MotionSpec& motion) {
    std::vector<std::string> warnings;
    double peak_speed = 0.0;
    if (const auto* mono = std::get_if<MonochromaticMotion>(&motion)) {
        peak_speed = mono->amplitude * mono->omega_cm;
        if (mono->amplitude > 0.0 && mono->omega_cm == 0.0)
            warnings.push_back(
                "drive frequency is zero: the center of mass is static and only the "
                "static channel radiates");
    } else {
        const auto& sampled = std::get<SampledMotion>(motion);
        for (std::size_t n = 1; n < sampled.times.size(); ++n) {
            const double dt = sampled.times[n] - sampled.times[n - 1];
            if (dt > 0.0)
                peak_speed = std::max(
                    peak_speed,
                    std::abs(sampled.displacements[n] - sampled.displacements[n - 1]) / dt);
        }
    }
    if (peak_speed >= 0.1)
        warnings.push_back("peak center-of-mass speed " + format_sci(peak_speed) +
                           " approaches the speed of light; the dipole expansion is "
                           "unreliable there");
    return warnings;
}

double motion_duration(const MotionSpec& motion) {
    if (const auto* mono = std::get_if<MonochromaticMotion>(&motion)) return mono->duration;
    const auto& sampled = std::get<SampledMotion>(motion);
    if (sampled.times.size() < 2) return 0.0;
    const double dt =
        (sampled.times.back() - sampled.times.front()) / static_cast<double>(sampled.times.size() - 1);
    return dt * static_cast<double>(sampled.times.size());
}

}  // namespace mirrad

#include "mirrad/kernels.hpp"

#include <cmath>

#include "mirrad/envelopes.hpp"
#include "mirrad/parallel.hpp"

namespace mirrad {
namespace {

constexpr double kPi = 3.14159265358979323846;

// e^2 / (pi m omega), the common prefactor of every kernel.
double prefactor(const PhysicalConfig& cfg) { return cfg.e2 / (kPi * cfg.mass * cfg.omega); }

template <typename Fn>
std::vector<RatioPoint> ratio_curve_impl(Channel c, const PhysicalConfig& cfg,
                                         const std::vector<double>& xs, Fn&& loop) {
    cfg.validate();
    if (cfg.free_space())
        throw std::domain_error("kernel_ratio_curve: finite distance_a required");
    for (double x : xs)
        if (!(x > 0.0)) throw std::invalid_argument("kernel_ratio_curve: x values must be positive");

    std::vector<RatioPoint> out(xs.size());
    loop(xs.size(), [&](std::size_t i) {
        const double nu = cfg.omega + xs[i] / cfg.distance_a;
        const double free_part = kernel_free(c, cfg, nu);
        out[i].x = xs[i];
        out[i].parallel = kernel_total(c, Orientation::Parallel, cfg, nu) / free_part;
        out[i].perpendicular = kernel_total(c, Orientation::Perpendicular, cfg, nu) / free_part;
    });
    return out;
}

}  // namespace

std::string to_string(Channel c) {
    switch (c) {
        case Channel::EE: return "ee";
        case Channel::EB: return "eb";
        default: return "bb";
    }
}

std::size_t channel_index(Channel c) { return static_cast<std::size_t>(c); }

double kernel_free(Channel c, const PhysicalConfig& cfg, double nu) {
    const double anu = std::abs(nu);
    const double d = anu - cfg.omega;
    if (d <= 0.0) return 0.0;
    const double pre = prefactor(cfg);
    const double d3 = d * d * d;
    switch (c) {
        case Channel::EE: return pre / 24.0 * d3 * d * d;
        case Channel::EB: return -pre / 12.0 * anu * d3 * d;
        default: return pre / 12.0 * anu * anu * d3;
    }
}

double kernel_reflected(Channel c, Orientation o, const PhysicalConfig& cfg, double nu) {
    if (cfg.free_space())
        throw std::domain_error("kernel_reflected: free-space config has no mirror part");
    const double anu = std::abs(nu);
    const double d = anu - cfg.omega;
    if (d <= 0.0) return 0.0;
    const double pre = prefactor(cfg);
    const double x = cfg.distance_a * d;
    const double d3 = d * d * d;
    const bool par = o == Orientation::Parallel;
    switch (c) {
        case Channel::EE: {
            const double d5 = d3 * d * d;
            return par ? -pre / 32.0 * d5 * envelope_f1(x) : pre / 16.0 * d5 * envelope_f2(x);
        }
        case Channel::EB: {
            const double d4 = d3 * d;
            return par ? -pre / 8.0 * anu * d4 * envelope_f3(x)
                       : pre / 8.0 * anu * d4 * envelope_f4(x);
        }
        default: {
            const double nu2 = anu * anu;
            return par ? -pre / 16.0 * nu2 * d3 * envelope_f5(x)
                       : pre / 16.0 * nu2 * d3 * envelope_f6(x);
        }
    }
}

double kernel_total(Channel c, Orientation o, const PhysicalConfig& cfg, double nu) {
    double value = kernel_free(c, cfg, nu);
    if (!cfg.free_space()) value += kernel_reflected(c, o, cfg, nu);
    return value;
}

double kernel_free_sum(const PhysicalConfig& cfg, double nu) {
    double sum = 0.0;
    for (Channel c : kChannels) sum += kernel_free(c, cfg, nu);
    return sum;
}

double kernel_total_sum(Orientation o, const PhysicalConfig& cfg, double nu) {
    double sum = 0.0;
    for (Channel c : kChannels) sum += kernel_total(c, o, cfg, nu);
    return sum;
}

std::vector<RatioPoint> kernel_ratio_curve(Channel c, const PhysicalConfig& cfg,
                                           const std::vector<double>& xs) {
    return ratio_curve_impl(c, cfg, xs,
                            [](std::size_t n, auto&& f) { for_each_index(n, f); });
}

std::vector<RatioPoint> kernel_ratio_curve_serial(Channel c, const PhysicalConfig& cfg,
                                                  const std::vector<double>& xs) {
    return ratio_curve_impl(c, cfg, xs,
                            [](std::size_t n, auto&& f) { for_each_index_serial(n, f); });
}

}  // namespace mirrad

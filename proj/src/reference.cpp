#include "mirrad/reference.hpp"

#include <cmath>

#include "mirrad/quadrature.hpp"

namespace mirrad {
namespace {

constexpr double kPi = 3.14159265358979323846;

// integral_{-1}^{1} w(u) cos(2 x u) du by adaptive quadrature.
double direction_integral(double x, const std::function<double(double)>& w) {
    QuadratureOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_floor = 1e-16;
    auto f = [&](double u) { return w(u) * std::cos(2.0 * x * u); };
    return adaptive_quad(f, -1.0, 1.0, opts).value;
}

// Angular emission density for one photon momentum, u the direction cosine.
// omega_a_signed is +omega a for decay, -omega a for excitation.
double emission_density(double u, double ka, double omega_a_signed) {
    const double uu = std::abs(u);
    const double cu = std::cos(ka * uu);
    const double su = std::sin(ka * uu);
    const double u2 = uu * uu;
    const double p1 = omega_a_signed * omega_a_signed * cu * cu * u2;
    const double kperp = ka * (1.0 - u2);
    const double amp = omega_a_signed - kperp;
    const double p2 = ka * ka * (1.0 - u2) * u2 * su * su + amp * amp * cu * cu;
    return p1 + p2;
}

double spectrum_reference(const PhysicalConfig& cfg, double k, double sign) {
    cfg.validate();
    if (cfg.free_space())
        throw std::domain_error("spectrum reference: finite distance_a required");
    if (k < 0.0) throw std::invalid_argument("spectrum reference: k must be non-negative");
    if (k == 0.0) return 0.0;
    const double a = cfg.distance_a;
    const double ka = k * a;
    const double oa = sign * cfg.omega * a;
    QuadratureOptions opts;
    opts.rel_tol = 1e-12;
    opts.abs_floor = 1e-16;
    const double angular =
        adaptive_quad([&](double u) { return emission_density(u, ka, oa); }, -1.0, 1.0, opts)
            .value;
    const double k3 = k * k * k;
    return cfg.e2 * k3 / (12.0 * kPi * kPi * cfg.mass * cfg.omega) * angular / (a * a);
}

}  // namespace

double reflected_kernel_reference(Channel c, Orientation o, const PhysicalConfig& cfg,
                                  double nu) {
    cfg.validate();
    if (cfg.free_space())
        throw std::domain_error("reflected_kernel_reference: free-space config has no mirror part");
    const double anu = std::abs(nu);
    const double d = anu - cfg.omega;
    if (d <= 0.0) return 0.0;

    const double x = cfg.distance_a * d;
    const double base = cfg.e2 / (kPi * cfg.mass * cfg.omega);
    const double d3 = d * d * d;
    const double d4 = d3 * d;
    const double d5 = d4 * d;
    const bool par = o == Orientation::Parallel;

    switch (c) {
        case Channel::EE:
            if (par)
                return -base / 64.0 * d5 *
                       direction_integral(x, [](double u) {
                           return (1.0 - u * u) * (1.0 + 2.0 * u * u);
                       });
            return base / 32.0 * d5 *
                   direction_integral(x, [](double u) { return u * u * (1.0 + 2.0 * u * u); });
        case Channel::EB:
            if (par)
                return -base / 32.0 * anu * d4 *
                       direction_integral(x, [](double u) { return 1.0 - u * u; });
            return base / 8.0 * anu * d4 *
                   direction_integral(x, [](double u) { return u * u; });
        default:
            if (par)
                return -base / 32.0 * anu * anu * d3 *
                       direction_integral(x, [](double u) { return 1.0 - 2.0 * u * u; });
            return base / 16.0 * anu * anu * d3 *
                   direction_integral(x, [](double u) { return u * u; });
    }
}

double decay_spectrum_reference(const PhysicalConfig& cfg, double k) {
    return spectrum_reference(cfg, k, 1.0);
}

double excitation_spectrum_reference(const PhysicalConfig& cfg, double k) {
    return spectrum_reference(cfg, k, -1.0);
}

}  // namespace mirrad

#include "mirrad/emission.hpp"

#include <algorithm>
#include <cmath>

#include "mirrad/envelopes.hpp"
#include "mirrad/parallel.hpp"

namespace mirrad {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMomentSwitch = 0.5;  // ka below which the moment form is used

double pol_factor(PolarizationConvention pol) {
    return pol == PolarizationConvention::Summed ? 3.0 : 1.0;
}

// Averaged density, braces route. om is +omega for decay, -omega for
// excitation; the 1/omega of the prefactor keeps the physical sign.
double braces_density(const PhysicalConfig& cfg, double k, double om) {
    const double a = cfg.distance_a;
    const double a2 = a * a;
    const double a4 = a2 * a2;
    const double k2 = k * k;
    const double ko = k + om;
    const double braces =
        8.0 * a4 * a * k2 * k * (k2 - 2.0 * k * om + 2.0 * om * om) +
        6.0 * a * k * (a2 * ko * ko - 6.0) * std::cos(2.0 * a * k) +
        3.0 * (4.0 * a4 * k2 * om * om - a2 * (9.0 * k2 + 2.0 * k * om + om * om) + 6.0) *
            std::sin(2.0 * a * k);
    return cfg.e2 / (144.0 * kPi * kPi * cfg.mass * cfg.omega * a4 * a) * braces;
}

// Same density through the direction-cosine moments; free of the large
// cancellation of the braces route as ka -> 0.
double moment_density(const PhysicalConfig& cfg, double k, double om) {
    const double a = cfg.distance_a;
    const double x = k * a;
    const double v0 = cosine_moment(0, x);
    const double v1 = cosine_moment(1, x);
    const double v2 = cosine_moment(2, x);
    constexpr double m0 = 2.0, m1 = 2.0 / 3.0, m2 = 2.0 / 5.0;
    const double omk = om - k;
    const double angular = 0.5 * (om * om * (m1 + v1) + k * k * ((m1 - m2) - (v1 - v2)) +
                                  omk * omk * (m0 + v0) + 2.0 * omk * k * (m1 + v1) +
                                  k * k * (m2 + v2));
    return cfg.e2 * k * k * k / (12.0 * kPi * kPi * cfg.mass * cfg.omega) * angular;
}

double free_density(const PhysicalConfig& cfg, double k, double om) {
    return cfg.e2 / (18.0 * kPi * kPi * cfg.mass * cfg.omega) * k * k * k *
           (k * k - 2.0 * k * om + 2.0 * om * om);
}

double spectral_density(const PhysicalConfig& cfg, double k, double om,
                        PolarizationConvention pol) {
    cfg.validate();
    if (k < 0.0) throw std::invalid_argument("spectral density: k must be non-negative");
    if (k == 0.0) return 0.0;
    double value;
    if (cfg.free_space())
        value = free_density(cfg, k, om);
    else if (k * cfg.distance_a < kMomentSwitch)
        value = moment_density(cfg, k, om);
    else
        value = braces_density(cfg, k, om);
    return pol_factor(pol) * value;
}

void require_finite(const PhysicalConfig& cfg, const char* who) {
    if (cfg.free_space()) throw std::domain_error(std::string(who) + ": finite distance_a required");
}

template <typename Loop>
AngularDensity angular_density_impl(double ka, double omega_a_signed, int points, Loop&& loop) {
    if (!(ka >= 0.0)) throw std::invalid_argument("angular density: ka must be non-negative");
    if (points < 3) throw std::invalid_argument("angular density: at least 3 grid points");

    AngularDensity table;
    table.cos_theta.resize(points);
    table.p1.resize(points);
    table.p2.resize(points);
    const double denom = static_cast<double>(points - 1);
    loop(static_cast<std::size_t>(points), [&](std::size_t i) {
        // Integer-valued numerator keeps |c| bitwise equal for mirrored rows.
        const double c = (2.0 * static_cast<double>(i) - denom) / denom;
        const double u = std::abs(c);
        const double u2 = u * u;
        const double cu = std::cos(ka * u);
        const double su = std::sin(ka * u);
        const double amp = omega_a_signed - ka * (1.0 - u2);
        table.cos_theta[i] = c;
        table.p1[i] = omega_a_signed * omega_a_signed * cu * cu * u2;
        table.p2[i] = ka * ka * (1.0 - u2) * u2 * su * su + amp * amp * cu * cu;
    });
    return table;
}

}  // namespace

ModeVector mirror_mode(int polarization, double kx, double ky, double kz, double px, double py,
                       double pz) {
    if (polarization != 1 && polarization != 2)
        throw std::invalid_argument("mirror_mode: polarization must be 1 or 2");
    if (kz < 0.0) throw std::invalid_argument("mirror_mode: kz must be non-negative");
    const double kp = std::hypot(kx, ky);
    const double k = std::hypot(kp, kz);
    if (!(k > 0.0)) throw std::invalid_argument("mirror_mode: k must be non-zero");

    // In-plane unit vector; any fixed choice works when k is purely normal.
    const double hx = kp > 0.0 ? kx / kp : 1.0;
    const double hy = kp > 0.0 ? ky / kp : 0.0;

    const double norm = std::sqrt(2.0 / (8.0 * kPi * kPi * kPi * k));
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, kx * px + ky * py));
    const double sz = std::sin(kz * pz);
    const double cz = std::cos(kz * pz);

    ModeVector g;
    if (polarization == 1) {
        g.x = norm * hy * sz * phase;
        g.y = -norm * hx * sz * phase;
        g.z = 0.0;
    } else {
        const std::complex<double> tangential =
            std::complex<double>(0.0, -1.0) * (kz / k) * sz * phase * norm;
        g.x = hx * tangential;
        g.y = hy * tangential;
        g.z = norm * (kp / k) * cz * phase;
    }
    return g;
}

StaticRate static_decay_rate(const PhysicalConfig& cfg, int points) {
    cfg.validate();
    if (points < 2) throw std::invalid_argument("static_decay_rate: at least 2 grid points");

    const double p0 = cfg.e2 * cfg.omega * cfg.omega / (12.0 * kPi * kPi * cfg.mass);
    StaticRate out;
    out.cos_theta.resize(points);
    out.density.resize(points);

    if (cfg.free_space()) {
        // The mirror term averages out at infinite distance.
        for (int i = 0; i < points; ++i) {
            out.cos_theta[i] = static_cast<double>(i) / static_cast<double>(points - 1);
            out.density[i] = p0;
        }
        out.rate = cfg.e2 * cfg.omega * cfg.omega / (6.0 * kPi * cfg.mass);
        return out;
    }

    const double oa = cfg.omega * cfg.distance_a;
    for (int i = 0; i < points; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(points - 1);
        out.cos_theta[i] = u;
        out.density[i] = p0 * (1.0 - u * u * std::cos(2.0 * oa * u));
    }
    // 2 pi * integral_0^1 of the density, done exactly by the u^2 moment.
    out.rate = cfg.e2 * cfg.omega * cfg.omega / (6.0 * kPi * cfg.mass) *
               (1.0 - 0.5 * envelope_f4(oa));
    return out;
}

double static_correction_rate(const PhysicalConfig& cfg, double mean_square_displacement) {
    cfg.validate();
    if (mean_square_displacement < 0.0)
        throw std::invalid_argument("static_correction_rate: mean square must be non-negative");
    // Second order in the normal displacement: the emission amplitude picks
    // up the photon's normal momentum component once per order, so the cross
    // term with the static amplitude carries u^2 times the static angular
    // factor, and the surviving polarization trace fixes the overall sign to
    // destructive. The drive frequency never enters, only <y^2>.
    const double angular = cfg.free_space()
                               ? 1.0 / 3.0
                               : 1.0 / 3.0 - 0.5 * cosine_moment(2, cfg.omega * cfg.distance_a);
    const double om2 = cfg.omega * cfg.omega;
    return -cfg.e2 * om2 * om2 / (6.0 * kPi * cfg.mass) * mean_square_displacement * angular;
}

AngularDensity decay_angular_density(double ka, double omega_a, int points) {
    if (!(omega_a >= 0.0)) throw std::invalid_argument("angular density: omega_a must be non-negative");
    return angular_density_impl(ka, omega_a, points,
                                [](std::size_t n, auto&& f) { for_each_index(n, f); });
}

AngularDensity decay_angular_density_serial(double ka, double omega_a, int points) {
    if (!(omega_a >= 0.0)) throw std::invalid_argument("angular density: omega_a must be non-negative");
    return angular_density_impl(ka, omega_a, points,
                                [](std::size_t n, auto&& f) { for_each_index_serial(n, f); });
}

AngularDensity excitation_angular_density(double ka, double omega_a, int points) {
    if (!(omega_a >= 0.0)) throw std::invalid_argument("angular density: omega_a must be non-negative");
    return angular_density_impl(ka, -omega_a, points,
                                [](std::size_t n, auto&& f) { for_each_index(n, f); });
}

AngularDensity excitation_angular_density_serial(double ka, double omega_a, int points) {
    if (!(omega_a >= 0.0)) throw std::invalid_argument("angular density: omega_a must be non-negative");
    return angular_density_impl(ka, -omega_a, points,
                                [](std::size_t n, auto&& f) { for_each_index_serial(n, f); });
}

double decay_spectral_density(const PhysicalConfig& cfg, double k, PolarizationConvention pol) {
    return spectral_density(cfg, k, cfg.omega, pol);
}

double excitation_spectral_density(const PhysicalConfig& cfg, double k,
                                   PolarizationConvention pol) {
    return spectral_density(cfg, k, -cfg.omega, pol);
}

namespace emission_detail {

double decay_braces_form(const PhysicalConfig& cfg, double k) {
    require_finite(cfg, "decay_braces_form");
    return braces_density(cfg, k, cfg.omega);
}

double decay_moment_form(const PhysicalConfig& cfg, double k) {
    require_finite(cfg, "decay_moment_form");
    return moment_density(cfg, k, cfg.omega);
}

double excitation_braces_form(const PhysicalConfig& cfg, double k) {
    require_finite(cfg, "excitation_braces_form");
    return braces_density(cfg, k, -cfg.omega);
}

double excitation_moment_form(const PhysicalConfig& cfg, double k) {
    require_finite(cfg, "excitation_moment_form");
    return moment_density(cfg, k, -cfg.omega);
}

}  // namespace emission_detail

std::string to_string(SpectrumEntry::Kind kind) {
    return kind == SpectrumEntry::Kind::Line ? "line" : "density";
}

std::string to_string(SpectrumEntry::Tag tag) {
    switch (tag) {
        case SpectrumEntry::Tag::Static: return "static";
        case SpectrumEntry::Tag::StaticCorrection: return "static_correction";
        case SpectrumEntry::Tag::Dynamic: return "dynamic";
        default: return "excitation";
    }
}

SpectrumTable full_spectrum(const PhysicalConfig& cfg, const MotionSpec& motion,
                            Orientation orientation, SpectrumMode mode,
                            PolarizationConvention pol) {
    cfg.validate();
    if (orientation == Orientation::Parallel)
        throw std::invalid_argument(
            "full_spectrum: spectra are implemented for perpendicular motion; for parallel "
            "motion use the kernels and imgamma routes");

    SpectrumTable table;
    table.duration = motion_duration(motion);
    if (!(table.duration > 0.0))
        throw std::invalid_argument("full_spectrum: motion duration must be positive");
    table.warnings = motion_warnings(motion);

    const bool want_decay = mode != SpectrumMode::Excitation;
    const bool want_excitation = mode != SpectrumMode::Decay;
    const double duration = table.duration;

    auto push_line = [&](double k, double probability, SpectrumEntry::Tag tag) {
        table.entries.push_back(
            {k, probability, probability / duration, SpectrumEntry::Kind::Line, tag});
    };
    auto push_density = [&](double k, double dens, SpectrumEntry::Tag tag) {
        table.entries.push_back(
            {k, dens, dens / duration, SpectrumEntry::Kind::Density, tag});
    };

    const auto* mono = std::get_if<MonochromaticMotion>(&motion);
    const bool driven = mono ? (mono->amplitude > 0.0 && mono->omega_cm > 0.0) : true;

    if (want_decay) {
        const StaticRate stat = static_decay_rate(cfg, 2);
        push_line(cfg.omega, stat.rate * duration, SpectrumEntry::Tag::Static);
        if (driven) {
            const double ms = mean_square_displacement(motion);
            if (ms > 0.0)
                push_line(cfg.omega, static_correction_rate(cfg, ms) * duration,
                          SpectrumEntry::Tag::StaticCorrection);
        }
    }

    if (mono) {
        if (driven) {
            const double w = mono->amplitude * mono->amplitude * duration / 4.0;
            if (want_decay) {
                const double kp = cfg.omega + mono->omega_cm;
                push_line(kp, 2.0 * kPi * w * decay_spectral_density(cfg, kp, pol),
                          SpectrumEntry::Tag::Dynamic);
                if (mono->omega_cm < cfg.omega) {
                    const double km = cfg.omega - mono->omega_cm;
                    push_line(km, 2.0 * kPi * w * decay_spectral_density(cfg, km, pol),
                              SpectrumEntry::Tag::Dynamic);
                }
            }
            if (want_excitation && mono->omega_cm > cfg.omega) {
                const double ke = mono->omega_cm - cfg.omega;
                push_line(ke, 2.0 * kPi * w * excitation_spectral_density(cfg, ke, pol),
                          SpectrumEntry::Tag::Excitation);
            }
        }
        if (want_excitation && mode == SpectrumMode::Excitation &&
            (!driven || mono->omega_cm <= cfg.omega))
            table.warnings.push_back(
                "no excitation channel: the drive frequency does not exceed the oscillator "
                "frequency");
    } else {
        const GriddedSpectrum spec = sampled_spectrum(std::get<SampledMotion>(motion));
        bool excitation_seen = false;
        for (std::size_t m = 1; m < spec.nu.size(); ++m) {
            const double nu = spec.nu[m];
            const double d = spec.density[m];
            if (want_decay) {
                const double kp = cfg.omega + nu;
                push_density(kp, d * decay_spectral_density(cfg, kp, pol),
                             SpectrumEntry::Tag::Dynamic);
                const double km = cfg.omega - nu;
                if (km > 0.0)
                    push_density(km, d * decay_spectral_density(cfg, km, pol),
                                 SpectrumEntry::Tag::Dynamic);
            }
            if (want_excitation && nu > cfg.omega) {
                push_density(nu - cfg.omega, d * excitation_spectral_density(cfg, nu - cfg.omega, pol),
                             SpectrumEntry::Tag::Excitation);
                excitation_seen = true;
            }
        }
        if (want_excitation && mode == SpectrumMode::Excitation && !excitation_seen)
            table.warnings.push_back(
                "no excitation channel: the sampled trajectory has no content above the "
                "oscillator frequency");
    }

    std::stable_sort(table.entries.begin(), table.entries.end(),
                     [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.k < b.k; });
    return table;
}

}  // namespace mirrad

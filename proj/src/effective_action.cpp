#include "mirrad/effective_action.hpp"

#include <cmath>

#include "mirrad/parallel.hpp"

namespace mirrad {
namespace {

constexpr double kPi = 3.14159265358979323846;

void finalize(ImGammaReport& report) {
    report.total = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        report.total += report.free_parts[i] + report.reflected_parts[i];
    report.rate = report.duration > 0.0 ? 2.0 * report.total / report.duration : 0.0;
    report.vacuum_persistence = std::exp(-2.0 * report.total);
    if (report.total < 0.0)
        report.warnings.push_back(
            "channel-summed Im Gamma is negative at this distance and drive content; the "
            "perturbative emission picture is outside its domain here");
}

struct CellSplit {
    std::array<double, 3> free_parts{};
    std::array<double, 3> reflected_parts{};
};

template <typename Loop>
ImGammaReport gridded_impl(const PhysicalConfig& cfg, const GriddedSpectrum& spectrum,
                           Orientation o, Loop&& loop) {
    cfg.validate();
    ImGammaReport report;
    report.orientation = o;
    report.duration = spectrum.duration;
    if (spectrum.nu.size() != spectrum.density.size())
        throw std::invalid_argument("im_gamma: nu and density differ in length");
    if (spectrum.nu.size() < 2) {
        finalize(report);
        return report;
    }

    const double nu_max = spectrum.nu.back();
    const double band_hi = 1.1 * cfg.omega;
    if (nu_max > cfg.omega) {
        const double dnu = spectrum.nu[1] - spectrum.nu[0];
        if (dnu > (nu_max - cfg.omega) / 100.0)
            report.warnings.push_back(
                "frequency grid is coarse relative to the band above threshold; Im Gamma "
                "may be underresolved near nu = omega");
    }

    const std::size_t cells = spectrum.nu.size() - 1;
    std::vector<CellSplit> partial(cells);
    const bool mirror = !cfg.free_space();

    loop(cells, [&](std::size_t i) {
        const double lo = spectrum.nu[i];
        const double hi = spectrum.nu[i + 1];
        const double dlo = spectrum.density[i];
        const double dhi = spectrum.density[i + 1];
        if (hi <= cfg.omega) return;  // below threshold, kernels vanish

        // Density is linear inside the cell; the kernel is evaluated exactly
        // at the sub-nodes. Cells touching the turn-on region get extra
        // resolution because m ~ d^3 starts from zero there.
        const int sub = (lo < band_hi && hi > cfg.omega) ? 8 : 1;
        CellSplit& slot = partial[i];
        for (int s = 0; s < sub; ++s) {
            const double frac0 = static_cast<double>(s) / sub;
            const double frac1 = static_cast<double>(s + 1) / sub;
            const double nu0 = lo + (hi - lo) * frac0;
            const double nu1 = lo + (hi - lo) * frac1;
            const double den0 = dlo + (dhi - dlo) * frac0;
            const double den1 = dlo + (dhi - dlo) * frac1;
            const double half_width = 0.5 * (nu1 - nu0);
            for (Channel c : kChannels) {
                const std::size_t ci = channel_index(c);
                slot.free_parts[ci] += half_width * (den0 * kernel_free(c, cfg, nu0) +
                                                     den1 * kernel_free(c, cfg, nu1));
                if (mirror)
                    slot.reflected_parts[ci] +=
                        half_width * (den0 * kernel_reflected(c, o, cfg, nu0) +
                                      den1 * kernel_reflected(c, o, cfg, nu1));
            }
        }
    });

    // Serial accumulation in cell order: totals are independent of threads.
    for (const CellSplit& slot : partial)
        for (std::size_t ci = 0; ci < 3; ++ci) {
            report.free_parts[ci] += slot.free_parts[ci] / kPi;
            report.reflected_parts[ci] += slot.reflected_parts[ci] / kPi;
        }
    finalize(report);
    return report;
}

}  // namespace

ImGammaReport im_gamma(const PhysicalConfig& cfg, const LineSpectrum& spectrum, Orientation o) {
    cfg.validate();
    ImGammaReport report;
    report.orientation = o;
    report.duration = spectrum.duration;
    const bool mirror = !cfg.free_space();
    for (const SpectralLine& line : spectrum.lines) {
        if (line.nu < 0.0) throw std::invalid_argument("im_gamma: line nu must be non-negative");
        if (line.weight < 0.0)
            throw std::invalid_argument("im_gamma: line weight must be non-negative");
        // The stored line at +nu carries a mirrored partner at -nu; kernels
        // are even, hence the factor 2.
        for (Channel c : kChannels) {
            const std::size_t ci = channel_index(c);
            report.free_parts[ci] += 2.0 * line.weight * kernel_free(c, cfg, line.nu);
            if (mirror)
                report.reflected_parts[ci] +=
                    2.0 * line.weight * kernel_reflected(c, o, cfg, line.nu);
        }
    }
    finalize(report);
    return report;
}

ImGammaReport im_gamma(const PhysicalConfig& cfg, const GriddedSpectrum& spectrum,
                       Orientation o) {
    return gridded_impl(cfg, spectrum, o,
                        [](std::size_t n, auto&& f) { for_each_index(n, f); });
}

ImGammaReport im_gamma_serial(const PhysicalConfig& cfg, const GriddedSpectrum& spectrum,
                              Orientation o) {
    return gridded_impl(cfg, spectrum, o,
                        [](std::size_t n, auto&& f) { for_each_index_serial(n, f); });
}

ImGammaReport im_gamma(const PhysicalConfig& cfg, const MotionSpec& motion, Orientation o) {
    if (const auto* mono = std::get_if<MonochromaticMotion>(&motion))
        return im_gamma(cfg, line_spectrum(*mono), o);
    return im_gamma(cfg, sampled_spectrum(std::get<SampledMotion>(motion)), o);
}

}  // namespace mirrad

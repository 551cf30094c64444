#pragma once

#include <array>
#include <string>
#include <vector>

#include "mirrad/kernels.hpp"
#include "mirrad/trajectory.hpp"
#include "mirrad/types.hpp"

namespace mirrad {

// Im Gamma = integral (dnu / 2 pi) |y(nu)|^2 m(nu), split by channel and by
// free versus mirror-induced part. The vacuum persistence probability is
// exp(-2 Im Gamma) and rate = 2 Im Gamma / duration.
struct ImGammaReport {
    Orientation orientation = Orientation::Perpendicular;
    std::array<double, 3> free_parts{};       // indexed like kChannels
    std::array<double, 3> reflected_parts{};  // all zero in free space
    double total = 0.0;
    double duration = 0.0;
    double rate = 0.0;
    double vacuum_persistence = 1.0;
    std::vector<std::string> warnings;
};

ImGammaReport im_gamma(const PhysicalConfig& cfg, const LineSpectrum& spectrum, Orientation o);

// Gridded form: trapezoid cells with the density linear inside each cell and
// the kernel exact at the nodes; cells straddling the threshold region
// (omega, 1.1 omega) are subdivided so the kernel's d^3 turn-on is resolved.
// Warns when the grid is too coarse near threshold for that to help.
ImGammaReport im_gamma(const PhysicalConfig& cfg, const GriddedSpectrum& spectrum, Orientation o);
ImGammaReport im_gamma_serial(const PhysicalConfig& cfg, const GriddedSpectrum& spectrum,
                              Orientation o);

ImGammaReport im_gamma(const PhysicalConfig& cfg, const MotionSpec& motion, Orientation o);

}  // namespace mirrad

#pragma once

#include <array>
#include <string>
#include <vector>

#include "mirrad/types.hpp"

namespace mirrad {

// Dissipation channels of the center-of-mass motion, labeled by the pair of
// field operators whose correlator drives them.
enum class Channel { EE, EB, BB };

inline constexpr std::array<Channel, 3> kChannels = {Channel::EE, Channel::EB, Channel::BB};

std::string to_string(Channel c);
std::size_t channel_index(Channel c);

// Spectral kernels m(nu) of the imaginary part of the in-out effective
// action: Im Gamma = integral (dnu / 2 pi) |y(nu)|^2 m(nu). All kernels are
// even in nu and vanish for |nu| <= omega (the threshold itself included).
// The free-space parts are orientation independent; the mirror-induced parts
// depend on whether the motion is parallel or perpendicular to the mirror
// and oscillate with the distance through the envelopes of x = a(|nu|-omega).
double kernel_free(Channel c, const PhysicalConfig& cfg, double nu);

// Mirror-induced part. Throws std::domain_error for a free-space config.
double kernel_reflected(Channel c, Orientation o, const PhysicalConfig& cfg, double nu);

// Free part plus, at finite distance, the mirror-induced part.
double kernel_total(Channel c, Orientation o, const PhysicalConfig& cfg, double nu);

double kernel_free_sum(const PhysicalConfig& cfg, double nu);
double kernel_total_sum(Orientation o, const PhysicalConfig& cfg, double nu);

// Full-to-free kernel ratio per orientation, evaluated through the kernel
// routines at nu = omega + x / a. A function of x alone; the grid form below
// is what the kernels CLI command prints. Requires finite distance and x > 0.
struct RatioPoint {
    double x = 0.0;
    double parallel = 0.0;
    double perpendicular = 0.0;
};

std::vector<RatioPoint> kernel_ratio_curve(Channel c, const PhysicalConfig& cfg,
                                           const std::vector<double>& xs);
std::vector<RatioPoint> kernel_ratio_curve_serial(Channel c, const PhysicalConfig& cfg,
                                                  const std::vector<double>& xs);

}  // namespace mirrad

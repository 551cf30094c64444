#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mirrad {

// Natural units (hbar = c = 1) throughout. Charge enters only as e^2;
// the default is the fine-structure value 4*pi/137.
struct PhysicalConfig {
    double e2 = 4.0 * 3.14159265358979323846 / 137.0;
    double mass = 1.0;
    double omega = 1.0;
    // Distance to the mirror. +inf means free space.
    double distance_a = std::numeric_limits<double>::infinity();

    bool free_space() const { return !std::isfinite(distance_a); }

    // Throws std::invalid_argument on a non-physical configuration.
    void validate() const;
};

enum class Orientation { Parallel, Perpendicular };

std::string to_string(Orientation o);

struct KernelValue {
    double nu = 0.0;
    double value = 0.0;
};

}  // namespace mirrad

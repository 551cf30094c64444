#include "mirrad/types.hpp"

#include <cmath>

namespace mirrad {

void PhysicalConfig::validate() const {
    if (!(e2 > 0.0) || !std::isfinite(e2))
        throw std::invalid_argument("e2 must be positive and finite");
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw std::invalid_argument("mass must be positive and finite");
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("omega must be positive and finite");
    if (std::isnan(distance_a) || distance_a <= 0.0)
        throw std::invalid_argument("distance_a must be positive (inf for free space)");
}

std::string to_string(Orientation o) {
    return o == Orientation::Parallel ? "parallel" : "perpendicular";
}

}  // namespace mirrad

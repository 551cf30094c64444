#pragma once

#include "mirrad/kernels.hpp"
#include "mirrad/types.hpp"

namespace mirrad {

// Cross-check route for the closed-form results. These start from the mode
// integrals: the radial integral collapses on the energy shell analytically,
// and the remaining direction-cosine integral is done by adaptive quadrature
// rather than through the tabulated envelopes. Deliberately slower and
// structurally independent of the envelope code; tests and the validate
// command compare the two routes, they are never merged.

// Mirror-induced kernel part. Throws std::domain_error for free space.
double reflected_kernel_reference(Channel c, Orientation o, const PhysicalConfig& cfg,
                                  double nu);

// Photon-number density per unit k and unit motion line weight, orientation
// perpendicular, polarization averaged. Finite distance only.
double decay_spectrum_reference(const PhysicalConfig& cfg, double k);
double excitation_spectrum_reference(const PhysicalConfig& cfg, double k);

}  // namespace mirrad

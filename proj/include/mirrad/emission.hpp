#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mirrad/trajectory.hpp"
#include "mirrad/types.hpp"

namespace mirrad {

// Field mode in the half space bounded by the mirror at z = 0, evaluated at
// one point. Polarization 1 has no component along the normal; polarization
// 2 carries the normal component. Both satisfy the perfect-conductor
// condition (tangential part vanishing on the mirror) and are divergence
// free.
struct ModeVector {
    std::complex<double> x{}, y{}, z{};
};

ModeVector mirror_mode(int polarization, double kx, double ky, double kz, double px, double py,
                       double pz);

// Decay of the first excited oscillator level with the center of mass at
// rest. The angular density is per unit solid angle on the outgoing
// hemisphere, uniform grid in the direction cosine u in [0, 1], and the
// total rate integrates it exactly. Includes the 1/3 isotropic average over
// the oscillation direction; the free-space limit is e^2 omega^2 / (6 pi m).
struct StaticRate {
    double rate = 0.0;
    std::vector<double> cos_theta;
    std::vector<double> density;
};

StaticRate static_decay_rate(const PhysicalConfig& cfg, int points = 1001);

// Leading change of the static rate caused by center-of-mass motion
// perpendicular to the mirror, proportional to the time average of y^2 and
// independent of the drive frequency. Always negative: the interference of
// the displaced emission amplitude with the static one is destructive after
// the polarization sum, and its angular weight is u^2 times the static
// pattern.
double static_correction_rate(const PhysicalConfig& cfg, double mean_square_displacement);

// Angular densities of the motion-induced photons, one column per
// polarization, scaled by a^2 so they depend only on ka and omega a. The
// grid is uniform in cos theta on [-1, 1]; the densities are functions of
// |cos theta|, so the table is exactly symmetric about theta = pi/2.
struct AngularDensity {
    std::vector<double> cos_theta;
    std::vector<double> p1, p2;
};

AngularDensity decay_angular_density(double ka, double omega_a, int points = 2001);
AngularDensity decay_angular_density_serial(double ka, double omega_a, int points = 2001);
AngularDensity excitation_angular_density(double ka, double omega_a, int points = 2001);
AngularDensity excitation_angular_density_serial(double ka, double omega_a, int points = 2001);

// The printed spectra average over the oscillation direction; Summed keeps
// the polarization sum without the 1/3, which triples the motion-induced
// densities. The static pieces always use the physical average.
enum class PolarizationConvention { Averaged, Summed };

// Photon-number density per unit k and unit motion line weight: multiply by
// 2 pi times a line weight for the photon count of that line. Decay photons
// accompany the internal transition down; excitation photons are emitted
// while the oscillator is driven up, and exist for k > 0 only when the
// drive supplies nu = k + omega. Closed forms; below ka = 1/2 an equivalent
// moment form avoids the trigonometric cancellation. k >= 0 required.
double decay_spectral_density(const PhysicalConfig& cfg, double k,
                              PolarizationConvention pol = PolarizationConvention::Averaged);
double excitation_spectral_density(const PhysicalConfig& cfg, double k,
                                   PolarizationConvention pol = PolarizationConvention::Averaged);

namespace emission_detail {
// Both algebraic routes to the averaged densities, exposed so tests can pin
// their agreement across the switch point. Finite distance only.
double decay_braces_form(const PhysicalConfig& cfg, double k);
double decay_moment_form(const PhysicalConfig& cfg, double k);
double excitation_braces_form(const PhysicalConfig& cfg, double k);
double excitation_moment_form(const PhysicalConfig& cfg, double k);
}  // namespace emission_detail

struct SpectrumEntry {
    enum class Kind { Line, Density };
    enum class Tag { Static, StaticCorrection, Dynamic, Excitation };
    double k = 0.0;
    double probability = 0.0;  // photon count for a line, dP/dk for a density
    double rate = 0.0;         // probability / duration
    Kind kind = Kind::Line;
    Tag tag = Tag::Static;
};

std::string to_string(SpectrumEntry::Kind kind);
std::string to_string(SpectrumEntry::Tag tag);

struct SpectrumTable {
    std::vector<SpectrumEntry> entries;
    std::vector<std::string> warnings;
    double duration = 0.0;
};

enum class SpectrumMode { Decay, Excitation, Full };

// Emitted-photon bookkeeping for one observation of length duration:
// the static line at k = omega with its motional correction, the dynamic
// sidebands k = omega +- nu, and for drive content above the gap the
// excitation photons at k = nu - omega. Implemented for motion
// perpendicular to the mirror; the parallel case is available through the
// kernel and effective-action routes only.
SpectrumTable full_spectrum(const PhysicalConfig& cfg, const MotionSpec& motion,
                            Orientation orientation, SpectrumMode mode,
                            PolarizationConvention pol = PolarizationConvention::Averaged);

}  // namespace mirrad

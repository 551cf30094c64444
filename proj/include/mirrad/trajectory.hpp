#pragma once

#include <string>
#include <variant>
#include <vector>

namespace mirrad {

// Center-of-mass displacement y(t) along the chosen orientation, measured
// from the rest position that defines distance_a.
struct MonochromaticMotion {
    double amplitude = 0.0;  // y0
    double omega_cm = 0.0;   // drive frequency
    double duration = 1.0;   // total observation time T
};

struct SampledMotion {
    std::vector<double> times;          // uniform grid
    std::vector<double> displacements;  // same length
};

using MotionSpec = std::variant<MonochromaticMotion, SampledMotion>;

// Discrete lines of |y(nu)|^2: the density is 2 pi * weight at +nu and -nu.
// A monochromatic cosine of amplitude y0 observed for time T carries
// weight = y0^2 T / 4 at nu = omega_cm. Only nu >= 0 is stored; consumers
// add the mirrored negative-frequency line themselves.
struct SpectralLine {
    double nu = 0.0;
    double weight = 0.0;
};

struct LineSpectrum {
    std::vector<SpectralLine> lines;
    double duration = 0.0;
};

// |y(nu)|^2 sampled on the uniform one-sided frequency grid
// nu_m = 2 pi m / (N dt), m = 0 .. N/2. Even in nu, like the line form.
struct GriddedSpectrum {
    std::vector<double> nu;
    std::vector<double> density;
    double duration = 0.0;
};

enum class Window { Hann, Rectangular };

// Line form of the monochromatic spectrum; empty line list when y0 = 0.
LineSpectrum line_spectrum(const MonochromaticMotion& motion);

// Windowed periodogram of a uniformly sampled trajectory. The window is
// normalized to unit mean square power, which keeps both the recovered line
// weight of a sinusoid and the Parseval sum close to the unwindowed truth.
// Requires at least 16 samples on a uniform grid (step tolerance 1e-6 dt).
GriddedSpectrum sampled_spectrum(const SampledMotion& motion, Window window = Window::Hann);
GriddedSpectrum sampled_spectrum_serial(const SampledMotion& motion,
                                        Window window = Window::Hann);

// Two whitespace-separated columns t y, '#' comments allowed. The first
// non-blank line must be the header comment "# units: natural" so a file in
// lab units cannot be ingested silently. Throws IoError on any violation.
SampledMotion load_trajectory(const std::string& path);

// Time average of y^2, the input to the static-rate correction.
double mean_square_displacement(const MotionSpec& motion);

// Sanity warnings (nonrelativistic expansion, degenerate drives); empty
// when nothing is suspicious.
std::vector<std::string> motion_warnings(const MotionSpec& motion);

double motion_duration(const MotionSpec& motion);

}  // namespace mirrad

#include <cmath>
#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "mirrad/io.hpp"
#include "mirrad/trajectory.hpp"

using namespace mirrad;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Bin-centered cosine: m_line periods over n samples.
SampledMotion make_sinusoid(double y0, std::size_t n, std::size_t m_line, double omega_cm) {
    SampledMotion motion;
    const double dt = 2.0 * kPi * static_cast<double>(m_line) /
                      (static_cast<double>(n) * omega_cm);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        motion.times.push_back(t);
        motion.displacements.push_back(y0 * std::cos(omega_cm * t));
    }
    return motion;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/mirrad_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("monochromatic line carries y0^2 T / 4") {
    MonochromaticMotion motion{0.02, 1.3, 200.0};
    const LineSpectrum spec = line_spectrum(motion);
    REQUIRE(spec.lines.size() == 1);
    CHECK(spec.lines[0].nu == 1.3);
    CHECK(spec.lines[0].weight == doctest::Approx(0.02 * 0.02 * 200.0 / 4.0).epsilon(1e-15));
    CHECK(spec.duration == 200.0);

    MonochromaticMotion still{0.0, 1.3, 200.0};
    CHECK(line_spectrum(still).lines.empty());
}

TEST_CASE("periodogram recovers the line weight of a sinusoid") {
    const double y0 = 0.05, omega_cm = 2.0;
    const std::size_t n = 4096, m_line = 64;
    const SampledMotion motion = make_sinusoid(y0, n, m_line, omega_cm);
    const GriddedSpectrum spec = sampled_spectrum(motion);

    REQUIRE(spec.nu.size() == n / 2 + 1);
    CHECK(spec.nu[m_line] == doctest::Approx(omega_cm).epsilon(1e-12));

    const double dnu = spec.nu[1] - spec.nu[0];
    const double w_expected = y0 * y0 * spec.duration / 4.0;

    // Bin-centered Hann line: three bins, their sum restores the weight.
    double w_recovered = 0.0;
    for (std::size_t m = m_line - 1; m <= m_line + 1; ++m)
        w_recovered += spec.density[m] * dnu / (2.0 * kPi);
    CHECK(w_recovered == doctest::Approx(w_expected).epsilon(0.05));

    // Away from the line the leakage is at machine level.
    CHECK(spec.density[m_line + 30] < 1e-20 * spec.density[m_line]);
}

TEST_CASE("periodogram satisfies Parseval for the windowed signal") {
    const SampledMotion motion = make_sinusoid(0.1, 1024, 16, 1.0);
    const GriddedSpectrum spec = sampled_spectrum(motion);
    const double dt = motion.times[1] - motion.times[0];
    const double dnu = spec.nu[1] - spec.nu[0];

    // Reconstruct the window normalization used inside.
    const std::size_t n = motion.times.size();
    double mean_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                               static_cast<double>(n)));
        mean_sq += w * w;
    }
    mean_sq /= static_cast<double>(n);

    double windowed_power = 0.0;
    double plain_power = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                               static_cast<double>(n)));
        const double y = motion.displacements[i];
        windowed_power += w * w / mean_sq * y * y * dt;
        plain_power += y * y * dt;
    }

    double spectral_power = spec.density[0] + spec.density[n / 2];
    for (std::size_t m = 1; m < n / 2; ++m) spectral_power += 2.0 * spec.density[m];
    spectral_power *= dnu / (2.0 * kPi);

    CHECK(spectral_power == doctest::Approx(windowed_power).epsilon(1e-10));
    CHECK(spectral_power == doctest::Approx(plain_power).epsilon(0.01));
}

TEST_CASE("rectangular window available for bin-centered input") {
    const SampledMotion motion = make_sinusoid(0.03, 512, 8, 1.0);
    const GriddedSpectrum spec = sampled_spectrum(motion, Window::Rectangular);
    const double dnu = spec.nu[1] - spec.nu[0];
    const double w = spec.density[8] * dnu / (2.0 * kPi);
    CHECK(w == doctest::Approx(0.03 * 0.03 * spec.duration / 4.0).epsilon(1e-10));
}

TEST_CASE("sampling validation") {
    SampledMotion short_motion;
    for (int i = 0; i < 8; ++i) {
        short_motion.times.push_back(i * 0.1);
        short_motion.displacements.push_back(0.0);
    }
    CHECK_THROWS_AS(sampled_spectrum(short_motion), std::invalid_argument);

    SampledMotion uneven = make_sinusoid(0.1, 64, 4, 1.0);
    uneven.times[10] += 0.01;
    CHECK_THROWS_AS(sampled_spectrum(uneven), std::invalid_argument);
}

TEST_CASE("trajectory file parsing") {
    TempFile good("good.txt",
                  "# units: natural\n"
                  "# t y\n"
                  "0.0 0.1\n"
                  "0.5 0.2 # inline note\n"
                  "1.0 -0.1\n");
    const SampledMotion motion = load_trajectory(good.path);
    REQUIRE(motion.times.size() == 3);
    CHECK(motion.times[1] == 0.5);
    CHECK(motion.displacements[2] == -0.1);

    TempFile no_header("no_header.txt", "0.0 0.1\n1.0 0.2\n");
    CHECK_THROWS_AS(load_trajectory(no_header.path), IoError);

    TempFile wrong_units("wrong_units.txt", "# units: si\n0.0 0.1\n");
    CHECK_THROWS_AS(load_trajectory(wrong_units.path), IoError);

    TempFile bad_row("bad_row.txt", "# units: natural\n0.0 oops\n");
    CHECK_THROWS_AS(load_trajectory(bad_row.path), IoError);

    CHECK_THROWS_AS(load_trajectory("/nonexistent/trajectory.txt"), IoError);
}

TEST_CASE("mean square displacement") {
    CHECK(mean_square_displacement(MonochromaticMotion{0.2, 1.0, 10.0}) ==
          doctest::Approx(0.02).epsilon(1e-15));
    const SampledMotion motion = make_sinusoid(0.2, 2048, 32, 1.0);
    CHECK(mean_square_displacement(motion) == doctest::Approx(0.02).epsilon(1e-3));
}

TEST_CASE("relativistic drive warned about") {
    CHECK(motion_warnings(MonochromaticMotion{0.3, 1.0, 10.0}).size() == 1);
    CHECK(motion_warnings(MonochromaticMotion{0.01, 1.0, 10.0}).empty());
    CHECK(motion_warnings(MonochromaticMotion{0.3, 0.0, 10.0}).size() == 1);  // static drive
}

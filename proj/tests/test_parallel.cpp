#include <cmath>
#include <vector>

#include <doctest.h>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirrad/effective_action.hpp"
#include "mirrad/emission.hpp"
#include "mirrad/kernels.hpp"
#include "mirrad/parallel.hpp"
#include "mirrad/trajectory.hpp"

using namespace mirrad;

namespace {

constexpr double kPi = 3.14159265358979323846;

SampledMotion test_motion() {
    SampledMotion motion;
    const std::size_t n = 2048;
    const double dt = 0.02;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        motion.times.push_back(t);
        motion.displacements.push_back(0.01 * std::cos(2.0 * t) + 0.003 * std::sin(0.7 * t));
    }
    return motion;
}

template <typename Fn>
void with_thread_counts(Fn&& fn) {
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    for (int threads : {1, 4}) {
        omp_set_num_threads(threads);
        fn();
    }
    omp_set_num_threads(saved);
#else
    fn();
#endif
}

}  // namespace

TEST_CASE("for_each_index covers every slot once") {
    std::vector<int> hits(1000, 0);
    for_each_index(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
}

TEST_CASE("ratio curves are identical in parallel and serial") {
    PhysicalConfig cfg;
    cfg.distance_a = 1.0;
    std::vector<double> xs;
    for (int i = 0; i < 5000; ++i) xs.push_back(0.01 + 30.0 * i / 4999.0);

    const auto serial = kernel_ratio_curve_serial(Channel::EB, cfg, xs);
    with_thread_counts([&] {
        const auto parallel = kernel_ratio_curve(Channel::EB, cfg, xs);
        REQUIRE(parallel.size() == serial.size());
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(parallel[i].parallel == serial[i].parallel);
            CHECK(parallel[i].perpendicular == serial[i].perpendicular);
        }
    });
}

TEST_CASE("angular tables are identical in parallel and serial") {
    const auto serial = decay_angular_density_serial(9.0, 10.0, 4001);
    with_thread_counts([&] {
        const auto parallel = decay_angular_density(9.0, 10.0, 4001);
        for (std::size_t i = 0; i < serial.p1.size(); ++i) {
            CHECK(parallel.p1[i] == serial.p1[i]);
            CHECK(parallel.p2[i] == serial.p2[i]);
        }
    });
}

TEST_CASE("periodograms are identical in parallel and serial") {
    const SampledMotion motion = test_motion();
    const GriddedSpectrum serial = sampled_spectrum_serial(motion);
    with_thread_counts([&] {
        const GriddedSpectrum parallel = sampled_spectrum(motion);
        REQUIRE(parallel.density.size() == serial.density.size());
        for (std::size_t i = 0; i < serial.density.size(); ++i) {
            CHECK(parallel.nu[i] == serial.nu[i]);
            CHECK(parallel.density[i] == serial.density[i]);
        }
    });
}

TEST_CASE("gridded action sums are identical in parallel and serial") {
    PhysicalConfig cfg;
    cfg.distance_a = 1.0;
    GriddedSpectrum spec;
    const std::size_t n = 3001;
    for (std::size_t i = 0; i < n; ++i) {
        const double nu = 6.0 * static_cast<double>(i) / static_cast<double>(n - 1);
        spec.nu.push_back(nu);
        spec.density.push_back(1e-6 * (1.0 + std::sin(3.0 * nu) * std::sin(3.0 * nu)));
    }
    spec.duration = 25.0;

    const ImGammaReport serial = im_gamma_serial(cfg, spec, Orientation::Parallel);
    with_thread_counts([&] {
        const ImGammaReport parallel = im_gamma(cfg, spec, Orientation::Parallel);
        CHECK(parallel.total == serial.total);
        for (std::size_t c = 0; c < kChannels.size(); ++c) {
            CHECK(parallel.free_parts[c] == serial.free_parts[c]);
            CHECK(parallel.reflected_parts[c] == serial.reflected_parts[c]);
        }
        CHECK(parallel.vacuum_persistence == serial.vacuum_persistence);
    });
}

TEST_CASE("periodogram frequencies line up with the analytic bin spacing") {
    const SampledMotion motion = test_motion();
    const GriddedSpectrum spec = sampled_spectrum(motion);
    const double dnu = 2.0 * kPi / (2048.0 * 0.02);
    for (std::size_t m = 0; m < spec.nu.size(); ++m)
        CHECK(spec.nu[m] == doctest::Approx(dnu * static_cast<double>(m)).epsilon(1e-12));
}

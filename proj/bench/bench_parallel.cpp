// Timing comparison of the parallel kernels against their serial references.
// Each workload is timed best-of-three after a warmup pass; results feed the
// check that the OpenMP paths stay worth their extra plumbing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mirrad/effective_action.hpp"
#include "mirrad/emission.hpp"
#include "mirrad/kernels.hpp"
#include "mirrad/trajectory.hpp"

using namespace mirrad;

namespace {

constexpr double kPi = 3.14159265358979323846;

template <typename Fn>
double best_of_three_ms(Fn&& fn) {
    fn();  // warmup
    double best = 1e300;
    for (int i = 0; i < 3; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %8.2f ms   parallel %8.2f ms   speedup %.2fx\n", name, serial_ms,
                parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp disabled, serial build\n");
#endif

    PhysicalConfig cfg;
    cfg.distance_a = 1.0;

    {
        std::vector<double> xs;
        for (int i = 0; i < 200000; ++i) xs.push_back(0.01 + 30.0 * i / 199999.0);
        volatile double sink = 0.0;
        const double s = best_of_three_ms([&] {
            const auto c = kernel_ratio_curve_serial(Channel::EE, cfg, xs);
            sink = c.back().parallel;
        });
        const double p = best_of_three_ms([&] {
            const auto c = kernel_ratio_curve(Channel::EE, cfg, xs);
            sink = c.back().parallel;
        });
        report("ratio curve", s, p);
    }

    {
        volatile double sink = 0.0;
        const double s = best_of_three_ms([&] {
            const auto t = decay_angular_density_serial(9.0, 10.0, 2000001);
            sink = t.p2.back();
        });
        const double p = best_of_three_ms([&] {
            const auto t = decay_angular_density(9.0, 10.0, 2000001);
            sink = t.p2.back();
        });
        report("angular density", s, p);
    }

    {
        SampledMotion motion;
        const std::size_t n = 16384;
        const double dt = 0.02;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = static_cast<double>(i) * dt;
            motion.times.push_back(t);
            motion.displacements.push_back(0.01 * std::cos(2.0 * t) +
                                           0.002 * std::sin(0.31 * t));
        }
        volatile double sink = 0.0;
        const double s = best_of_three_ms([&] {
            const auto spec = sampled_spectrum_serial(motion);
            sink = spec.density.back();
        });
        const double p = best_of_three_ms([&] {
            const auto spec = sampled_spectrum(motion);
            sink = spec.density.back();
        });
        report("periodogram", s, p);
    }

    {
        GriddedSpectrum spec;
        const std::size_t n = 400001;
        for (std::size_t i = 0; i < n; ++i) {
            const double nu = 6.0 * static_cast<double>(i) / static_cast<double>(n - 1);
            spec.nu.push_back(nu);
            spec.density.push_back(1e-6 * (1.0 + 0.5 * std::sin(kPi * nu)));
        }
        spec.duration = 50.0;
        volatile double sink = 0.0;
        const double s = best_of_three_ms([&] {
            sink = im_gamma_serial(cfg, spec, Orientation::Perpendicular).total;
        });
        const double p = best_of_three_ms(
            [&] { sink = im_gamma(cfg, spec, Orientation::Perpendicular).total; });
        report("gridded action", s, p);
    }

    return 0;
}

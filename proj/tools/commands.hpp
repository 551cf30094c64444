#pragma once

#include <optional>
#include <string>

#include "mirrad/types.hpp"

namespace mirrad::cli {

struct CommonOpts {
    double e2 = PhysicalConfig{}.e2;
    double mass = 1.0;
    double omega = 1.0;
    double a = PhysicalConfig{}.distance_a;
    int threads = 0;  // 0 keeps the runtime default
    std::string out;  // empty writes to stdout
    std::string format = "csv";
    std::string config_file;  // merged in before parsing, flags win

    PhysicalConfig physical() const;
    void apply_threads() const;
};

struct KernelsOpts {
    std::string channel = "all";
    double x_min = 0.01;
    double x_max = 30.0;
    int points = 400;
};

struct AngularOpts {
    double ka = 0.0;
    double omega_a = 0.0;
    int theta_points = 2001;
    std::string process = "decay";
};

struct MotionOpts {
    double y0 = 0.0;
    double omega_cm = 0.0;
    double duration = 1.0;
    std::string traj;  // overrides the monochromatic parameters when set
};

struct SpectrumOpts {
    MotionOpts motion;
    std::string mode = "full";
    std::string orientation = "perp";
    std::string polarization = "averaged";
};

struct ImGammaOpts {
    MotionOpts motion;
    std::string orientation;
};

struct ValidateOpts {
    std::optional<double> tol;
};

int run_kernels(const CommonOpts& common, const KernelsOpts& opts);
int run_angular(const CommonOpts& common, const AngularOpts& opts);
int run_spectrum(const CommonOpts& common, const SpectrumOpts& opts);
int run_imgamma(const CommonOpts& common, const ImGammaOpts& opts);
int run_validate(const CommonOpts& common, const ValidateOpts& opts);

}  // namespace mirrad::cli

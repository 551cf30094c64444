#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mirrad/io.hpp"

namespace {

using mirrad::cli::CommonOpts;

void add_common(CLI::App* sub, CommonOpts& opts, bool physical) {
    if (physical) {
        sub->add_option("--e2", opts.e2, "squared charge, default 4 pi / 137");
        sub->add_option("--mass", opts.mass, "oscillator mass");
        sub->add_option("--omega", opts.omega, "oscillator frequency");
        sub->add_option("--a,--distance-a,--distance_a", opts.a,
                        "distance to the mirror; inf selects free space");
    }
    sub->add_option("--threads", opts.threads, "OpenMP thread count, 0 keeps the default");
    sub->add_option("--out", opts.out, "output file, default stdout");
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--config", opts.config_file,
                    "config file, one 'key = value' per line, keys mirror the long flags "
                    "with - written as _; explicit flags win")
        ->envname("MIRRAD_CONFIG");
}

void add_motion(CLI::App* sub, mirrad::cli::MotionOpts& opts) {
    sub->add_option("--y0", opts.y0, "drive amplitude");
    sub->add_option("--omega-cm,--omega_cm", opts.omega_cm, "drive frequency");
    sub->add_option("--T,--duration", opts.duration, "observation time");
    sub->add_option("--traj", opts.traj,
                    "trajectory file 't y' with '# units: natural' header; overrides the "
                    "monochromatic drive");
}

// Reads a flat 'key = value' config and turns it into flags for sub. Keys the
// user already passed are dropped so the command line keeps the last word.
std::vector<std::string> config_args(CLI::App* sub, const std::string& path,
                                     const std::vector<std::string>& user_args) {
    std::ifstream in(path);
    if (!in) throw mirrad::IoError("cannot open config file " + path);

    const auto trim = [](const std::string& s) {
        const char* ws = " \t\r";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        return s.substr(b, s.find_last_not_of(ws) - b + 1);
    };

    std::vector<std::string> extra;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto at = [&] { return path + ":" + std::to_string(line_no) + ": "; };
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::invalid_argument(at() + "expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument(at() + "expected 'key = value'");
        if (key == "config") throw std::invalid_argument(at() + "config files do not nest");

        CLI::Option* opt = sub->get_option_no_throw("--" + key);
        if (opt == nullptr) {
            std::string dashed = key;
            std::replace(dashed.begin(), dashed.end(), '_', '-');
            opt = sub->get_option_no_throw("--" + dashed);
        }
        if (opt == nullptr) throw std::invalid_argument(at() + "unknown key '" + key + "'");

        bool given = false;
        for (const std::string& lname : opt->get_lnames())
            for (const std::string& arg : user_args)
                given = given || arg == "--" + lname || arg.rfind("--" + lname + "=", 0) == 0;
        if (!given) {
            extra.push_back("--" + opt->get_lnames().front());
            extra.push_back(value);
        }
    }
    return extra;
}

// Splices config-file settings in right after the subcommand name, so they
// parse exactly like flags typed there. CLI11 never reads config files for
// subcommands on its own.
std::vector<std::string> merge_config(const std::vector<CLI::App*>& subs,
                                      std::vector<std::string> args) {
    for (const std::string& arg : args)
        if (arg == "--help" || arg == "-h" || arg == "--help-all") return args;

    std::size_t sub_at = args.size();
    CLI::App* sub = nullptr;
    for (std::size_t i = 0; i < args.size() && sub == nullptr; ++i)
        for (CLI::App* s : subs)
            if (args[i] == s->get_name()) {
                sub = s;
                sub_at = i;
                break;
            }
    if (sub == nullptr) return args;

    std::string path;
    for (std::size_t i = sub_at + 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty())
        if (const char* env = std::getenv("MIRRAD_CONFIG")) path = env;
    if (path.empty()) return args;

    const std::vector<std::string> user(args.begin() + static_cast<long>(sub_at) + 1, args.end());
    const std::vector<std::string> extra = config_args(sub, path, user);
    args.insert(args.begin() + static_cast<long>(sub_at) + 1, extra.begin(), extra.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radiation of a harmonically bound charge moved near a perfect mirror"};
    app.require_subcommand(1);

    CommonOpts kernels_common, angular_common, spectrum_common, imgamma_common, validate_common;
    kernels_common.a = 1.0;  // kernel ratios need a mirror present
    mirrad::cli::KernelsOpts kernels_opts;
    mirrad::cli::AngularOpts angular_opts;
    mirrad::cli::SpectrumOpts spectrum_opts;
    mirrad::cli::ImGammaOpts imgamma_opts;
    mirrad::cli::ValidateOpts validate_opts;

    CLI::App* kernels = app.add_subcommand(
        "kernels", "Full-to-free kernel ratio curves against x = a (|nu| - omega)");
    add_common(kernels, kernels_common, true);
    kernels->add_option("--channel", kernels_opts.channel, "ee, eb, bb, or all")
        ->check(CLI::IsMember({"ee", "eb", "bb", "all"}));
    kernels->add_option("--x-min,--x_min", kernels_opts.x_min, "lower edge of the x grid");
    kernels->add_option("--x-max,--x_max", kernels_opts.x_max, "upper edge of the x grid");
    kernels->add_option("--points", kernels_opts.points, "grid size");

    CLI::App* angular = app.add_subcommand(
        "angular", "Angular density of motion-induced photons, dimensionless in ka and omega a");
    add_common(angular, angular_common, false);
    angular->add_option("--ka", angular_opts.ka, "photon momentum times distance")->required();
    angular->add_option("--omega-a,--omega_a", angular_opts.omega_a,
                        "oscillator frequency times distance")
        ->required();
    angular->add_option("--theta-points,--theta_points", angular_opts.theta_points,
                        "grid size in cos theta");
    angular->add_option("--process", angular_opts.process, "decay or excitation")
        ->check(CLI::IsMember({"decay", "excitation"}));

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Emitted-photon spectrum for a driven atom, perpendicular motion");
    add_common(spectrum, spectrum_common, true);
    add_motion(spectrum, spectrum_opts.motion);
    spectrum->add_option("--mode", spectrum_opts.mode, "decay, excitation, or full")
        ->check(CLI::IsMember({"decay", "excitation", "full"}));
    spectrum->add_option("--orientation", spectrum_opts.orientation, "motion orientation")
        ->check(CLI::IsMember({"perp", "perpendicular", "par", "parallel"}));
    spectrum->add_option("--polarization", spectrum_opts.polarization,
                         "averaged or summed convention")
        ->check(CLI::IsMember({"averaged", "summed"}));

    CLI::App* imgamma = app.add_subcommand(
        "imgamma", "Im Gamma of the effective action, split by channel and mirror part");
    add_common(imgamma, imgamma_common, true);
    add_motion(imgamma, imgamma_opts.motion);
    imgamma->add_option("--orientation", imgamma_opts.orientation, "motion orientation")
        ->check(CLI::IsMember({"perp", "perpendicular", "par", "parallel"}))
        ->required();

    CLI::App* validate = app.add_subcommand("validate", "Built-in cross checks");
    add_common(validate, validate_common, false);
    validate->add_option("--tol", validate_opts.tol,
                         "replace the relative tolerances of all checks");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config({kernels, angular, spectrum, imgamma, validate}, std::move(args));
    } catch (const mirrad::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (kernels->parsed()) return mirrad::cli::run_kernels(kernels_common, kernels_opts);
        if (angular->parsed()) return mirrad::cli::run_angular(angular_common, angular_opts);
        if (spectrum->parsed()) return mirrad::cli::run_spectrum(spectrum_common, spectrum_opts);
        if (imgamma->parsed()) return mirrad::cli::run_imgamma(imgamma_common, imgamma_opts);
        if (validate->parsed()) return mirrad::cli::run_validate(validate_common, validate_opts);
    } catch (const mirrad::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

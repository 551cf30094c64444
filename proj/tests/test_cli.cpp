#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

constexpr double kPi = 3.14159265358979323846;

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* cli_path() {
    const char* p = std::getenv("MIRRAD_CLI");
    REQUIRE_MESSAGE(p != nullptr, "MIRRAD_CLI must point at the built binary");
    return p;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int serial = 0;
    const std::string stem = "/tmp/mirrad_cli_" + std::to_string(++serial);
    const std::string out_path = stem + ".out";
    const std::string err_path = stem + ".err";
    std::string cmd = env_prefix;
    if (!cmd.empty()) cmd += " ";
    cmd += "\"" + std::string(cli_path()) + "\" " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

std::string sinusoid_file(double y0, double omega_cm, std::size_t n, std::size_t m_line) {
    const double dt =
        2.0 * kPi * static_cast<double>(m_line) / (static_cast<double>(n) * omega_cm);
    std::ostringstream out;
    out << "# units: natural\n";
    out.setf(std::ios::scientific);
    out.precision(17);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        out << t << " " << y0 * std::cos(omega_cm * t) << "\n";
    }
    return out.str();
}

}  // namespace

TEST_CASE("kernels defaults produce the full channel table") {
    const RunResult r = run_cli("kernels");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 401);
    CHECK(lines[0] == "x,ee_m1,ee_m2,eb_m1,eb_m2,bb_m1,bb_m2");
    CHECK(split_csv(lines[1]).size() == 7);
}

TEST_CASE("kernels single channel drops the prefix") {
    const RunResult r = run_cli("kernels --channel ee --points 10 --x-min 0.5 --x-max 5");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "x,m1,m2");
    CHECK(split_csv(lines[1])[0] == "5.00000000000e-01");
    CHECK(split_csv(lines[10])[0] == "5.00000000000e+00");
}

TEST_CASE("kernels output is byte deterministic across runs and thread counts") {
    const RunResult a = run_cli("kernels --points 1500 --threads 1");
    const RunResult b = run_cli("kernels --points 1500 --threads 4");
    const RunResult c = run_cli("kernels --points 1500 --threads 4");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(b.out == c.out);
}

TEST_CASE("angular requires the wavenumber") {
    const RunResult r = run_cli("angular --omega-a 10");
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
}

TEST_CASE("angular table is symmetric about the mirror normal") {
    const RunResult r = run_cli("angular --ka 9 --omega-a 10 --theta-points 101");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 102);
    CHECK(lines[0] == "theta,p1,p2,total");
    for (std::size_t i = 1; i <= 101; ++i) {
        const auto row = split_csv(lines[i]);
        const auto mirror = split_csv(lines[102 - i]);
        CHECK(row[1] == mirror[1]);
        CHECK(row[2] == mirror[2]);
        CHECK(row[3] == mirror[3]);
    }
}

TEST_CASE("spectrum without a drive keeps only the static line") {
    const RunResult r = run_cli("spectrum --a 1");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "k,probability,rate,kind,channel");
    const auto row = split_csv(lines[1]);
    CHECK(row[3] == "line");
    CHECK(row[4] == "static");
}

TEST_CASE("spectrum sidebands sit at the drive offsets") {
    const RunResult r = run_cli("spectrum --a 1 --y0 0.01 --omega-cm 0.3");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    const double expected[] = {0.7, 1.0, 1.0, 1.3};
    for (int i = 0; i < 4; ++i) {
        const double k = std::strtod(split_csv(lines[i + 1])[0].c_str(), nullptr);
        CHECK(std::abs(k - expected[i]) < 1e-12);
    }
    CHECK(split_csv(lines[1])[4] == "dynamic");
    CHECK(split_csv(lines[2])[4] == "static");
    CHECK(split_csv(lines[3])[4] == "static_correction");
    CHECK(split_csv(lines[4])[4] == "dynamic");
}

TEST_CASE("sub-gap excitation request warns and emits nothing") {
    const RunResult r = run_cli("spectrum --a 1 --y0 0.01 --omega-cm 0.5 --mode excitation");
    CHECK(r.code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 1);
    CHECK(r.err.find("no excitation channel") != std::string::npos);
}

TEST_CASE("parallel spectra are refused with a pointer to the kernel route") {
    const RunResult r = run_cli("spectrum --a 1 --y0 0.01 --omega-cm 0.5 --orientation par");
    CHECK(r.code == 2);
    CHECK(r.err.find("kernels") != std::string::npos);
}

TEST_CASE("imgamma requires an orientation") {
    const RunResult r = run_cli("imgamma --y0 0.01 --omega-cm 2");
    CHECK(r.code == 2);
}

TEST_CASE("imgamma free space matches the golden rule in json") {
    const RunResult r =
        run_cli("imgamma --orientation perp --y0 0.01 --omega-cm 2 --T 50 --format json");
    CHECK(r.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 9);
    double rate = 0.0, total = 0.0, persistence = 0.0;
    for (const auto& row : doc) {
        const std::string q = row["quantity"].get<std::string>();
        if (q == "rate") rate = row["value"].get<double>();
        if (q == "im_gamma_total") total = row["value"].get<double>();
        if (q == "vacuum_persistence") persistence = row["value"].get<double>();
        if (q == "ee_reflected") CHECK(row["value"].get<double>() == 0.0);
    }
    const double e2 = 4.0 * kPi / 137.0;
    const double expected = 1e-4 * 5.0 * e2 / (24.0 * kPi);
    CHECK(rate == doctest::Approx(expected).epsilon(1e-10));
    CHECK(persistence == doctest::Approx(std::exp(-2.0 * total)).epsilon(1e-12));
}

TEST_CASE("imgamma reports the negative parallel channel with a warning") {
    const RunResult r = run_cli("imgamma --orientation par --a 0.5 --y0 0.01 --omega-cm 3");
    CHECK(r.code == 0);
    CHECK(r.err.find("warning:") != std::string::npos);
    double total = 1.0;
    for (const auto& line : lines_of(r.out)) {
        const auto row = split_csv(line);
        if (row[0] == "im_gamma_total") total = std::strtod(row[1].c_str(), nullptr);
    }
    CHECK(total < 0.0);
}

TEST_CASE("config files feed defaults and flags override them") {
    const TempFile cfg("mirrad_cli_cfg.conf",
                       "# sweep window\n"
                       "x_max = 5\n"
                       "points = 11\n");
    const RunResult from_cfg = run_cli("kernels --config " + cfg.path);
    const RunResult from_flags = run_cli("kernels --x-max 5 --points 11");
    CHECK(from_cfg.code == 0);
    CHECK(from_cfg.out == from_flags.out);

    const RunResult overridden = run_cli("kernels --config " + cfg.path + " --points 7");
    CHECK(overridden.code == 0);
    CHECK(lines_of(overridden.out).size() == 8);

    const RunResult via_env = run_cli("kernels", "MIRRAD_CONFIG=" + cfg.path);
    CHECK(via_env.out == from_cfg.out);
}

TEST_CASE("missing config file maps to the io exit code") {
    const RunResult r = run_cli("kernels --config /tmp/mirrad_missing.conf");
    CHECK(r.code == 3);
}

TEST_CASE("trajectory input reproduces the monochromatic results") {
    const std::size_t n = 4096, m_line = 128;
    const double y0 = 0.004, omega_cm = 2.0;
    const TempFile traj("mirrad_cli_traj.txt", sinusoid_file(y0, omega_cm, n, m_line));
    const double duration =
        static_cast<double>(n) * 2.0 * kPi * static_cast<double>(m_line) /
        (static_cast<double>(n) * omega_cm);
    const double dnu = omega_cm / static_cast<double>(m_line);

    // Decay rate through the effective action, sampled against monochromatic.
    const RunResult sampled = run_cli("imgamma --orientation perp --a 1 --traj " + traj.path);
    const RunResult mono = run_cli("imgamma --orientation perp --a 1 --y0 0.004 --omega-cm 2 --T 10");
    CHECK(sampled.code == 0);
    auto rate_of = [](const RunResult& r) {
        for (const auto& line : lines_of(r.out)) {
            const auto row = split_csv(line);
            if (row[0] == "rate") return std::strtod(row[1].c_str(), nullptr);
        }
        return 0.0;
    };
    CHECK(rate_of(sampled) == doctest::Approx(rate_of(mono)).epsilon(0.05));

    // Upper-sideband probability recovered from the density entries.
    std::ostringstream mono_cmd;
    mono_cmd.precision(17);
    mono_cmd << "spectrum --a 1 --y0 0.004 --omega-cm 2 --T " << duration;
    const RunResult spec_line = run_cli(mono_cmd.str());
    const RunResult spec_grid = run_cli("spectrum --a 1 --traj " + traj.path);
    CHECK(spec_grid.code == 0);

    double line_prob = 0.0;
    for (const auto& line : lines_of(spec_line.out)) {
        const auto row = split_csv(line);
        if (row[0] == "k") continue;
        const double k = std::strtod(row[0].c_str(), nullptr);
        if (row[4] == "dynamic" && k > 2.5)
            line_prob = std::strtod(row[1].c_str(), nullptr);
    }
    double grid_prob = 0.0;
    for (const auto& line : lines_of(spec_grid.out)) {
        const auto row = split_csv(line);
        if (row[0] == "k") continue;
        const double k = std::strtod(row[0].c_str(), nullptr);
        if (row[3] == "density" && row[4] == "dynamic" && k > 2.5)
            grid_prob += std::strtod(row[1].c_str(), nullptr) * dnu;
    }
    REQUIRE(line_prob > 0.0);
    CHECK(grid_prob == doctest::Approx(line_prob).epsilon(0.05));
}

TEST_CASE("trajectory file errors map to the io exit code") {
    CHECK(run_cli("spectrum --traj /tmp/mirrad_no_such_traj.txt").code == 3);
    const TempFile bad("mirrad_cli_bad_traj.txt", "0.0 0.0\n0.1 0.001\n");
    CHECK(run_cli("spectrum --traj " + bad.path).code == 3);
}

TEST_CASE("validate passes at its stock tolerances") {
    const RunResult r = run_cli("validate");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS golden-rule-line") != std::string::npos);
    CHECK(r.out.find("REPORT spectrum-kernel-proportionality") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("validate fails loudly under an impossible tolerance") {
    const RunResult r = run_cli("validate --tol 1e-30");
    CHECK(r.code == 4);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors and help") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("kernels --no-such-flag").code == 2);
    CHECK(run_cli("kernels --format yaml").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("spectrum --help").code == 0);
}

#include "ancilla/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "ancilla/cavity_control.hpp"
#include "ancilla/qubit_protocol.hpp"
#include "ancilla/so3_map.hpp"
#include "ancilla/verification.hpp"

namespace ancilla::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Shortest decimal that round-trips the double (at most 17 significant
// digits), locale independent.
std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // collapse -0
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

void check_finite(double v, const std::string& flag) {
    if (!std::isfinite(v)) throw UsageError("value of " + flag + " must be finite", 2);
}

double clamp_probability(double p, const std::string& what) {
    if (p < -1e-10 || p > 1.0 + 1e-10)
        throw std::logic_error(what + " outside [0,1] beyond tolerance: " + format_double(p));
    return std::min(1.0, std::max(0.0, p));
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::string indexed_path(const std::string& base, std::size_t index) {
    std::filesystem::path p(base);
    const auto ext = p.extension().string();
    p.replace_extension();
    return p.string() + "_" + std::to_string(index) + ext;
}

void run_sphere(const RunConfig& cfg) {
    const so3::Vec3 initial{0.0, 0.0, 1.0};
    for (std::size_t k = 0; k < cfg.phis.size(); ++k) {
        const auto traj = so3::sphere_trajectory(cfg.phis[k], cfg.n, initial);

        std::string csv = "step,x,y,z\n";
        for (std::size_t i = 0; i < traj.points.size(); ++i) {
            const auto& p = traj.points[i];
            if (std::abs(p.norm() - 1.0) > 1e-10)
                throw std::logic_error("sphere point lost unit norm");
            csv += std::to_string(i) + "," + format_double(p.x) + "," + format_double(p.y) + "," +
                   format_double(p.z) + "\n";
        }
        csv += "# axis," + format_double(traj.axis.x) + "," + format_double(traj.axis.y) + "," +
               format_double(traj.axis.z) + "\n";

        write_file(cfg.phis.size() == 1 ? cfg.out : indexed_path(cfg.out, k + 1), csv);
    }
}

void run_trajectory(const RunConfig& cfg) {
    qubit::ProtocolParams params;
    params.n_steps = cfg.n;
    params.phi_per_step = cfg.phi;
    params.theta_per_step = cfg.theta_given ? cfg.theta : kPi / (2.0 * static_cast<double>(cfg.n));
    params.g_bc = cfg.g_bc;
    params.g_ab = cfg.g_ab;

    qubit::OneExcitationState initial;
    initial.amplitudes = {0.0, 0.0, 1.0};

    std::string csv = "t,p001,dp001_dt,segment,step\n";
    for (const auto& row : qubit::trajectory(params, initial, cfg.samples)) {
        csv += format_double(row.t) + "," +
               format_double(clamp_probability(row.p001, "p001")) + "," +
               format_double(row.dp001_dt) + "," +
               (row.segment == qubit::Segment::bc ? "bc" : "ab") + "," +
               std::to_string(row.step) + "\n";
    }
    write_file(cfg.out, csv);
}

void run_zeno(const RunConfig& cfg) {
    qubit::OneExcitationState initial;
    initial.amplitudes = {0.0, 0.0, 1.0};

    std::string csv = "n,p001,zeno_paper,zeno_squared\n";
    for (std::size_t n = 1; n <= cfg.n_max; ++n) {
        qubit::ProtocolParams params;
        params.n_steps = n;
        params.phi_per_step = cfg.phi;
        params.theta_per_step = kPi / (2.0 * static_cast<double>(n));
        const double p = qubit::survival_probability(qubit::evolve_n(params, initial), initial);
        csv += std::to_string(n) + "," +
               format_double(clamp_probability(p, "p001")) + "," +
               format_double(clamp_probability(qubit::zeno_survival(n, qubit::ZenoMode::paper), "zeno")) + "," +
               format_double(clamp_probability(qubit::zeno_survival(n, qubit::ZenoMode::squared), "zeno")) + "\n";
    }
    write_file(cfg.out, csv);
}

void run_entanglement(const RunConfig& cfg) {
    cavity::CavityParams params;
    params.g = cfg.g;
    params.delta = cfg.delta;
    params.t2 = cfg.g_t2 / cfg.g;
    params.alpha = cfg.alpha;
    params.beta = cfg.beta;

    std::vector<std::size_t> ns;
    for (std::size_t n = 1; n <= cfg.n_max; ++n) ns.push_back(n);
    const auto sweep = cavity::concurrence_sweep(params, ns);

    std::string csv = "n,t1,concurrence\n";
    for (const auto& [n, c] : sweep) {
        const double t1 = kPi / (2.0 * cfg.g * static_cast<double>(n));
        csv += std::to_string(n) + "," + format_double(t1) + "," +
               format_double(clamp_probability(c, "concurrence")) + "\n";
    }
    write_file(cfg.out, csv);
}

int run_verify() {
    const auto results = verify::run_all();
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("[%s] %-55s max_err=%.3e tol=%.0e%s%s\n", r.pass ? " OK " : "FAIL",
                    r.name.c_str(), r.max_error, r.tolerance, r.detail.empty() ? "" : "  # ",
                    r.detail.c_str());
    }
    std::printf("%s\n", all_pass ? "verify: all checks passed" : "verify: FAILURES detected");
    return all_pass ? 0 : 1;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;

    CLI::App app{"Deterministic simulator for quantum-state control through repeated"
                 " interactions with a single auxiliary subsystem"};
    app.name("ancillasim");
    app.require_subcommand(1);

    auto* sphere = app.add_subcommand(
        "sphere", "unit-sphere trajectory of the mapped state, one CSV per --phi value");
    sphere->add_option("--phi", cfg.phis, "rotation angle(s) phi in radians, repeatable")
        ->required()
        ->expected(1, -1);
    sphere->add_option("--n", cfg.n, "number of protocol steps (per-step angle is pi/(2n))")
        ->required()
        ->check(CLI::PositiveNumber);
    sphere->add_option("--out", cfg.out, "output CSV path")->required();

    const std::string traj_desc = "time-resolved survival probability and transition rate CSV";
    for (auto* cmd : {app.add_subcommand("survival", traj_desc),
                      app.add_subcommand("rate", traj_desc + " (alias of survival)")}) {
        cmd->add_option("--phi", cfg.phi, "a-b exchange angle per step, radians")->required();
        cmd->add_option("--n", cfg.n, "number of protocol steps")->required()->check(CLI::PositiveNumber);
        cmd->add_option("--theta", cfg.theta, "b-c exchange angle per step, radians (default pi/(2n))");
        cmd->add_option("--samples", cfg.samples, "samples per segment (default 64)")
            ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
        cmd->add_option("--g-bc", cfg.g_bc, "b-c coupling rate (default 1)")->check(CLI::PositiveNumber);
        cmd->add_option("--g-ab", cfg.g_ab, "a-b coupling rate (default 1)")->check(CLI::PositiveNumber);
        cmd->add_option("--out", cfg.out, "output CSV path")->required();
    }

    auto* zeno = app.add_subcommand(
        "zeno", "survival probability vs step count against both Zeno baselines");
    zeno->add_option("--n-max", cfg.n_max, "largest step count")->required()->check(CLI::PositiveNumber);
    zeno->add_option("--phi", cfg.phi, "a-b exchange angle per step (default pi/2)");
    zeno->add_option("--out", cfg.out, "output CSV path")->required();

    auto* ent = app.add_subcommand(
        "entanglement", "controlled M1-B concurrence vs step count at the swap-time schedule");
    ent->add_option("--delta", cfg.delta, "mode detuning omega1-omega2 in 1/s (default 8e5)");
    ent->add_option("--g", cfg.g, "atom-mode coupling in 1/s (default 1.5e4)")->check(CLI::PositiveNumber);
    ent->add_option("--gt2", cfg.g_t2, "dimensionless stage-2 angle g*t2 (default pi/2)")
        ->check(CLI::NonNegativeNumber);
    ent->add_option("--alpha", cfg.alpha, "initial M1-excited amplitude (default 1/sqrt(2))");
    ent->add_option("--beta", cfg.beta, "initial e_b amplitude (default 1/sqrt(2))");
    ent->add_option("--n-max", cfg.n_max, "largest step count (default 50)")->check(CLI::PositiveNumber);
    ent->add_option("--out", cfg.out, "output CSV path")->required();

    app.add_subcommand("verify", "run the oracle cross-check suites");

    try {
        // CLI11's vector overload expects the arguments reversed.
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), 0);
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), 0);
    } catch (const CLI::ParseError& e) {
        throw UsageError(std::string("error: ") + e.what() + "\n\n" + app.help(), 2);
    }

    auto* survival = app.get_subcommand("survival");
    auto* rate = app.get_subcommand("rate");
    if (sphere->parsed()) cfg.scenario = RunConfig::Scenario::sphere;
    else if (survival->parsed()) cfg.scenario = RunConfig::Scenario::survival;
    else if (rate->parsed()) cfg.scenario = RunConfig::Scenario::rate;
    else if (zeno->parsed()) cfg.scenario = RunConfig::Scenario::zeno;
    else if (ent->parsed()) cfg.scenario = RunConfig::Scenario::entanglement;
    else cfg.scenario = RunConfig::Scenario::verify;

    if (survival->parsed()) cfg.theta_given = survival->count("--theta") > 0;
    if (rate->parsed()) cfg.theta_given = rate->count("--theta") > 0;

    if (zeno->parsed() && zeno->count("--phi") == 0) cfg.phi = kPi / 2.0;
    if (ent->parsed()) {
        if (ent->count("--gt2") == 0) cfg.g_t2 = kPi / 2.0;
        if (ent->count("--alpha") == 0) cfg.alpha = 1.0 / std::sqrt(2.0);
        if (ent->count("--beta") == 0) cfg.beta = 1.0 / std::sqrt(2.0);
        if (std::abs(cfg.alpha * cfg.alpha + cfg.beta * cfg.beta - 1.0) > 1e-12)
            throw UsageError("error: alpha^2 + beta^2 must equal 1", 2);
    }

    for (double p : cfg.phis) check_finite(p, "--phi");
    check_finite(cfg.phi, "--phi");
    check_finite(cfg.theta, "--theta");
    check_finite(cfg.g_bc, "--g-bc");
    check_finite(cfg.g_ab, "--g-ab");
    check_finite(cfg.delta, "--delta");
    check_finite(cfg.g, "--g");
    check_finite(cfg.g_t2, "--gt2");
    check_finite(cfg.alpha, "--alpha");
    check_finite(cfg.beta, "--beta");
    if (cfg.theta_given && cfg.theta < 0.0) throw UsageError("error: --theta must be nonnegative", 2);
    if (cfg.phi < 0.0 && cfg.scenario != RunConfig::Scenario::sphere)
        throw UsageError("error: --phi must be nonnegative", 2);

    return cfg;
}

int run(const RunConfig& config) {
    switch (config.scenario) {
        case RunConfig::Scenario::sphere:
            run_sphere(config);
            return 0;
        case RunConfig::Scenario::survival:
        case RunConfig::Scenario::rate:
            run_trajectory(config);
            return 0;
        case RunConfig::Scenario::zeno:
            run_zeno(config);
            return 0;
        case RunConfig::Scenario::entanglement:
            run_entanglement(config);
            return 0;
        case RunConfig::Scenario::verify:
            return run_verify();
    }
    return 0;
}

int run_main(int argc, const char* const* argv) {
    RunConfig cfg;
    try {
        cfg = parse_args(std::vector<std::string>(argv + 1, argv + argc));
    } catch (const UsageError& e) {
        (e.exit_code() == 0 ? std::cout : std::cerr) << e.what() << "\n";
        return e.exit_code();
    }

    try {
        return run(cfg);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const so3::DegenerateRotationError& e) {
        std::cerr << "error: degenerate parameters: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ancilla::cli

// Command-line front end: scenario parsing and deterministic CSV output.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ancilla::cli {

struct RunConfig {
    enum class Scenario { sphere, survival, zeno, rate, entanglement, verify };

    Scenario scenario = Scenario::verify;
    std::string out;

    std::vector<double> phis;    // sphere: one trajectory file per value
    double phi = 0.0;
    double theta = 0.0;
    bool theta_given = false;    // when false, theta defaults to pi/(2 n)
    std::size_t n = 1;           // protocol steps
    std::size_t n_max = 50;      // sweep upper bound (zeno, entanglement)
    std::size_t samples = 64;    // samples per segment (survival, rate)
    double g_bc = 1.0;
    double g_ab = 1.0;

    double delta = 8e5;          // mode detuning (1/s)
    double g = 1.5e4;            // atom-mode coupling (1/s)
    double g_t2 = 0.0;           // dimensionless stage-2 angle g*t2 (default pi/2)
    double alpha = 0.0;          // initial amplitudes (default 1/sqrt(2) each)
    double beta = 0.0;
};

/// Raised for anything that should end the process before running a
/// scenario: bad flags, malformed numbers, or a help request (code 0).
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& message, int exit_code)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const { return exit_code_; }

private:
    int exit_code_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parse command-line arguments (without the program name). Throws
/// UsageError on unknown flags, malformed numbers, or missing required
/// options.
RunConfig parse_args(const std::vector<std::string>& args);

/// Execute a scenario; writes CSV files for the data scenarios and prints
/// a report for `verify`. Returns the process exit status (0 on success,
/// 1 on verification failure). Throws IoError for unwritable outputs and
/// so3::DegenerateRotationError for excluded parameter points.
int run(const RunConfig& config);

/// parse_args + run with all errors mapped to the documented exit codes:
/// 0 success, 2 usage, 3 I/O, 4 degenerate parameters.
int run_main(int argc, const char* const* argv);

}  // namespace ancilla::cli

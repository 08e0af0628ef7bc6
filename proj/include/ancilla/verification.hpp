// Oracle cross-checks.
//
// Every closed form shipped by the simulator is re-derived here through an
// independent route — direct matrix products, the series matrix
// exponential, or a brute-force evolution in the full 16-dimensional
// product space — and compared at fixed tolerances with deterministic
// seeds. The CLI `verify` subcommand and the acceptance suite both run
// these; production code never calls into this module.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ancilla/cavity_control.hpp"
#include "ancilla/so3_map.hpp"

namespace ancilla::verify {

struct CheckResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// --- oracle building blocks (independent of the paths they check) ---

/// Plain n-fold product [r3(phi) r1(-theta)]^n, no axis-angle shortcut.
so3::Mat3 rotation_product(double theta, double phi, std::size_t n);

/// Closed-form concurrence of an X-shaped two-qubit density matrix.
double x_state_concurrence(const cavity::TwoQubitDensity& rho);

/// Controlled-evolution concurrence computed from scratch in the full
/// atom-A x M1 x M2 x atom-B product space: Hamiltonians assembled with
/// kron, propagators via expm_series, reduction via partial_trace, and
/// the X-state closed form for the concurrence. `omega1` fixes the
/// absolute frame (the result is frame independent; 0 matches the
/// rotating frame used by the fast path at amplitude level as well).
double full_space_concurrence(const cavity::CavityParams& params, double omega1 = 0.0);

/// Branch amplitudes of the same full-space evolution at omega1 = 0,
/// i.e. in the frame the fast path works in. Pins the relative phase
/// between the excitation branch and the |e_b> branch, which the
/// concurrence alone cannot see.
cavity::CavityState full_space_state(const cavity::CavityParams& params);

// --- check suites ---

CheckResult check_map_equivalence();
CheckResult check_rotation_power();
CheckResult check_axis_angle_identities();
CheckResult check_rodrigues_vs_expm();
CheckResult check_propagator_unitarity();
CheckResult check_survival_agreement();
CheckResult check_uncontrolled_concurrence();
CheckResult check_stage_propagators_vs_expm();
CheckResult check_controlled_vs_full_space();
CheckResult check_x_state_pipeline();

std::vector<CheckResult> run_all();

}  // namespace ancilla::verify

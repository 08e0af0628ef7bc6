// Three-qubit excitation-exchange protocol in the one-excitation subspace.
//
// Qubits a, b, c share a single excitation; b-c exchange is interleaved
// with a-b exchange driven by the auxiliary qubit a. States live on the
// product basis {|1a,0b,0c>, |0a,1b,0c>, |0a,0b,1c>} and all propagators
// are 3x3 unitaries on that basis. Free-energy phases are global here
// (equal level splittings) and are dropped throughout.

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "ancilla/linalg.hpp"

namespace ancilla::qubit {

using linalg::Complex;

struct OneExcitationState {
    // Amplitudes on |100>, |010>, |001> (occupation of a, b, c).
    std::array<Complex, 3> amplitudes{};

    double norm() const;
};

struct ProtocolParams {
    std::size_t n_steps = 1;
    double theta_per_step = 0.0;  // g_bc * t_bc
    double phi_per_step = 0.0;    // g_ab * t_ab
    double g_bc = 1.0;
    double g_ab = 1.0;
};

/// b-c exchange propagator: identity on the a-excitation, a
/// (cos, -i sin) block on the b/c pair.
linalg::ComplexMatrix u_bc(double theta);

/// a-b exchange propagator: (cos, -i sin) block on the a/b pair,
/// identity on the c-excitation.
linalg::ComplexMatrix u_ab(double phi);

/// N alternating steps, each u_bc(theta) followed by u_ab(phi).
OneExcitationState evolve_n(const ProtocolParams& params, const OneExcitationState& initial);

/// Squared overlap |<initial|final>|^2.
double survival_probability(const OneExcitationState& final_state, const OneExcitationState& initial);

// Quantum-Zeno baseline for an N-fold interrupted pi/2 transition.
// `paper` evaluates cos^N(pi/2N), the amplitude-like form (emitted as the
// zeno_paper CSV column); `squared` evaluates cos^{2N}(pi/2N), the
// survival probability under N projective interruptions.
enum class ZenoMode { paper, squared };
double zeno_survival(std::size_t n, ZenoMode mode);

enum class Segment { bc, ab };

struct TrajectorySample {
    double t = 0.0;         // dimensionless time, g_bc = g_ab = 1 by default
    double p001 = 0.0;      // survival probability w.r.t. the initial state
    double dp001_dt = 0.0;  // analytic per-segment derivative
    Segment segment = Segment::bc;
    std::size_t step = 0;   // 1-based protocol step
};

/// Time-resolved survival probability over the full schedule. Each step
/// contributes a bc segment of duration theta/g_bc then an ab segment of
/// duration phi/g_ab, sampled at `samples_per_segment` points including
/// both endpoints. The derivative is the exact d/dt of the sampled
/// segment evolution, not a finite difference.
std::vector<TrajectorySample> trajectory(const ProtocolParams& params,
                                         const OneExcitationState& initial,
                                         std::size_t samples_per_segment);

}  // namespace ancilla::qubit

// Entanglement control in a two-mode cavity.
//
// Mode M1 is initially entangled with the isolated atom B; atom A sits in
// the cavity and exchanges the excitation with M1 (resonant Jaynes-
// Cummings dynamics). Control interleaves that exchange with A-M2
// interactions on the detuned auxiliary mode M2. The whole evolution
// stays inside the span of one shared excitation, so a state is four
// amplitudes: three one-excitation slots tensored with |g_b> plus the
// vacuum slot tensored with |e_b>.
//
// All propagators are written in rotating frames where only the mode
// detuning delta = omega_1 - omega_2 appears; the per-step relative phase
// e^{i delta t2} between the two branches is applied explicitly in
// evolve_controlled so amplitudes stay consistent with a full-space
// (Schroedinger picture, omega_1 = 0) evolution.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ancilla/linalg.hpp"

namespace ancilla::cavity {

using linalg::Complex;

struct CavityParams {
    double g = 0.0;           // atom A <-> mode coupling (1/s)
    double delta = 0.0;       // omega_1 - omega_2 (1/s)
    double t1 = 0.0;          // stage-1 duration (s)
    double t2 = 0.0;          // stage-2 duration (s)
    std::size_t n_steps = 1;
    Complex alpha{1.0, 0.0};  // M1-excited amplitude of the initial state
    Complex beta{0.0, 0.0};   // |e_b> amplitude of the initial state
};

struct CavityState {
    // One-excitation amplitudes (M2 excited, A excited, M1 excited), all
    // tensored with |g_b>.
    std::array<Complex, 3> exc{};
    // Cavity vacuum and atom A ground, tensored with |e_b>.
    Complex vac{};

    double norm() const;
};

// 4x4 density matrix of the (M1, atom B) pair on the basis
// {|0,g>, |0,e>, |1,g>, |1,e>} (photon number first).
using TwoQubitDensity = linalg::ComplexMatrix;

/// State after resonant A-M1 exchange for a time t, starting from
/// alpha |g_a,1_1,g_b> + beta |g_a,0_1,e_b> with M2 in vacuum.
CavityState free_evolution(Complex alpha, Complex beta, double g, double t);

/// Closed form 2|alpha beta cos(g t)| for the M1-B concurrence of the
/// uncontrolled evolution.
double concurrence_uncontrolled(Complex alpha, Complex beta, double g, double t);

/// Stage 1 (A couples to M1): detuning phase e^{i delta t1} on the
/// M2-excited slot, (cos, -i sin) exchange block on (A, M1).
linalg::ComplexMatrix stage1_propagator(const CavityParams& params);

/// Stage 2 (A couples to M2): real (cos, -/+ sin) block on (M2, A) from
/// the orthogonal-polarization coupling, phase e^{-i delta t2} on the
/// M1-excited slot.
linalg::ComplexMatrix stage2_propagator(const CavityParams& params);

/// n_steps repetitions of stage 1 then stage 2. The vacuum/|e_b> branch
/// only dephases relative to the excitation branch; that relative phase
/// (e^{i delta t2} per step) is carried on the excitation amplitudes.
CavityState evolve_controlled(const CavityParams& params);

/// Trace out atom A and mode M2. The result is an X-state: populations
/// plus a single |1,g><0,e| coherence.
TwoQubitDensity reduced_density_m1_b(const CavityState& state);

/// Wootters concurrence of a two-qubit density matrix. The spin-flip
/// eigenvalues are evaluated as singular values of
/// sqrt(rho) (sigma_y x sigma_y) sqrt(rho)^T via an 8x8 Hermitian
/// eigenproblem, which keeps the near-zero ones at full precision.
double concurrence_wootters(const TwoQubitDensity& rho);

/// Final M1-B concurrence per step count, with the total stage-1 time
/// held at the exchange-swap value: t1 = pi / (2 g n) for each n.
std::vector<std::pair<std::size_t, double>> concurrence_sweep(const CavityParams& params,
                                                              std::span<const std::size_t> n_values);

}  // namespace ancilla::cavity

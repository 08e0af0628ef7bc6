#include "ancilla/qubit_protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ancilla::qubit {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_normalized(const OneExcitationState& s, const char* who) {
    require(std::abs(s.norm() - 1.0) <= 1e-10, std::string(who) + ": state must be normalized");
}

void require_valid(const ProtocolParams& p) {
    require(p.n_steps >= 1, "ProtocolParams: n_steps must be >= 1");
    require(p.g_bc > 0.0 && p.g_ab > 0.0, "ProtocolParams: couplings must be positive");
    require(std::isfinite(p.theta_per_step) && std::isfinite(p.phi_per_step),
            "ProtocolParams: angles must be finite");
}

std::array<Complex, 3> apply3(const linalg::ComplexMatrix& m, const std::array<Complex, 3>& v) {
    std::array<Complex, 3> out{};
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return out;
}

// Exchange generators: u_bc(theta) = exp(-i theta h_bc), u_ab(phi) = exp(-i phi h_ab).
const linalg::ComplexMatrix kHbc = linalg::ComplexMatrix::from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 0}});
const linalg::ComplexMatrix kHab = linalg::ComplexMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}});

}  // namespace

double OneExcitationState::norm() const {
    return std::sqrt(std::norm(amplitudes[0]) + std::norm(amplitudes[1]) + std::norm(amplitudes[2]));
}

linalg::ComplexMatrix u_bc(double theta) {
    require(std::isfinite(theta), "u_bc: theta must be finite");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return linalg::ComplexMatrix::from_rows({{1, 0, 0},
                                             {0, c, -kI * s},
                                             {0, -kI * s, c}});
}

linalg::ComplexMatrix u_ab(double phi) {
    require(std::isfinite(phi), "u_ab: phi must be finite");
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    return linalg::ComplexMatrix::from_rows({{c, -kI * s, 0},
                                             {-kI * s, c, 0},
                                             {0, 0, 1}});
}

OneExcitationState evolve_n(const ProtocolParams& params, const OneExcitationState& initial) {
    require_valid(params);
    require_normalized(initial, "evolve_n");

    const auto ubc = u_bc(params.theta_per_step);
    const auto uab = u_ab(params.phi_per_step);

    OneExcitationState state = initial;
    for (std::size_t k = 0; k < params.n_steps; ++k)
        state.amplitudes = apply3(uab, apply3(ubc, state.amplitudes));
    return state;
}

double survival_probability(const OneExcitationState& final_state, const OneExcitationState& initial) {
    require_normalized(final_state, "survival_probability");
    require_normalized(initial, "survival_probability");
    Complex overlap = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        overlap += std::conj(initial.amplitudes[i]) * final_state.amplitudes[i];
    return std::norm(overlap);
}

double zeno_survival(std::size_t n, ZenoMode mode) {
    require(n >= 1, "zeno_survival: n must be >= 1");
    const double nd = static_cast<double>(n);
    const double base = std::cos(std::numbers::pi / (2.0 * nd));
    const double exponent = (mode == ZenoMode::paper) ? nd : 2.0 * nd;
    return std::pow(base, exponent);
}

std::vector<TrajectorySample> trajectory(const ProtocolParams& params,
                                         const OneExcitationState& initial,
                                         std::size_t samples_per_segment) {
    require_valid(params);
    require_normalized(initial, "trajectory");
    require(samples_per_segment >= 2, "trajectory: samples_per_segment must be >= 2");
    require(params.theta_per_step >= 0.0 && params.phi_per_step >= 0.0,
            "trajectory: segment angles must be nonnegative to define durations");

    std::vector<TrajectorySample> out;
    out.reserve(params.n_steps * 2 * samples_per_segment);

    std::array<Complex, 3> seg_state = initial.amplitudes;
    double t0 = 0.0;

    auto emit_segment = [&](Segment seg, std::size_t step) {
        const bool is_bc = (seg == Segment::bc);
        const double g = is_bc ? params.g_bc : params.g_ab;
        const double angle = is_bc ? params.theta_per_step : params.phi_per_step;
        const auto& gen = is_bc ? kHbc : kHab;
        const double duration = angle / g;

        for (std::size_t j = 0; j < samples_per_segment; ++j) {
            const double tau = duration * static_cast<double>(j) / static_cast<double>(samples_per_segment - 1);
            const auto u = is_bc ? u_bc(g * tau) : u_ab(g * tau);
            const auto psi = apply3(u, seg_state);

            Complex amp = 0.0;
            Complex damp = 0.0;
            const auto hpsi = apply3(gen, psi);
            for (std::size_t i = 0; i < 3; ++i) {
                amp += std::conj(initial.amplitudes[i]) * psi[i];
                damp += std::conj(initial.amplitudes[i]) * (-kI * g * hpsi[i]);
            }
            out.push_back({t0 + tau, std::norm(amp), 2.0 * std::real(std::conj(amp) * damp), seg, step});
        }

        seg_state = apply3(is_bc ? u_bc(angle) : u_ab(angle), seg_state);
        t0 += duration;
    };

    for (std::size_t step = 1; step <= params.n_steps; ++step) {
        emit_segment(Segment::bc, step);
        emit_segment(Segment::ab, step);
    }
    return out;
}

}  // namespace ancilla::qubit

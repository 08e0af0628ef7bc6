#include "ancilla/cavity_control.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ancilla::cavity {

namespace {

constexpr Complex kI{0.0, 1.0};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

void require_amplitudes(Complex alpha, Complex beta, const char* who) {
    require(std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= 1e-12,
            std::string(who) + ": |alpha|^2 + |beta|^2 must be 1");
}

void require_valid(const CavityParams& p) {
    require_amplitudes(p.alpha, p.beta, "CavityParams");
    require(p.g > 0.0, "CavityParams: coupling g must be positive");
    require(p.t1 >= 0.0 && p.t2 >= 0.0, "CavityParams: stage durations must be nonnegative");
    require(std::isfinite(p.delta) && std::isfinite(p.t1) && std::isfinite(p.t2),
            "CavityParams: parameters must be finite");
    require(p.n_steps >= 1, "CavityParams: n_steps must be >= 1");
}

std::array<Complex, 3> apply3(const linalg::ComplexMatrix& m, const std::array<Complex, 3>& v) {
    std::array<Complex, 3> out{};
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = m(i, 0) * v[0] + m(i, 1) * v[1] + m(i, 2) * v[2];
    return out;
}

// sigma_y x sigma_y on the {|0g>, |0e>, |1g>, |1e>} basis.
const linalg::ComplexMatrix kSpinFlip = linalg::ComplexMatrix::from_rows({{0, 0, 0, -1},
                                                                          {0, 0, 1, 0},
                                                                          {0, 1, 0, 0},
                                                                          {-1, 0, 0, 0}});

}  // namespace

double CavityState::norm() const {
    return std::sqrt(std::norm(exc[0]) + std::norm(exc[1]) + std::norm(exc[2]) + std::norm(vac));
}

CavityState free_evolution(Complex alpha, Complex beta, double g, double t) {
    require_amplitudes(alpha, beta, "free_evolution");
    require(g > 0.0, "free_evolution: coupling g must be positive");
    require(std::isfinite(t), "free_evolution: time must be finite");
    CavityState s;
    s.exc = {Complex{0.0}, -kI * std::sin(g * t) * alpha, std::cos(g * t) * alpha};
    s.vac = beta;
    return s;
}

double concurrence_uncontrolled(Complex alpha, Complex beta, double g, double t) {
    require_amplitudes(alpha, beta, "concurrence_uncontrolled");
    return 2.0 * std::abs(alpha * beta * std::cos(g * t));
}

linalg::ComplexMatrix stage1_propagator(const CavityParams& params) {
    require_valid(params);
    const double c = std::cos(params.g * params.t1);
    const double s = std::sin(params.g * params.t1);
    const Complex detune = std::exp(kI * params.delta * params.t1);
    return linalg::ComplexMatrix::from_rows({{detune, 0, 0},
                                             {0, c, -kI * s},
                                             {0, -kI * s, c}});
}

linalg::ComplexMatrix stage2_propagator(const CavityParams& params) {
    require_valid(params);
    const double c = std::cos(params.g * params.t2);
    const double s = std::sin(params.g * params.t2);
    const Complex detune = std::exp(-kI * params.delta * params.t2);
    return linalg::ComplexMatrix::from_rows({{c, -s, 0},
                                             {s, c, 0},
                                             {0, 0, detune}});
}

CavityState evolve_controlled(const CavityParams& params) {
    require_valid(params);

    const auto step = stage2_propagator(params) * stage1_propagator(params);
    const Complex branch_phase = std::exp(kI * params.delta * params.t2);

    CavityState state;
    state.exc = {Complex{0.0}, Complex{0.0}, params.alpha};
    state.vac = params.beta;
    for (std::size_t k = 0; k < params.n_steps; ++k) {
        state.exc = apply3(step, state.exc);
        for (auto& c : state.exc) c *= branch_phase;
    }
    return state;
}

TwoQubitDensity reduced_density_m1_b(const CavityState& state) {
    require(std::abs(state.norm() - 1.0) <= 1e-10, "reduced_density_m1_b: state must be normalized");
    const Complex c1 = state.exc[0];
    const Complex c2 = state.exc[1];
    const Complex c3 = state.exc[2];
    const Complex c4 = state.vac;

    // Environments of c1 (M2 excited) and c2 (A excited) are orthogonal to
    // everything else, so only the c3/c4 pair keeps a coherence.
    TwoQubitDensity rho(4, 4);
    rho(0, 0) = std::norm(c1) + std::norm(c2);  // |0,g>
    rho(1, 1) = std::norm(c4);                  // |0,e>
    rho(2, 2) = std::norm(c3);                  // |1,g>
    rho(2, 1) = c3 * std::conj(c4);
    rho(1, 2) = std::conj(rho(2, 1));
    return rho;
}

double concurrence_wootters(const TwoQubitDensity& rho) {
    require(rho.rows() == 4 && rho.cols() == 4, "concurrence_wootters: rho must be 4x4");
    require(rho.is_finite(), "concurrence_wootters: entries must be finite");
    if (linalg::max_abs_diff(rho, rho.adjoint()) > 1e-10)
        throw std::invalid_argument("concurrence_wootters: rho is not Hermitian within 1e-10");
    if (std::abs(rho.trace() - Complex{1.0}) > 1e-10)
        throw std::invalid_argument("concurrence_wootters: trace of rho must be 1 within 1e-10");

    const auto es = linalg::eig_hermitian(rho);
    for (double w : es.values)
        if (w < -1e-10)
            throw std::invalid_argument("concurrence_wootters: rho has a negative eigenvalue");

    // sqrt(rho), with eigenvalues at numerical-noise level clipped to zero
    // so exact rank deficiency survives the square root.
    linalg::ComplexMatrix sqrt_rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < 4; ++k) {
                const double w = es.values[k] < 1e-13 ? 0.0 : std::sqrt(es.values[k]);
                s += es.vectors(i, k) * w * std::conj(es.vectors(j, k));
            }
            sqrt_rho(i, j) = s;
        }

    // lambda_i are the singular values of b = sqrt(rho) YY sqrt(rho)^T,
    // read off the augmented Hermitian matrix [[0, b], [b^dagger, 0]].
    const auto b = sqrt_rho * kSpinFlip * sqrt_rho.conjugate();
    linalg::ComplexMatrix aug(8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            aug(i, 4 + j) = b(i, j);
            aug(4 + j, i) = std::conj(b(i, j));
        }
    const auto sv = linalg::eig_hermitian(aug);

    double c = sv.values[0];
    for (std::size_t k = 1; k < 4; ++k) c -= std::max(0.0, sv.values[k]);
    return std::max(0.0, c);
}

std::vector<std::pair<std::size_t, double>> concurrence_sweep(const CavityParams& params,
                                                              std::span<const std::size_t> n_values) {
    require(!n_values.empty(), "concurrence_sweep: n_values must be nonempty");
    std::vector<std::pair<std::size_t, double>> out;
    out.reserve(n_values.size());
    for (std::size_t n : n_values) {
        require(n >= 1, "concurrence_sweep: step counts must be >= 1");
        CavityParams p = params;
        p.n_steps = n;
        p.t1 = std::numbers::pi / (2.0 * p.g * static_cast<double>(n));
        out.emplace_back(n, concurrence_wootters(reduced_density_m1_b(evolve_controlled(p))));
    }
    return out;
}

}  // namespace ancilla::cavity

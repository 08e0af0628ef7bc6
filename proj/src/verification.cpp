#include "ancilla/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ancilla/qubit_protocol.hpp"

namespace ancilla::verify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr linalg::Complex kI{0.0, 1.0};

CheckResult result(std::string name, double err, double tol, std::string detail = {}) {
    return {std::move(name), err, tol, err <= tol, std::move(detail)};
}

}  // namespace

so3::Mat3 rotation_product(double theta, double phi, std::size_t n) {
    const so3::Mat3 step = so3::r3(phi) * so3::r1(-theta);
    so3::Mat3 acc = so3::Mat3::identity();
    for (std::size_t k = 0; k < n; ++k) acc = step * acc;
    return acc;
}

double x_state_concurrence(const cavity::TwoQubitDensity& rho) {
    const double inner = std::abs(rho(1, 2)) - std::sqrt(std::abs(rho(0, 0) * rho(3, 3)));
    const double outer = std::abs(rho(0, 3)) - std::sqrt(std::abs(rho(1, 1) * rho(2, 2)));
    return 2.0 * std::max({0.0, inner, outer});
}

namespace {

// Subsystem order: atom A, mode M1, mode M2, atom B; index 0 = ground.
linalg::ComplexVector full_space_evolve(const cavity::CavityParams& params, double omega1) {
    using linalg::ComplexMatrix;

    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix lower = ComplexMatrix::from_rows({{0, 1}, {0, 0}});  // |0><1|
    const ComplexMatrix raise = lower.adjoint();
    const ComplexMatrix number = raise * lower;

    auto embed_op = [&](std::size_t which, const ComplexMatrix& op) {
        ComplexMatrix out = which == 0 ? op : id2;
        for (std::size_t s = 1; s < 4; ++s) out = linalg::kron(out, s == which ? op : id2);
        return out;
    };

    const double omega2 = omega1 - params.delta;
    const auto n_a = embed_op(0, number);
    const auto n_1 = embed_op(1, number);
    const auto n_2 = embed_op(2, number);
    const auto n_b = embed_op(3, number);
    const auto a1 = embed_op(1, lower);
    const auto a2 = embed_op(2, lower);
    const auto sp_a = embed_op(0, raise);
    const auto sm_a = embed_op(0, lower);

    const auto h1 = linalg::Complex{omega1} * (n_1 + n_a + n_b) + linalg::Complex{omega2} * n_2 +
                    linalg::Complex{params.g} * (sp_a * a1 + sm_a * a1.adjoint());
    const auto h2 = linalg::Complex{omega1} * (n_1 + n_b) + linalg::Complex{omega2} * (n_2 + n_a) +
                    linalg::Complex{params.g} * (kI * (sp_a * a2) - kI * (sm_a * a2.adjoint()));

    const auto u = linalg::expm_series((-kI * params.t2) * h2) * linalg::expm_series((-kI * params.t1) * h1);

    linalg::ComplexVector psi(16);
    psi[0b0100] = params.alpha;  // |g_a, 1_1, 0_2, g_b>
    psi[0b0001] = params.beta;   // |g_a, 0_1, 0_2, e_b>
    for (std::size_t k = 0; k < params.n_steps; ++k) psi = u * psi;
    return psi;
}

}  // namespace

double full_space_concurrence(const cavity::CavityParams& params, double omega1) {
    const auto psi = full_space_evolve(params, omega1);

    linalg::ComplexMatrix rho16(16, 16);
    for (std::size_t i = 0; i < 16; ++i)
        for (std::size_t j = 0; j < 16; ++j) rho16(i, j) = psi[i] * std::conj(psi[j]);

    const auto rho = linalg::partial_trace(rho16, {2, 2, 2, 2}, {1, 3});
    return x_state_concurrence(rho);
}

cavity::CavityState full_space_state(const cavity::CavityParams& params) {
    const auto psi = full_space_evolve(params, 0.0);
    cavity::CavityState s;
    s.exc = {psi[0b0010], psi[0b1000], psi[0b0100]};  // M2 excited, A excited, M1 excited
    s.vac = psi[0b0001];
    return s;
}

CheckResult check_map_equivalence() {
    std::mt19937_64 rng(0x5eed0001);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<so3::Vec3> vectors;
    for (int k = 0; k < 20; ++k) {
        so3::Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = v.norm();
        vectors.push_back({v.x / n, v.y / n, v.z / n});
    }

    double worst = 0.0;
    constexpr int kGrid = 50;
    for (int i = 1; i <= kGrid; ++i)
        for (int j = 1; j <= kGrid; ++j) {
            const double theta = kPi * i / (kGrid + 1);
            const double phi = kPi * j / (kGrid + 1);
            const auto u = qubit::u_ab(phi) * qubit::u_bc(theta);
            const auto rot = so3::r3(phi) * so3::r1(-theta);
            for (const auto& r : vectors) {
                auto state = so3::embed(r);
                std::array<linalg::Complex, 3> evolved{};
                for (std::size_t row = 0; row < 3; ++row)
                    for (std::size_t col = 0; col < 3; ++col)
                        evolved[row] += u(row, col) * state.amplitudes[col];
                state.amplitudes = evolved;
                const auto mapped = so3::extract(state);
                const auto rotated = rot * r;
                worst = std::max({worst, std::abs(mapped.x - rotated.x),
                                  std::abs(mapped.y - rotated.y), std::abs(mapped.z - rotated.z)});
            }
        }
    return result("map equivalence (complex step vs SO(3) step)", worst, 1e-11,
                  "50x50 grid over (0,pi)^2, 20 random unit vectors");
}

CheckResult check_rotation_power() {
    std::mt19937_64 rng(0x5eed0002);
    std::uniform_real_distribution<double> angle(0.05, kPi - 0.05);

    double worst = 0.0;
    for (int pair = 0; pair < 100; ++pair) {
        const double theta = angle(rng);
        const double phi = angle(rng);
        const so3::Mat3 step = so3::r3(phi) * so3::r1(-theta);
        so3::Mat3 acc = so3::Mat3::identity();
        std::size_t n = 0;
        auto advance_to = [&](std::size_t target) {
            for (; n < target; ++n) acc = step * acc;
        };
        for (std::size_t target = 1; target <= 100; ++target) {
            advance_to(target);
            worst = std::max(worst, so3::max_abs_diff(acc, so3::rotation_power(theta, phi, target)));
        }
        for (std::size_t target : {std::size_t{1000}, std::size_t{10000}}) {
            advance_to(target);
            worst = std::max(worst, so3::max_abs_diff(acc, so3::rotation_power(theta, phi, target)));
        }
    }
    return result("rotation power (closed form vs direct product)", worst, 1e-10,
                  "N in {1..100, 1e3, 1e4}, 100 random angle pairs");
}

CheckResult check_axis_angle_identities() {
    std::mt19937_64 rng(0x5eed0003);
    std::uniform_real_distribution<double> angle(0.01, kPi - 0.01);

    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
        const double theta = angle(rng);
        const double phi = angle(rng);

        const double sht = std::sin(theta / 2), cht = std::cos(theta / 2);
        const double shp = std::sin(phi / 2), chp = std::cos(phi / 2);
        const double root = std::sqrt(shp * shp + sht * sht - sht * sht * shp * shp);
        const double sin_v = 2.0 * chp * cht * root;
        const double cos_v = (std::cos(phi) + std::cos(theta) + std::cos(phi) * std::cos(theta) - 1.0) / 2.0;
        worst = std::max(worst, std::abs(sin_v * sin_v + cos_v * cos_v - 1.0));

        const auto aa = so3::axis_angle_of(theta, phi);
        worst = std::max(worst, std::abs(dot(aa.axis, aa.axis) - 1.0));

        // reconstruction of the product matrix
        worst = std::max(worst, so3::max_abs_diff(so3::rodrigues(aa), so3::r3(phi) * so3::r1(-theta)));
    }
    return result("axis-angle identities and reconstruction", worst, 1e-12,
                  "2000 random angle pairs in (0,pi)^2");
}

CheckResult check_rodrigues_vs_expm() {
    std::mt19937_64 rng(0x5eed0004);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-kPi, kPi);

    const auto gens = so3::generators();
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        so3::Vec3 axis{gauss(rng), gauss(rng), gauss(rng)};
        const double n = axis.norm();
        if (n < 1e-3) continue;
        axis = {axis.x / n, axis.y / n, axis.z / n};
        const double v = angle(rng);

        linalg::ComplexMatrix arg(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                arg(r, c) = v * (axis.x * gens.j1(r, c) + axis.y * gens.j2(r, c) + axis.z * gens.j3(r, c));
        const auto series = linalg::expm_series(arg);
        const auto closed = so3::rodrigues({axis, v});
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                worst = std::max(worst, std::abs(series(r, c) - linalg::Complex{closed(r, c)}));
    }
    return result("Rodrigues form vs series exponential", worst, 1e-11, "1000 random axis-angles");
}

CheckResult check_propagator_unitarity() {
    std::mt19937_64 rng(0x5eed0005);
    std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    const auto id3 = linalg::ComplexMatrix::identity(3);
    double worst = 0.0;
    for (int k = 0; k < 10000; ++k) {
        const auto ub = qubit::u_bc(angle(rng));
        const auto ua = qubit::u_ab(angle(rng));
        worst = std::max(worst, linalg::max_abs_diff(ub.adjoint() * ub, id3));
        worst = std::max(worst, linalg::max_abs_diff(ua.adjoint() * ua, id3));

        cavity::CavityParams p;
        p.g = 0.5 + uniform(rng);
        p.delta = 10.0 * (uniform(rng) - 0.5);
        p.t1 = 3.0 * uniform(rng);
        p.t2 = 3.0 * uniform(rng);
        p.alpha = 1.0;
        p.beta = 0.0;
        const auto s1 = cavity::stage1_propagator(p);
        const auto s2 = cavity::stage2_propagator(p);
        worst = std::max(worst, linalg::max_abs_diff(s1.adjoint() * s1, id3));
        worst = std::max(worst, linalg::max_abs_diff(s2.adjoint() * s2, id3));
    }
    return result("propagator unitarity", worst, 1e-13, "10^4 random angles / stage parameters");
}

CheckResult check_survival_agreement() {
    std::mt19937_64 rng(0x5eed0006);
    std::uniform_real_distribution<double> angle(0.05, kPi - 0.05);
    std::uniform_int_distribution<std::size_t> steps(1, 200);

    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const double theta = angle(rng);
        const double phi = angle(rng);
        const std::size_t n = steps(rng);

        const auto aa = so3::axis_angle_of(theta, phi);
        const double c2 = aa.axis.z * aa.axis.z;
        const double overlap = (1.0 - c2) * std::cos(static_cast<double>(n) * aa.angle) + c2;
        const double closed = overlap * overlap;

        qubit::ProtocolParams params{n, theta, phi, 1.0, 1.0};
        qubit::OneExcitationState initial;
        initial.amplitudes = {0.0, 0.0, 1.0};
        const double simulated = qubit::survival_probability(qubit::evolve_n(params, initial), initial);
        worst = std::max(worst, std::abs(closed - simulated));
    }
    return result("survival probability (closed form vs complex evolution)", worst, 1e-10,
                  "500 random (theta, phi, N<=200)");
}

CheckResult check_uncontrolled_concurrence() {
    const double g = 1.5e4;
    const linalg::Complex alpha = 1.0 / std::sqrt(2.0);
    const linalg::Complex beta = 1.0 / std::sqrt(2.0);

    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double t = 4.0 * kPi / g * k / 99.0;
        const auto state = cavity::free_evolution(alpha, beta, g, t);
        const double pipeline = cavity::concurrence_wootters(cavity::reduced_density_m1_b(state));
        worst = std::max(worst, std::abs(pipeline - cavity::concurrence_uncontrolled(alpha, beta, g, t)));
    }
    return result("uncontrolled concurrence (Wootters pipeline vs closed form)", worst, 1e-10,
                  "100 sampled times, alpha = beta = 1/sqrt(2)");
}

CheckResult check_stage_propagators_vs_expm() {
    std::mt19937_64 rng(0x5eed0007);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        cavity::CavityParams p;
        p.g = 0.5 + uniform(rng);
        p.delta = 20.0 * (uniform(rng) - 0.5);
        p.t1 = 3.0 * uniform(rng);
        p.t2 = 3.0 * uniform(rng);
        p.alpha = 1.0;
        p.beta = 0.0;

        // Stage generators in each stage's own rotating frame, on the
        // (M2 excited, A excited, M1 excited) basis.
        auto h1 = linalg::ComplexMatrix(3, 3);
        h1(0, 0) = -p.delta;
        h1(1, 2) = p.g;
        h1(2, 1) = p.g;
        auto h2 = linalg::ComplexMatrix(3, 3);
        h2(2, 2) = p.delta;
        h2(0, 1) = -kI * p.g;
        h2(1, 0) = kI * p.g;

        worst = std::max(worst, linalg::max_abs_diff(linalg::expm_series((-kI * p.t1) * h1),
                                                     cavity::stage1_propagator(p)));
        worst = std::max(worst, linalg::max_abs_diff(linalg::expm_series((-kI * p.t2) * h2),
                                                     cavity::stage2_propagator(p)));
    }
    return result("stage propagators vs series exponential", worst, 1e-10, "200 random parameter sets");
}

CheckResult check_controlled_vs_full_space() {
    cavity::CavityParams p;
    p.g = 1.5e4;
    p.delta = 8e5;
    p.t2 = kPi / (2.0 * p.g);
    p.alpha = 1.0 / std::sqrt(2.0);
    p.beta = 1.0 / std::sqrt(2.0);

    double worst = 0.0;
    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{5}, std::size_t{10},
                          std::size_t{20}, std::size_t{50}}) {
        cavity::CavityParams q = p;
        q.n_steps = n;
        q.t1 = kPi / (2.0 * q.g * static_cast<double>(n));
        const double fast =
            cavity::concurrence_wootters(cavity::reduced_density_m1_b(cavity::evolve_controlled(q)));
        worst = std::max(worst, std::abs(fast - full_space_concurrence(q)));
        if (n == 5)  // frame independence of the oracle itself
            worst = std::max(worst, std::abs(fast - full_space_concurrence(q, 3.7 * q.g)));
    }
    return result("controlled concurrence vs full-space evolution", worst, 1e-9,
                  "N in {1,2,5,10,20,50} at the swap-time schedule");
}

CheckResult check_x_state_pipeline() {
    std::mt19937_64 rng(0x5eed0008);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        std::array<linalg::Complex, 4> c;
        double n2 = 0.0;
        for (auto& v : c) {
            v = {gauss(rng), gauss(rng)};
            n2 += std::norm(v);
        }
        for (auto& v : c) v /= std::sqrt(n2);

        cavity::CavityState s;
        s.exc = {c[0], c[1], c[2]};
        s.vac = c[3];
        const auto rho = cavity::reduced_density_m1_b(s);
        const double direct = 2.0 * std::abs(c[2] * std::conj(c[3]));
        worst = std::max(worst, std::abs(cavity::concurrence_wootters(rho) - direct));
        worst = std::max(worst, std::abs(x_state_concurrence(rho) - direct));
    }
    return result("X-state concurrence (Wootters vs closed form)", worst, 1e-11,
                  "200 random protocol states");
}

std::vector<CheckResult> run_all() {
    return {check_map_equivalence(),
            check_rotation_power(),
            check_axis_angle_identities(),
            check_rodrigues_vs_expm(),
            check_propagator_unitarity(),
            check_survival_agreement(),
            check_uncontrolled_concurrence(),
            check_stage_propagators_vs_expm(),
            check_controlled_vs_full_space(),
            check_x_state_pipeline()};
}

}  // namespace ancilla::verify

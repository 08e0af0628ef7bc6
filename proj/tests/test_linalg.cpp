#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "ancilla/linalg.hpp"

using namespace ancilla;
using linalg::Complex;
using linalg::ComplexMatrix;
using linalg::ComplexVector;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = {gauss(rng), gauss(rng)};
    return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
    const auto a = random_matrix(rng, n, n);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

// Integer-valued entries so products associate exactly in floating point.
ComplexMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> small(-2, 2);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = {static_cast<double>(small(rng)), static_cast<double>(small(rng))};
    return m;
}

}  // namespace

TEST_CASE("kron of identities is the identity") {
    const auto i2 = ComplexMatrix::identity(2);
    CHECK(linalg::max_abs_diff(linalg::kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);
}

TEST_CASE("kron with a swap factor permutes blocks") {
    const auto swap = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    const auto m = linalg::kron(swap, ComplexMatrix::identity(2));
    ComplexMatrix expected(4, 4);
    expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
    CHECK(linalg::max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("kron of diagonal matrices") {
    const auto a = ComplexMatrix::from_rows({{1, 0}, {0, 2}});
    const auto b = ComplexMatrix::from_rows({{3, 0}, {0, 4}});
    const auto m = linalg::kron(a, b);
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 3.0;
    expected(1, 1) = 4.0;
    expected(2, 2) = 6.0;
    expected(3, 3) = 8.0;
    CHECK(linalg::max_abs_diff(m, expected) == 0.0);
}

TEST_CASE("kron is associative, entrywise exactly") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_int_matrix(rng, 2, 3);
        const auto b = random_int_matrix(rng, 3, 2);
        const auto c = random_int_matrix(rng, 2, 2);
        CHECK(linalg::max_abs_diff(linalg::kron(linalg::kron(a, b), c),
                                   linalg::kron(a, linalg::kron(b, c))) == 0.0);
    }
}

TEST_CASE("partial trace of a product state keeps the marginal") {
    // |00><00| on 2x2, keep the second subsystem
    ComplexMatrix rho(4, 4);
    rho(0, 0) = 1.0;
    const auto reduced = linalg::partial_trace(rho, {2, 2}, {1});
    ComplexMatrix expected(2, 2);
    expected(0, 0) = 1.0;
    CHECK(linalg::max_abs_diff(reduced, expected) == 0.0);
}

TEST_CASE("partial trace of a Bell state is maximally mixed") {
    ComplexVector bell{1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)};
    ComplexMatrix rho(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) = bell[i] * std::conj(bell[j]);
    const auto reduced = linalg::partial_trace(rho, {2, 2}, {0});
    CHECK(linalg::max_abs_diff(reduced, Complex{0.5} * ComplexMatrix::identity(2)) < 1e-15);
}

TEST_CASE("partial trace preserves the trace") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        ComplexVector psi(12);
        double n2 = 0.0;
        for (std::size_t i = 0; i < 12; ++i) {
            psi[i] = {gauss(rng), gauss(rng)};
            n2 += std::norm(psi[i]);
        }
        ComplexMatrix rho(12, 12);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 12; ++j) rho(i, j) = psi[i] * std::conj(psi[j]) / n2;

        for (const auto& keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {0, 1, 2}}) {
            const auto reduced = linalg::partial_trace(rho, {2, 3, 2}, keep);
            CHECK(std::abs(reduced.trace() - Complex{1.0}) < 1e-12);
        }
        // tracing out everything leaves the 1x1 scalar trace
        const auto all = linalg::partial_trace(rho, {2, 3, 2}, {});
        CHECK(all.rows() == 1);
        CHECK(std::abs(all(0, 0) - Complex{1.0}) < 1e-12);
    }
}

TEST_CASE("partial trace rejects inconsistent dimensions") {
    ComplexMatrix rho(4, 4);
    CHECK_THROWS_AS(linalg::partial_trace(rho, {2, 3}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(linalg::partial_trace(rho, {2, 2}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(linalg::partial_trace(ComplexMatrix(3, 4), {2, 2}, {0}), std::invalid_argument);
}

TEST_CASE("eig_hermitian on diagonal input sorts descending") {
    const auto es = linalg::eig_hermitian(ComplexMatrix::from_rows({{3, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
    REQUIRE(es.values.size() == 3);
    CHECK(es.values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(es.values[2] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian reproduces the Pauli-X spectrum") {
    const auto es = linalg::eig_hermitian(ComplexMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("eig_hermitian reconstruction, eigenvalue sum, orthonormality") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const auto h = random_hermitian(rng, 4);
        const auto es = linalg::eig_hermitian(h);

        ComplexMatrix rebuilt(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < 4; ++k)
                    s += es.vectors(i, k) * es.values[k] * std::conj(es.vectors(j, k));
                rebuilt(i, j) = s;
            }
        CHECK(linalg::max_abs_diff(rebuilt, h) < 1e-9);

        double sum = 0.0;
        for (double v : es.values) sum += v;
        CHECK(std::abs(sum - h.trace().real()) < 1e-10);

        CHECK(linalg::max_abs_diff(es.vectors.adjoint() * es.vectors, ComplexMatrix::identity(4)) < 1e-10);

        for (std::size_t k = 0; k + 1 < 4; ++k) CHECK(es.values[k] >= es.values[k + 1]);
    }
}

TEST_CASE("eig_hermitian rejects clearly non-Hermitian input") {
    const auto m = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(linalg::eig_hermitian(m), std::invalid_argument);
}

TEST_CASE("expm of the zero matrix is the identity") {
    CHECK(linalg::max_abs_diff(linalg::expm_series(ComplexMatrix(3, 3)), ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("expm of a diagonal matrix exponentiates the diagonal") {
    const auto m = ComplexMatrix::from_rows({{Complex{0.3, 0.0}, 0}, {0, Complex{-1.2, 0.7}}});
    const auto e = linalg::expm_series(m);
    CHECK(std::abs(e(0, 0) - std::exp(Complex{0.3, 0.0})) < 1e-14);
    CHECK(std::abs(e(1, 1) - std::exp(Complex{-1.2, 0.7})) < 1e-14);
    CHECK(std::abs(e(0, 1)) == 0.0);
    CHECK(std::abs(e(1, 0)) == 0.0);
}

TEST_CASE("expm of an e3 generator multiple gives the plane rotation") {
    const double phi = 0.7;
    ComplexMatrix j3(3, 3);
    j3(0, 1) = -phi;
    j3(1, 0) = phi;
    const auto e = linalg::expm_series(j3);
    const auto expected = ComplexMatrix::from_rows(
        {{std::cos(phi), -std::sin(phi), 0}, {std::sin(phi), std::cos(phi), 0}, {0, 0, 1}});
    CHECK(linalg::max_abs_diff(e, expected) < 1e-15);
}

TEST_CASE("expm(m) expm(-m) is the identity") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 4, 4);
        if (m.norm_inf() > 5.0) m = Complex{5.0 / m.norm_inf()} * m;
        const auto prod = linalg::expm_series(m) * linalg::expm_series(Complex{-1.0} * m);
        CHECK(linalg::max_abs_diff(prod, ComplexMatrix::identity(4)) < 1e-10);
    }
}

TEST_CASE("expm respects block-diagonal structure") {
    std::mt19937_64 rng(17);
    const auto a = random_matrix(rng, 2, 2);
    const auto b = random_matrix(rng, 3, 3);
    ComplexMatrix block(5, 5);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) block(i, j) = a(i, j);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) block(2 + i, 2 + j) = b(i, j);

    const auto eb = linalg::expm_series(block);
    const auto ea = linalg::expm_series(a);
    const auto eb2 = linalg::expm_series(b);
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) worst = std::max(worst, std::abs(eb(i, j) - ea(i, j)));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) worst = std::max(worst, std::abs(eb(2 + i, 2 + j) - eb2(i, j)));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            worst = std::max({worst, std::abs(eb(i, 2 + j)), std::abs(eb(2 + j, i))});
    CHECK(worst < 1e-11);
}

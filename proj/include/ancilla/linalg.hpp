// Minimal dense complex linear algebra for small Hilbert spaces.
//
// Everything here is sized for dimensions of at most a few (the simulator
// never goes past an 8x8 eigenproblem and a 16x16 matrix exponential), so
// the implementations favour transparency over throughput: Kronecker and
// partial-trace loops are written out directly, the Hermitian eigensolver
// is a cyclic Jacobi iteration, and the matrix exponential is a scaled
// Taylor series used as a verification oracle against closed forms.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ancilla::linalg {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;

    double max_abs() const;
    double norm_inf() const;  // max row sum of |entry|
    bool is_finite() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;  // row-major
};

class ComplexVector {
public:
    ComplexVector() = default;
    explicit ComplexVector(std::size_t dim) : entries_(dim) {}
    ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {}

    std::size_t dim() const { return entries_.size(); }
    Complex& operator[](std::size_t i) { return entries_[i]; }
    const Complex& operator[](std::size_t i) const { return entries_[i]; }

    double norm() const;

private:
    std::vector<Complex> entries_;
};

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

/// Inner product, conjugate-linear in the first argument.
Complex inner(const ComplexVector& a, const ComplexVector& b);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced operator on the kept subsystems. `dims` lists the subsystem
/// dimensions whose product must equal the dimension of `rho`; `keep`
/// holds the (unique) subsystem indices to retain, in ascending order in
/// the output. Keeping nothing yields the 1x1 scalar trace.
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep);

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // orthonormal columns, same order
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. The input must be
/// Hermitian within 1e-10 (it is symmetrized internally before iterating);
/// anything worse is treated as a caller error.
EigenSystem eig_hermitian(const ComplexMatrix& h);

/// Matrix exponential by scaling-and-squaring over a 20-term Taylor
/// series. The argument is halved until its max-row-sum norm is <= 0.5.
ComplexMatrix expm_series(const ComplexMatrix& m);

}  // namespace ancilla::linalg

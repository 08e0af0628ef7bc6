#include "ancilla/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ancilla::linalg {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    require(rows > 0 && cols > 0, "ComplexMatrix: dimensions must be positive");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    require(r > 0, "from_rows: empty matrix");
    const std::size_t c = rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        require(row.size() == c, "from_rows: ragged rows");
        std::size_t j = 0;
        for (const auto& e : row) m(i, j++) = e;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

Complex ComplexMatrix::trace() const {
    require(rows_ == cols_, "trace: matrix must be square");
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::norm_inf() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < cols_; ++j) row += std::abs((*this)(i, j));
        worst = std::max(worst, row);
    }
    return worst;
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& e) {
        return std::isfinite(e.real()) && std::isfinite(e.imag());
    });
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "operator+: shape mismatch");
    ComplexMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "operator-: shape mismatch");
    ComplexMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols_ == b.rows_, "operator*: shape mismatch");
    ComplexMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
        }
    return m;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = s * a.entries_[k];
    return m;
}

double ComplexVector::norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
    require(m.cols() == v.dim(), "matrix*vector: shape mismatch");
    ComplexVector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
    require(a.dim() == b.dim(), "inner: dimension mismatch");
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.is_finite() && b.is_finite(), "kron: entries must be finite");
    ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return m;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::vector<std::size_t>& dims,
                            const std::vector<std::size_t>& keep) {
    require(rho.rows() == rho.cols(), "partial_trace: rho must be square");
    std::size_t total = 1;
    for (std::size_t d : dims) {
        require(d > 0, "partial_trace: subsystem dimensions must be positive");
        total *= d;
    }
    require(total == rho.rows(), "partial_trace: product of dims must equal the dimension of rho");
    for (std::size_t k : keep) require(k < dims.size(), "partial_trace: keep index out of range");
    for (std::size_t i = 0; i + 1 < keep.size(); ++i)
        require(keep[i] < keep[i + 1], "partial_trace: keep indices must be strictly ascending");

    std::vector<std::size_t> traced;
    for (std::size_t s = 0; s < dims.size(); ++s)
        if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

    // Row-major strides of each subsystem inside the flat index.
    std::vector<std::size_t> stride(dims.size(), 1);
    for (std::size_t s = dims.size(); s-- > 1;) stride[s - 1] = stride[s] * dims[s];

    std::size_t kept_dim = 1;
    for (std::size_t s : keep) kept_dim *= dims[s];
    std::size_t traced_dim = 1;
    for (std::size_t s : traced) traced_dim *= dims[s];

    // Flat offset of the mixed-radix counter `idx` over the subsystems `subs`.
    auto offset = [&](const std::vector<std::size_t>& subs, std::size_t counter) {
        std::size_t off = 0;
        for (std::size_t s = subs.size(); s-- > 0;) {
            off += (counter % dims[subs[s]]) * stride[subs[s]];
            counter /= dims[subs[s]];
        }
        return off;
    };

    ComplexMatrix out(kept_dim, kept_dim);  // kept_dim is 1 when keep is empty
    for (std::size_t i = 0; i < kept_dim; ++i)
        for (std::size_t j = 0; j < kept_dim; ++j) {
            const std::size_t ri = offset(keep, i);
            const std::size_t cj = offset(keep, j);
            Complex s = 0.0;
            for (std::size_t t = 0; t < traced_dim; ++t) {
                const std::size_t o = offset(traced, t);
                s += rho(ri + o, cj + o);
            }
            out(i, j) = s;
        }
    return out;
}

EigenSystem eig_hermitian(const ComplexMatrix& h) {
    require(h.rows() == h.cols(), "eig_hermitian: matrix must be square");
    require(h.is_finite(), "eig_hermitian: entries must be finite");
    const std::size_t n = h.rows();
    if (max_abs_diff(h, h.adjoint()) > 1e-10)
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within 1e-10");

    // Symmetrize so the iteration sees an exactly Hermitian operand.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_diagonal_frobenius = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    constexpr double kOffTol = 1e-13;
    constexpr int kMaxSweeps = 60;
    int sweep = 0;
    while (off_diagonal_frobenius() >= kOffTol) {
        if (++sweep > kMaxSweeps)
            throw std::runtime_error("eig_hermitian: Jacobi iteration failed to converge");
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;

                // 2x2 unitary that zeroes the (p,q) element: a phase to make
                // the pivot real followed by a plane rotation with |angle|<=pi/4.
                const Complex phase = apq / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (app - aqq) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex upq = -s * phase;
                const Complex uqp = s * std::conj(phase);

                // a <- U^dagger a U applied to rows/cols p and q only.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + uqp * akq;
                    a(k, q) = upq * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + uqp * vkq;
                    v(k, q) = upq * vkp + c * vkq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        es.values[col] = a(order[col], order[col]).real();
        for (std::size_t row = 0; row < n; ++row) es.vectors(row, col) = v(row, order[col]);
    }
    return es;
}

ComplexMatrix expm_series(const ComplexMatrix& m) {
    require(m.rows() == m.cols(), "expm_series: matrix must be square");
    require(m.is_finite(), "expm_series: entries must be finite");
    const std::size_t n = m.rows();

    int squarings = 0;
    double nrm = m.norm_inf();
    while (nrm > 0.5) {
        nrm *= 0.5;
        ++squarings;
    }
    const ComplexMatrix a = Complex(std::ldexp(1.0, -squarings)) * m;

    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 20; ++k) {
        term = Complex(1.0 / k) * (term * a);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

}  // namespace ancilla::linalg

#include "ancilla/so3_map.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ancilla::so3 {

namespace {

constexpr linalg::Complex kI{0.0, 1.0};

void require(bool cond, const std::string& what) {
    if (!cond) throw std::invalid_argument(what);
}

}  // namespace

double Vec3::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }

Mat3 Mat3::identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

Mat3 Mat3::transpose() const {
    Mat3 t;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double Mat3::trace() const { return m[0] + m[4] + m[8]; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c)
            out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
    return out;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {a(0, 0) * v.x + a(0, 1) * v.y + a(0, 2) * v.z,
            a(1, 0) * v.x + a(1, 1) * v.y + a(1, 2) * v.z,
            a(2, 0) * v.x + a(2, 1) * v.y + a(2, 2) * v.z};
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < 9; ++k) worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
    return worst;
}

RotationMatrix3 r1(double angle) {
    require(std::isfinite(angle), "r1: angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 m = Mat3::identity();
    m(1, 1) = c;
    m(1, 2) = -s;
    m(2, 1) = s;
    m(2, 2) = c;
    return m;
}

RotationMatrix3 r3(double angle) {
    require(std::isfinite(angle), "r3: angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Mat3 m = Mat3::identity();
    m(0, 0) = c;
    m(0, 1) = -s;
    m(1, 0) = s;
    m(1, 1) = c;
    return m;
}

Generators generators() {
    Generators g;
    g.j1(1, 2) = -1.0;
    g.j1(2, 1) = 1.0;
    g.j2(0, 2) = 1.0;
    g.j2(2, 0) = -1.0;
    g.j3(0, 1) = -1.0;
    g.j3(1, 0) = 1.0;
    return g;
}

AxisAngle axis_angle_of(double theta, double phi) {
    require(std::isfinite(theta) && std::isfinite(phi), "axis_angle_of: angles must be finite");

    const double sht = std::sin(theta / 2.0);
    const double cht = std::cos(theta / 2.0);
    const double shp = std::sin(phi / 2.0);
    const double chp = std::cos(phi / 2.0);
    const double root = std::sqrt(std::max(0.0, shp * shp + sht * sht - sht * sht * shp * shp));
    const double den = 4.0 * chp * cht * root;  // = 2 sin(varphi)

    if (std::abs(den) >= 1e-8) {
        const double sin_v = den / 2.0;
        const double cos_v = (std::cos(phi) + std::cos(theta) + std::cos(phi) * std::cos(theta) - 1.0) / 2.0;
        AxisAngle aa;
        aa.angle = std::atan2(sin_v, cos_v);
        aa.axis = {-std::sin(theta) * (std::cos(phi) + 1.0) / den,
                   -std::sin(phi) * std::sin(theta) / den,
                   std::sin(phi) * (std::cos(theta) + 1.0) / den};
        return aa;
    }

    // Ill-conditioned closed form: extract from the product matrix. The
    // antisymmetric part carries sin(varphi) * axis; when that vanishes
    // too (angle ~ pi) the symmetric part still fixes the axis direction.
    const Mat3 rot = r3(phi) * r1(-theta);
    const double cos_v = std::clamp((rot.trace() - 1.0) / 2.0, -1.0, 1.0);
    if (1.0 - cos_v < 1e-14)
        throw DegenerateRotationError(
            "axis_angle_of: rotation is the identity within numerical resolution; axis undefined");

    const Vec3 w = {(rot(2, 1) - rot(1, 2)) / 2.0,
                    (rot(0, 2) - rot(2, 0)) / 2.0,
                    (rot(1, 0) - rot(0, 1)) / 2.0};
    const double sin_v = w.norm();

    AxisAngle aa;
    aa.angle = std::atan2(sin_v, cos_v);
    if (sin_v >= 1e-8) {
        aa.axis = {w.x / sin_v, w.y / sin_v, w.z / sin_v};
        return aa;
    }

    // angle ~ pi: (rot + rot^T)/2 - cos*I = (1 - cos) n n^T.
    const double scale = 1.0 - cos_v;
    std::array<double, 3> diag = {(rot(0, 0) - cos_v) / scale,
                                  (rot(1, 1) - cos_v) / scale,
                                  (rot(2, 2) - cos_v) / scale};
    std::size_t k = 0;
    if (diag[1] > diag[k]) k = 1;
    if (diag[2] > diag[k]) k = 2;
    std::array<double, 3> n{};
    n[k] = std::sqrt(std::max(0.0, diag[k]));
    for (std::size_t i = 0; i < 3; ++i) {
        if (i == k) continue;
        n[i] = (rot(i, k) + rot(k, i)) / (2.0 * scale * n[k]);
    }
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (auto& v : n) v /= nn;
    // R(n, pi) = R(-n, pi); pick the sign matching the closed-form
    // quadrant convention (c > 0, then b < 0, then a < 0).
    bool flip = false;
    if (std::abs(n[2]) > 1e-12)
        flip = n[2] < 0.0;
    else if (std::abs(n[1]) > 1e-12)
        flip = n[1] > 0.0;
    else
        flip = n[0] > 0.0;
    if (flip)
        for (auto& v : n) v = -v;
    aa.axis = {n[0], n[1], n[2]};
    return aa;
}

RotationMatrix3 rodrigues(const AxisAngle& aa) {
    require(std::isfinite(aa.angle), "rodrigues: angle must be finite");
    require(std::abs(aa.axis.norm() - 1.0) <= 1e-10, "rodrigues: axis must be a unit vector");
    const double a = aa.axis.x;
    const double b = aa.axis.y;
    const double c = aa.axis.z;
    const double cv = std::cos(aa.angle);
    const double sv = std::sin(aa.angle);
    const double k = 1.0 - cv;

    Mat3 m;
    m(0, 0) = (1.0 - a * a) * cv + a * a;
    m(0, 1) = a * b * k - c * sv;
    m(0, 2) = a * c * k + b * sv;
    m(1, 0) = a * b * k + c * sv;
    m(1, 1) = (1.0 - b * b) * cv + b * b;
    m(1, 2) = b * c * k - a * sv;
    m(2, 0) = a * c * k - b * sv;
    m(2, 1) = b * c * k + a * sv;
    m(2, 2) = (1.0 - c * c) * cv + c * c;
    return m;
}

RotationMatrix3 rotation_power(double theta, double phi, std::size_t n) {
    require(n >= 1, "rotation_power: n must be >= 1");
    AxisAngle aa = axis_angle_of(theta, phi);
    aa.angle *= static_cast<double>(n);
    return rodrigues(aa);
}

Vec3 closed_form_rN(double phi, std::size_t n, const Vec3& initial) {
    require(n >= 1, "closed_form_rN: n must be >= 1");
    require(std::isfinite(phi), "closed_form_rN: phi must be finite");
    require(std::abs(initial.norm() - 1.0) <= 1e-10, "closed_form_rN: initial must be a unit vector");
    if (std::abs(std::remainder(phi, 2.0 * std::numbers::pi)) < 1e-12)
        throw DegenerateRotationError("closed_form_rN: phi congruent to 2*pi is excluded");
    return rotation_power(std::numbers::pi / (2.0 * static_cast<double>(n)), phi, n) * initial;
}

qubit::OneExcitationState embed(const Vec3& r) {
    require(std::abs(r.norm() - 1.0) <= 1e-10, "embed: vector must be unit norm");
    qubit::OneExcitationState s;
    s.amplitudes = {linalg::Complex{r.x}, -kI * r.y, linalg::Complex{r.z}};
    return s;
}

Vec3 extract(const qubit::OneExcitationState& state) {
    // Rotated-basis coordinates: (psi_0, i psi_1, psi_2).
    const std::array<linalg::Complex, 3> xi = {state.amplitudes[0],
                                               kI * state.amplitudes[1],
                                               state.amplitudes[2]};
    for (const auto& c : xi)
        if (std::abs(c.imag()) > 1e-10)
            throw std::invalid_argument("extract: state is not real-representable in the rotated basis");
    return {xi[0].real(), xi[1].real(), xi[2].real()};
}

SphereTrajectory sphere_trajectory(double phi, std::size_t n, const Vec3& initial) {
    require(n >= 1, "sphere_trajectory: n must be >= 1");
    require(std::isfinite(phi), "sphere_trajectory: phi must be finite");
    require(std::abs(initial.norm() - 1.0) <= 1e-10, "sphere_trajectory: initial must be a unit vector");
    if (std::abs(std::remainder(phi, 2.0 * std::numbers::pi)) < 1e-12)
        throw DegenerateRotationError("sphere_trajectory: phi congruent to 2*pi is excluded");

    const double theta = std::numbers::pi / (2.0 * static_cast<double>(n));
    SphereTrajectory out;
    out.axis = axis_angle_of(theta, phi).axis;
    out.points.reserve(n + 1);
    out.points.push_back(initial);

    const Mat3 step = r3(phi) * r1(-theta);
    Vec3 p = initial;
    for (std::size_t k = 0; k < n; ++k) {
        p = step * p;
        out.points.push_back(p);
    }
    return out;
}

}  // namespace ancilla::so3

// Real-rotation picture of the qubit protocol.
//
// In the basis {|100>, -i|010>, |001>} the complex one-excitation dynamics
// acts on real coordinates, and one protocol step u_ab(phi) u_bc(theta)
// becomes the rotation r3(phi) r1(-theta). This module builds that
// correspondence: elementary rotations, the so(3) generators, axis-angle
// extraction of the composite step, its Rodrigues form, and the resulting
// closed-form N-step evolution and unit-sphere trajectories.

#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ancilla/qubit_protocol.hpp"

namespace ancilla::so3 {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

double dot(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);

struct Mat3 {
    std::array<double, 9> m{};  // row-major

    static Mat3 identity();

    double& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }

    Mat3 transpose() const;
    double trace() const;
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
double max_abs_diff(const Mat3& a, const Mat3& b);

// Proper rotations are plain Mat3 values; orthogonality and unit
// determinant are contracts of the factories below.
using RotationMatrix3 = Mat3;

struct AxisAngle {
    Vec3 axis;           // unit vector
    double angle = 0.0;  // radians, in (-pi, pi]
};

/// Thrown when a rotation degenerates to the identity (axis undefined) or
/// a closed-form path is requested at an excluded angle.
class DegenerateRotationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

RotationMatrix3 r1(double angle);  // rotation about e1
RotationMatrix3 r3(double angle);  // rotation about e3

struct Generators {
    Mat3 j1, j2, j3;
};

/// Antisymmetric generators of rotations about Ox, Oy, Oz.
Generators generators();

/// Axis and angle of the composite step r3(phi) r1(-theta). Uses the
/// half-angle closed forms where they are well conditioned and falls back
/// to extraction from the product matrix when the shared denominator
/// drops below 1e-8 (near the identity and near angle pi).
AxisAngle axis_angle_of(double theta, double phi);

/// Rotation about aa.axis by aa.angle, expanded as
/// 1 + (1 - cos)(n.J)^2 + sin (n.J).
RotationMatrix3 rodrigues(const AxisAngle& aa);

/// [r3(phi) r1(-theta)]^n evaluated through the axis-angle form, i.e.
/// a single Rodrigues matrix at angle n * varphi.
RotationMatrix3 rotation_power(double theta, double phi, std::size_t n);

/// Closed-form N-step vector with the per-step exchange angle hard-wired
/// to pi/(2n): returns rotation_power(pi/(2n), phi, n) * initial. Rejects
/// phi congruent to 2*pi (the rotation about e3 drops out and the
/// freezing construction degenerates).
Vec3 closed_form_rN(double phi, std::size_t n, const Vec3& initial);

/// Real unit vector -> one-excitation state (the middle amplitude picks
/// up the -i basis factor).
qubit::OneExcitationState embed(const Vec3& r);

/// Inverse of embed. Fails if any amplitude is not real in the rotated
/// basis within 1e-10.
Vec3 extract(const qubit::OneExcitationState& state);

struct SphereTrajectory {
    std::vector<Vec3> points;  // n + 1 unit vectors, points[0] = initial
    Vec3 axis;                 // rotation axis of the composite step
};

/// Terminal points of `initial` under k = 0..n applications of
/// r3(phi) r1(-pi/(2n)), plus the axis the trajectory circles.
SphereTrajectory sphere_trajectory(double phi, std::size_t n, const Vec3& initial);

}  // namespace ancilla::so3

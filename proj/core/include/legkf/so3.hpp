#pragma once

#include "legkf/types.hpp"

namespace legkf {

/// Angle below which Rodrigues-style coefficients switch to their Taylor
/// expansions (removable singularities at theta = 0).
inline constexpr double kSmallAngle = 1e-5;

/// Skew-symmetric matrix of v, so that hat(v) * w = v x w.
Mat3 hat(const Vec3& v);

/// Inverse of hat. Expects an antisymmetric argument; reads the strict
/// lower/upper triangle only.
Vec3 vee(const Mat3& m);

/// Rodrigues formula.
Mat3 expSo3(const Vec3& w);

/// Rotation-vector logarithm. Valid for any rotation matrix; near
/// theta = pi the (R - R^T) form degenerates and the axis is recovered
/// from the dominant diagonal of R + I instead.
Vec3 logSo3(const Mat3& r);

/// Left Jacobian of SO(3) and its closed-form inverse.
Mat3 leftJacobianSo3(const Vec3& w);
Mat3 invLeftJacobianSo3(const Vec3& w);

inline Mat3 rightJacobianSo3(const Vec3& w) { return leftJacobianSo3(-w); }
inline Mat3 invRightJacobianSo3(const Vec3& w) { return invLeftJacobianSo3(-w); }

/// True when m is orthonormal with determinant +1 within tol.
bool isRotation(const Mat3& m, double tol = 1e-9);

/// Nearest rotation matrix in the Frobenius sense (polar projection).
Mat3 projectToSo3(const Mat3& m);

/// Re-project onto SO(3) only when the orthonormality defect exceeds tol.
/// Used to bound drift over long composition chains.
Mat3 reorthonormalize(const Mat3& m, double tol = 1e-9);

}  // namespace legkf

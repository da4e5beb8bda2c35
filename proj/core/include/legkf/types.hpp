#pragma once

#include <Eigen/Core>

namespace legkf {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Matrix<double, 4, 1>;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Vec9 = Eigen::Matrix<double, 9, 1>;

using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using Mat9 = Eigen::Matrix<double, 9, 9>;
using Mat9x6 = Eigen::Matrix<double, 9, 6>;
using Mat3x9 = Eigen::Matrix<double, 3, 9>;

/// Tangent coordinates of the 9-dof body state, ordered (xi_r, xi_v, xi_p):
/// rotation (rad), velocity (m/s), position (m). This ordering is fixed
/// across the whole library; every Jacobian, covariance and error vector
/// uses it.
using Tangent9 = Vec9;

/// Planar tangent, ordered (theta, v_x, v_y, p_x, p_y).
using Tangent5 = Vec5;

inline Eigen::Ref<const Vec3> rotPart(const Tangent9& xi) { return xi.segment<3>(0); }
inline Eigen::Ref<const Vec3> velPart(const Tangent9& xi) { return xi.segment<3>(3); }
inline Eigen::Ref<const Vec3> posPart(const Tangent9& xi) { return xi.segment<3>(6); }

inline Tangent9 makeTangent9(const Vec3& r, const Vec3& v, const Vec3& p) {
  Tangent9 xi;
  xi << r, v, p;
  return xi;
}

}  // namespace legkf

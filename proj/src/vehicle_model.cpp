#include "tiltrotor/vehicle_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tiltrotor {

void VehicleParams::validate() const {
    const bool ok = mass > 0.0 && arm_length > 0.0 && gravity > 0.0 &&
                    thrust_coeff > 0.0 && drag_coeff > 0.0 &&
                    (inertia_diag.array() > 0.0).all();
    if (!ok) {
        throw std::invalid_argument("vehicle parameters must be strictly positive");
    }
}

void Gait::validate() const {
    if (!alpha.allFinite() || (alpha.array().abs() > std::numbers::pi).any()) {
        throw std::invalid_argument("tilt angles must be finite and within [-pi, pi]");
    }
}

Vec4 signed_squares(const Vec4& varpi) {
    return varpi.array() * varpi.array().abs();
}

Mat3 rotation_matrix(const Attitude& att) {
    const double cphi = std::cos(att.roll), sphi = std::sin(att.roll);
    const double cth = std::cos(att.pitch), sth = std::sin(att.pitch);
    const double cpsi = std::cos(att.yaw), spsi = std::sin(att.yaw);
    Mat3 R;
    R << cth * cpsi, sphi * sth * cpsi - cphi * spsi, cphi * sth * cpsi + sphi * spsi,
         cth * spsi, sphi * sth * spsi + cphi * cpsi, cphi * sth * spsi - sphi * cpsi,
         -sth,       sphi * cth,                      cphi * cth;
    return R;
}

Attitude euler_from_rotation(const Mat3& R) {
    Attitude att;
    att.pitch = -std::asin(std::clamp(R(2, 0), -1.0, 1.0));
    att.roll = std::atan2(R(2, 1), R(2, 2));
    att.yaw = std::atan2(R(1, 0), R(0, 0));
    return att;
}

Mat3 hat(const Vec3& v) {
    Mat3 m;
    m << 0.0, -v.z(), v.y(),
         v.z(), 0.0, -v.x(),
         -v.y(), v.x(), 0.0;
    return m;
}

Mat34 thrust_map(const Gait& gait, const VehicleParams& params) {
    const double kf = params.thrust_coeff;
    const Vec4 s = gait.alpha.array().sin();
    const Vec4 c = gait.alpha.array().cos();
    Mat34 F;
    F << 0.0,         kf * s(1), 0.0,          -kf * s(3),
         kf * s(0),   0.0,       -kf * s(2),   0.0,
         -kf * c(0),  kf * c(1), -kf * c(2),   kf * c(3);
    return F;
}

Mat34 torque_map(const Gait& gait, const VehicleParams& params) {
    const double a = params.arm_length * params.thrust_coeff;
    const double km = params.drag_coeff;
    const Vec4 s = gait.alpha.array().sin();
    const Vec4 c = gait.alpha.array().cos();
    Mat34 tau;
    tau << 0.0,                 a * c(1) - km * s(1), 0.0,                  -a * c(3) + km * s(3),
           a * c(0) + km * s(0), 0.0,                 -a * c(2) - km * s(2), 0.0,
           a * s(0) - km * c(0), -a * s(1) - km * c(1), a * s(2) - km * c(2), -a * s(3) - km * c(3);
    return tau;
}

Vec3 translational_accel(const VehicleParams& params, const Gait& gait,
                         const Mat3& R, const Vec4& w) {
    return Vec3(0.0, 0.0, -params.gravity) +
           R * (thrust_map(gait, params) * w) / params.mass;
}

Vec3 angular_accel(const VehicleParams& params, const Gait& gait, const Vec4& w) {
    const Vec3 torque = torque_map(gait, params) * w;
    return torque.cwiseQuotient(params.inertia_diag);
}

double hover_rotor_speed(const VehicleParams& params) {
    return std::sqrt(params.mass * params.gravity / (4.0 * params.thrust_coeff));
}

GaitMaps::GaitMaps(const Gait& gait, const VehicleParams& params)
    : thrust(thrust_map(gait, params)),
      torque(torque_map(gait, params)),
      torque_over_inertia(params.inertia_diag.cwiseInverse().asDiagonal() * torque) {}

}  // namespace tiltrotor

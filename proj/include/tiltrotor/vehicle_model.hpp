#pragma once

/**
 * @file vehicle_model.hpp
 * @brief Physical constants and algebraic maps of the fixed-tilt quadrotor.
 *
 * The vehicle carries four rotors whose thrust axes are tilted by fixed
 * angles (the "gait"). Everything here is a pure function of its inputs:
 * the rotation matrix, the thrust and torque allocation maps, and the
 * translational/rotational acceleration laws.
 */

#include <Eigen/Dense>

namespace tiltrotor {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat34 = Eigen::Matrix<double, 3, 4>;

/// Mass, geometry and aerodynamic coefficients. Defaults are the 0.429 kg
/// desk-scale vehicle used throughout the test suite.
struct VehicleParams {
    double mass = 0.429;          ///< total mass (kg)
    double arm_length = 0.1785;   ///< rotor arm length (m)
    double gravity = 9.8;         ///< gravitational acceleration (N/kg)
    Vec3 inertia_diag{2.24e-3, 2.99e-3, 4.80e-3};  ///< body inertia diagonal (kg m^2)
    double thrust_coeff = 8.048e-6;  ///< thrust per squared rotor speed (N s^2)
    double drag_coeff = 2.423e-7;    ///< rotor drag torque coefficient (N m s^2)

    /// Throws std::invalid_argument unless every entry is strictly positive.
    void validate() const;
};

/// The four tilt angles, one per rotor, held constant for a whole flight.
struct Gait {
    Vec4 alpha = Vec4::Zero();  ///< tilt angles (rad), |alpha_i| <= pi

    static Gait of(double a1, double a2, double a3, double a4) {
        Gait g;
        g.alpha << a1, a2, a3, a4;
        return g;
    }
    /// Throws std::invalid_argument if any |alpha_i| exceeds pi or is non-finite.
    void validate() const;
};

/// ZYX Euler angles (rad). Valid extraction requires |pitch| < pi/2.
struct Attitude {
    double roll = 0.0;
    double pitch = 0.0;
    double yaw = 0.0;
};

/// Signed rotor speeds (rad/s). Rotors 1 and 3 spin negative, 2 and 4
/// positive by convention.
struct RotorSpeeds {
    Vec4 varpi = Vec4::Zero();

    /// Speeds of equal magnitude with the (-, +, -, +) sign convention.
    static RotorSpeeds sign_convention(double magnitude) {
        RotorSpeeds r;
        r.varpi << -magnitude, magnitude, -magnitude, magnitude;
        return r;
    }
};

/// w_i = varpi_i * |varpi_i|; the thrust model is linear in these.
Vec4 signed_squares(const Vec4& varpi);

/// World-from-body rotation matrix, ZYX convention.
Mat3 rotation_matrix(const Attitude& att);

/// Euler extraction from a rotation matrix (pitch clamped to +-pi/2).
Attitude euler_from_rotation(const Mat3& R);

/// Skew matrix: hat(v) * u == v x u.
Mat3 hat(const Vec3& v);

/// 3x4 map from signed rotor-speed squares to body-frame force.
Mat34 thrust_map(const Gait& gait, const VehicleParams& params);

/// 3x4 map from signed rotor-speed squares to body torque.
Mat34 torque_map(const Gait& gait, const VehicleParams& params);

/// Position second derivative in the world frame:
///   pdd = (0, 0, -g) + R * F(alpha) * w / m
Vec3 translational_accel(const VehicleParams& params, const Gait& gait,
                         const Mat3& R, const Vec4& w);

/// Body-rate derivative: omega_dot = I^-1 * tau(alpha) * w
/// (diagonal inertia, inverted elementwise).
Vec3 angular_accel(const VehicleParams& params, const Gait& gait, const Vec4& w);

/// Rotor speed magnitude that balances gravity at the zero gait,
/// sqrt(m g / (4 K_f)).
double hover_rotor_speed(const VehicleParams& params);

/// Per-flight cache of the gait-dependent allocation maps. The tilt angles
/// never change mid-flight, so these are computed once.
struct GaitMaps {
    Mat34 thrust;          ///< F(alpha)
    Mat34 torque;          ///< tau(alpha)
    Mat34 torque_over_inertia;  ///< I^-1 * tau(alpha)

    GaitMaps(const Gait& gait, const VehicleParams& params);
};

}  // namespace tiltrotor

#pragma once

/**
 * @file controller.hpp
 * @brief Third-order PD outer loop for the linearized output channels.
 *
 * Once the plant is inverted, each output obeys y''' = y'''_d, so the
 * command is formed from the reference jerk plus gains on the acceleration,
 * rate and position errors. The attitude channels share a diagonal gain
 * triple; the altitude channel has its own scalars.
 */

#include "tiltrotor/vehicle_model.hpp"

namespace tiltrotor {

/// Diagonal gains of the third-order PD law. The per-channel closed loop is
/// s^3 + k_accel s^2 + k_rate s + k_pos.
///
/// Attitude defaults place a triple pole at s = -4; see the README for why
/// the historically used identity gains (marginally stable, (s+1)(s^2+1))
/// are not the default. Altitude defaults (10, 5, 10) are strictly Hurwitz.
struct ControlGains {
    Vec3 att_accel = Vec3::Constant(12.0);  ///< K on attitude acceleration error
    Vec3 att_rate = Vec3::Constant(48.0);   ///< K on attitude rate error
    Vec3 att_pos = Vec3::Constant(64.0);    ///< K on attitude error
    double alt_accel = 10.0;
    double alt_rate = 5.0;
    double alt_pos = 10.0;
};

/// Output reference and its first three time derivatives. A constant
/// setpoint keeps the derivative vectors at zero.
struct Reference {
    Vec4 value = Vec4::Zero();  ///< (roll, pitch, yaw, z)
    Vec4 rate = Vec4::Zero();
    Vec4 accel = Vec4::Zero();
    Vec4 jerk = Vec4::Zero();
};

/// Commanded third derivative of (roll, pitch, yaw).
Vec3 attitude_command(const Reference& ref, const Vec3& y, const Vec3& y_rate,
                      const Vec3& y_accel, const ControlGains& gains);

/// Commanded third derivative of altitude.
double altitude_command(const Reference& ref, double z, double z_rate,
                        double z_accel, const ControlGains& gains);

}  // namespace tiltrotor

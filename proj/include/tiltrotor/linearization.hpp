#pragma once

/**
 * @file linearization.hpp
 * @brief Dynamic inversion of the attitude-altitude output channels.
 *
 * The output vector is y = (roll, pitch, yaw, z). Its third derivative is
 * linear in the rotor accelerations U through the decoupling matrix:
 *
 *   y''' = Delta * U + drift,   Delta = core * 2 diag(|varpi_i|)
 *
 * where core stacks I^-1 tau(alpha) over the altitude row e3' R F(alpha) / m,
 * and the drift is confined to the altitude channel. Inverting Delta turns
 * the plant into four independent integrator chains; the inversion fails
 * exactly when Delta loses rank, which the flight loop must treat as an
 * abort.
 */

#include <stdexcept>

#include "tiltrotor/vehicle_model.hpp"

namespace tiltrotor {

inline constexpr double kDefaultSingularityThreshold = 1e-18;

/// Decoupling matrix with its drift term and conditioning diagnostics.
struct DecouplingMatrix {
    Mat4 delta = Mat4::Zero();   ///< maps rotor accelerations to output jerk
    Vec4 drift = Vec4::Zero();   ///< input-independent jerk; rows 1-3 are always zero
    double det = 0.0;
    double cond = 0.0;           ///< infinity-norm condition estimate (inf if singular)
};

/// Raised when the decoupling matrix cannot be inverted. A flight receiving
/// this must abort and be classified singular.
class SingularDecoupling : public std::runtime_error {
public:
    explicit SingularDecoupling(double determinant)
        : std::runtime_error("decoupling matrix is singular"), det(determinant) {}
    double det;
};

/// Second derivative of (roll, pitch, yaw, z). The attitude rows use the
/// small-rate identification of Euler rates with body rates, so they equal
/// angular_accel; the altitude row is the world-frame vertical acceleration.
Vec4 output_second_derivative(const VehicleParams& params, const GaitMaps& maps,
                              const Mat3& R, const Vec4& w);

/// Assemble Delta, its drift term, determinant and conditioning for the
/// current state. Never throws; a zero determinant is reported, not raised.
DecouplingMatrix build_decoupling(const VehicleParams& params, const GaitMaps& maps,
                                  const Mat3& R, const Vec3& body_rates,
                                  const Vec4& varpi);

/// Solve Delta * U = y3_desired - drift by partial-pivot elimination.
/// Throws SingularDecoupling when |det| <= threshold.
Vec4 invert_allocate(const DecouplingMatrix& dm, const Vec4& y3_desired,
                     double singularity_threshold = kDefaultSingularityThreshold);

}  // namespace tiltrotor

#include "tiltrotor/linearization.hpp"

#include <cmath>
#include <limits>

namespace tiltrotor {

Vec4 output_second_derivative(const VehicleParams& params, const GaitMaps& maps,
                              const Mat3& R, const Vec4& w) {
    Vec4 ydd;
    ydd.head<3>() = maps.torque_over_inertia * w;
    ydd(3) = -params.gravity + R.row(2).dot(maps.thrust * w) / params.mass;
    return ydd;
}

DecouplingMatrix build_decoupling(const VehicleParams& params, const GaitMaps& maps,
                                  const Mat3& R, const Vec3& body_rates,
                                  const Vec4& varpi) {
    DecouplingMatrix dm;
    Mat4 core;
    core.topRows<3>() = maps.torque_over_inertia;
    core.row(3) = R.row(2) * maps.thrust / params.mass;
    dm.delta = core * (2.0 * varpi.array().abs()).matrix().asDiagonal();

    const Vec4 w = signed_squares(varpi);
    dm.drift(3) = (R.row(2) * hat(body_rates) * (maps.thrust * w)).value() / params.mass;

    Eigen::PartialPivLU<Mat4> lu(dm.delta);
    dm.det = lu.determinant();
    if (dm.det != 0.0) {
        const double norm = dm.delta.cwiseAbs().rowwise().sum().maxCoeff();
        const double inv_norm = lu.inverse().cwiseAbs().rowwise().sum().maxCoeff();
        dm.cond = norm * inv_norm;
    } else {
        dm.cond = std::numeric_limits<double>::infinity();
    }
    return dm;
}

Vec4 invert_allocate(const DecouplingMatrix& dm, const Vec4& y3_desired,
                     double singularity_threshold) {
    if (!(std::abs(dm.det) > singularity_threshold)) {
        throw SingularDecoupling(dm.det);
    }
    return Eigen::PartialPivLU<Mat4>(dm.delta).solve(y3_desired - dm.drift);
}

}  // namespace tiltrotor

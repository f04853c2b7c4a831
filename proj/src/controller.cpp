#include "tiltrotor/controller.hpp"

namespace tiltrotor {

Vec3 attitude_command(const Reference& ref, const Vec3& y, const Vec3& y_rate,
                      const Vec3& y_accel, const ControlGains& gains) {
    return ref.jerk.head<3>() +
           gains.att_accel.cwiseProduct(ref.accel.head<3>() - y_accel) +
           gains.att_rate.cwiseProduct(ref.rate.head<3>() - y_rate) +
           gains.att_pos.cwiseProduct(ref.value.head<3>() - y);
}

double altitude_command(const Reference& ref, double z, double z_rate,
                        double z_accel, const ControlGains& gains) {
    return ref.jerk(3) + gains.alt_accel * (ref.accel(3) - z_accel) +
           gains.alt_rate * (ref.rate(3) - z_rate) +
           gains.alt_pos * (ref.value(3) - z);
}

}  // namespace tiltrotor

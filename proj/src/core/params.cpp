#include "core/params.hpp"

#include <cmath>

namespace chrw {

void validate(const DriveParams& p) {
    if (!(p.delta > 0.0) || !std::isfinite(p.delta))
        throw std::invalid_argument("DriveParams: delta must be positive and finite");
    if (!(p.omega > 0.0) || !std::isfinite(p.omega))
        throw std::invalid_argument("DriveParams: omega must be positive and finite");
    if (!(p.amplitude >= 0.0) || !std::isfinite(p.amplitude))
        throw std::invalid_argument("DriveParams: amplitude must be non-negative and finite");
    if (!std::isfinite(p.epsilon))
        throw std::invalid_argument("DriveParams: epsilon must be finite");
}

double bare_splitting(const DriveParams& p) {
    return std::hypot(p.delta, p.epsilon);
}

void validate(const TimeSeries& ts) {
    if (!(ts.dt > 0.0)) throw std::invalid_argument("TimeSeries: dt must be positive");
    if (ts.values.empty()) throw std::invalid_argument("TimeSeries: values must be non-empty");
    for (double v : ts.values)
        if (!std::isfinite(v)) throw std::invalid_argument("TimeSeries: non-finite sample");
}

Eigen::Matrix2cd hamiltonian_at(const DriveParams& p, double t) {
    const double field = p.epsilon + p.amplitude * std::cos(p.omega * t);
    Eigen::Matrix2cd h;
    h << -0.5 * field, -0.5 * p.delta,
         -0.5 * p.delta, 0.5 * field;
    return h;
}

}  // namespace chrw

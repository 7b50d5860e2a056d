#pragma once

#include <cmath>

namespace qredux {

/// A point of the Bloch ball parameterizing a 2x2 density matrix.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double r() const { return std::sqrt(x * x + y * y + z * z); }
    double theta() const { return r() > 0.0 ? std::acos(z / r()) : 0.0; }
    double phi() const { return std::atan2(y, x); }

    static BlochVector from_spherical(double r, double theta, double phi) {
        return {r * std::sin(theta) * std::cos(phi),
                r * std::sin(theta) * std::sin(phi), r * std::cos(theta)};
    }

    /// Inside the closed unit ball, up to rounding slack.
    bool valid() const { return r() <= 1.0 + 1e-12; }
};

} // namespace qredux

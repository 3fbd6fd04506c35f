#include "qlr/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qlr {

BlochPoint to_bloch(const ContextData& c, SignBranch sign) {
    const auto lambda = interference_coefficients(c);
    if (classify(c) != Classification::Trigonometric) {
        std::ostringstream msg;
        msg << "context is hyperbolic (|lambda1| = " << std::abs(lambda[0])
            << "); no point on the sphere";
        throw NotTrigonometricError(msg.str());
    }
    // Classification already admitted |lambda1| <= 1 up to the rounding
    // guard; clamp so the norm identity stays exact.
    const double l1 = std::clamp(lambda[0], -1.0, 1.0);
    const double radial = 2.0 * std::sqrt(c.pa[0] * c.pa[1]);
    const double y_mag = std::sqrt(std::max(0.0, 1.0 - l1 * l1));

    BlochPoint pt;
    pt.x = radial * l1;
    pt.y = (sign == SignBranch::Plus ? 1.0 : -1.0) * radial * y_mag;
    pt.z = c.pa[0] - c.pa[1];
    pt.color = color_of(c.pa[0], c.pb[0]);
    pt.branch = sign;
    return pt;
}

Rgb color_of(double q, double p) {
    return Rgb{q, p, 0.0};
}

ContextData from_bloch(const BlochPoint& pt, const TransitionMatrix& m) {
    if (std::abs(std::abs(pt.z) - 1.0) < 1e-15 || std::abs(pt.z) > 1.0) {
        std::ostringstream msg;
        msg << "|z| = " << std::abs(pt.z) << " is a pole; marginals would not be strictly positive";
        throw DegenerateError(msg.str());
    }
    const double q = (1.0 + pt.z) / 2.0;
    const double lambda1 = pt.x / (2.0 * std::sqrt(q * (1.0 - q)));
    const double p = q * m(0, 0) + (1.0 - q) * m(0, 1) +
                     2.0 * lambda1 * std::sqrt(q * m(0, 0) * (1.0 - q) * m(0, 1));

    ContextData c;
    c.pa = {q, 1.0 - q};
    c.pb = {p, 1.0 - p};
    c.matrix = m;
    return validate_context(c);
}

}  // namespace qlr

#pragma once

#include "qlr/interference.hpp"
#include "qlr/prob_model.hpp"

namespace qlr {

struct Rgb {
    double r = 0, g = 0, b = 0;
};

// Point on the unit sphere with the (q, p)-driven color and the branch that
// produced it.
struct BlochPoint {
    double x = 0, y = 0, z = 0;
    Rgb color{};
    SignBranch branch = SignBranch::Plus;
};

// Maps a trigonometric context onto the Bloch sphere:
//   x = 2 sqrt(pa1 pa2) lambda1,  y = +/- 2 sqrt(pa1 pa2) sqrt(1 - lambda1^2),
//   z = pa1 - pa2.
// Throws NotTrigonometricError when condition RC fails (no point emitted).
BlochPoint to_bloch(const ContextData& c, SignBranch sign = SignBranch::Plus);

// Linear color ramp (r, g, b) = (q, p, 0): small (q,p) dark, large yellow.
Rgb color_of(double q, double p);

// Testing inverse of the sphere map: recovers q from z, lambda from x, and p
// from the interference formula with the given matrix. Throws DegenerateError
// at the poles |z| = 1.
ContextData from_bloch(const BlochPoint& pt, const TransitionMatrix& m);

}  // namespace qlr

#pragma once

namespace branchloci {

// Numeric tolerances shared by every geometric operation.
struct Tolerances {
    double construction = 1e-12;  // disc-point membership, unit-vector norms
    double containment = 1e-10;   // point-on-geodesic, collinearity
    double angle = 1e-9;          // orthogonality of perpendiculars (radians)
    double smoothness = 1e-8;     // direction match across identifications (radians)
    double length = 1e-9;         // equal-length checks on sides and segments
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

}  // namespace branchloci

#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <variant>

#include "branchloci/tolerances.hpp"

namespace branchloci {

using Complex = std::complex<double>;

// Im(conj(a) * b): positive when b is counter-clockwise from a.
inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

class Length {
public:
    Length() = default;
    explicit Length(double value);
    double value() const { return value_; }
    friend auto operator<=>(const Length&, const Length&) = default;

private:
    double value_ = 0.0;
};

class DiscPoint {
public:
    DiscPoint() = default;
    DiscPoint(double x, double y);
    explicit DiscPoint(Complex z) : DiscPoint(z.real(), z.imag()) {}
    double x() const { return z_.real(); }
    double y() const { return z_.imag(); }
    Complex z() const { return z_; }

private:
    Complex z_{0.0, 0.0};
};

struct Diameter {
    Complex direction;  // unit
};

struct Arc {
    Complex center;
    double radius;
};

class Geodesic {
public:
    static Geodesic diameter(Complex direction);
    static Geodesic arc(Complex center, double radius);

    bool is_diameter() const { return std::holds_alternative<Diameter>(rep_); }
    const Diameter& as_diameter() const { return std::get<Diameter>(rep_); }
    const Arc& as_arc() const { return std::get<Arc>(rep_); }

    // Euclidean distance from p to the underlying line or circle.
    double residual(Complex p) const;
    bool contains(const DiscPoint& p, double tol = default_tolerances().containment) const;
    // Unit tangent at p (p assumed on the geodesic); orientation is arbitrary but fixed.
    Complex tangent(Complex p) const;

private:
    explicit Geodesic(std::variant<Diameter, Arc> rep) : rep_(rep) {}
    std::variant<Diameter, Arc> rep_;
};

// z -> (alpha w + beta)/(conj(beta) w + conj(alpha)) with w = z, or w = conj(z) when reflecting.
class Isometry {
public:
    Isometry() = default;
    Isometry(Complex alpha, Complex beta, bool reflecting = false);

    static Isometry identity() { return {}; }
    // Reflection across a geodesic.
    static Isometry reflection(const Geodesic& g);
    // z -> (z - p)/(1 - conj(p) z), carrying p to the origin.
    static Isometry translate_to_origin(Complex p);

    Complex alpha() const { return alpha_; }
    Complex beta() const { return beta_; }
    bool reflecting() const { return reflecting_; }

    Complex apply(Complex z) const;
    DiscPoint operator()(const DiscPoint& p) const;
    Isometry inverse() const;

    // (f * g)(z) = f(g(z))
    friend Isometry operator*(const Isometry& f, const Isometry& g);

private:
    Complex alpha_{1.0, 0.0};
    Complex beta_{0.0, 0.0};
    bool reflecting_ = false;
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Perpendicular {
    Geodesic geodesic;
    DiscPoint foot1;
    DiscPoint foot2;
};

Length hyperbolic_distance(const DiscPoint& p, const DiscPoint& q);
Geodesic geodesic_through(const DiscPoint& p, const DiscPoint& q, const Tolerances& tol = default_tolerances());
std::optional<DiscPoint> intersect(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol = default_tolerances());
Perpendicular common_perpendicular(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol = default_tolerances());
DiscPoint foot_of_perpendicular(const DiscPoint& p, const Geodesic& g, const Tolerances& tol = default_tolerances());
Isometry rotation(const DiscPoint& center, double angle);
Isometry isometry_from_segment_pair(const DiscPoint& p1, const DiscPoint& q1, const DiscPoint& p2, const DiscPoint& q2,
                                    const Tolerances& tol = default_tolerances());
DiscPoint hyperbolic_midpoint(const DiscPoint& p, const DiscPoint& q);

// Unit tangent at p of the geodesic segment from p toward q.
Complex direction_toward(const DiscPoint& p, const DiscPoint& q);
// Point at hyperbolic distance t from p along unit direction u.
DiscPoint point_along(const DiscPoint& p, Complex u, double t);
// Angle in [0, pi/2] between two geodesics at a common point.
double crossing_angle(const Geodesic& g1, const Geodesic& g2, const DiscPoint& at);
// Interior angle at vertex v between the segments toward a and b, in [0, pi].
double angle_at(const DiscPoint& v, const DiscPoint& a, const DiscPoint& b);

}  // namespace branchloci

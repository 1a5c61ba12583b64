#include "branchloci/disc.hpp"

#include <cmath>

namespace branchloci {

namespace {

const Complex kI{0.0, 1.0};

// A geodesic as the linear constraint X.k = v on centers X of circles orthogonal to it
// and to the unit circle: Arc -> (center, 1), Diameter -> (normal, 0).
struct Constraint {
    Complex k;
    double v;
};

Constraint constraint_of(const Geodesic& g) {
    if (g.is_diameter()) return {kI * g.as_diameter().direction, 0.0};
    return {g.as_arc().center, 1.0};
}

// Intersection of the diameter along unit u with g, inside the open disc.
std::optional<DiscPoint> diameter_meets(Complex u, const Geodesic& g, const Tolerances& tol) {
    if (g.is_diameter()) {
        if (std::abs(cross(u, g.as_diameter().direction)) <= tol.construction) return std::nullopt;
        return DiscPoint(0.0, 0.0);
    }
    // |t u - c|^2 = rho^2 with |c|^2 - rho^2 = 1  =>  t^2 - 2t(u.c) + 1 = 0
    const auto& a = g.as_arc();
    double b = dot(u, a.center);
    double disc = b * b - 1.0;
    if (disc <= tol.construction) return std::nullopt;
    double root = std::sqrt(disc);
    // the two roots multiply to 1; the inner one has |t| < 1
    double t = b > 0 ? 1.0 / (b + root) : 1.0 / (b - root);
    if (std::abs(t) >= 1.0 - tol.construction) return std::nullopt;
    return DiscPoint(t * u);
}

}  // namespace

Length::Length(double value) : value_(value) {
    if (!(value >= 0.0) || !std::isfinite(value)) throw std::domain_error("length must be finite and non-negative");
}

DiscPoint::DiscPoint(double x, double y) : z_(x, y) {
    if (!(x * x + y * y < 1.0 - default_tolerances().construction))
        throw std::domain_error("point lies outside the open unit disc");
}

Geodesic Geodesic::diameter(Complex direction) {
    double len = std::abs(direction);
    if (!(len > 0.0) || !std::isfinite(len)) throw GeometryError("diameter direction must be a non-zero vector");
    return Geodesic(Diameter{direction / len});
}

Geodesic Geodesic::arc(Complex center, double radius) {
    double c2 = std::norm(center);
    if (!(radius > 0.0) || std::abs(c2 - 1.0 - radius * radius) > 1e-10 * std::max(1.0, c2))
        throw GeometryError("arc is not orthogonal to the unit circle");
    return Geodesic(Arc{center, radius});
}

double Geodesic::residual(Complex p) const {
    if (is_diameter()) return std::abs(cross(as_diameter().direction, p));
    const auto& a = as_arc();
    return std::abs(std::abs(p - a.center) - a.radius);
}

bool Geodesic::contains(const DiscPoint& p, double tol) const { return residual(p.z()) <= tol; }

Complex Geodesic::tangent(Complex p) const {
    if (is_diameter()) return as_diameter().direction;
    Complex t = kI * (p - as_arc().center);
    return t / std::abs(t);
}

Isometry::Isometry(Complex alpha, Complex beta, bool reflecting) : reflecting_(reflecting) {
    double det = std::norm(alpha) - std::norm(beta);
    if (!(det > 0.0)) throw GeometryError("Moebius coefficients do not preserve the disc");
    double s = std::sqrt(det);
    alpha_ = alpha / s;
    beta_ = beta / s;
}

Isometry Isometry::reflection(const Geodesic& g) {
    if (g.is_diameter()) return {g.as_diameter().direction, 0.0, true};
    const auto& a = g.as_arc();
    return {kI * a.center / a.radius, -kI / a.radius, true};
}

Isometry Isometry::translate_to_origin(Complex p) { return {1.0, -p}; }

Complex Isometry::apply(Complex z) const {
    Complex w = reflecting_ ? std::conj(z) : z;
    return (alpha_ * w + beta_) / (std::conj(beta_) * w + std::conj(alpha_));
}

DiscPoint Isometry::operator()(const DiscPoint& p) const { return DiscPoint(apply(p.z())); }

Isometry Isometry::inverse() const {
    if (reflecting_) return {alpha_, -std::conj(beta_), true};
    return {std::conj(alpha_), -beta_};
}

Isometry operator*(const Isometry& f, const Isometry& g) {
    Complex a2 = f.reflecting_ ? std::conj(g.alpha_) : g.alpha_;
    Complex b2 = f.reflecting_ ? std::conj(g.beta_) : g.beta_;
    Complex alpha = f.alpha_ * a2 + f.beta_ * std::conj(b2);
    Complex beta = f.alpha_ * b2 + f.beta_ * std::conj(a2);
    return {alpha, beta, f.reflecting_ != g.reflecting_};
}

Length hyperbolic_distance(const DiscPoint& p, const DiscPoint& q) {
    // equal to arcosh(1 + 2|p-q|^2/((1-|p|^2)(1-|q|^2))), better conditioned near p = q
    double ratio = std::abs(p.z() - q.z()) / std::abs(1.0 - std::conj(p.z()) * q.z());
    return Length(2.0 * std::atanh(std::min(ratio, 1.0)));
}

Geodesic geodesic_through(const DiscPoint& p, const DiscPoint& q, const Tolerances& tol) {
    Complex a = p.z(), b = q.z();
    if (std::abs(a - b) <= tol.construction) throw GeometryError("geodesic through coincident points");
    double det = cross(a, b);
    if (std::abs(det) <= tol.containment) return Geodesic::diameter(b - a);
    // |c - p|^2 = |c|^2 - 1  <=>  c.p = (1 + |p|^2)/2
    double u = 0.5 * (1.0 + std::norm(a));
    double v = 0.5 * (1.0 + std::norm(b));
    Complex c((u * b.imag() - v * a.imag()) / det, (a.real() * v - b.real() * u) / det);
    return Geodesic::arc(c, std::sqrt(std::norm(c) - 1.0));
}

std::optional<DiscPoint> intersect(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol) {
    if (g1.is_diameter()) return diameter_meets(g1.as_diameter().direction, g2, tol);
    if (g2.is_diameter()) return diameter_meets(g2.as_diameter().direction, g1, tol);
    // both circles are orthogonal to the unit circle, so their radical axis passes through the origin
    Complex delta = g1.as_arc().center - g2.as_arc().center;
    if (std::abs(delta) <= tol.construction) return std::nullopt;
    return diameter_meets(kI * delta / std::abs(delta), g1, tol);
}

Perpendicular common_perpendicular(const Geodesic& g1, const Geodesic& g2, const Tolerances& tol) {
    Constraint c1 = constraint_of(g1), c2 = constraint_of(g2);
    double det = cross(c1.k, c2.k);
    std::optional<Geodesic> perp;
    if (std::abs(det) <= tol.construction * std::abs(c1.k) * std::abs(c2.k)) {
        if (g1.is_diameter() && g2.is_diameter()) throw GeometryError("no common perpendicular: identical diameters");
        perp = Geodesic::diameter(g1.is_diameter() ? c2.k : c1.k);
    } else {
        Complex x((c1.v * c2.k.imag() - c2.v * c1.k.imag()) / det, (c1.k.real() * c2.v - c2.k.real() * c1.v) / det);
        double r2 = std::norm(x) - 1.0;
        if (r2 <= tol.construction) throw GeometryError("no common perpendicular: geodesics intersect or are asymptotic");
        perp = Geodesic::arc(x, std::sqrt(r2));
    }
    auto f1 = intersect(*perp, g1, tol);
    auto f2 = intersect(*perp, g2, tol);
    if (!f1 || !f2) throw GeometryError("no common perpendicular: geodesics intersect or are asymptotic");
    const double right = std::acos(0.0);
    if (std::abs(crossing_angle(*perp, g1, *f1) - right) > tol.angle ||
        std::abs(crossing_angle(*perp, g2, *f2) - right) > tol.angle)
        throw GeometryError("common perpendicular failed the orthogonality check");
    return {*perp, *f1, *f2};
}

DiscPoint foot_of_perpendicular(const DiscPoint& p, const Geodesic& g, const Tolerances& tol) {
    if (g.contains(p, tol.containment)) return p;
    // circle through p orthogonal to the unit circle: X.p = (1 + |p|^2)/2
    Constraint c = constraint_of(g);
    Complex a = p.z();
    double det = cross(a, c.k);
    std::optional<Geodesic> perp;
    if (std::abs(det) <= tol.construction * std::max(std::abs(a), tol.construction) * std::abs(c.k)) {
        perp = Geodesic::diameter(c.k);
    } else {
        double u = 0.5 * (1.0 + std::norm(a));
        Complex x((u * c.k.imag() - c.v * a.imag()) / det, (a.real() * c.v - c.k.real() * u) / det);
        perp = Geodesic::arc(x, std::sqrt(std::norm(x) - 1.0));
    }
    auto foot = intersect(*perp, g, tol);
    if (!foot) throw GeometryError("perpendicular does not meet the geodesic");
    return *foot;
}

Isometry rotation(const DiscPoint& center, double angle) {
    Isometry to = Isometry::translate_to_origin(center.z());
    Isometry spin(std::polar(1.0, 0.5 * angle), 0.0);
    return to.inverse() * spin * to;
}

Isometry isometry_from_segment_pair(const DiscPoint& p1, const DiscPoint& q1, const DiscPoint& p2, const DiscPoint& q2,
                                    const Tolerances& tol) {
    double l1 = hyperbolic_distance(p1, q1).value();
    double l2 = hyperbolic_distance(p2, q2).value();
    if (std::abs(l1 - l2) > tol.length) throw GeometryError("segment lengths differ");
    Isometry a = Isometry::translate_to_origin(p1.z());
    Isometry b = Isometry::translate_to_origin(p2.z());
    Complex w1 = a.apply(q1.z()), w2 = b.apply(q2.z());
    Isometry spin;
    if (std::abs(w1) > 0.0 && std::abs(w2) > 0.0) spin = Isometry(std::sqrt(w2 / w1 * std::abs(w1) / std::abs(w2)), 0.0);
    return b.inverse() * spin * a;
}

DiscPoint hyperbolic_midpoint(const DiscPoint& p, const DiscPoint& q) {
    Isometry t = Isometry::translate_to_origin(p.z());
    Complex w = t.apply(q.z());
    double r = std::abs(w);
    if (r == 0.0) return p;
    Complex m = w / r * std::tanh(0.5 * std::atanh(r));
    return DiscPoint(t.inverse().apply(m));
}

Complex direction_toward(const DiscPoint& p, const DiscPoint& q) {
    Complex w = Isometry::translate_to_origin(p.z()).apply(q.z());
    double r = std::abs(w);
    if (r == 0.0) throw GeometryError("direction toward a coincident point");
    return w / r;
}

DiscPoint point_along(const DiscPoint& p, Complex u, double t) {
    Complex w = u / std::abs(u) * std::tanh(0.5 * t);
    return DiscPoint(Isometry::translate_to_origin(p.z()).inverse().apply(w));
}

double crossing_angle(const Geodesic& g1, const Geodesic& g2, const DiscPoint& at) {
    Complex t1 = g1.tangent(at.z()), t2 = g2.tangent(at.z());
    return std::atan2(std::abs(cross(t1, t2)), std::abs(dot(t1, t2)));
}

double angle_at(const DiscPoint& v, const DiscPoint& a, const DiscPoint& b) {
    Complex ua = direction_toward(v, a), ub = direction_toward(v, b);
    return std::atan2(std::abs(cross(ua, ub)), dot(ua, ub));
}

}  // namespace branchloci

#include "branchloci/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace branchloci {

namespace {

constexpr double kPi = std::numbers::pi;

struct CycleStep {
    int vertex;
    int out_side;
    int partner;
};

// Walk the corners identified with `start` by crossing sides in turn.
std::vector<CycleStep> walk_vertex(const std::vector<int>& pairing, int start) {
    const int k = static_cast<int>(pairing.size());
    std::vector<CycleStep> steps;
    int v = start;
    int in = (start - 1 + k) % k;
    do {
        int out = in == v ? (v - 1 + k) % k : v;
        int p = pairing[out];
        steps.push_back({v, out, p});
        v = out == steps.back().vertex ? (p + 1) % k : p;
        in = p;
        if (steps.size() > pairing.size() + 1) throw InternalCheckFailure("vertex cycle does not close");
    } while (!(v == start && in == (start - 1 + k) % k));
    return steps;
}

}  // namespace

std::int64_t mod_inverse(std::int64_t c, std::int64_t n) {
    if (n < 2) throw std::invalid_argument("modulus must be at least 2");
    std::int64_t a = ((c % n) + n) % n;
    if (std::gcd(a, n) != 1) throw std::invalid_argument("residue is not invertible modulo n");
    // extended Euclid
    std::int64_t r0 = n, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
        std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    return ((s0 % n) + n) % n;
}

CentralTriangle solve_central_triangle(double half_start, double half_end, double apex) {
    if (!(half_start + half_end + apex < kPi)) throw UnsupportedDataSet("central triangle is not hyperbolic");
    const double ca = std::cos(half_start), sa = std::sin(half_start);
    const double cb = std::cos(half_end), sb = std::sin(half_end);
    const double cc = std::cos(apex), sc = std::sin(apex);
    CentralTriangle t{};
    t.side = std::acosh((ca * cb + cc) / (sa * sb));
    t.radius_start = std::acosh((cb + ca * cc) / (sa * sc));
    t.radius_end = std::acosh((ca + cb * cc) / (sb * sc));
    const double h = 0.5 * t.side;
    t.inradius = std::acosh(std::cosh(t.radius_start) * std::cosh(h) - std::sinh(t.radius_start) * std::sinh(h) * ca);
    return t;
}

CanonicalPolygon realize_type1(const DataSet& d) {
    auto report = validate(d);
    if (!report.valid) throw InvalidDataSet(std::move(report));
    auto cls = classify(d);
    if (cls.kind != ActionKind::Type1 || !cls.irreducible)
        throw UnsupportedDataSet("polygon realization needs an irreducible Type 1 data set, got " + class_name(cls));
    const auto g = genus(d);
    if (g < 2) throw UnsupportedDataSet("polygon realization needs genus at least 2, got " + std::to_string(g));

    DataSet src = d;
    auto& pr = src.pairs;
    for (int i = 2; i >= 0; --i) {
        if (pr[i].n_i == src.n) {
            std::swap(pr[i], pr[2]);
            break;
        }
    }
    if (pr[1].n_i == 2 && pr[0].n_i != 2) std::swap(pr[0], pr[1]);

    const std::int64_t n = src.n;
    const auto [c1, n1] = pr[0];
    const auto [c2, n2] = pr[1];
    const auto c3inv = mod_inverse(pr[2].c, n);
    (void)c1;

    CanonicalPolygon p;
    p.source = src;
    p.genus = g;
    p.k = static_cast<int>(n1 != 2 && n2 != 2 ? 2 * n : n);
    p.rotation_angle = 2.0 * kPi * static_cast<double>(c3inv) / static_cast<double>(n);
    p.rotation_shift = static_cast<int>(p.k * c3inv / n);

    const std::int64_t q = n * c3inv / n2;
    const std::int64_t j = n2 - c2;
    const int k = p.k;
    p.pairing.assign(k, -1);
    p.angles.assign(k, 2.0 * kPi / static_cast<double>(n2));
    if (k == n) {
        for (std::int64_t m = 0; m < n; ++m) {
            std::int64_t z = (m + q * j) % n;
            p.pairing[m] = static_cast<int>((z - 1 + n) % n);
        }
    } else {
        // v_{2m} opens the odd side a_{2m+1} and carries the angle of the second pair
        for (int v = 1; v < k; v += 2) p.angles[v] = 2.0 * kPi / static_cast<double>(n1);
        for (std::int64_t m = 0; m < n; ++m) {
            std::int64_t z = (m + q * j) % n;
            int odd = static_cast<int>(2 * m);
            int even = static_cast<int>((2 * z - 1 + k) % k);
            p.pairing[odd] = even;
            p.pairing[even] = odd;
        }
    }
    for (int m = 0; m < k; ++m) {
        if (p.pairing[m] < 0 || p.pairing[m] == m || p.pairing[p.pairing[m]] != m)
            throw InternalCheckFailure("side pairing is not a fixed-point-free involution");
    }

    auto tri = solve_central_triangle(0.5 * p.angles[0], 0.5 * p.angles[1], 2.0 * kPi / k);
    p.side_length = Length(tri.side);
    p.inradius = Length(tri.inradius);
    for (int v = 0; v < k; ++v) p.circumradii.emplace_back(v % 2 == 0 ? tri.radius_start : tri.radius_end);

    auto classes = vertex_classes(p);
    for (const auto& cls_vertices : classes) {
        double sum = 0.0;
        for (int v : cls_vertices) sum += p.angles[v];
        if (std::abs(sum - 2.0 * kPi) > 1e-9) throw InternalCheckFailure("vertex class angle sum differs from 2*pi");
    }
    const auto chi = static_cast<std::int64_t>(classes.size()) - k / 2 + 1;
    if (chi != 2 - 2 * g) throw InternalCheckFailure("side pairing does not produce the expected genus");
    return p;
}

std::vector<std::vector<int>> vertex_classes(const CanonicalPolygon& p) {
    std::vector<int> seen(p.k, 0);
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < p.k; ++v) {
        if (seen[v]) continue;
        std::vector<int> cls;
        for (const auto& step : walk_vertex(p.pairing, v)) {
            if (seen[step.vertex]) throw InternalCheckFailure("vertex visited twice in a cycle");
            seen[step.vertex] = 1;
            cls.push_back(step.vertex);
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

EmbeddedPolygon embed(const CanonicalPolygon& p) {
    const int k = p.k;
    auto place = [&](double phase) {
        std::vector<DiscPoint> v;
        for (int j = 0; j < k; ++j)
            v.emplace_back(std::polar(std::tanh(0.5 * p.circumradii[j].value()), phase + 2.0 * kPi * j / k));
        return v;
    };
    auto trial = place(0.0);
    double psi = std::arg(hyperbolic_midpoint(trial[0], trial[1]).z());

    EmbeddedPolygon e;
    e.source = p;
    e.vertices = place(-0.5 * kPi - psi);
    for (int j = 0; j < k; ++j) e.midpoints.push_back(hyperbolic_midpoint(e.vertices[j], e.vertices[(j + 1) % k]));

    const auto& tol = default_tolerances();
    for (int j = 0; j < k; ++j) {
        double side = hyperbolic_distance(e.vertices[j], e.vertices[(j + 1) % k]).value();
        if (std::abs(side - p.side_length.value()) > tol.length) throw InternalCheckFailure("embedded side length mismatch");
    }
    auto angles = measured_angles(e);
    for (int j = 0; j < k; ++j)
        if (std::abs(angles[j] - p.angles[j]) > tol.angle) throw InternalCheckFailure("embedded angle mismatch");
    return e;
}

Isometry pairing_isometry(const EmbeddedPolygon& e, int m) {
    const int k = e.source.k;
    if (m < 0 || m >= k) throw std::out_of_range("side index out of range");
    const int p = e.source.pairing[m];
    return isometry_from_segment_pair(e.vertices[m], e.vertices[(m + 1) % k], e.vertices[(p + 1) % k], e.vertices[p]);
}

Isometry polygon_rotation(const EmbeddedPolygon& e) { return rotation(e.center, e.source.rotation_angle); }

std::vector<Corner> vertex_cycle(const EmbeddedPolygon& e, int vertex) {
    std::vector<Corner> corners;
    Isometry h;
    for (const auto& step : walk_vertex(e.source.pairing, vertex)) {
        corners.push_back({step.vertex, h});
        h = h * pairing_isometry(e, step.out_side).inverse();
    }
    return corners;
}

std::vector<double> measured_angles(const EmbeddedPolygon& e) {
    const auto k = e.vertices.size();
    std::vector<double> out;
    for (std::size_t j = 0; j < k; ++j)
        out.push_back(angle_at(e.vertices[j], e.vertices[(j + k - 1) % k], e.vertices[(j + 1) % k]));
    return out;
}

double gauss_bonnet_residual(const EmbeddedPolygon& e) {
    auto angles = measured_angles(e);
    double area = (e.source.k - 2) * kPi - std::accumulate(angles.begin(), angles.end(), 0.0);
    return area - 2.0 * kPi * static_cast<double>(2 * e.source.genus - 2);
}

void check_octagon_constraints(double alpha, double s) {
    if (!(alpha > 0.0 && alpha < kPi / 3.0))
        throw ConstraintViolation(ConstraintViolation::Bound::AngleRange, "alpha must satisfy 0 < alpha < pi/3");
    double cot_half = 1.0 / std::tan(0.5 * alpha);
    if (!(std::cosh(s) > cot_half * cot_half))
        throw ConstraintViolation(ConstraintViolation::Bound::SideLength, "s must satisfy cosh(s) > cot^2(alpha/2)");
}

GluedPolygon build_glued_octagon(double alpha, double s) {
    check_octagon_constraints(alpha, s);
    GluedPolygon g;
    g.alpha = alpha;
    g.beta = 0.5 * kPi - 1.5 * alpha;
    g.side_length = Length(s);
    const double cs = std::cosh(s), ss = std::sinh(s);
    g.theta = std::atan2(1.0, cs * std::tan(0.5 * alpha));
    const double d = std::acosh(cs * cs - ss * ss * std::cos(alpha));
    g.diag_d = Length(d);
    const double l = 2.0 * std::atanh(std::tanh(d) * std::cos(g.beta - g.theta));
    g.seam_length = Length(l);

    // seam on the real axis with its midpoint at the origin, pentagon in the upper half
    const DiscPoint x0(-std::tanh(0.25 * l), 0.0);
    const DiscPoint x4(std::tanh(0.25 * l), 0.0);
    const double h = std::acosh(std::max(1.0, std::cosh(d) / std::cosh(0.5 * l)));
    const DiscPoint v2(0.0, std::tanh(0.5 * h));
    const DiscPoint v1 = point_along(x0, direction_toward(x0, v2) * std::polar(1.0, g.theta), s);
    const DiscPoint v3(-v1.x(), v1.y());

    g.pentagon_vertices = {x0, v1, v2, v3, x4};
    for (const auto& v : g.pentagon_vertices) g.reflected_vertices.emplace_back(v.x(), -v.y());
    const auto& r = g.reflected_vertices;
    g.octagon = {x0, r[1], r[2], r[3], x4, v3, v2, v1};
    for (std::size_t j = 0; j < 8; ++j)
        g.octagon_angles.push_back(angle_at(g.octagon[j], g.octagon[(j + 7) % 8], g.octagon[(j + 1) % 8]));
    g.angle_defect = g.octagon_angles[6] - alpha;
    return g;
}

}  // namespace branchloci

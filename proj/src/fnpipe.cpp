#include "branchloci/fnpipe.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>

namespace branchloci {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatch = 1e-9;

int wrap(int i, int k) { return ((i % k) + k) % k; }

double dist(const DiscPoint& a, const DiscPoint& b) { return hyperbolic_distance(a, b).value(); }

double direction_gap(Complex a, Complex b) { return std::atan2(std::abs(cross(a, b)), dot(a, b)); }

// Isometries h with h(start of next segment) = end of previous segment.
std::vector<Isometry> junction_candidates(const EmbeddedPolygon& e, const MarkedPoint& arrive, const MarkedPoint& depart) {
    std::vector<Isometry> out;
    if (arrive.kind != depart.kind) return out;
    if (arrive.kind == MarkedPoint::Kind::Midpoint) {
        if (e.source.pairing[depart.index] == arrive.index) out.push_back(pairing_isometry(e, depart.index));
        return out;
    }
    for (const auto& corner : vertex_cycle(e, arrive.index))
        if (corner.vertex == depart.index) out.push_back(corner.placement);
    return out;
}

std::optional<std::string> smoothness_error(const EmbeddedPolygon& e, const PantsCurve& c) {
    const auto& tol = default_tolerances();
    const int count = static_cast<int>(c.segments.size());
    if (count == 0 || c.itinerary.size() != 2 * c.segments.size()) return c.name + ": malformed itinerary";
    for (int i = 0; i < count; ++i) {
        const auto& seg = c.segments[i];
        const auto& next = c.segments[(i + 1) % count];
        const auto& arrive = c.itinerary[2 * i + 1];
        const auto& depart = c.itinerary[(2 * i + 2) % c.itinerary.size()];
        auto candidates = junction_candidates(e, arrive, depart);
        if (candidates.empty())
            return c.name + ": " + depart.label() + " is not identified with " + arrive.label();
        Complex incoming = -direction_toward(seg.to, seg.from);
        bool smooth = false;
        for (const auto& h : candidates) {
            if (std::abs(h.apply(next.from.z()) - seg.to.z()) > kMatch) continue;
            Complex outgoing = direction_toward(seg.to, h(next.to));
            if (direction_gap(incoming, outgoing) <= tol.smoothness) smooth = true;
        }
        if (!smooth) return c.name + ": corner at " + arrive.label() + "/" + depart.label() + " is not smooth";
    }
    return std::nullopt;
}

bool strictly_inside(const Segment& s, const DiscPoint& p) {
    double a = dist(s.from, p), b = dist(p, s.to), whole = dist(s.from, s.to);
    return a > kMatch && b > kMatch && std::abs(a + b - whole) <= kMatch;
}

bool on_segment(const Segment& s, const DiscPoint& p) {
    return std::abs(dist(s.from, p) + dist(p, s.to) - dist(s.from, s.to)) <= kMatch;
}

bool segments_cross(const Segment& a, const Segment& b) {
    auto p = intersect(geodesic_through(a.from, a.to), geodesic_through(b.from, b.to));
    return p && strictly_inside(a, *p) && strictly_inside(b, *p);
}

std::pair<int, int> identification_key(const EmbeddedPolygon& e, const MarkedPoint& m,
                                       const std::vector<int>& vertex_class_of) {
    if (m.kind == MarkedPoint::Kind::Midpoint) return {0, std::min(m.index, e.source.pairing[m.index])};
    return {1, vertex_class_of[m.index]};
}

std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> segment_key(const PantsCurve& c) {
    std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> key;
    for (std::size_t i = 0; i + 1 < c.itinerary.size(); i += 2) {
        std::pair<int, int> a{static_cast<int>(c.itinerary[i].kind), c.itinerary[i].index};
        std::pair<int, int> b{static_cast<int>(c.itinerary[i + 1].kind), c.itinerary[i + 1].index};
        key.insert({std::min(a, b), std::max(a, b)});
    }
    return key;
}

MarkedPoint shifted(const MarkedPoint& m, int steps, int k) { return {m.kind, wrap(m.index + steps, k)}; }

std::vector<MarkedPoint> shifted(const std::vector<MarkedPoint>& v, int steps, int k) {
    std::vector<MarkedPoint> out;
    for (const auto& m : v) out.push_back(shifted(m, steps, k));
    return out;
}

PerpendicularFoot shifted(const PerpendicularFoot& f, int steps, int k) {
    return {f.segment, shifted(f.ref_from, steps, k), shifted(f.ref_to, steps, k)};
}

struct ResolvedFoot {
    DiscPoint on_curve;
    DiscPoint on_reference;
};

ResolvedFoot resolve_foot(const EmbeddedPolygon& e, const PantsCurve& c, const PerpendicularFoot& f) {
    if (f.segment < 0 || f.segment >= static_cast<int>(c.segments.size()))
        throw GeometryError("seam refers to a missing segment");
    const auto& seg = c.segments[f.segment];
    auto reference = geodesic_through(position(e, f.ref_from), position(e, f.ref_to));
    auto perp = common_perpendicular(reference, geodesic_through(seg.from, seg.to));
    if (!on_segment(seg, perp.foot2))
        throw GeometryError(c.name + ": perpendicular foot falls outside segment " + std::to_string(f.segment));
    return {perp.foot2, perp.foot1};
}

// Template for the regular decagon and octagon families: a curve through four midpoints,
// its image two steps round, and a curve through the center.
struct Family {
    std::string name;
    int k;
    double angle;
    std::vector<MarkedPoint> seed;
    std::vector<MarkedPoint> center_curve;
    PerpendicularFoot seed_first, seed_second;
    PerpendicularFoot center_first, center_second;
    std::array<ClosedForm, 6> closed_forms;
};

std::vector<Family> families() {
    const double r5 = std::sqrt(5.0), r2 = std::sqrt(2.0);
    std::vector<Family> out;
    {
        Family f;
        f.name = "order-10 decagon";
        f.k = 10;
        f.angle = 2.0 * kPi / 5.0;
        f.seed = parse_itinerary("M1M2M7M6");
        f.center_curve = parse_itinerary("M10M5");
        f.seed_first = {0, midpoint_ref(10), midpoint_ref(5)};
        f.seed_second = {1, midpoint_ref(10), midpoint_ref(5)};
        f.center_first = {0, midpoint_ref(1), midpoint_ref(2)};
        f.center_second = {0, midpoint_ref(7), midpoint_ref(6)};
        ClosedForm len{"2*arcosh((2+sqrt(5))/2)", 2.0 * std::acosh((2.0 + r5) / 2.0)};
        ClosedForm tw{"2*arcosh(sqrt(25+9*sqrt(5))/4)", 2.0 * std::acosh(std::sqrt(25.0 + 9.0 * r5) / 4.0)};
        f.closed_forms = {len,
                          len,
                          ClosedForm{"2*arsinh(sqrt((5+3*sqrt(5))/2))", 2.0 * std::asinh(std::sqrt((5.0 + 3.0 * r5) / 2.0))},
                          tw,
                          tw,
                          ClosedForm{"-arcosh((3+sqrt(5))/2)", -std::acosh((3.0 + r5) / 2.0)}};
        out.push_back(f);
    }
    {
        Family f;
        f.name = "order-8 octagon";
        f.k = 8;
        f.angle = kPi / 4.0;
        f.seed = parse_itinerary("M1M2M6M5");
        f.center_curve = parse_itinerary("V0V4");
        f.seed_first = {0, vertex_ref(0), vertex_ref(4)};
        f.seed_second = {1, vertex_ref(0), vertex_ref(4)};
        f.center_first = {0, midpoint_ref(1), midpoint_ref(2)};
        f.center_second = {0, midpoint_ref(6), midpoint_ref(5)};
        ClosedForm len{"2*arcosh(1+sqrt(2))", 2.0 * std::acosh(1.0 + r2)};
        f.closed_forms = {len,
                          len,
                          ClosedForm{"2*arsinh(2*sqrt(4+3*sqrt(2)))", 2.0 * std::asinh(2.0 * std::sqrt(4.0 + 3.0 * r2))},
                          len,
                          len,
                          ClosedForm{"-2*arcosh(sqrt(2+sqrt(2)))", -2.0 * std::acosh(std::sqrt(2.0 + r2))}};
        out.push_back(f);
    }
    return out;
}

bool matches(const Family& f, const CanonicalPolygon& p) {
    if (p.k != f.k) return false;
    for (int m = 0; m < p.k; ++m) {
        if (std::abs(p.angles[m] - f.angle) > 1e-12) return false;
        if (p.pairing[m] != (m + p.k / 2) % p.k) return false;
    }
    return true;
}

PantsDecomposition build_pants(const EmbeddedPolygon& e, const Family& f) {
    PantsDecomposition pd;
    pd.curves.push_back(make_curve(e, "gamma1", f.seed));
    pd.curves.push_back(make_curve(e, "gamma2", shifted(f.seed, 2, f.k)));
    pd.curves.push_back(make_curve(e, "gamma3", f.center_curve));
    pd.seams.push_back({0, f.seed_first, f.seed_second, false});
    pd.seams.push_back({1, shifted(f.seed_first, 2, f.k), shifted(f.seed_second, 2, f.k), false});
    pd.seams.push_back({2, f.center_first, f.center_second, false});
    return pd;
}

}  // namespace

std::string MarkedPoint::label() const {
    return kind == Kind::Midpoint ? "M" + std::to_string(index + 1) : "V" + std::to_string(index);
}

MarkedPoint midpoint_ref(int one_based) { return {MarkedPoint::Kind::Midpoint, one_based - 1}; }
MarkedPoint vertex_ref(int index) { return {MarkedPoint::Kind::Vertex, index}; }

std::vector<MarkedPoint> parse_itinerary(const std::string& text) {
    std::vector<MarkedPoint> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char kind = text[i];
        if (kind != 'M' && kind != 'V') throw std::invalid_argument("itinerary entries start with M or V: " + text);
        std::size_t j = i + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i + 1) throw std::invalid_argument("itinerary entry without an index: " + text);
        int index = std::stoi(text.substr(i + 1, j - i - 1));
        if (kind == 'M') {
            if (index < 1) throw std::invalid_argument("midpoints are numbered from 1: " + text);
            out.push_back(midpoint_ref(index));
        } else {
            out.push_back(vertex_ref(index));
        }
        i = j;
    }
    return out;
}

DiscPoint position(const EmbeddedPolygon& e, const MarkedPoint& m) {
    const auto& pts = m.kind == MarkedPoint::Kind::Midpoint ? e.midpoints : e.vertices;
    if (m.index < 0 || m.index >= static_cast<int>(pts.size())) throw std::out_of_range("marked point out of range");
    return pts[m.index];
}

PantsCurve make_curve(const EmbeddedPolygon& e, std::string name, std::vector<MarkedPoint> itinerary) {
    if (itinerary.size() < 2 || itinerary.size() % 2 != 0)
        throw std::invalid_argument("itinerary needs an even number of marked points");
    PantsCurve c;
    c.name = std::move(name);
    for (std::size_t i = 0; i < itinerary.size(); i += 2)
        c.segments.push_back({position(e, itinerary[i]), position(e, itinerary[i + 1])});
    c.itinerary = std::move(itinerary);
    return c;
}

std::vector<PantsCurve> orbit_of_curve(const EmbeddedPolygon& e, const PantsCurve& seed, const Isometry& rot) {
    auto locate = [&](const DiscPoint& p) {
        for (int j = 0; j < static_cast<int>(e.midpoints.size()); ++j)
            if (std::abs(e.midpoints[j].z() - p.z()) <= kMatch) return MarkedPoint{MarkedPoint::Kind::Midpoint, j};
        for (int j = 0; j < static_cast<int>(e.vertices.size()); ++j)
            if (std::abs(e.vertices[j].z() - p.z()) <= kMatch) return MarkedPoint{MarkedPoint::Kind::Vertex, j};
        throw GeometryError("rotation does not permute the marked points");
    };
    std::vector<PantsCurve> orbit{seed};
    std::set<decltype(segment_key(seed))> seen{segment_key(seed)};
    PantsCurve current = seed;
    const std::size_t limit = 4 * (e.midpoints.size() + e.vertices.size()) + 4;
    for (std::size_t step = 1; step <= limit; ++step) {
        std::vector<MarkedPoint> image;
        for (const auto& m : current.itinerary) image.push_back(locate(rot(position(e, m))));
        current = make_curve(e, seed.name + "^" + std::to_string(step), image);
        auto key = segment_key(current);
        if (key == segment_key(seed)) break;
        if (seen.insert(key).second) orbit.push_back(current);
    }
    return orbit;
}

ValidationReport verify_pants(const EmbeddedPolygon& e, const PantsDecomposition& pd) {
    ValidationReport report;
    const auto expected = 3 * e.source.genus - 3;
    if (static_cast<std::int64_t>(pd.curves.size()) != expected)
        report.add("count", "expected " + std::to_string(expected) + " curves, got " + std::to_string(pd.curves.size()));

    for (const auto& c : pd.curves)
        if (auto err = smoothness_error(e, c)) report.add("geodesic", *err);

    std::vector<int> class_of(e.source.k, 0);
    auto classes = vertex_classes(e.source);
    for (std::size_t id = 0; id < classes.size(); ++id)
        for (int v : classes[id]) class_of[v] = static_cast<int>(id);

    std::map<std::pair<int, int>, std::size_t> owner;
    for (std::size_t ci = 0; ci < pd.curves.size(); ++ci) {
        std::set<std::pair<int, int>> mine;
        for (const auto& m : pd.curves[ci].itinerary) mine.insert(identification_key(e, m, class_of));
        for (const auto& key : mine) {
            auto [it, fresh] = owner.emplace(key, ci);
            if (!fresh)
                report.add("disjoint", pd.curves[it->second].name + " and " + pd.curves[ci].name +
                                           " meet at an identified boundary point");
        }
    }

    struct Ref {
        std::size_t curve, segment;
    };
    std::vector<Ref> refs;
    for (std::size_t ci = 0; ci < pd.curves.size(); ++ci)
        for (std::size_t si = 0; si < pd.curves[ci].segments.size(); ++si) refs.push_back({ci, si});
    for (std::size_t a = 0; a < refs.size(); ++a) {
        for (std::size_t b = a + 1; b < refs.size(); ++b) {
            const auto& sa = pd.curves[refs[a].curve].segments[refs[a].segment];
            const auto& sb = pd.curves[refs[b].curve].segments[refs[b].segment];
            if (segments_cross(sa, sb))
                report.add("crossing", pd.curves[refs[a].curve].name + " segment " + std::to_string(refs[a].segment) +
                                           " crosses " + pd.curves[refs[b].curve].name + " segment " +
                                           std::to_string(refs[b].segment));
        }
    }
    return report;
}

Length curve_length(const EmbeddedPolygon& e, const PantsCurve& c) {
    if (auto err = smoothness_error(e, c)) throw GeometryError("curve is not a closed geodesic: " + *err);
    double total = 0.0;
    for (const auto& s : c.segments) total += dist(s.from, s.to);
    return Length(total);
}

TwistFeet twist_feet(const EmbeddedPolygon& e, const PantsDecomposition& pd, int i) {
    auto it = std::find_if(pd.seams.begin(), pd.seams.end(), [&](const Seam& s) { return s.curve == i; });
    if (i < 0 || i >= static_cast<int>(pd.curves.size()) || it == pd.seams.end())
        throw GeometryError("no seam for curve " + std::to_string(i));
    const auto& c = pd.curves[i];
    auto a = resolve_foot(e, c, it->first);
    auto b = resolve_foot(e, c, it->second);
    return {a.on_curve, b.on_curve, a.on_reference, b.on_reference};
}

double twist_at(const EmbeddedPolygon& e, const PantsDecomposition& pd, int i) {
    auto feet = twist_feet(e, pd, i);
    const auto& seam = *std::find_if(pd.seams.begin(), pd.seams.end(), [&](const Seam& s) { return s.curve == i; });
    const auto& segs = pd.curves[i].segments;
    const int count = static_cast<int>(segs.size());
    const int sa = seam.first.segment, sb = seam.second.segment;
    const auto& first = segs[sa];

    double travelled = 0.0;
    if (sa == sb && dist(first.from, feet.second) >= dist(first.from, feet.first)) {
        travelled = dist(feet.first, feet.second);
    } else {
        travelled = dist(feet.first, first.to);
        for (int j = (sa + 1) % count; j != sb; j = (j + 1) % count) travelled += dist(segs[j].from, segs[j].to);
        travelled += dist(segs[sb].from, feet.second);
    }
    if (travelled == 0.0) return 0.0;

    Complex forward = dist(feet.first, first.to) > kMatch ? direction_toward(feet.first, first.to)
                                                          : -direction_toward(feet.first, first.from);
    Complex arrival = -direction_toward(feet.first, feet.first_reference);
    double sign = cross(arrival, forward) > 0.0 ? 1.0 : -1.0;
    if (seam.reversed) sign = -sign;
    return sign * travelled;
}

FixedPoint solve_fixed_point(const DataSet& d) {
    auto polygon = realize_type1(d);
    for (const auto& f : families()) {
        if (!matches(f, polygon)) continue;
        FixedPoint fp;
        fp.family = f.name;
        fp.polygon = embed(polygon);
        fp.pants = build_pants(fp.polygon, f);
        auto report = verify_pants(fp.polygon, fp.pants);
        if (!report.valid) throw InternalCheckFailure("built-in pants template failed verification: " +
                                                      report.violations.front().message);
        for (int i = 0; i < 3; ++i) fp.coords.lengths.push_back(curve_length(fp.polygon, fp.pants.curves[i]));
        for (int i = 0; i < 3; ++i) fp.coords.twists.push_back(twist_at(fp.polygon, fp.pants, i));
        fp.closed_forms = f.closed_forms;
        return fp;
    }
    throw UnsupportedDataSet("no built-in pants template for " + format_data_set(d) +
                             "; only the genus-2 order-10 and order-8 polygons are supported. Build the polygon with "
                             "realize_type1/embed and assemble curves with orbit_of_curve and verify_pants instead");
}

FNCoordinates fn_fixed_point(const DataSet& d) { return solve_fixed_point(d).coords; }

LocusPoint branch_locus_point(double alpha, double s) {
    check_octagon_constraints(alpha, s);
    const double ch = std::cosh(s);
    const double g1 = 2.0 * std::acosh(std::cosh(0.5 * s) * std::sin(alpha));
    const double g2 = std::acosh(ch * ch * ch * ch - 2.0 * ch * ch * ch + 2.0 * ch);
    const double x = std::atanh(std::cos(alpha) / std::tanh(0.5 * s));
    const double y = std::sinh(s - x) * std::tan(alpha);
    const double t = 0.5 * g1 - std::atanh(1.0 / y);
    if (!std::isfinite(g1) || !std::isfinite(g2) || !std::isfinite(t))
        throw InternalCheckFailure("branch locus formulas left their domain");
    LocusPoint p;
    p.alpha = alpha;
    p.s = Length(s);
    p.coords.lengths = {Length(g1), Length(g2), Length(g1)};
    p.coords.twists = {t, 0.0, -t};
    return p;
}

double gamma2_route_residual(double alpha, double s) {
    const double closed = branch_locus_point(alpha, s).coords.lengths[1].value();
    const double route = build_glued_octagon(alpha, s).seam_length.value();
    return std::abs(route - closed) / closed;
}

double family_length(double d, double l) {
    const double c = std::cosh(0.5 * d), sl = std::sinh(l), sd = std::sinh(0.5 * d);
    return 2.0 * std::acosh(std::sqrt(c * c + sl * sl * sd * sd));
}

std::pair<double, double> min_length_family(double d) {
    if (!(d > 0.0)) throw std::invalid_argument("d must be positive");
    // Search on cosh^2(G/2) - cosh^2(d/2), a strictly increasing function of the length that
    // keeps full relative precision near the minimum, where G itself is flat to rounding.
    const double sd = std::sinh(0.5 * d);
    auto excess = [sd](double l) {
        const double v = std::sinh(l) * sd;
        return v * v;
    };
    const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = -2.0 - d, hi = 3.0 + d;
    double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
    double f1 = excess(x1), f2 = excess(x2);
    while (hi - lo > 1e-10) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = excess(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = excess(x2);
        }
    }
    const double l = 0.5 * (lo + hi);
    return {l, family_length(d, l)};
}

std::pair<Length, Length> irregular_lengths(const std::array<double, 5>& a, double alpha, double beta) {
    for (double v : a)
        if (!(v > 0.0)) throw std::invalid_argument("side lengths must be positive");
    if (!(alpha > 0.0 && alpha < kPi && beta > 0.0 && beta < kPi)) throw std::invalid_argument("angles must lie in (0, pi)");
    auto across = [](double p, double q, double angle) {
        return 2.0 * std::acosh(std::cosh(0.5 * p) * std::cosh(0.5 * q) -
                                std::sinh(0.5 * p) * std::sinh(0.5 * q) * std::cos(angle));
    };
    return {Length(across(a[1], a[2], alpha)), Length(across(a[3], a[4], beta))};
}

}  // namespace branchloci

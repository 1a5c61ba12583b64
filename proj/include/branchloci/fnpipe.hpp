#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "branchloci/dataset.hpp"
#include "branchloci/disc.hpp"
#include "branchloci/polygon.hpp"

namespace branchloci {

// A midpoint M1..Mk (index 0-based) or a vertex V0..V(k-1) of an embedded polygon.
struct MarkedPoint {
    enum class Kind { Midpoint, Vertex };
    Kind kind = Kind::Midpoint;
    int index = 0;

    std::string label() const;
    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

MarkedPoint midpoint_ref(int one_based);
MarkedPoint vertex_ref(int index);
// "M1M2M7M6" or "V0V4"
std::vector<MarkedPoint> parse_itinerary(const std::string& text);
DiscPoint position(const EmbeddedPolygon& e, const MarkedPoint& m);

struct Segment {
    DiscPoint from;
    DiscPoint to;
};

// Consecutive itinerary entries pair up into segments: (p0,p1), (p2,p3), ...; the end of
// each segment is identified with the start of the next, and the last with the first.
struct PantsCurve {
    std::string name;
    std::vector<MarkedPoint> itinerary;
    std::vector<Segment> segments;
};

PantsCurve make_curve(const EmbeddedPolygon& e, std::string name, std::vector<MarkedPoint> itinerary);

// Foot of the common perpendicular between a curve segment and the geodesic through two marked points.
struct PerpendicularFoot {
    int segment = 0;
    MarkedPoint ref_from;
    MarkedPoint ref_to;
};

// Twist anchor for one pants curve: the signed distance travelled along the curve from the
// first foot to the second.
struct Seam {
    int curve = 0;
    PerpendicularFoot first;
    PerpendicularFoot second;
    bool reversed = false;
};

struct PantsDecomposition {
    std::vector<PantsCurve> curves;
    std::vector<Seam> seams;
};

struct FNCoordinates {
    std::vector<Length> lengths;
    std::vector<double> twists;
};

struct LocusPoint {
    double alpha = 0.0;
    Length s;
    FNCoordinates coords;  // (g1, g2, g1, t, 0, -t)
};

std::vector<PantsCurve> orbit_of_curve(const EmbeddedPolygon& e, const PantsCurve& seed, const Isometry& rot);
ValidationReport verify_pants(const EmbeddedPolygon& e, const PantsDecomposition& pd);
Length curve_length(const EmbeddedPolygon& e, const PantsCurve& c);
// Twist of curve i (0-based) along its seam.
double twist_at(const EmbeddedPolygon& e, const PantsDecomposition& pd, int i);

struct TwistFeet {
    DiscPoint first;
    DiscPoint second;
    DiscPoint first_reference;  // foot on the first reference geodesic
    DiscPoint second_reference;
};
TwistFeet twist_feet(const EmbeddedPolygon& e, const PantsDecomposition& pd, int i);

struct ClosedForm {
    std::string expression;
    double value;
};

struct FixedPoint {
    std::string family;
    EmbeddedPolygon polygon;
    PantsDecomposition pants;
    FNCoordinates coords;
    std::array<ClosedForm, 6> closed_forms;  // lengths then twists
};

FixedPoint solve_fixed_point(const DataSet& d);
FNCoordinates fn_fixed_point(const DataSet& d);

LocusPoint branch_locus_point(double alpha, double s);
// Relative difference between the closed-form gamma2 and the seam length of the glued octagon.
double gamma2_route_residual(double alpha, double s);

// Length of the closed geodesic in the one-parameter family with minimum d at l = 0.
double family_length(double d, double l);
std::pair<double, double> min_length_family(double d);
std::pair<Length, Length> irregular_lengths(const std::array<double, 5>& a, double alpha, double beta);

}  // namespace branchloci

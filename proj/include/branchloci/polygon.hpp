#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "branchloci/dataset.hpp"
#include "branchloci/disc.hpp"

namespace branchloci {

// Sides and vertices are indexed from 0. Side m runs from vertex m to vertex m+1
// (counter-clockwise) and corresponds to the side labelled m+1 in one-based notation.
struct CanonicalPolygon {
    int k = 0;
    std::vector<double> angles;      // interior angle at each vertex
    std::vector<int> pairing;        // side m is glued, orientation-reversing, to side pairing[m]
    Length side_length;
    Length inradius;                 // center to side midpoint
    std::vector<Length> circumradii; // center to each vertex
    double rotation_angle = 0.0;     // 2*pi * c3^{-1} / n
    int rotation_shift = 0;          // sides advanced by one application of the rotation
    std::int64_t genus = 0;
    DataSet source;                  // canonical pair order: (c1,n1), (c2,n2), (c3,n)
};

struct EmbeddedPolygon {
    std::vector<DiscPoint> vertices;
    std::vector<DiscPoint> midpoints;  // midpoints[m] bisects side m
    DiscPoint center;
    CanonicalPolygon source;
};

// One corner of a vertex cycle: the polygon copy `placement(P)` has vertex `vertex`
// at the cycle's base point.
struct Corner {
    int vertex = 0;
    Isometry placement;
};

class UnsupportedDataSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InternalCheckFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConstraintViolation : public std::runtime_error {
public:
    enum class Bound { AngleRange, SideLength };
    ConstraintViolation(Bound bound, const std::string& what) : std::runtime_error(what), bound_(bound) {}
    Bound bound() const { return bound_; }

private:
    Bound bound_;
};

std::int64_t mod_inverse(std::int64_t c, std::int64_t n);

// Triangle with the polygon center as apex (apex angle `apex`) and a side as base;
// base angles are half the interior angles at the two side ends.
struct CentralTriangle {
    double side;         // base length
    double radius_start; // center to the first base vertex
    double radius_end;   // center to the second base vertex
    double inradius;     // center to the base midpoint
};
CentralTriangle solve_central_triangle(double half_start, double half_end, double apex);

CanonicalPolygon realize_type1(const DataSet& d);
EmbeddedPolygon embed(const CanonicalPolygon& p);

Isometry pairing_isometry(const EmbeddedPolygon& e, int m);
Isometry polygon_rotation(const EmbeddedPolygon& e);

std::vector<std::vector<int>> vertex_classes(const CanonicalPolygon& p);
std::vector<Corner> vertex_cycle(const EmbeddedPolygon& e, int vertex);
std::vector<double> measured_angles(const EmbeddedPolygon& e);
// (k-2)pi - sum of measured angles - 2pi(2g-2)
double gauss_bonnet_residual(const EmbeddedPolygon& e);

// Octagon glued from a pentagon with four sides s and its mirror image.
struct GluedPolygon {
    double alpha = 0.0;
    double beta = 0.0;
    Length side_length;
    double theta = 0.0;
    Length diag_d;
    Length seam_length;
    std::vector<DiscPoint> pentagon_vertices;   // X0, V1, V2, V3, X4; the seam runs X4 -> X0
    std::vector<DiscPoint> reflected_vertices;  // mirror images across the seam
    std::vector<DiscPoint> octagon;             // counter-clockwise, starting at X0
    std::vector<double> octagon_angles;         // measured, aligned with `octagon`
    // measured angle at V2 minus alpha; zero only where the pentagon closes up consistently
    double angle_defect = 0.0;
};

void check_octagon_constraints(double alpha, double s);
GluedPolygon build_glued_octagon(double alpha, double s);

}  // namespace branchloci

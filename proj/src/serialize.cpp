#include "branchloci/serialize.hpp"

#include <charconv>
#include <cstdio>

namespace branchloci {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

void to_json(nlohmann::json& j, const ConePair& p) { j = {{"c", p.c}, {"n_i", p.n_i}}; }

void from_json(const nlohmann::json& j, ConePair& p) {
    j.at("c").get_to(p.c);
    j.at("n_i").get_to(p.n_i);
}

void to_json(nlohmann::json& j, const DataSet& d) {
    j = {{"n", d.n}, {"g0", d.g0}, {"r", d.r}, {"pairs", d.pairs}};
}

void from_json(const nlohmann::json& j, DataSet& d) {
    j.at("n").get_to(d.n);
    j.at("g0").get_to(d.g0);
    d.r = j.value("r", std::int64_t{0});
    j.at("pairs").get_to(d.pairs);
}

void to_json(nlohmann::json& j, const ValidationReport& r) {
    auto violations = nlohmann::json::array();
    for (const auto& v : r.violations) violations.push_back({{"condition", v.condition}, {"message", v.message}});
    j = {{"valid", r.valid}, {"violations", violations}};
}

void to_json(nlohmann::json& j, const ActionClass& c) {
    const char* kind = c.kind == ActionKind::Rotational ? "Rotational" : c.kind == ActionKind::Type1 ? "Type1" : "Type2";
    j = {{"kind", kind}, {"irreducible", c.irreducible}};
}

void to_json(nlohmann::json& j, const DiscPoint& p) { j = nlohmann::json::array({p.x(), p.y()}); }

void to_json(nlohmann::json& j, const Geodesic& g) {
    if (g.is_diameter()) {
        auto u = g.as_diameter().direction;
        j = {{"kind", "Diameter"}, {"direction", {u.real(), u.imag()}}};
    } else {
        const auto& a = g.as_arc();
        j = {{"kind", "Arc"}, {"center", {a.center.real(), a.center.imag()}}, {"radius", a.radius}};
    }
}

void to_json(nlohmann::json& j, const CanonicalPolygon& p) {
    auto radii = nlohmann::json::array();
    for (const auto& r : p.circumradii) radii.push_back(r.value());
    j = {{"k", p.k},
         {"angles", p.angles},
         {"pairing", p.pairing},
         {"side_length", p.side_length.value()},
         {"inradius", p.inradius.value()},
         {"circumradii", radii},
         {"rotation_angle", p.rotation_angle},
         {"rotation_shift", p.rotation_shift},
         {"genus", p.genus},
         {"source", p.source}};
}

void to_json(nlohmann::json& j, const EmbeddedPolygon& e) {
    j = {{"vertices", e.vertices}, {"midpoints", e.midpoints}, {"center", e.center}, {"source", e.source}};
}

void to_json(nlohmann::json& j, const FNCoordinates& c) {
    auto lengths = nlohmann::json::array();
    for (const auto& l : c.lengths) lengths.push_back(l.value());
    j = {{"lengths", lengths}, {"twists", c.twists}, {"convention", "twist-as-signed-length"}};
}

void to_json(nlohmann::json& j, const LocusPoint& p) {
    j = {{"alpha", p.alpha}, {"s", p.s.value()}, {"coords", p.coords}};
}

std::string locus_csv_header() { return "alpha,s,gamma1,gamma2,t,gamma2_residual"; }

std::string locus_csv_row(const LocusRow& row) {
    return format_double(row.alpha) + "," + format_double(row.s) + "," + format_double(row.gamma1) + "," +
           format_double(row.gamma2) + "," + format_double(row.t) + "," + format_double(row.gamma2_residual);
}

}  // namespace branchloci

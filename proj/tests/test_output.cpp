#include <gtest/gtest.h>

#include "json.hpp"
#include <numbers>
#include <regex>
#include <sstream>

#include "branchloci/fnpipe.hpp"
#include "branchloci/render.hpp"
#include "branchloci/serialize.hpp"
#include "branchloci/sweep.hpp"

using namespace branchloci;
using nlohmann::json;
using std::numbers::pi;

namespace {

const DataSet kDecagon{10, 0, 0, {{1, 2}, {2, 5}, {1, 10}}};
const DataSet kOctagon{8, 0, 0, {{1, 2}, {3, 8}, {1, 8}}};

std::size_t count_class(const std::string& svg, const std::string& cls) {
    std::regex re("class=\"" + cls + "\"");
    return std::distance(std::sregex_iterator(svg.begin(), svg.end(), re), std::sregex_iterator());
}

}  // namespace

TEST(Doubles, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, 2.765142618158057, -1.6169216675118852, 1e-300, 0.0})
        EXPECT_EQ(std::stod(format_double(v)), v);
    EXPECT_EQ(format_double(3.0), "3");
    EXPECT_EQ(format_significant(3.057141838961996, 15), "3.057141838962");
    EXPECT_EQ(format_significant(-2.4484524476780765, 15), "-2.44845244767808");
}

TEST(Json, DataSetRoundTrip) {
    json j = kDecagon;
    EXPECT_EQ(j.get<DataSet>(), kDecagon);
    DataSet free{6, 1, 1, {}};
    json k = free;
    EXPECT_EQ(k.get<DataSet>(), free);
}

TEST(Json, ValidationReport) {
    json j = validate(DataSet{10, 0, 0, {{1, 2}, {1, 5}, {1, 10}}});
    EXPECT_FALSE(j["valid"].get<bool>());
    ASSERT_EQ(j["violations"].size(), 1u);
    EXPECT_EQ(j["violations"][0]["condition"], "v");
}

TEST(Json, FnCoordinatesCarryConvention) {
    json j = fn_fixed_point(kDecagon);
    EXPECT_EQ(j["convention"], "twist-as-signed-length");
    ASSERT_EQ(j["lengths"].size(), 3u);
    ASSERT_EQ(j["twists"].size(), 3u);
    EXPECT_EQ(j["lengths"][0].get<double>(), fn_fixed_point(kDecagon).lengths[0].value());
}

TEST(Json, GeometryTypes) {
    json p = DiscPoint(0.25, -0.5);
    EXPECT_EQ(p, json::array({0.25, -0.5}));
    json d = Geodesic::diameter({1, 0});
    EXPECT_EQ(d["kind"], "Diameter");
    json a = geodesic_through(DiscPoint(0.5, 0), DiscPoint(0, 0.5));
    EXPECT_EQ(a["kind"], "Arc");
    EXPECT_TRUE(a.contains("radius"));
    json poly = embed(realize_type1(kDecagon));
    EXPECT_EQ(poly["vertices"].size(), 10u);
    EXPECT_EQ(poly["midpoints"].size(), 10u);
}

TEST(Csv, HeaderAndRowAgree) {
    EXPECT_EQ(locus_csv_header(), "alpha,s,gamma1,gamma2,t,gamma2_residual");
    auto rows = evaluate_locus_serial(std::vector<LocusQuery>{{pi / 4, 3.0}});
    auto line = locus_csv_row(rows[0].row);
    std::stringstream ss(line);
    std::vector<double> fields;
    for (std::string cell; std::getline(ss, cell, ',');) fields.push_back(std::stod(cell));
    ASSERT_EQ(fields.size(), 6u);
    EXPECT_EQ(fields[0], rows[0].row.alpha);
    EXPECT_EQ(fields[2], rows[0].row.gamma1);
    EXPECT_EQ(fields[4], rows[0].row.t);
}

TEST(Render, TargetNames) {
    EXPECT_EQ(parse_render_target("polygon"), RenderSpec::What::Polygon);
    EXPECT_EQ(parse_render_target("polygon+pants"), RenderSpec::What::PolygonPants);
    EXPECT_EQ(parse_render_target("locus-plot"), RenderSpec::What::LocusPlot);
    EXPECT_THROW(parse_render_target("mesh"), std::invalid_argument);
}

TEST(Render, DecagonWithPants) {
    auto fp = solve_fixed_point(kDecagon);
    RenderSpec spec;
    spec.what = RenderSpec::What::PolygonPants;
    auto svg = render_polygon_svg(fp.polygon, &fp.pants, spec);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(count_class(svg, "side"), 10u);
    EXPECT_EQ(count_class(svg, "pants"), 3u);
    EXPECT_EQ(count_class(svg, "boundary"), 1u);
    EXPECT_GT(count_class(svg, "foot"), 0u);
    for (int i = 1; i <= 10; ++i) EXPECT_NE(svg.find(">M" + std::to_string(i) + "<"), std::string::npos) << i;
}

TEST(Render, OptionsDropLabelsAndFeet) {
    auto fp = solve_fixed_point(kOctagon);
    RenderSpec spec;
    spec.what = RenderSpec::What::PolygonPants;
    spec.labels = false;
    spec.feet = false;
    auto svg = render_polygon_svg(fp.polygon, &fp.pants, spec);
    EXPECT_EQ(count_class(svg, "side"), 8u);
    EXPECT_EQ(count_class(svg, "label"), 0u);
    EXPECT_EQ(count_class(svg, "foot"), 0u);
    auto plain = render_polygon_svg(fp.polygon, nullptr, RenderSpec{});
    EXPECT_EQ(count_class(plain, "pants"), 0u);
}

TEST(Render, SizeIsValidated) {
    auto e = embed(realize_type1(kDecagon));
    RenderSpec spec;
    spec.size = 32;
    EXPECT_THROW(render_polygon_svg(e, nullptr, spec), std::invalid_argument);
    spec.size = 300;
    EXPECT_NE(render_polygon_svg(e, nullptr, spec).find("width=\"300\""), std::string::npos);
}

TEST(Render, LocusPlotHasOneMarkPerValidSample) {
    auto q = rectangular_grid(0.3, 1.0, 2.6, 4.0, 6);
    auto samples = evaluate_locus_serial(q);
    std::size_t valid = 0;
    for (const auto& s : samples) valid += s.valid;
    RenderSpec spec;
    spec.what = RenderSpec::What::LocusPlot;
    EXPECT_EQ(count_class(render_locus_svg(samples, spec), "sample"), valid);
}

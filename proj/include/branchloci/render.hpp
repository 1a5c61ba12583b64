#pragma once

#include <string>
#include <vector>

#include "branchloci/fnpipe.hpp"
#include "branchloci/polygon.hpp"
#include "branchloci/sweep.hpp"

namespace branchloci {

struct RenderSpec {
    enum class What { Polygon, PolygonPants, LocusPlot };
    What what = What::Polygon;
    std::string output;  // empty: standard output
    int size = 512;
    bool labels = true;
    bool feet = true;
    double stroke = 1.5;
};

RenderSpec::What parse_render_target(const std::string& text);

std::string render_polygon_svg(const EmbeddedPolygon& e, const PantsDecomposition* pants, const RenderSpec& spec);
std::string render_locus_svg(const std::vector<LocusSample>& samples, const RenderSpec& spec);

}  // namespace branchloci

#include "branchloci/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace branchloci {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void check_size(const RenderSpec& spec) {
    if (spec.size < 64) throw std::invalid_argument("image size must be at least 64 pixels");
}

std::string header(const RenderSpec& spec) {
    std::string w = std::to_string(spec.size);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + w + "\" viewBox=\"0 0 " + w +
           " " + w + "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

// Path data for the geodesic segment p -> q in disc coordinates.
std::string segment_path(const DiscPoint& p, const DiscPoint& q, double pixel) {
    std::string d = "M " + num(p.x()) + " " + num(p.y());
    if (std::abs(p.z() - q.z()) < pixel) return d + " L " + num(q.x()) + " " + num(q.y());
    auto g = geodesic_through(p, q);
    if (g.is_diameter()) return d + " L " + num(q.x()) + " " + num(q.y());
    const auto& a = g.as_arc();
    int sweep = cross(p.z() - a.center, q.z() - a.center) > 0.0 ? 1 : 0;
    return d + " A " + num(a.radius) + " " + num(a.radius) + " 0 0 " + std::to_string(sweep) + " " + num(q.x()) + " " +
           num(q.y());
}

struct Frame {
    double half;
    double scale;
    double px(const DiscPoint& p) const { return half + scale * p.x(); }
    double py(const DiscPoint& p) const { return half - scale * p.y(); }
};

std::string label(const Frame& f, const DiscPoint& p, const std::string& text, double push) {
    double r = std::abs(p.z());
    Complex dir = r > 0.0 ? p.z() / r : Complex(0.0, 1.0);
    double x = f.px(p) + push * dir.real();
    double y = f.py(p) - push * dir.imag();
    return "<text class=\"label\" x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + text + "</text>\n";
}

}  // namespace

RenderSpec::What parse_render_target(const std::string& text) {
    if (text == "polygon") return RenderSpec::What::Polygon;
    if (text == "polygon+pants") return RenderSpec::What::PolygonPants;
    if (text == "locus-plot") return RenderSpec::What::LocusPlot;
    throw std::invalid_argument("unknown render target: " + text);
}

std::string render_polygon_svg(const EmbeddedPolygon& e, const PantsDecomposition* pants, const RenderSpec& spec) {
    check_size(spec);
    Frame f{0.5 * spec.size, 0.45 * spec.size};
    const double pixel = 1.0 / f.scale;
    const std::string stroke = "stroke-width=\"" + num(spec.stroke) + "\" vector-effect=\"non-scaling-stroke\"";
    std::ostringstream svg;
    svg << header(spec);
    svg << "<g transform=\"translate(" << num(f.half) << " " << num(f.half) << ") scale(" << num(f.scale) << " "
        << num(-f.scale) << ")\">\n";
    svg << "<circle class=\"boundary\" cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"gray\" " << stroke << "/>\n";
    const int k = e.source.k;
    for (int m = 0; m < k; ++m)
        svg << "<path class=\"side\" d=\"" << segment_path(e.vertices[m], e.vertices[(m + 1) % k], pixel)
            << "\" fill=\"none\" stroke=\"black\" " << stroke << "/>\n";

    std::vector<std::pair<DiscPoint, std::string>> foot_labels;
    if (pants) {
        const char* colors[] = {"#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e"};
        for (std::size_t i = 0; i < pants->curves.size(); ++i) {
            std::string d;
            for (const auto& s : pants->curves[i].segments) d += segment_path(s.from, s.to, pixel) + " ";
            d.pop_back();
            svg << "<path class=\"pants\" d=\"" << d << "\" fill=\"none\" stroke=\"" << colors[i % 5] << "\" " << stroke
                << "/>\n";
        }
        if (spec.feet) {
            for (const auto& seam : pants->seams) {
                auto feet = twist_feet(e, *pants, seam.curve);
                std::string n = std::to_string(seam.curve + 1);
                for (const auto& [p, name] : {std::pair{feet.first, "P" + n}, std::pair{feet.second, "Q" + n}}) {
                    svg << "<circle class=\"foot\" cx=\"" << num(p.x()) << "\" cy=\"" << num(p.y()) << "\" r=\""
                        << num(3.0 * pixel) << "\" fill=\"black\"/>\n";
                    foot_labels.emplace_back(p, name);
                }
            }
        }
    }
    svg << "</g>\n";
    if (spec.labels) {
        for (int m = 0; m < k; ++m) svg << label(f, e.midpoints[m], "M" + std::to_string(m + 1), 12.0);
        for (const auto& [p, name] : foot_labels) svg << label(f, p, name, -10.0);
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_locus_svg(const std::vector<LocusSample>& samples, const RenderSpec& spec) {
    check_size(spec);
    double a0 = std::numeric_limits<double>::infinity(), a1 = -a0, s0 = a0, s1 = -a0, t0 = a0, t1 = -a0;
    for (const auto& smp : samples) {
        if (!smp.valid) continue;
        a0 = std::min(a0, smp.row.alpha);
        a1 = std::max(a1, smp.row.alpha);
        s0 = std::min(s0, smp.row.s);
        s1 = std::max(s1, smp.row.s);
        t0 = std::min(t0, smp.row.t);
        t1 = std::max(t1, smp.row.t);
    }
    const double margin = 40.0, w = spec.size - 2.0 * margin;
    auto span = [](double lo, double hi) { return hi > lo ? hi - lo : 1.0; };
    std::ostringstream svg;
    svg << header(spec);
    svg << "<line class=\"axis\" x1=\"" << num(margin) << "\" y1=\"" << num(margin + w) << "\" x2=\"" << num(margin + w)
        << "\" y2=\"" << num(margin + w) << "\" stroke=\"black\"/>\n";
    svg << "<line class=\"axis\" x1=\"" << num(margin) << "\" y1=\"" << num(margin) << "\" x2=\"" << num(margin)
        << "\" y2=\"" << num(margin + w) << "\" stroke=\"black\"/>\n";
    for (const auto& smp : samples) {
        if (!smp.valid) continue;
        double x = margin + w * (smp.row.alpha - a0) / span(a0, a1);
        double y = margin + w - w * (smp.row.s - s0) / span(s0, s1);
        int shade = static_cast<int>(std::lround(255.0 * (smp.row.t - t0) / span(t0, t1)));
        svg << "<circle class=\"sample\" cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"rgb(" << shade
            << ",64," << 255 - shade << ")\"/>\n";
    }
    if (spec.labels) {
        svg << "<text class=\"label\" x=\"" << num(margin + 0.5 * w) << "\" y=\"" << num(spec.size - 10.0)
            << "\" font-size=\"12\" text-anchor=\"middle\">alpha</text>\n";
        svg << "<text class=\"label\" x=\"12\" y=\"" << num(margin + 0.5 * w)
            << "\" font-size=\"12\" text-anchor=\"middle\">s</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace branchloci

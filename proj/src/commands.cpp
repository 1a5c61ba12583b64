#include "branchloci/commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "branchloci/fnpipe.hpp"
#include "branchloci/polygon.hpp"
#include "branchloci/serialize.hpp"
#include "branchloci/sweep.hpp"

namespace branchloci {

namespace {

using nlohmann::json;

CommandResult failure(int code, const std::string& message) { return {code, "", "error: " + message + "\n"}; }

// Maps library exceptions onto the exit-status contract.
CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return failure(exit_status::invalid_input, e.what());
    } catch (const InvalidDataSet& e) {
        return failure(exit_status::invalid_input, e.what());
    } catch (const UnsupportedDataSet& e) {
        return failure(exit_status::constraint_violation, e.what());
    } catch (const ConstraintViolation& e) {
        return failure(exit_status::constraint_violation, e.what());
    } catch (const std::invalid_argument& e) {
        return failure(exit_status::invalid_input, e.what());
    } catch (const std::exception& e) {
        return failure(exit_status::internal_failure, e.what());
    }
}

std::string pad(const std::string& key) { return key + std::string(key.size() < 12 ? 12 - key.size() : 1, ' '); }

}  // namespace

std::pair<double, double> parse_range(const std::string& text) {
    auto to_double = [&](const std::string& part) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a number in range: " + text);
        }
        if (used != part.size()) throw std::invalid_argument("not a number in range: " + text);
        return v;
    };
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        double v = to_double(text);
        return {v, v};
    }
    return {to_double(text.substr(0, colon)), to_double(text.substr(colon + 1))};
}

CommandResult cmd_validate(const std::string& dataset_text, const OutputOptions& opts) {
    return guarded([&] {
        auto d = parse_data_set(dataset_text);
        auto report = validate(d);
        json j = report;
        j["data_set"] = format_data_set(d);
        if (report.valid) {
            j["genus"] = genus(d);
            j["class"] = class_name(classify(d));
        }
        CommandResult r;
        r.exit_code = report.valid ? exit_status::success : exit_status::invalid_input;
        if (!opts.pretty) {
            r.out = j.dump() + "\n";
            return r;
        }
        std::ostringstream out;
        out << pad("data set") << format_data_set(d) << "\n" << pad("valid") << (report.valid ? "yes" : "no") << "\n";
        if (report.valid) {
            out << pad("genus") << genus(d) << "\n" << pad("class") << class_name(classify(d)) << "\n";
        }
        for (const auto& v : report.violations) out << "  (" << v.condition << ") " << v.message << "\n";
        r.out = out.str();
        return r;
    });
}

CommandResult cmd_classify(const std::string& dataset_text, const OutputOptions& opts) {
    return guarded([&] {
        auto d = parse_data_set(dataset_text);
        auto g = genus(d);
        auto cls = classify(d);
        CommandResult r;
        if (opts.pretty) {
            r.out = format_data_set(d) + ": " + class_name(cls) + ", genus " + std::to_string(g) + "\n";
        } else {
            json j = cls;
            j["class"] = class_name(cls);
            j["genus"] = g;
            r.out = j.dump() + "\n";
        }
        return r;
    });
}

CommandResult cmd_fn(const std::string& dataset_text, const OutputOptions& opts) {
    return guarded([&] {
        auto fp = solve_fixed_point(parse_data_set(dataset_text));
        json forms_len = json::array(), forms_tw = json::array(), dec_len = json::array(), dec_tw = json::array();
        for (int i = 0; i < 3; ++i) {
            forms_len.push_back(fp.closed_forms[i].expression);
            forms_tw.push_back(fp.closed_forms[3 + i].expression);
            dec_len.push_back(format_significant(fp.coords.lengths[i].value(), 15));
            dec_tw.push_back(format_significant(fp.coords.twists[i], 15));
        }
        CommandResult r;
        if (opts.pretty) {
            std::ostringstream out;
            out << "family: " << fp.family << "\n";
            const char* names[] = {"l1", "l2", "l3", "t1", "t2", "t3"};
            for (int i = 0; i < 6; ++i) {
                double v = i < 3 ? fp.coords.lengths[i].value() : fp.coords.twists[i - 3];
                out << "  " << names[i] << " = " << format_significant(v, 15) << "  = " << fp.closed_forms[i].expression
                    << "\n";
            }
            r.out = out.str();
            return r;
        }
        json j = fp.coords;
        j["family"] = fp.family;
        j["closed_forms"] = {{"lengths", forms_len}, {"twists", forms_tw}};
        j["decimals"] = {{"lengths", dec_len}, {"twists", dec_tw}};
        r.out = j.dump() + "\n";
        return r;
    });
}

CommandResult cmd_locus(const LocusOptions& locus) {
    return guarded([&] {
        if (locus.steps < 1) throw std::invalid_argument("grid steps must be at least 1");
        auto grid = rectangular_grid(locus.alpha0, locus.alpha1, locus.s0, locus.s1, locus.steps);
        auto samples = evaluate_locus(grid);
        CommandResult r;
        std::string csv = locus_csv_header() + "\n";
        std::size_t rows = 0;
        for (const auto& s : samples) {
            if (!s.valid) continue;
            csv += locus_csv_row(s.row) + "\n";
            ++rows;
        }
        if (rows < grid.size())
            r.err = "note: skipped " + std::to_string(grid.size() - rows) + " of " + std::to_string(grid.size()) +
                    " grid points violating 0 < alpha < pi/3 or cosh(s) > cot^2(alpha/2)\n";
        if (rows == 0) {
            r.exit_code = exit_status::constraint_violation;
            r.err += "error: no grid point lies in the valid region\n";
            return r;
        }
        r.out = std::move(csv);
        return r;
    });
}

CommandResult cmd_render(const RenderSpec& spec, const std::string& dataset_text, const LocusOptions& locus) {
    return guarded([&] {
        if (spec.size < 64) throw std::invalid_argument("image size must be at least 64 pixels");
        CommandResult r;
        if (spec.what == RenderSpec::What::LocusPlot) {
            auto grid = rectangular_grid(locus.alpha0, locus.alpha1, locus.s0, locus.s1, locus.steps);
            r.out = render_locus_svg(evaluate_locus(grid), spec);
        } else if (spec.what == RenderSpec::What::PolygonPants) {
            auto fp = solve_fixed_point(parse_data_set(dataset_text));
            r.out = render_polygon_svg(fp.polygon, &fp.pants, spec);
        } else {
            auto e = embed(realize_type1(parse_data_set(dataset_text)));
            r.out = render_polygon_svg(e, nullptr, spec);
        }
        return write_output(std::move(r), spec.output);
    });
}

CommandResult cmd_selftest(const SelftestOptions& options, const OutputOptions& opts) {
    return guarded([&] {
        auto results = run_acceptance(options);
        bool all = true;
        json criteria = json::array(), failing = json::array();
        std::ostringstream pretty;
        for (const auto& c : results) {
            all = all && c.passed;
            if (!c.passed) failing.push_back(c.id);
            criteria.push_back({{"id", c.id},
                                {"title", c.title},
                                {"passed", c.passed},
                                {"detail", c.detail},
                                {"seconds", c.seconds}});
            pretty << (c.passed ? "PASS " : "FAIL ") << c.id << " " << c.title << " (" << format_significant(c.seconds, 3)
                   << " s): " << c.detail << "\n";
        }
        CommandResult r;
        r.exit_code = all ? exit_status::success : exit_status::internal_failure;
        if (opts.pretty)
            r.out = pretty.str();
        else
            r.out = json{{"passed", all}, {"failing", failing}, {"criteria", criteria}}.dump() + "\n";
        if (!all) {
            r.err = "selftest failed:";
            for (const auto& id : failing) r.err += " criterion " + std::to_string(id.get<int>());
            r.err += "\n";
        }
        return r;
    });
}

CommandResult write_output(CommandResult result, const std::string& path) {
    if (path.empty() || result.exit_code != exit_status::success) return result;
    std::ofstream file(path, std::ios::binary);
    file << result.out;
    file.close();
    if (!file) return failure(exit_status::invalid_input, "cannot write " + path);
    result.out.clear();
    return result;
}

}  // namespace branchloci

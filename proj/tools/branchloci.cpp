#include <iostream>

#include <CLI11.hpp>

#include "branchloci/commands.hpp"

using namespace branchloci;

int main(int argc, char** argv) {
    CLI::App app{"Fixed points of finite cyclic actions on Teichmueller space"};
    app.require_subcommand(1);

    OutputOptions output;
    bool json_flag = false;
    std::string out_path;
    auto add_format = [&](CLI::App* cmd) {
        auto* pretty = cmd->add_flag("--pretty", output.pretty, "human-readable output");
        cmd->add_flag("--json", json_flag, "JSON output (default)")->excludes(pretty);
        cmd->add_option("--out", out_path, "write output to PATH");
    };

    std::string dataset;
    auto* validate = app.add_subcommand("validate", "check conditions (i)-(v) and the Riemann-Hurwitz genus");
    validate->add_option("dataset", dataset, "data set, e.g. \"(10,0;(1,2),(2,5),(1,10))\"")->required();
    add_format(validate);

    auto* classify = app.add_subcommand("classify", "rotational / Type 1 / Type 2 and irreducibility");
    classify->add_option("dataset", dataset)->required();
    add_format(classify);

    auto* fn = app.add_subcommand("fn", "Fenchel-Nielsen coordinates of the fixed point");
    fn->add_option("dataset", dataset)->required();
    add_format(fn);

    LocusOptions locus;
    std::string alpha_range = "0.3:1.0", s_range = "2.6:4.0";
    auto add_locus = [&](CLI::App* cmd) {
        cmd->add_option("--alpha", alpha_range, "alpha range a:b (radians)")->capture_default_str();
        cmd->add_option("--s", s_range, "side length range a:b")->capture_default_str();
        cmd->add_option("--steps", locus.steps, "grid steps per axis")->capture_default_str();
    };
    auto* loc = app.add_subcommand("locus", "sweep the compatible-pair branch locus, CSV output");
    add_locus(loc);
    loc->add_option("--out", out_path, "write CSV to PATH");

    RenderSpec spec;
    std::string what = "polygon";
    bool no_labels = false, no_feet = false;
    auto* render = app.add_subcommand("render", "SVG diagram of a polygon, its pants curves, or the locus");
    render->add_option("--what", what, "polygon | polygon+pants | locus-plot")->capture_default_str();
    render->add_option("--data", dataset, "data set for polygon targets");
    render->add_option("--size", spec.size, "image size in pixels")->capture_default_str();
    render->add_option("--stroke", spec.stroke, "stroke width in pixels")->capture_default_str();
    render->add_flag("--no-labels", no_labels, "omit text labels");
    render->add_flag("--no-feet", no_feet, "omit perpendicular feet");
    render->add_option("--out", spec.output, "SVG output path (default: stdout)");
    add_locus(render);

    SelftestOptions selftest_options;
    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->add_option("--inject-tolerance", selftest_options.injected_tolerance,
                         "replace every comparison tolerance (harness negative control)");
    add_format(selftest);

    CLI11_PARSE(app, argc, argv);

    CommandResult result;
    try {
        if (loc->parsed() || render->parsed()) {
            std::tie(locus.alpha0, locus.alpha1) = parse_range(alpha_range);
            std::tie(locus.s0, locus.s1) = parse_range(s_range);
        }
        if (validate->parsed()) {
            result = cmd_validate(dataset, output);
        } else if (classify->parsed()) {
            result = cmd_classify(dataset, output);
        } else if (fn->parsed()) {
            result = cmd_fn(dataset, output);
        } else if (loc->parsed()) {
            result = cmd_locus(locus);
        } else if (render->parsed()) {
            spec.what = parse_render_target(what);
            spec.labels = !no_labels;
            spec.feet = !no_feet;
            result = cmd_render(spec, dataset, locus);
        } else if (selftest->parsed()) {
            result = cmd_selftest(selftest_options, output);
        }
    } catch (const std::invalid_argument& e) {
        result = {exit_status::invalid_input, "", std::string("error: ") + e.what() + "\n"};
    }
    if (!render->parsed()) result = write_output(std::move(result), out_path);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}

/*
   Copyright 2026 The symquot authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "symquot/spec_io.hpp"

using namespace symquot;

namespace {

int default_order() {
    if (const char* env = std::getenv("SYMQUOT_ORDER")) {
        try {
            int v = std::stoi(env);
            if (v >= 4) return v;
            std::cerr << "warning: SYMQUOT_ORDER below 4 ignored\n";
        } catch (const std::exception&) {
            std::cerr << "warning: unparsable SYMQUOT_ORDER ignored\n";
        }
    }
    return 20;
}

int run_series(const std::string& spec_text, const ClassifyConfig& config, bool json_mode,
               bool doubled, bool molien_mode) {
    try {
        RepSpec spec = parse_spec(spec_text, config);
        GradedSeries series(config.order);
        if (const auto* c = std::get_if<CircleSpec>(&spec)) {
            if (molien_mode) throw std::invalid_argument("molien expects a finite group spec");
            series = quotient_hilbert_series_circle(normalize_weights(c->raw_weights), config.order);
        } else if (const auto* s = std::get_if<SU2Spec>(&spec)) {
            if (molien_mode) throw std::invalid_argument("molien expects a finite group spec");
            series = quotient_hilbert_series_su2(SU2Module(s->degrees), config.order);
        } else {
            const auto& f = std::get<FiniteSpec>(spec);
            series = (molien_mode && !doubled) ? molien_series(f.group, config.order)
                                               : molien_series(doubled_action(f.group), config.order);
        }
        if (json_mode)
            std::cout << series_to_json(series).dump() << "\n";
        else
            std::cout << series.to_display_string() << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "symquot: classifies symplectic quotients of circle, SU(2) and finite unitary modules "
        "against linear symplectic orbifolds, with exact graded-series evidence"};
    app.require_subcommand(1);

    ClassifyConfig config;
    config.order = default_order();
    bool json_mode = false;

    std::string spec_text;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("spec", spec_text, "representation spec, e.g. \"circle: 1,-1\" or \"su2: 4\"")
            ->required();
        sub->add_option("--order", config.order, "series truncation order (>= 4)");
        sub->add_flag("--json", json_mode, "emit JSON");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "classify one representation");
    add_common(classify_cmd);
    classify_cmd->add_option("--search-bound", config.search_bound,
                             "largest cyclic order tried for 2-dimensional circle quotients");
    classify_cmd->add_option("--group-cap", config.group_cap, "largest allowed finite group order");

    CLI::App* series_cmd =
        app.add_subcommand("series", "quotient Hilbert series (doubled Molien for finite groups)");
    add_common(series_cmd);

    bool doubled = false;
    CLI::App* molien_cmd = app.add_subcommand("molien", "Molien series of a finite group");
    add_common(molien_cmd);
    molien_cmd->add_flag("--doubled", doubled, "act on W + W* instead of W");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "classify a whole family, one JSON line each");
    std::string family;
    std::string out_path;
    SweepBounds bounds;
    sweep_cmd->add_option("family", family, "circle or su2")->required();
    sweep_cmd->add_option("--max-n", bounds.max_n, "circle: largest number of weights");
    sweep_cmd->add_option("--max-weight", bounds.max_weight, "circle: largest |weight|");
    sweep_cmd->add_option("--max-degree", bounds.max_degree, "su2: largest degree");
    sweep_cmd->add_option("--max-summands", bounds.max_summands, "su2: largest number of summands");
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
    sweep_cmd->add_option("--order", config.order, "series truncation order (>= 4)");

    CLI11_PARSE(app, argc, argv);

    if (config.order < 4) {
        std::cerr << "error: order must be >= 4\n";
        return 1;
    }

    if (classify_cmd->parsed())
        return run_classify(spec_text, config, json_mode, std::cout, std::cerr);
    if (series_cmd->parsed()) return run_series(spec_text, config, json_mode, false, false);
    if (molien_cmd->parsed()) return run_series(spec_text, config, json_mode, doubled, true);

    // sweep
    if (family != "circle" && family != "su2") {
        std::cerr << "error: sweep family must be 'circle' or 'su2'\n";
        return 1;
    }
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 1;
        }
        out = &file;
    }
    return family == "circle" ? run_sweep_circle(bounds, config, *out)
                              : run_sweep_su2(bounds, config, *out);
}

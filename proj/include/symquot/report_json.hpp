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

#ifndef SYMQUOT_REPORT_JSON_HPP
#define SYMQUOT_REPORT_JSON_HPP

#include <string>

#include "json.hpp"
#include "symquot/classifier.hpp"

namespace symquot {

using ordered_json = nlohmann::ordered_json;

/// Rationals serialize as exact "p/q" strings.
inline ordered_json series_to_json(const GradedSeries& s) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : s.coefficients()) arr.push_back(c.to_string());
    return arr;
}

inline ordered_json generator_degrees_to_json(const GeneratorDegrees& g) {
    ordered_json counts = ordered_json::object();
    for (auto [degree, count] : g.counts) counts[std::to_string(degree)] = count;
    return counts;
}

inline ordered_json report_to_json(const Report& r) {
    ordered_json spec = ordered_json::object();
    spec["kind"] = r.kind;
    spec["input"] = r.input_rendered;
    spec["normalized"] = r.normalized_rendered;
    if (r.circle_weights) {
        spec["weights"] = r.circle_weights->weights;
        spec["zeros_removed"] = r.circle_weights->zeros_removed;
        spec["scale"] = r.circle_weights->scale;
    }
    if (r.su2_module) spec["degrees"] = r.su2_module->degrees;
    if (!r.group_label.empty()) spec["group"] = r.group_label;

    ordered_json verdicts = ordered_json::array();
    for (Verdict v : r.verdicts) verdicts.push_back(verdict_name(v));

    ordered_json citations = ordered_json::array();
    for (const auto& c : r.citations) citations.push_back({{"id", c.id}, {"statement", c.statement}});

    ordered_json evidence = ordered_json::object();
    if (r.quotient_series) evidence["series"] = series_to_json(*r.quotient_series);
    if (r.generator_degrees) {
        evidence["generator_degrees"] = generator_degrees_to_json(*r.generator_degrees);
        evidence["generator_degrees_complete"] = r.generator_degrees->complete;
    }
    if (!r.codims.empty()) evidence["codims"] = r.codims;
    if (r.principal_codimension) evidence["principal_codimension"] = *r.principal_codimension;
    if (r.quadratic_invariants) evidence["quadratic_invariants"] = *r.quadratic_invariants;
    if (r.model) {
        evidence["model"] = r.model->label();
        if (r.model->kind == OrbifoldModelDesc::Kind::CyclicDoubled) evidence["model_m"] = r.model->m;
    }
    if (r.match) {
        ordered_json match = ordered_json::object();
        match["pass"] = r.match->pass;
        match["mode"] = r.match->mode;
        match["detail"] = r.match->detail;
        if (r.match->first_mismatch >= 0) match["first_mismatch"] = r.match->first_mismatch;
        if (r.match->model_series) match["model_series"] = series_to_json(*r.match->model_series);
        if (r.match->model_generators) {
            match["model_generator_degrees"] = generator_degrees_to_json(*r.match->model_generators);
            match["model_generator_degrees_complete"] = r.match->model_generators->complete;
        }
        if (r.match->quotient_generators)
            match["quotient_generator_degrees"] = generator_degrees_to_json(*r.match->quotient_generators);
        evidence["match"] = match;
    }

    ordered_json out = ordered_json::object();
    out["spec"] = spec;
    out["verdicts"] = verdicts;
    out["citations"] = citations;
    out["evidence"] = evidence;
    out["order"] = r.order;
    if (!r.notes.empty()) out["notes"] = r.notes;
    return out;
}

/// Human-readable rendering for the text output mode.
inline std::string report_to_text(const Report& r) {
    std::string s;
    s += "spec:       " + r.input_rendered + "\n";
    if (r.normalized_rendered != r.input_rendered) s += "normalized: " + r.normalized_rendered + "\n";
    s += "verdict:    " + std::string(verdict_name(r.verdict()));
    if (r.model) s += "  [model: " + r.model->label() + "]";
    s += "\n";
    if (r.verdicts.size() > 1) {
        s += "implied:    ";
        for (size_t i = 1; i < r.verdicts.size(); ++i)
            s += std::string(i > 1 ? ", " : "") + verdict_name(r.verdicts[i]);
        s += "\n";
    }
    for (const auto& c : r.citations) s += "rule:       [" + c.id + "] " + c.statement + "\n";
    if (r.quotient_series)
        s += "series:     " + r.quotient_series->to_display_string() + "\n";
    if (r.generator_degrees) {
        s += "generators:";
        for (auto [d, k] : r.generator_degrees->counts)
            s += " deg " + std::to_string(d) + " x" + std::to_string(k);
        s += r.generator_degrees->complete ? "  (complete)" : "  (truncated)";
        s += "\n";
    }
    if (r.match) {
        s += "match:      " + std::string(r.match->pass ? "pass" : "FAIL") + " (" + r.match->mode +
             "): " + r.match->detail + "\n";
        if (r.match->model_series)
            s += "model series: " + r.match->model_series->to_display_string() + "\n";
    }
    if (r.principal_codimension)
        s += "principal codim: " + std::to_string(*r.principal_codimension) + "\n";
    if (r.quadratic_invariants)
        s += "quadratic invariants: " + std::to_string(*r.quadratic_invariants) + "\n";
    if (!r.codims.empty()) {
        s += "strata codims:";
        for (int c : r.codims) s += " " + std::to_string(c);
        s += "\n";
    }
    for (const auto& note : r.notes) s += "note:       " + note + "\n";
    s += "order:      " + std::to_string(r.order) + "\n";
    return s;
}

}  // namespace symquot

#endif

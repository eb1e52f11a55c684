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

#ifndef SYMQUOT_SPEC_IO_HPP
#define SYMQUOT_SPEC_IO_HPP

#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "symquot/classifier.hpp"
#include "symquot/report_json.hpp"

namespace symquot {

class SpecParseError : public std::runtime_error {
  public:
    SpecParseError(const std::string& message, size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    size_t position() const { return position_; }

  private:
    size_t position_;
};

namespace detail {

inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<long long> parse_int_list(const std::string& body, size_t offset) {
    std::vector<long long> out;
    size_t pos = 0;
    while (pos < body.size()) {
        size_t next = body.find(',', pos);
        std::string token = strip(body.substr(pos, next == std::string::npos ? next : next - pos));
        if (token.empty()) throw SpecParseError("empty entry in integer list", offset + pos);
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw SpecParseError("expected an integer, got '" + token + "'", offset + pos);
        }
        if (used != token.size())
            throw SpecParseError("trailing characters after integer '" + token + "'", offset + pos);
        out.push_back(value);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw SpecParseError("empty integer list", offset);
    return out;
}

inline CycMatrix matrix_from_json(const ordered_json& j) {
    if (!j.contains("conductor") || !j.contains("coeffs"))
        throw std::invalid_argument("finite generator objects need \"conductor\" and \"coeffs\"");
    unsigned conductor = j.at("conductor").get<unsigned>();
    auto field = CyclotomicField::get(conductor);
    const auto& rows = j.at("coeffs");
    unsigned n = static_cast<unsigned>(rows.size());
    CycMatrix m(field, n);
    for (unsigned i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (row.size() != n) throw std::invalid_argument("generator matrix is not square");
        for (unsigned k = 0; k < n; ++k) {
            const auto& entry = row.at(k);
            if (!entry.is_array() || entry.size() > field->degree())
                throw std::invalid_argument("matrix entry must list at most deg Phi_N rationals");
            CyclotomicNumber value(field);
            for (size_t c = 0; c < entry.size(); ++c) {
                Rational coeff = Rational::parse(entry.at(c).get<std::string>());
                value += CyclotomicNumber::zeta(conductor, static_cast<long long>(c)) * coeff;
            }
            m.at(i, k) = value;
        }
    }
    return m;
}

inline FiniteSpec finite_from_preset(const std::string& name, const std::vector<long long>& args,
                                     const std::vector<long long>& weights, size_t group_cap,
                                     const std::string& rendered) {
    if (name == "cyclic") {
        if (args.size() != 1 || args[0] < 1)
            throw std::invalid_argument("cyclic preset needs a positive order");
        MatrixGroup g = cyclic_group(static_cast<unsigned>(args[0]),
                                     weights.empty() ? std::vector<long long>{1} : weights);
        return FiniteSpec{std::move(g), rendered};
    }
    if (name == "plus_minus_one") {
        if (args.size() != 1 || args[0] < 1)
            throw std::invalid_argument("plus_minus_one preset needs a positive dimension");
        return FiniteSpec{plus_minus_one(static_cast<unsigned>(args[0])), rendered};
    }
    if (name == "symmetric3_standard") {
        if (!args.empty()) throw std::invalid_argument("symmetric3_standard takes no arguments");
        return FiniteSpec{symmetric3_standard(), rendered};
    }
    (void)group_cap;
    throw std::invalid_argument("unknown finite preset '" + name + "'");
}

inline RepSpec parse_spec_json(const std::string& text, const ClassifyConfig& config) {
    ordered_json j = ordered_json::parse(text);
    const std::string type = j.at("type").get<std::string>();
    if (type == "circle") {
        std::vector<long long> weights = j.at("weights").get<std::vector<long long>>();
        if (normalize_weights(weights).weights.empty())
            throw std::invalid_argument("circle spec has no nonzero weights");
        return CircleSpec{std::move(weights)};
    }
    if (type == "su2") {
        std::vector<int> degrees = j.at("degrees").get<std::vector<int>>();
        if (degrees.empty()) throw std::invalid_argument("su2 spec has no degrees");
        for (int d : degrees)
            if (d < 1) throw std::invalid_argument("su2 degrees must be >= 1");
        return SU2Spec{std::move(degrees)};
    }
    if (type == "finite") {
        if (j.contains("preset")) {
            const std::string preset = j.at("preset").get<std::string>();
            std::vector<long long> args, weights;
            if (j.contains("m")) args.push_back(j.at("m").get<long long>());
            if (j.contains("n")) args.push_back(j.at("n").get<long long>());
            if (j.contains("weights")) weights = j.at("weights").get<std::vector<long long>>();
            return RepSpec{
                finite_from_preset(preset, args, weights, config.group_cap, j.dump())};
        }
        if (!j.contains("generators") || !j.at("generators").is_array() || j.at("generators").empty())
            throw std::invalid_argument("finite spec needs a preset or a generator list");
        std::vector<CycMatrix> gens;
        for (const auto& gj : j.at("generators")) gens.push_back(matrix_from_json(gj));
        std::string label = j.contains("label") ? j.at("label").get<std::string>() : "H";
        MatrixGroup g = close_group(std::move(gens), config.group_cap, label);
        return RepSpec{FiniteSpec{std::move(g), j.dump()}};
    }
    throw std::invalid_argument("unknown spec type '" + type + "'");
}

}  // namespace detail

/// Parses `circle: w1,w2,...`, `su2: d1,d2,...`, `finite: preset(args)`, or a
/// JSON object with the same content.  Validation errors carry positions for
/// the text grammar.
inline RepSpec parse_spec(const std::string& raw, const ClassifyConfig& config = {}) {
    std::string text = detail::strip(raw);
    if (text.empty()) throw SpecParseError("empty spec", 0);
    if (text[0] == '{') return detail::parse_spec_json(text, config);
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw SpecParseError("expected 'circle:', 'su2:' or 'finite:'", 0);
    const std::string head = detail::strip(text.substr(0, colon));
    const std::string body = detail::strip(text.substr(colon + 1));
    if (head == "circle") {
        std::vector<long long> weights = detail::parse_int_list(body, colon + 1);
        if (normalize_weights(weights).weights.empty())
            throw SpecParseError("no nonzero weights", colon + 1);
        return CircleSpec{std::move(weights)};
    }
    if (head == "su2") {
        std::vector<long long> values = detail::parse_int_list(body, colon + 1);
        std::vector<int> degrees;
        for (long long v : values) {
            if (v < 1) throw SpecParseError("su2 degrees must be >= 1", colon + 1);
            degrees.push_back(static_cast<int>(v));
        }
        return SU2Spec{std::move(degrees)};
    }
    if (head == "finite") {
        size_t paren = body.find('(');
        std::string rendered = "finite: " + body;
        if (paren == std::string::npos) {
            return RepSpec{detail::finite_from_preset(body, {}, {}, config.group_cap, rendered)};
        }
        if (body.back() != ')') throw SpecParseError("missing ')' in preset call", text.size() - 1);
        const std::string name = detail::strip(body.substr(0, paren));
        const std::string inner = body.substr(paren + 1, body.size() - paren - 2);
        size_t semi = inner.find(';');
        std::vector<long long> args =
            detail::parse_int_list(semi == std::string::npos ? inner : inner.substr(0, semi),
                                   colon + paren + 2);
        std::vector<long long> weights;
        if (semi != std::string::npos)
            weights = detail::parse_int_list(inner.substr(semi + 1), colon + paren + semi + 3);
        return RepSpec{detail::finite_from_preset(name, args, weights, config.group_cap, rendered)};
    }
    throw SpecParseError("unknown spec head '" + head + "'", 0);
}

/// Canonical textual form; parse_spec(render_spec(s)) reproduces s.
inline std::string render_spec(const RepSpec& spec) {
    if (const auto* c = std::get_if<CircleSpec>(&spec)) {
        std::string s = "circle: ";
        for (size_t i = 0; i < c->raw_weights.size(); ++i)
            s += (i ? "," : "") + std::to_string(c->raw_weights[i]);
        return s;
    }
    if (const auto* u = std::get_if<SU2Spec>(&spec)) {
        std::string s = "su2: ";
        for (size_t i = 0; i < u->degrees.size(); ++i)
            s += (i ? "," : "") + std::to_string(u->degrees[i]);
        return s;
    }
    return std::get<FiniteSpec>(spec).rendered;
}

/// Classifies one spec and writes the report; exit code 0 for a definite
/// verdict, 2 for Inconclusive, 1 for errors.
inline int run_classify(const std::string& spec_text, const ClassifyConfig& config, bool json_mode,
                        std::ostream& out, std::ostream& err) {
    try {
        RepSpec spec = parse_spec(spec_text, config);
        Report report = classify(spec, config);
        if (json_mode)
            out << report_to_json(report).dump() << "\n";
        else
            out << report_to_text(report);
        return report.verdict() == Verdict::Inconclusive ? 2 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

struct SweepBounds {
    int max_n = 3;
    long long max_weight = 2;
    int max_degree = 4;
    int max_summands = 2;
};

namespace detail {

inline void emit_sweep_reports(const std::vector<RepSpec>& specs, const ClassifyConfig& config,
                               std::ostream& out) {
    std::map<std::string, long long> histogram;
    for (const auto& spec : specs) {
        Report report = classify(spec, config);
        histogram[verdict_name(report.verdict())]++;
        out << report_to_json(report).dump() << "\n";
    }
    ordered_json footer = ordered_json::object();
    ordered_json h = ordered_json::object();
    long long total = 0;
    for (const auto& [name, count] : histogram) {
        h[name] = count;
        total += count;
    }
    footer["histogram"] = h;
    footer["total"] = total;
    out << footer.dump() << "\n";
}

}  // namespace detail

/// Enumerates circle weight vectors with n <= max_n and 0 < |w| <= max_weight,
/// dedups them under normalization, and emits one report per line in
/// lexicographic order of the normalized vectors, then a histogram footer.
inline int run_sweep_circle(const SweepBounds& bounds, const ClassifyConfig& config,
                            std::ostream& out) {
    std::set<std::vector<long long>> normalized;
    std::vector<long long> current;
    auto rec = [&](auto&& self) -> void {
        if (!current.empty()) {
            WeightVector w = normalize_weights(current);
            if (!w.weights.empty()) normalized.insert(w.weights);
        }
        if (static_cast<int>(current.size()) == bounds.max_n) return;
        for (long long a = -bounds.max_weight; a <= bounds.max_weight; ++a) {
            if (a == 0) continue;
            current.push_back(a);
            self(self);
            current.pop_back();
        }
    };
    rec(rec);
    std::vector<std::vector<long long>> ordered(normalized.begin(), normalized.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<RepSpec> specs;
    specs.reserve(ordered.size());
    for (auto& w : ordered) specs.push_back(CircleSpec{std::move(w)});
    detail::emit_sweep_reports(specs, config, out);
    return 0;
}

/// Enumerates SU2 modules with degrees <= max_degree and at most max_summands
/// summands (canonical nonincreasing form), ordered by summand count then
/// lexicographically.
inline int run_sweep_su2(const SweepBounds& bounds, const ClassifyConfig& config, std::ostream& out) {
    std::vector<std::vector<int>> modules;
    std::vector<int> current;
    auto rec = [&](auto&& self, int max_next) -> void {
        if (!current.empty()) modules.push_back(current);
        if (static_cast<int>(current.size()) == bounds.max_summands) return;
        for (int d = max_next; d >= 1; --d) {
            current.push_back(d);
            self(self, d);
            current.pop_back();
        }
    };
    rec(rec, bounds.max_degree);
    std::sort(modules.begin(), modules.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<RepSpec> specs;
    specs.reserve(modules.size());
    for (auto& m : modules) specs.push_back(SU2Spec{std::move(m)});
    detail::emit_sweep_reports(specs, config, out);
    return 0;
}

}  // namespace symquot

#endif

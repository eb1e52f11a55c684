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

#ifndef SYMQUOT_CLASSIFIER_HPP
#define SYMQUOT_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symquot/circle.hpp"
#include "symquot/cyclic_model.hpp"
#include "symquot/finite_group.hpp"
#include "symquot/su2.hpp"

namespace symquot {

// ---------------------------------------------------------------------------
// verdicts

/// Possible outcomes, from positive identifications to graded obstructions.
/// The strength order is documented in implied_verdicts: a stronger
/// obstruction implies every weaker one it lists.
enum class Verdict {
    Point,                                 // the quotient is a single point
    OrbifoldModel,                         // matched to a concrete linear symplectic orbifold
    NotHomeomorphicToSymplecticOrbifold,   // fails even as a topological space
    NoSymplectomorphism,                   // no symplectomorphism, regular or not
    NoRegularDiffeomorphism,               // no regular diffeomorphism
    NoRegularSymplectomorphism,            // no regular symplectomorphism
    NotGradedRegularSymplectomorphic,      // no graded regular symplectomorphism
    Inconclusive,
};

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Point: return "Point";
        case Verdict::OrbifoldModel: return "OrbifoldModel";
        case Verdict::NotHomeomorphicToSymplecticOrbifold:
            return "NotHomeomorphicToSymplecticOrbifold";
        case Verdict::NoSymplectomorphism: return "NoSymplectomorphism";
        case Verdict::NoRegularDiffeomorphism: return "NoRegularDiffeomorphism";
        case Verdict::NoRegularSymplectomorphism: return "NoRegularSymplectomorphism";
        case Verdict::NotGradedRegularSymplectomorphic:
            return "NotGradedRegularSymplectomorphic";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

/// Weaker verdicts implied by a given one.  A missing homeomorphism rules out
/// every kind of diffeomorphism; a missing symplectomorphism rules out the
/// regular and graded regular refinements; a missing regular diffeomorphism
/// rules out regular symplectomorphisms (which are regular diffeomorphisms).
inline std::vector<Verdict> implied_verdicts(Verdict v) {
    switch (v) {
        case Verdict::NotHomeomorphicToSymplecticOrbifold:
            return {Verdict::NoSymplectomorphism, Verdict::NoRegularDiffeomorphism,
                    Verdict::NoRegularSymplectomorphism, Verdict::NotGradedRegularSymplectomorphic};
        case Verdict::NoSymplectomorphism:
            return {Verdict::NoRegularSymplectomorphism, Verdict::NotGradedRegularSymplectomorphic};
        case Verdict::NoRegularDiffeomorphism:
            return {Verdict::NoRegularSymplectomorphism, Verdict::NotGradedRegularSymplectomorphic};
        case Verdict::NoRegularSymplectomorphism:
            return {Verdict::NotGradedRegularSymplectomorphic};
        default:
            return {};
    }
}

inline bool verdict_is_positive(Verdict v) {
    return v == Verdict::Point || v == Verdict::OrbifoldModel;
}

// ---------------------------------------------------------------------------
// citations: the classification rules, stated so a report stands alone

struct Citation {
    std::string id;
    std::string statement;

    friend bool operator==(const Citation& a, const Citation& b) { return a.id == b.id; }
};

namespace rules {

inline Citation circle_point() {
    return {"circle.point",
            "all surviving weights share one sign, so the quotient is a single point"};
}
inline Citation circle_cyclic_model() {
    return {"circle.dim2-cyclic-model",
            "two weights of opposite sign: the quotient matches the orbifold C/Z_m, certified "
            "here at the graded level by Hilbert series and minimal-generator degrees"};
}
inline Citation circle_not_homeomorphic() {
    return {"circle.not-rational-homology-manifold",
            "at least two positive and two negative weights: the quotient is not a rational "
            "homology manifold and cannot be homeomorphic to a symplectic orbifold"};
}
inline Citation circle_dim4() {
    return {"circle.dim4-no-regular-diffeomorphism",
            "a circle quotient of real dimension at least 4 admits no regular diffeomorphism "
            "to a linear symplectic orbifold"};
}
inline Citation two_principal_obstruction() {
    return {"general.2principal-stable-connected",
            "a stable 2-principal module of a connected positive-dimensional group image "
            "admits no symplectomorphism to a linear symplectic orbifold"};
}
inline Citation two_large_obstruction() {
    return {"general.2large-positive-dimensional",
            "a 2-large module of a positive-dimensional group image admits no regular "
            "symplectomorphism to a linear symplectic orbifold"};
}
inline Citation su2_point() {
    return {"su2.defining-module-point", "the quotient of the defining module R1 is a point"};
}
inline Citation su2_2r1_model() {
    return {"su2.2r1-sign-quotient",
            "the quotient of R1+R1 is one-dimensional and polar; it carries a graded regular "
            "symplectomorphism to C/Z_2"};
}
inline Citation su2_r2_model() {
    return {"su2.r2-sign-quotient",
            "the quotient of the adjoint module R2 carries a graded regular symplectomorphism "
            "to C/Z_2"};
}
inline Citation su2_r3_model() {
    return {"su2.r3-cyclic4",
            "the quotient of R3 carries a graded regular symplectomorphism to C/Z_4, with one "
            "generator of degree 2 and two of degree 4"};
}
inline Citation su2_r4_model() {
    return {"su2.r4-symmetric3",
            "the quotient of R4 carries a graded regular symplectomorphism to C^2/S_3, with "
            "three generators of degree 2 and four of degree 3"};
}
inline Citation su2_quadratic_count() {
    return {"su2.quadratic-count-obstruction",
            "the quotient of 2R2 has ten independent quadratic invariants; the only real "
            "decomposition of a 3-dimensional module attaining ten is 3W1+2W2+W3 with "
            "1-dimensional summands of odd multiplicity, which no unitary module realifies to"};
}
inline Citation su2_stratum_count() {
    return {"su2.stratum-count-obstruction",
            "the quotient of R2+R1 has four quadratic generators and one codimension-2 "
            "stratum, while any 2-dimensional unitary candidate orbifold with four quadratic "
            "invariants has two codimension-2 strata"};
}
inline Citation su2_off_list() {
    return {"su2.off-list-2-large",
            "this module is 2-principal and stable (modules off the small exceptional list "
            "are 2-large; 3R1 is 2-principal), so the connected-image obstruction applies"};
}
inline Citation finite_identity() {
    return {"finite.identity",
            "the quotient of a finite unitary group is itself a linear symplectic orbifold"};
}

}  // namespace rules

// ---------------------------------------------------------------------------
// representation specs

struct CircleSpec {
    std::vector<long long> raw_weights;
};

struct SU2Spec {
    std::vector<int> degrees;
};

struct FiniteSpec {
    MatrixGroup group;       // closed; acts on W, the classifier doubles it
    std::string rendered;    // canonical spec text or JSON used to build it
};

using RepSpec = std::variant<CircleSpec, SU2Spec, FiniteSpec>;

struct ClassifyConfig {
    int order = 20;
    int search_bound = 50;
    size_t group_cap = 1000;
};

// ---------------------------------------------------------------------------
// orbifold models and match evidence

struct OrbifoldModelDesc {
    enum class Kind { CyclicDoubled, SymmetricS3Doubled, PointOrbifold, SelfGroup } kind;
    int m = 0;  // cyclic order when kind == CyclicDoubled

    std::string label() const {
        switch (kind) {
            case Kind::CyclicDoubled: return "C/Z_" + std::to_string(m);
            case Kind::SymmetricS3Doubled: return "C^2/S_3";
            case Kind::PointOrbifold: return "point";
            case Kind::SelfGroup: return "W/H (the input group itself)";
        }
        return "?";
    }
};

/// Outcome of comparing a quotient with a model orbifold.
struct MatchEvidence {
    bool pass = false;
    std::string mode;  // "series+generators", "series", "table", "identity", "inconclusive"
    std::optional<GradedSeries> quotient_series;
    std::optional<GradedSeries> model_series;
    std::optional<GeneratorDegrees> quotient_generators;
    std::optional<GeneratorDegrees> model_generators;
    int first_mismatch = -1;
    std::string detail;
};

struct Report {
    std::string kind;              // "circle" | "su2" | "finite"
    std::string input_rendered;    // as given
    std::string normalized_rendered;
    std::optional<WeightVector> circle_weights;
    std::optional<SU2Module> su2_module;
    std::string group_label;

    std::vector<Verdict> verdicts;  // strongest first, implied ones after
    std::vector<Citation> citations;
    std::optional<OrbifoldModelDesc> model;
    std::optional<MatchEvidence> match;

    std::optional<GradedSeries> quotient_series;
    std::optional<GeneratorDegrees> generator_degrees;
    std::vector<int> codims;  // orbit-type stratum codimensions, when computed
    std::optional<int> principal_codimension;
    std::optional<long long> quadratic_invariants;

    int order = 0;
    std::vector<std::string> notes;

    Verdict verdict() const { return verdicts.empty() ? Verdict::Inconclusive : verdicts[0]; }
};

namespace detail {

inline void set_verdict(Report& r, Verdict v) {
    r.verdicts.clear();
    r.verdicts.push_back(v);
    for (Verdict w : implied_verdicts(v)) r.verdicts.push_back(w);
}

inline MatrixGroup model_group_doubled(const OrbifoldModelDesc& model) {
    switch (model.kind) {
        case OrbifoldModelDesc::Kind::CyclicDoubled:
            return doubled_action(cyclic_group(static_cast<unsigned>(model.m)));
        case OrbifoldModelDesc::Kind::SymmetricS3Doubled:
            return doubled_action(symmetric3_standard());
        default:
            throw std::invalid_argument("model_group_doubled: model has no matrix group");
    }
}

inline const GradedSeries& model_series_doubled(const OrbifoldModelDesc& model, int order) {
    if (model.kind == OrbifoldModelDesc::Kind::CyclicDoubled)
        return cyclic_doubled_molien(static_cast<unsigned>(model.m), order);
    static std::mutex mu;
    static std::map<int, GradedSeries> s3_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = s3_cache.find(order);
    if (it == s3_cache.end())
        it = s3_cache.emplace(order, molien_series(doubled_action(symmetric3_standard()), order)).first;
    return it->second;
}

inline const GeneratorDegrees& model_generators_doubled(const OrbifoldModelDesc& model, int cap) {
    if (model.kind == OrbifoldModelDesc::Kind::CyclicDoubled)
        return cyclic_doubled_generators(static_cast<unsigned>(model.m), cap);
    static std::mutex mu;
    static std::map<int, GeneratorDegrees> s3_cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = s3_cache.find(cap);
    if (it == s3_cache.end())
        it = s3_cache.emplace(cap, minimal_generator_degrees(doubled_action(symmetric3_standard()), cap))
                 .first;
    return it->second;
}

}  // namespace detail

/// Compares the quotient of the spec with a model orbifold through the given
/// order: coefficientwise series equality, plus generator-degree agreement
/// when both sides can compute them.  Sides that cannot be computed yield an
/// inconclusive block, never a silent pass.  The graded identifications of
/// R1, 2R1 and R2 (whose moment ideals are not generated by the quadrics) are
/// table-backed: the model side is computed and reported, the quotient side
/// is attested by the classification table.
inline MatchEvidence verify_orbifold_match(const RepSpec& spec, const OrbifoldModelDesc& model,
                                           int order) {
    MatchEvidence ev;
    if (model.kind == OrbifoldModelDesc::Kind::PointOrbifold) {
        if (const auto* c = std::get_if<CircleSpec>(&spec)) {
            WeightVector w = normalize_weights(c->raw_weights);
            ev.pass = !is_stable(w);
            ev.mode = ev.pass ? "table" : "inconclusive";
            ev.detail = ev.pass ? "one-signed circle module: point quotient"
                                : "point model offered for a stable module";
            return ev;
        }
        if (const auto* s = std::get_if<SU2Spec>(&spec)) {
            SU2Module v(s->degrees);
            ev.pass = v.degrees == std::vector<int>{1};
            ev.mode = ev.pass ? "table" : "inconclusive";
            ev.detail = ev.pass ? "R1 has a point quotient" : "point model offered for a larger module";
            return ev;
        }
        ev.mode = "inconclusive";
        ev.detail = "point model not applicable";
        return ev;
    }
    if (const auto* f = std::get_if<FiniteSpec>(&spec)) {
        if (model.kind == OrbifoldModelDesc::Kind::SelfGroup) {
            ev.pass = true;
            ev.mode = "identity";
            GradedSeries molien =
                molien_series(doubled_action(f->group), order);
            ev.quotient_series = molien;
            ev.model_series = molien;
            ev.detail = "finite quotients are linear symplectic orbifolds by definition";
            return ev;
        }
        ev.mode = "inconclusive";
        ev.detail = "finite quotients are compared only with themselves";
        return ev;
    }

    // compute the quotient-side series when legitimate
    std::optional<GradedSeries> quotient;
    std::optional<GeneratorDegrees> quotient_gens;
    std::string table_case;
    if (const auto* c = std::get_if<CircleSpec>(&spec)) {
        WeightVector w = normalize_weights(c->raw_weights);
        if (!is_stable(w)) {
            ev.mode = "inconclusive";
            ev.detail = "point quotient compared with a positive-dimensional model";
            return ev;
        }
        quotient = quotient_hilbert_series_circle(w, order);
        quotient_gens = quotient_generator_degrees_circle(w, order);
    } else {
        const auto* s = std::get_if<SU2Spec>(&spec);
        SU2Module v(s->degrees);
        if (su2_is_one_large(v)) {
            quotient = quotient_hilbert_series_su2(v, order);
        } else if (v.degrees == std::vector<int>{1, 1} || v.degrees == std::vector<int>{2}) {
            table_case = v.to_string();
        } else {
            ev.mode = "inconclusive";
            ev.detail = "quotient series not computable for this module";
            return ev;
        }
    }

    ev.model_series = detail::model_series_doubled(model, order);
    MatrixGroup model_group = detail::model_group_doubled(model);
    int gen_cap = std::min(order, static_cast<int>(model_group.order()));
    if (gen_cap >= 2) ev.model_generators = detail::model_generators_doubled(model, gen_cap);

    if (!table_case.empty()) {
        // table-backed identification: the expected model is C/Z_2
        ev.pass = model.kind == OrbifoldModelDesc::Kind::CyclicDoubled && model.m == 2;
        ev.mode = ev.pass ? "table" : "inconclusive";
        ev.detail = ev.pass ? table_case + ": identification attested by the classification table; "
                                           "quotient series not independently computable"
                            : table_case + ": only the C/Z_2 identification is table-backed";
        return ev;
    }

    ev.quotient_series = quotient;
    int mismatch = GradedSeries::first_difference(*quotient, *ev.model_series);
    if (mismatch >= 0) {
        ev.pass = false;
        ev.mode = quotient_gens ? "series+generators" : "series";
        ev.first_mismatch = mismatch;
        ev.detail = "series differ at degree " + std::to_string(mismatch);
        return ev;
    }
    if (quotient_gens) {
        ev.quotient_generators = quotient_gens;
        ev.mode = "series+generators";
        if (ev.model_generators && quotient_gens->counts != ev.model_generators->counts) {
            ev.pass = false;
            ev.detail = "series agree but minimal-generator degrees differ";
            return ev;
        }
    } else {
        ev.mode = "series";
    }
    ev.pass = true;
    ev.detail = "series agree through order " + std::to_string(order) +
                (ev.mode == "series+generators" ? "; generator degrees agree" : "");
    return ev;
}

// ---------------------------------------------------------------------------
// classification

namespace detail {

inline std::string render_weights(const std::vector<long long>& ws) {
    std::string s = "circle:";
    for (size_t i = 0; i < ws.size(); ++i) s += (i ? "," : " ") + std::to_string(ws[i]);
    return s;
}

inline std::string render_degrees(const std::vector<int>& ds) {
    std::string s = "su2:";
    for (size_t i = 0; i < ds.size(); ++i) s += (i ? "," : " ") + std::to_string(ds[i]);
    return s;
}

inline Report classify_circle(const CircleSpec& spec, const ClassifyConfig& config) {
    Report r;
    r.kind = "circle";
    r.order = config.order;
    r.input_rendered = render_weights(spec.raw_weights);
    WeightVector w = normalize_weights(spec.raw_weights);
    r.circle_weights = w;
    r.normalized_rendered = render_weights(w.weights);
    if (w.zeros_removed > 0)
        r.notes.push_back("removed " + std::to_string(w.zeros_removed) +
                          " zero weight(s): the quotient gains a trivial factor C^" +
                          std::to_string(w.zeros_removed));
    if (w.scale > 1)
        r.notes.push_back("divided weights by their gcd " + std::to_string(w.scale) +
                          " (quotient by the ineffective kernel)");

    if (w.weights.empty() || !is_stable(w)) {
        set_verdict(r, Verdict::Point);
        r.citations.push_back(rules::circle_point());
        r.model = OrbifoldModelDesc{OrbifoldModelDesc::Kind::PointOrbifold};
        r.match = verify_orbifold_match(RepSpec{spec}, *r.model, config.order);
        r.quotient_series = GradedSeries::one(config.order);
        return r;
    }

    r.principal_codimension = principal_codim(w);
    r.quotient_series = quotient_hilbert_series_circle(w, config.order);
    r.generator_degrees = quotient_generator_degrees_circle(w, config.order);

    if (w.n() == 2) {
        CyclicModelSearch search = cyclic_model_order(w, config.search_bound, config.order);
        if (auto m = search.unique_match()) {
            OrbifoldModelDesc model{OrbifoldModelDesc::Kind::CyclicDoubled, *m};
            MatchEvidence ev = verify_orbifold_match(RepSpec{spec}, model, config.order);
            if (ev.pass) {
                set_verdict(r, Verdict::OrbifoldModel);
                r.model = model;
                r.match = ev;
                r.citations.push_back(rules::circle_cyclic_model());
                r.notes.push_back("cyclic order determined by series matching over m <= " +
                                  std::to_string(config.search_bound));
                return r;
            }
            set_verdict(r, Verdict::Inconclusive);
            r.match = ev;
            r.notes.push_back("model verification failed after a unique series match: " + ev.detail);
            return r;
        }
        set_verdict(r, Verdict::Inconclusive);
        r.notes.push_back(
            search.matches.empty()
                ? "no cyclic model matched within the search bound; raise the bound or the order"
                : "multiple cyclic orders matched; raise the truncation order to separate them");
        return r;
    }

    // n >= 3 from here: quotient dimension 2n - 2 >= 4
    if (positive_count(w) >= 2 && negative_count(w) >= 2) {
        set_verdict(r, Verdict::NotHomeomorphicToSymplecticOrbifold);
        r.citations.push_back(rules::circle_not_homeomorphic());
        r.citations.push_back(rules::circle_dim4());
        return r;
    }
    set_verdict(r, Verdict::NoRegularDiffeomorphism);
    r.citations.push_back(rules::circle_dim4());
    r.notes.push_back(
        "exactly one weight sign is in the minority: the stronger homeomorphism obstruction "
        "is not claimed");
    return r;
}

inline Report classify_su2(const SU2Spec& spec, const ClassifyConfig& config) {
    Report r;
    r.kind = "su2";
    r.order = config.order;
    r.input_rendered = render_degrees(spec.degrees);
    SU2Module v(spec.degrees);
    r.su2_module = v;
    r.normalized_rendered = render_degrees(v.degrees);

    auto positive_model = [&](OrbifoldModelDesc model, const Citation& cite) {
        MatchEvidence ev = verify_orbifold_match(RepSpec{spec}, model, config.order);
        if (ev.pass) {
            set_verdict(r, Verdict::OrbifoldModel);
            r.model = model;
            r.match = ev;
            r.citations.push_back(cite);
            if (ev.quotient_series) r.quotient_series = ev.quotient_series;
        } else {
            set_verdict(r, Verdict::Inconclusive);
            r.match = ev;
            r.notes.push_back("model verification failed: " + ev.detail);
        }
    };

    const auto& d = v.degrees;
    if (d == std::vector<int>{1}) {
        set_verdict(r, Verdict::Point);
        r.citations.push_back(rules::su2_point());
        r.model = OrbifoldModelDesc{OrbifoldModelDesc::Kind::PointOrbifold};
        r.match = verify_orbifold_match(RepSpec{spec}, *r.model, config.order);
        r.quotient_series = GradedSeries::one(config.order);
        return r;
    }
    if (d == std::vector<int>{1, 1}) {
        positive_model({OrbifoldModelDesc::Kind::CyclicDoubled, 2}, rules::su2_2r1_model());
        return r;
    }
    if (d == std::vector<int>{2}) {
        positive_model({OrbifoldModelDesc::Kind::CyclicDoubled, 2}, rules::su2_r2_model());
        return r;
    }
    if (d == std::vector<int>{3}) {
        positive_model({OrbifoldModelDesc::Kind::CyclicDoubled, 4}, rules::su2_r3_model());
        return r;
    }
    if (d == std::vector<int>{4}) {
        positive_model({OrbifoldModelDesc::Kind::SymmetricS3Doubled}, rules::su2_r4_model());
        return r;
    }
    if (d == std::vector<int>{2, 2}) {
        set_verdict(r, Verdict::NotGradedRegularSymplectomorphic);
        r.citations.push_back(rules::su2_quadratic_count());
        r.quotient_series = quotient_hilbert_series_su2(v, config.order);
        // the realification of 2R2 is four copies of the standard 3-dim module
        r.quadratic_invariants = quadratic_invariant_count(RealDecomposition{{{4, 3}}});
        return r;
    }
    if (d == std::vector<int>{2, 1}) {
        set_verdict(r, Verdict::NotGradedRegularSymplectomorphic);
        r.citations.push_back(rules::su2_stratum_count());
        r.quotient_series = quotient_hilbert_series_su2(v, config.order);
        LaurentPoly chi = character_of_module(v);
        r.quadratic_invariants = invariant_dim(sym_power_character(chi + chi, 2)).to_int64();
        // representative of the excluded candidate family: -1 on one line, a
        // rotation of order 3 on the other
        auto field = CyclotomicField::get(6);
        CycMatrix flip = CycMatrix::identity(field, 2);
        flip.at(0, 0) = CyclotomicNumber::from_rational(6, Rational(-1));
        CycMatrix rot = CycMatrix::identity(field, 2);
        rot.at(1, 1) = CyclotomicNumber::zeta(6, 2);
        r.codims = stratum_codims(close_group({flip, rot}, 10));
        r.notes.push_back(
            "codims lists the strata of the representative candidate orbifold, which has two "
            "codimension-2 strata; the quotient has one");
        return r;
    }
    // 3R1 and everything off the exceptional list
    set_verdict(r, Verdict::NoSymplectomorphism);
    r.citations.push_back(rules::su2_off_list());
    r.citations.push_back(rules::two_principal_obstruction());
    r.quotient_series = quotient_hilbert_series_su2(v, config.order);
    if (non_2principal_membership(v) == SU2CandidateClass::ThreeR1)
        r.notes.push_back("3R1 is only 1-large but still 2-principal");
    return r;
}

inline Report classify_finite(const FiniteSpec& spec, const ClassifyConfig& config) {
    Report r;
    r.kind = "finite";
    r.order = config.order;
    r.group_label = spec.group.label.empty() ? "H" : spec.group.label;
    r.input_rendered = "finite: " + r.group_label;
    r.normalized_rendered = r.input_rendered;
    set_verdict(r, Verdict::OrbifoldModel);
    r.citations.push_back(rules::finite_identity());
    r.model = OrbifoldModelDesc{OrbifoldModelDesc::Kind::SelfGroup};
    r.match = verify_orbifold_match(RepSpec{spec}, *r.model, config.order);
    r.quotient_series = r.match->quotient_series;
    MatrixGroup doubled = doubled_action(spec.group);
    if (spec.group.order() <= 100 && spec.group.dim <= 8) r.codims = stratum_codims(spec.group);
    int gen_cap = std::min(config.order, static_cast<int>(doubled.order()));
    if (gen_cap >= 2) r.generator_degrees = minimal_generator_degrees(doubled, gen_cap);
    return r;
}

}  // namespace detail

/// Total, deterministic classification over well-formed specs.  Every
/// positive orbifold identification carries a verification block; a failing
/// verification downgrades to Inconclusive rather than passing silently.
inline Report classify(const RepSpec& spec, const ClassifyConfig& config = {}) {
    if (const auto* c = std::get_if<CircleSpec>(&spec)) return detail::classify_circle(*c, config);
    if (const auto* s = std::get_if<SU2Spec>(&spec)) return detail::classify_su2(*s, config);
    return detail::classify_finite(std::get<FiniteSpec>(spec), config);
}

/// Obstruction for 2-large modules of groups with positive-dimensional but
/// possibly disconnected image.  None of the three input families reaches it
/// (circle and SU2 images are connected, finite quotients are orbifolds), so
/// the classifier never emits it; it is exposed for callers that classify
/// modules of other groups after establishing 2-largeness themselves.
inline Report report_for_two_large_module(const std::string& description, int order) {
    Report r;
    r.kind = "external";
    r.input_rendered = description;
    r.normalized_rendered = description;
    r.order = order;
    detail::set_verdict(r, Verdict::NoRegularSymplectomorphism);
    r.citations.push_back(rules::two_large_obstruction());
    return r;
}

}  // namespace symquot

#endif

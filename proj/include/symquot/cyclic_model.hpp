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

#ifndef SYMQUOT_CYCLIC_MODEL_HPP
#define SYMQUOT_CYCLIC_MODEL_HPP

#include <mutex>
#include <optional>
#include <vector>

#include "symquot/circle.hpp"
#include "symquot/finite_group.hpp"

namespace symquot {

/// Molien series of the doubled cyclic group Z_m on C + C*, memoized: the
/// model-side search recomputes these for every candidate order.
inline const GradedSeries& cyclic_doubled_molien(unsigned m, int order) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, int>, GradedSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, order);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, molien_series(doubled_action(cyclic_group(m)), order)).first;
    return it->second;
}

inline const GeneratorDegrees& cyclic_doubled_generators(unsigned m, int cap) {
    static std::mutex mu;
    static std::map<std::pair<unsigned, int>, GeneratorDegrees> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, cap);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, minimal_generator_degrees(doubled_action(cyclic_group(m)), cap)).first;
    return it->second;
}

/// Result of the series-matching search for the cyclic model of a
/// two-dimensional circle quotient.  The order is only reported when exactly
/// one candidate matches; ambiguity and absence are both inconclusive.
struct CyclicModelSearch {
    std::vector<int> matches;
    GradedSeries quotient_series{0};
    GeneratorDegrees quotient_generators;

    std::optional<int> unique_match() const {
        if (matches.size() == 1) return matches[0];
        return std::nullopt;
    }
};

/// Finds the m <= search_bound for which the quotient Hilbert series of the
/// weight vector (a, -b) equals the Molien series of Z_m doubled on C + C*
/// through the truncation order and the truncated minimal-generator degrees
/// agree.  Never guesses: all matching candidates are returned.
inline CyclicModelSearch cyclic_model_order(const WeightVector& w, int search_bound, int order) {
    if (w.n() != 2 || !is_stable(w))
        throw std::invalid_argument("cyclic_model_order: need two weights of opposite sign");
    CyclicModelSearch result;
    result.quotient_series = quotient_hilbert_series_circle(w, order);
    result.quotient_generators = quotient_generator_degrees_circle(w, order);
    for (int m = 1; m <= search_bound; ++m) {
        const GradedSeries& model = cyclic_doubled_molien(static_cast<unsigned>(m), order);
        if (model != result.quotient_series) continue;
        const GeneratorDegrees& gens = cyclic_doubled_generators(static_cast<unsigned>(m), order);
        if (gens.counts != result.quotient_generators.counts) continue;
        result.matches.push_back(m);
    }
    return result;
}

}  // namespace symquot

#endif

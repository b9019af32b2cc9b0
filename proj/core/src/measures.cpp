/*
 * Copyright (C) 2026 The lscsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "lscsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

std::uint32_t require_word(const EmbeddingSpace& space, const std::string& word) {
    const auto id = space.vocab.find(word);
    if (!id) throw MissingWordError("word '" + word + "' not in space vocabulary");
    if (row_is_zero(space, *id)) throw MissingWordError("word '" + word + "' has a zero vector");
    return *id;
}

double cosine_of_pair(const EmbeddingSpace& a, std::uint32_t ida, const EmbeddingSpace& b,
                      std::uint32_t idb) {
    return row_cosine(a, ida, b, idb);
}

// k nearest neighbors of `word` within `space`, drawn from `candidates`
// (word strings shared by both spaces). Ties break by word string so the
// neighborhood is deterministic.
std::vector<std::string> nearest_neighbors(const EmbeddingSpace& space, std::uint32_t word_id,
                                           const std::vector<std::string>& candidates,
                                           std::size_t k) {
    std::vector<std::pair<double, const std::string*>> scored;
    scored.reserve(candidates.size());
    for (const std::string& cand : candidates) {
        const auto id = space.vocab.find(cand);
        const double sim = row_cosine(space, word_id, space, *id);
        scored.emplace_back(sim, &cand);
    }
    const std::size_t take = std::min(k, scored.size());
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                      scored.end(), [](const auto& lhs, const auto& rhs) {
                          if (lhs.first != rhs.first) return lhs.first > rhs.first;
                          return *lhs.second < *rhs.second;
                      });
    std::vector<std::string> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) out.push_back(*scored[i].second);
    return out;
}

double similarity_profile_distance(const EmbeddingSpace& a, std::uint32_t ida,
                                   const EmbeddingSpace& b, std::uint32_t idb,
                                   const std::vector<std::string>& neighborhood) {
    std::vector<double> sa, sb;
    sa.reserve(neighborhood.size());
    sb.reserve(neighborhood.size());
    for (const std::string& n : neighborhood) {
        sa.push_back(cosine_of_pair(a, ida, a, *a.vocab.find(n)));
        sb.push_back(cosine_of_pair(b, idb, b, *b.vocab.find(n)));
    }
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
        dot += sa[i] * sb[i];
        na += sa[i] * sa[i];
        nb += sb[i] * sb[i];
    }
    if (na == 0.0 || nb == 0.0)
        throw MissingWordError("degenerate similarity profile in neighborhood");
    return 1.0 - dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

double cosine_distance(const EmbeddingSpace& a, const EmbeddingSpace& b,
                       const std::string& word) {
    const std::uint32_t ida = require_word(a, word);
    const std::uint32_t idb = require_word(b, word);
    return 1.0 - cosine_of_pair(a, ida, b, idb);
}

double cosine_distance(const EmbeddingSpace& space, const std::string& word1,
                       const std::string& word2) {
    const std::uint32_t id1 = require_word(space, word1);
    const std::uint32_t id2 = require_word(space, word2);
    return 1.0 - cosine_of_pair(space, id1, space, id2);
}

double lnd(const EmbeddingSpace& a, const EmbeddingSpace& b, const std::string& word,
           std::size_t k) {
    const std::uint32_t ida = require_word(a, word);
    const std::uint32_t idb = require_word(b, word);

    std::vector<std::string> candidates;
    for (const std::string& w : a.vocab.words())
        if (w != word && b.vocab.find(w)) candidates.push_back(w);
    if (candidates.size() < k)
        throw MissingWordError("fewer than " + std::to_string(k) +
                               " shared neighbor candidates for '" + word + "'");

    std::set<std::string> neighborhood_set;
    for (std::string& n : nearest_neighbors(a, ida, candidates, k))
        neighborhood_set.insert(std::move(n));
    for (std::string& n : nearest_neighbors(b, idb, candidates, k))
        neighborhood_set.insert(std::move(n));
    const std::vector<std::string> neighborhood(neighborhood_set.begin(), neighborhood_set.end());
    return similarity_profile_distance(a, ida, b, idb, neighborhood);
}

double lnd(const EmbeddingSpace& space, const std::string& word1, const std::string& word2,
           std::size_t k) {
    const std::uint32_t id1 = require_word(space, word1);
    const std::uint32_t id2 = require_word(space, word2);

    std::vector<std::string> candidates;
    for (const std::string& w : space.vocab.words())
        if (w != word1 && w != word2) candidates.push_back(w);
    if (candidates.size() < k)
        throw MissingWordError("fewer than " + std::to_string(k) +
                               " neighbor candidates for '" + word1 + "'/'" + word2 + "'");

    std::set<std::string> neighborhood_set;
    for (std::string& n : nearest_neighbors(space, id1, candidates, k))
        neighborhood_set.insert(std::move(n));
    for (std::string& n : nearest_neighbors(space, id2, candidates, k))
        neighborhood_set.insert(std::move(n));
    const std::vector<std::string> neighborhood(neighborhood_set.begin(), neighborhood_set.end());
    return similarity_profile_distance(space, id1, space, id2, neighborhood);
}

}  // namespace lscsim

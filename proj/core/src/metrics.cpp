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
#include "lscsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

void require_comparable(const SenseFrequencyDistribution& t1,
                        const SenseFrequencyDistribution& t2) {
    if (t1.lemma != t2.lemma)
        throw Error("change over mismatched lemmas: " + to_string(t1.lemma) + " vs " +
                    to_string(t2.lemma));
    if (t1.senses != t2.senses)
        throw Error("change over mismatched sense sequences for " + to_string(t1.lemma));
}

}  // namespace

std::uint64_t SenseFrequencyDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

SenseFrequencyDistribution build_sfd(const LemmaKey& lemma,
                                     std::span<const std::string> use_senses,
                                     std::vector<std::string> sense_sequence) {
    SenseFrequencyDistribution sfd;
    sfd.lemma = lemma;
    sfd.counts.assign(sense_sequence.size(), 0);
    std::unordered_map<std::string_view, std::size_t> position;
    for (std::size_t i = 0; i < sense_sequence.size(); ++i) position[sense_sequence[i]] = i;
    for (const std::string& sense : use_senses) {
        const auto it = position.find(sense);
        if (it == position.end())
            throw Error("use of " + to_string(lemma) + " has sense '" + sense +
                        "' outside the sense sequence");
        ++sfd.counts[it->second];
    }
    sfd.senses = std::move(sense_sequence);
    return sfd;
}

ProbabilityDistribution normalize(const SenseFrequencyDistribution& sfd) {
    const std::uint64_t total = sfd.total();
    if (total == 0)
        throw Error("cannot normalize all-zero SFD for " + to_string(sfd.lemma));
    ProbabilityDistribution dist;
    dist.probs.reserve(sfd.counts.size());
    for (const std::uint64_t c : sfd.counts)
        dist.probs.push_back(static_cast<double>(c) / static_cast<double>(total));
    return dist;
}

double jsd(const ProbabilityDistribution& p, const ProbabilityDistribution& q) {
    if (p.probs.size() != q.probs.size())
        throw Error("jsd over distributions of different length");
    double divergence = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        const double pi = p.probs[i];
        const double qi = q.probs[i];
        const double mi = 0.5 * (pi + qi);
        // 0 * log 0 := 0; mi is zero only when both sides are zero.
        if (pi > 0.0) divergence += 0.5 * pi * std::log2(pi / mi);
        if (qi > 0.0) divergence += 0.5 * qi * std::log2(qi / mi);
    }
    return std::clamp(std::sqrt(std::max(divergence, 0.0)), 0.0, 1.0);
}

double graded_change(const SenseFrequencyDistribution& t1,
                     const SenseFrequencyDistribution& t2) {
    require_comparable(t1, t2);
    return jsd(normalize(t1), normalize(t2));
}

int binary_change(const SenseFrequencyDistribution& t1, const SenseFrequencyDistribution& t2,
                  double k) {
    require_comparable(t1, t2);
    const ProbabilityDistribution p = normalize(t1);
    const ProbabilityDistribution q = normalize(t2);
    for (std::size_t i = 0; i < t1.counts.size(); ++i) {
        // A sense attested on neither side stays in the vectors for
        // alignment but can never signal gain or loss.
        if (t1.counts[i] == 0 && t2.counts[i] == 0) continue;
        if (t1.counts[i] == 0 && q.probs[i] >= k) return 1;
        if (t2.counts[i] == 0 && p.probs[i] >= k) return 1;
    }
    return 0;
}

ChangeScores change_scores(const SenseFrequencyDistribution& t1,
                           const SenseFrequencyDistribution& t2, double k) {
    return ChangeScores{graded_change(t1, t2), binary_change(t1, t2, k), k};
}

double relative_error(std::uint64_t total, std::uint64_t annotated) {
    if (annotated == 0) throw Error("relative_error with zero annotated uses");
    return (static_cast<double>(total) - static_cast<double>(annotated)) /
           static_cast<double>(annotated);
}

}  // namespace lscsim

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
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lscsim/corpus.hpp"

namespace lscsim {

/// How often a lemma occurs in each of its senses, over a fixed sense
/// sequence. Two distributions are comparable only when they share the
/// lemma and the sense sequence.
struct SenseFrequencyDistribution {
    LemmaKey lemma;
    std::vector<std::string> senses;
    std::vector<std::uint64_t> counts;

    std::uint64_t total() const;
    bool operator==(const SenseFrequencyDistribution&) const = default;
};

/// Normalized sense probabilities, in the sense order of the source SFD.
struct ProbabilityDistribution {
    std::vector<double> probs;
};

struct ChangeScores {
    double graded = 0.0;   // Jensen-Shannon distance in [0,1]
    int binary = 0;        // 1 iff a sense was gained or lost
    double threshold_k = 0.1;
};

/// Counts the uses (given by sense key) over the sense sequence. Every
/// use's sense must be in the sequence; a stray sense signals SFDs built
/// over mismatched sense sequences and throws.
SenseFrequencyDistribution build_sfd(const LemmaKey& lemma,
                                     std::span<const std::string> use_senses,
                                     std::vector<std::string> sense_sequence);

/// Divides each count by the total. Throws on an all-zero distribution.
ProbabilityDistribution normalize(const SenseFrequencyDistribution& sfd);

/// Jensen-Shannon distance: sqrt of the symmetrized KL divergence against
/// the mixture m = (p+q)/2, with base-2 logarithms so the result lies in
/// [0,1]. Terms with p_i = 0 contribute zero. A true metric.
double jsd(const ProbabilityDistribution& p, const ProbabilityDistribution& q);

/// Graded change: jsd(normalize(t1), normalize(t2)). The SFDs must share
/// lemma and sense sequence and both must be non-empty.
double graded_change(const SenseFrequencyDistribution& t1, const SenseFrequencyDistribution& t2);

/// Binary change: 1 iff some sense has count zero on one side and
/// probability >= k on the other. Zero is tested on the raw count, never
/// on a floating-point value.
int binary_change(const SenseFrequencyDistribution& t1, const SenseFrequencyDistribution& t2,
                  double k = 0.1);

ChangeScores change_scores(const SenseFrequencyDistribution& t1,
                           const SenseFrequencyDistribution& t2, double k = 0.1);

/// Relative frequency error (total - annotated) / annotated; the testset
/// noise filter. Throws when annotated is zero.
double relative_error(std::uint64_t total, std::uint64_t annotated);

}  // namespace lscsim

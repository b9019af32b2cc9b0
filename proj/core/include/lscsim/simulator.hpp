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
#include <set>
#include <string>
#include <vector>

#include "lscsim/corpus.hpp"
#include "lscsim/metrics.hpp"
#include "lscsim/rng.hpp"

namespace lscsim {

struct SplitConfig {
    std::uint64_t seed = 1;
    std::uint64_t target_freq_min = 100;  // annotated-use count, inclusive
    std::uint64_t target_freq_max = 1000;
    double binary_k = 0.1;
    double re_max = 0.5;                  // lemmas with RE >= re_max leave the testset
    std::uint64_t testset_freq_min = 50;  // per-side extracted frequency floor

    void validate() const;
};

/// Which senses of a target lemma go to which side: a random two-way
/// partition of the shuffled sense sequence. Both sides non-empty.
struct TargetPlan {
    LemmaKey lemma;
    std::set<std::string> senses_c1;
    std::set<std::string> senses_c2;
};

enum class Side : std::uint8_t { C1, C2 };

inline const char* to_string(Side side) { return side == Side::C1 ? "C1" : "C2"; }

/// Why a sentence landed on its side, plus any target demands that lost
/// against an earlier assignment (first assignment wins).
struct SentenceAssignment {
    Side side = Side::C1;
    std::string rule;                    // "target:<lemma>" or "fill"
    std::vector<std::string> conflicts;  // overridden demands, e.g. "target:bank wanted C2"
};

struct SplitResult {
    std::vector<SentenceAssignment> assignment;  // one per corpus sentence, in order
    std::set<LemmaKey> targets;

    std::vector<std::uint32_t> side_sentences(Side side) const;
};

struct GoldRecord {
    LemmaKey lemma;
    SenseFrequencyDistribution t1, t2;
    bool scorable = false;  // annotated on both sides
    double graded = 0.0;
    int binary = 0;
    std::uint64_t freq_c1 = 0, freq_c2 = 0;         // extracted-token counts per side
    std::uint64_t annotated_c1 = 0, annotated_c2 = 0;
    double re = 0.0;
    bool is_target = false;
    bool in_testset = false;
};

/// Step (i) planning: every lemma whose annotated frequency lies in
/// [target_freq_min, target_freq_max] and that has at least two senses
/// gets its shuffled sense sequence split at a uniform random index into
/// two non-empty subsets. Lemmas are visited in sorted key order.
std::vector<TargetPlan> select_targets(const AnnotatedCorpus& corpus, const SplitConfig& config,
                                       Rng& rng);

/// The two-step split. Step (i): sentences containing a target use are
/// assigned to the side its sense subset demands, targets processed in
/// sorted key order, first assignment wins. Step (ii): the remaining
/// sentences are shuffled and the first half (rounded up) goes to C1.
SplitResult split_corpus(const AnnotatedCorpus& corpus, const std::vector<TargetPlan>& plans,
                         Rng& rng);

/// Gold scores from the realized split: per-lemma SFD pair over the full
/// sense sequence, change scores where both sides are attested, extracted
/// per-side frequencies, and the relative frequency error.
std::vector<GoldRecord> compute_gold(const AnnotatedCorpus& corpus, const SplitResult& split,
                                     const SplitConfig& config);

/// Flags records that pass the noise filters: scorable, re < re_max and
/// min(freq_c1, freq_c2) >= testset_freq_min.
void mark_testset(std::vector<GoldRecord>& records, const SplitConfig& config);

/// Returns the testset subset (records with in_testset).
std::vector<GoldRecord> filter_testset(std::vector<GoldRecord> records, const SplitConfig& config);

struct SimulationResult {
    SplitResult split;
    std::vector<GoldRecord> gold;
};

/// select_targets + split_corpus + compute_gold + mark_testset with RNG
/// streams derived from config.seed.
SimulationResult run_simulation(const AnnotatedCorpus& corpus, const SplitConfig& config);

struct ExportStats {
    std::uint64_t tokens_c1 = 0;
    std::uint64_t tokens_c2 = 0;
    std::size_t testset_size = 0;
};

/// Writes corpus1.txt, corpus2.txt, gold.tsv, testset.tsv, sfd.tsv and
/// split.log.tsv into out_dir. Byte-identical for identical inputs.
ExportStats export_outputs(const AnnotatedCorpus& corpus, const SplitResult& split,
                           const std::vector<GoldRecord>& records, const std::string& out_dir);

}  // namespace lscsim

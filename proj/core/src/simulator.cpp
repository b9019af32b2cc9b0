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
#include "lscsim/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <unordered_map>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string format6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    return out;
}

}  // namespace

void SplitConfig::validate() const {
    if (target_freq_min == 0 || target_freq_min > target_freq_max)
        throw Error("split config: need 0 < target_freq_min <= target_freq_max");
    if (re_max <= 0) throw Error("split config: re_max must be positive");
    if (testset_freq_min == 0) throw Error("split config: testset_freq_min must be positive");
}

std::vector<std::uint32_t> SplitResult::side_sentences(Side side) const {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t i = 0; i < assignment.size(); ++i)
        if (assignment[i].side == side) ids.push_back(i);
    return ids;
}

std::vector<TargetPlan> select_targets(const AnnotatedCorpus& corpus, const SplitConfig& config,
                                       Rng& rng) {
    config.validate();
    std::vector<TargetPlan> plans;
    for (const auto& [key, occurrences] : corpus.lemma_index()) {
        const std::uint64_t annotated = occurrences.size();
        if (annotated < config.target_freq_min || annotated > config.target_freq_max) continue;
        std::set<std::string> senses;
        for (const Occurrence& occ : occurrences) senses.insert(occ.sense);
        // A one-sense shuffle admits no non-empty two-way split.
        if (senses.size() < 2) continue;

        std::vector<std::string> shuffled(senses.begin(), senses.end());
        fisher_yates(shuffled, rng);
        const std::size_t cut = 1 + static_cast<std::size_t>(rng.below(shuffled.size() - 1));
        TargetPlan plan;
        plan.lemma = key;
        plan.senses_c1.insert(shuffled.begin(), shuffled.begin() + cut);
        plan.senses_c2.insert(shuffled.begin() + cut, shuffled.end());
        plans.push_back(std::move(plan));
    }
    return plans;
}

SplitResult split_corpus(const AnnotatedCorpus& corpus, const std::vector<TargetPlan>& plans,
                         Rng& rng) {
    const std::size_t n = corpus.sentences().size();
    SplitResult result;
    result.assignment.resize(n);
    std::vector<std::optional<Side>> side(n);
    std::vector<std::string> rule(n);

    // Step (i): deterministic sorted order over targets, first assignment
    // wins; losing demands are kept for the audit log.
    std::vector<const TargetPlan*> ordered;
    ordered.reserve(plans.size());
    for (const TargetPlan& plan : plans) ordered.push_back(&plan);
    std::sort(ordered.begin(), ordered.end(),
              [](const TargetPlan* a, const TargetPlan* b) { return a->lemma < b->lemma; });

    for (const TargetPlan* plan : ordered) {
        result.targets.insert(plan->lemma);
        const auto it = corpus.lemma_index().find(plan->lemma);
        if (it == corpus.lemma_index().end())
            throw Error("target plan for unindexed lemma " + to_string(plan->lemma));
        const std::string tag = "target:" + plan->lemma.lemma;
        for (const Occurrence& occ : it->second) {
            Side wanted;
            if (plan->senses_c1.count(occ.sense)) {
                wanted = Side::C1;
            } else if (plan->senses_c2.count(occ.sense)) {
                wanted = Side::C2;
            } else {
                throw Error("sense '" + occ.sense + "' of " + to_string(plan->lemma) +
                            " missing from its target plan");
            }
            if (!side[occ.sentence]) {
                side[occ.sentence] = wanted;
                rule[occ.sentence] = tag;
            } else if (*side[occ.sentence] != wanted) {
                result.assignment[occ.sentence].conflicts.push_back(
                    tag + " wanted " + to_string(wanted));
            }
        }
    }

    // Step (ii): shuffle the rest, first half (rounded up) to C1.
    std::vector<std::uint32_t> rest;
    for (std::uint32_t i = 0; i < n; ++i)
        if (!side[i]) rest.push_back(i);
    fisher_yates(rest, rng);
    const std::size_t to_c1 = (rest.size() + 1) / 2;
    for (std::size_t r = 0; r < rest.size(); ++r) {
        side[rest[r]] = r < to_c1 ? Side::C1 : Side::C2;
        rule[rest[r]] = "fill";
    }

    for (std::size_t i = 0; i < n; ++i) {
        result.assignment[i].side = *side[i];
        result.assignment[i].rule = std::move(rule[i]);
    }
    return result;
}

std::vector<GoldRecord> compute_gold(const AnnotatedCorpus& corpus, const SplitResult& split,
                                     const SplitConfig& config) {
    if (split.assignment.size() != corpus.sentences().size())
        throw Error("split does not cover the corpus");

    // Per-side extracted-token frequencies (lowercased match, as in
    // lemma_inventory) and side token totals.
    std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> extracted;
    for (std::uint32_t s = 0; s < corpus.sentences().size(); ++s) {
        const bool c1 = split.assignment[s].side == Side::C1;
        for (const std::string& word : extract_plain_tokens(corpus.sentences()[s])) {
            auto& slot = extracted[lower_ascii(word)];
            (c1 ? slot.first : slot.second)++;
        }
    }

    std::vector<GoldRecord> records;
    for (const auto& [key, occurrences] : corpus.lemma_index()) {
        GoldRecord rec;
        rec.lemma = key;
        std::set<std::string> sense_set;
        for (const Occurrence& occ : occurrences) sense_set.insert(occ.sense);
        std::vector<std::string> senses(sense_set.begin(), sense_set.end());

        std::vector<std::string> uses_c1, uses_c2;
        for (const Occurrence& occ : occurrences) {
            (split.assignment[occ.sentence].side == Side::C1 ? uses_c1 : uses_c2)
                .push_back(occ.sense);
        }
        rec.t1 = build_sfd(key, uses_c1, senses);
        rec.t2 = build_sfd(key, uses_c2, senses);
        rec.annotated_c1 = uses_c1.size();
        rec.annotated_c2 = uses_c2.size();
        rec.scorable = rec.annotated_c1 > 0 && rec.annotated_c2 > 0;
        if (rec.scorable) {
            rec.graded = graded_change(rec.t1, rec.t2);
            rec.binary = binary_change(rec.t1, rec.t2, config.binary_k);
        }
        if (const auto it = extracted.find(key.lemma); it != extracted.end()) {
            rec.freq_c1 = it->second.first;
            rec.freq_c2 = it->second.second;
        }
        rec.re = relative_error(rec.freq_c1 + rec.freq_c2, rec.annotated_c1 + rec.annotated_c2);
        rec.is_target = split.targets.count(key) > 0;
        records.push_back(std::move(rec));
    }
    return records;
}

void mark_testset(std::vector<GoldRecord>& records, const SplitConfig& config) {
    for (GoldRecord& rec : records) {
        rec.in_testset = rec.scorable && rec.re < config.re_max &&
                         std::min(rec.freq_c1, rec.freq_c2) >= config.testset_freq_min;
    }
}

std::vector<GoldRecord> filter_testset(std::vector<GoldRecord> records,
                                       const SplitConfig& config) {
    mark_testset(records, config);
    std::vector<GoldRecord> testset;
    for (GoldRecord& rec : records)
        if (rec.in_testset) testset.push_back(std::move(rec));
    return testset;
}

SimulationResult run_simulation(const AnnotatedCorpus& corpus, const SplitConfig& config) {
    config.validate();
    Rng target_rng = Rng::derive(config.seed, "simulator/targets");
    Rng fill_rng = Rng::derive(config.seed, "simulator/fill");
    SimulationResult result;
    const std::vector<TargetPlan> plans = select_targets(corpus, config, target_rng);
    result.split = split_corpus(corpus, plans, fill_rng);
    result.gold = compute_gold(corpus, result.split, config);
    mark_testset(result.gold, config);
    return result;
}

ExportStats export_outputs(const AnnotatedCorpus& corpus, const SplitResult& split,
                           const std::vector<GoldRecord>& records, const std::string& out_dir) {
    namespace fs = std::filesystem;
    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir)) throw IoError("cannot create output directory " + out_dir);

    ExportStats stats;
    {
        std::ofstream c1 = open_output(dir / "corpus1.txt");
        std::ofstream c2 = open_output(dir / "corpus2.txt");
        for (std::uint32_t s = 0; s < corpus.sentences().size(); ++s) {
            std::ostream& out = split.assignment[s].side == Side::C1 ? c1 : c2;
            auto& counter = split.assignment[s].side == Side::C1 ? stats.tokens_c1 : stats.tokens_c2;
            const std::vector<std::string> words = extract_plain_tokens(corpus.sentences()[s]);
            for (std::size_t w = 0; w < words.size(); ++w) {
                if (w) out << ' ';
                out << words[w];
            }
            out << '\n';
            counter += words.size();
        }
    }
    {
        std::ofstream gold = open_output(dir / "gold.tsv");
        std::ofstream testset = open_output(dir / "testset.tsv");
        const std::string header =
            "lemma\tpos\tgraded\tbinary\tfreq_c1\tfreq_c2\tre\tis_target\tin_testset\n";
        gold << header;
        testset << header;
        for (const GoldRecord& rec : records) {
            std::string row = rec.lemma.lemma;
            row += '\t';
            row += to_string(rec.lemma.pos);
            row += '\t';
            row += rec.scorable ? format6(rec.graded) : "NA";
            row += '\t';
            row += rec.scorable ? std::to_string(rec.binary) : "NA";
            row += '\t';
            row += std::to_string(rec.freq_c1);
            row += '\t';
            row += std::to_string(rec.freq_c2);
            row += '\t';
            row += format6(rec.re);
            row += '\t';
            row += rec.is_target ? '1' : '0';
            row += '\t';
            row += rec.in_testset ? '1' : '0';
            row += '\n';
            gold << row;
            if (rec.in_testset) {
                testset << row;
                ++stats.testset_size;
            }
        }
    }
    {
        // Per-sense counts of both SFDs; lets downstream stages (and
        // audits) recover polysemy without the annotated corpus.
        std::ofstream sfd = open_output(dir / "sfd.tsv");
        sfd << "lemma\tpos\tsense\tcount_c1\tcount_c2\n";
        for (const GoldRecord& rec : records) {
            for (std::size_t i = 0; i < rec.t1.senses.size(); ++i) {
                sfd << rec.lemma.lemma << '\t' << to_string(rec.lemma.pos) << '\t'
                    << rec.t1.senses[i] << '\t' << rec.t1.counts[i] << '\t' << rec.t2.counts[i]
                    << '\n';
            }
        }
    }
    {
        std::ofstream log = open_output(dir / "split.log.tsv");
        for (std::uint32_t s = 0; s < corpus.sentences().size(); ++s) {
            const SentenceAssignment& a = split.assignment[s];
            log << corpus.sentences()[s].id << '\t' << to_string(a.side) << '\t' << a.rule << '\n';
        }
    }
    return stats;
}

}  // namespace lscsim

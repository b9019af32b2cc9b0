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

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "lscsim/error.hpp"
#include "synth.hpp"
#include "tmpdir.hpp"

using namespace lscsim;

namespace {

AnnotatedCorpus repeated_lemma_corpus(std::size_t uses, const std::vector<std::string>& senses) {
    std::vector<Sentence> sentences;
    for (std::size_t i = 0; i < uses; ++i) {
        Sentence sent;
        sent.id = "r" + std::to_string(i);
        Token tok;
        tok.surface = "word";
        tok.lemma = "word";
        tok.pos = "NOUN";
        tok.sense = senses[i % senses.size()];
        sent.tokens = {Token{"the", "", "", ""}, tok};
        sentences.push_back(std::move(sent));
    }
    return AnnotatedCorpus::from_sentences(std::move(sentences));
}

const GoldRecord& record_for(const std::vector<GoldRecord>& records, const LemmaKey& key) {
    for (const GoldRecord& rec : records)
        if (rec.lemma == key) return rec;
    throw Error("record not found: " + to_string(key));
}

}  // namespace

TEST_CASE("select_targets plans in-range polysemous lemmas") {
    SplitConfig config;
    config.target_freq_min = 100;
    config.target_freq_max = 1000;

    SUBCASE("three-sense lemma cut at index 1 or 2") {
        const AnnotatedCorpus corpus = repeated_lemma_corpus(150, {"s1", "s2", "s3"});
        Rng rng(1);
        const auto plans = select_targets(corpus, config, rng);
        REQUIRE(plans.size() == 1);
        const TargetPlan& plan = plans[0];
        CHECK(!plan.senses_c1.empty());
        CHECK(!plan.senses_c2.empty());
        CHECK(plan.senses_c1.size() + plan.senses_c2.size() == 3);
        std::set<std::string> all = plan.senses_c1;
        all.insert(plan.senses_c2.begin(), plan.senses_c2.end());
        CHECK(all == std::set<std::string>{"s1", "s2", "s3"});
    }
    SUBCASE("below the frequency floor") {
        const AnnotatedCorpus corpus = repeated_lemma_corpus(99, {"s1", "s2"});
        Rng rng(1);
        CHECK(select_targets(corpus, config, rng).empty());
    }
    SUBCASE("monosemous lemmas admit no two-way split") {
        const AnnotatedCorpus corpus = repeated_lemma_corpus(500, {"s1"});
        Rng rng(1);
        CHECK(select_targets(corpus, config, rng).empty());
    }
}

TEST_CASE("target split reproduces the worked example") {
    const AnnotatedCorpus corpus = test::plant_corpus();
    Rng rng(1);
    const SplitResult split = split_corpus(corpus, {test::plant_target_plan()}, rng);

    CHECK(split.side_sentences(Side::C1) == std::vector<std::uint32_t>{2, 3});
    CHECK(split.side_sentences(Side::C2) == std::vector<std::uint32_t>{0, 1, 4});
    for (const SentenceAssignment& a : split.assignment) {
        CHECK(a.rule == "target:plant");
        CHECK(a.conflicts.empty());
    }

    SplitConfig config;
    const auto gold = compute_gold(corpus, split, config);
    const GoldRecord& rec = record_for(gold, make_lemma_key("plant", "NOUN"));
    CHECK(rec.t1.counts == std::vector<std::uint64_t>{0, 2});
    CHECK(rec.t2.counts == std::vector<std::uint64_t>{3, 0});
    CHECK(rec.graded == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec.binary == 1);
    CHECK(rec.is_target);
}

TEST_CASE("fill split halves the corpus and realizes the non-target example") {
    const AnnotatedCorpus corpus = test::plant_corpus();

    SUBCASE("ceil half to C1") {
        Rng rng(123);
        const SplitResult split = split_corpus(corpus, {}, rng);
        CHECK(split.side_sentences(Side::C1).size() == 3);
        CHECK(split.side_sentences(Side::C2).size() == 2);
        for (const SentenceAssignment& a : split.assignment) CHECK(a.rule == "fill");
    }
    SUBCASE("frozen seed reproduces T1=(2,1), T2=(1,1)") {
        Rng rng(test::plant_nontarget_seed());
        const SplitResult split = split_corpus(corpus, {}, rng);
        SplitConfig config;
        const auto gold = compute_gold(corpus, split, config);
        const GoldRecord& rec = record_for(gold, make_lemma_key("plant", "NOUN"));
        CHECK(rec.t1.counts == std::vector<std::uint64_t>{2, 1});
        CHECK(rec.t2.counts == std::vector<std::uint64_t>{1, 1});
        CHECK(std::abs(rec.graded - 0.1439) < 0.0005);
        CHECK(rec.binary == 0);
        CHECK_FALSE(rec.is_target);
    }
}

TEST_CASE("first assignment wins on multi-target sentences and is logged") {
    // One sentence hosts both targets with demands pulling apart; the
    // lexicographically earlier lemma decides.
    std::vector<Sentence> sentences;
    Sentence clash;
    clash.id = "clash";
    clash.tokens = {Token{"alpha", "alpha", "NOUN", "s1"}, Token{"beta", "beta", "NOUN", "s1"}};
    sentences.push_back(clash);
    for (int i = 0; i < 4; ++i) {
        Sentence sent;
        sent.id = "pad" + std::to_string(i);
        sent.tokens = {Token{"alpha", "alpha", "NOUN", i % 2 ? "s1" : "s2"},
                       Token{"x", "", "", ""}};
        sentences.push_back(sent);
        Sentence sent2;
        sent2.id = "pad2" + std::to_string(i);
        sent2.tokens = {Token{"beta", "beta", "NOUN", i % 2 ? "s1" : "s2"}};
        sentences.push_back(sent2);
    }
    const AnnotatedCorpus corpus = AnnotatedCorpus::from_sentences(std::move(sentences));

    TargetPlan alpha;
    alpha.lemma = make_lemma_key("alpha", "NOUN");
    alpha.senses_c1 = {"s1"};
    alpha.senses_c2 = {"s2"};
    TargetPlan beta;
    beta.lemma = make_lemma_key("beta", "NOUN");
    beta.senses_c1 = {"s2"};
    beta.senses_c2 = {"s1"};  // wants the clash sentence on C2

    Rng rng(9);
    const SplitResult split = split_corpus(corpus, {beta, alpha}, rng);
    CHECK(split.assignment[0].side == Side::C1);  // alpha sorts first and wins
    CHECK(split.assignment[0].rule == "target:alpha");
    REQUIRE(split.assignment[0].conflicts.size() == 1);
    CHECK(split.assignment[0].conflicts[0] == "target:beta wanted C2");
}

TEST_CASE("every sentence lands on exactly one side") {
    const AnnotatedCorpus corpus = test::pseudo_semcor(test::small_pseudo_spec(3));
    SplitConfig config;
    config.seed = 5;
    config.target_freq_min = 40;
    const SimulationResult sim = run_simulation(corpus, config);
    CHECK(sim.split.assignment.size() == corpus.sentences().size());
    CHECK(sim.split.side_sentences(Side::C1).size() + sim.split.side_sentences(Side::C2).size() ==
          corpus.sentences().size());
}

TEST_CASE("unscorable lemmas are flagged and excluded") {
    // Lemma annotated only in C1: unscorable, never in the testset.
    std::vector<Sentence> sentences;
    for (int i = 0; i < 4; ++i) {
        Sentence sent;
        sent.id = "s" + std::to_string(i);
        Token tok;
        tok.surface = "solo";
        tok.lemma = "solo";
        tok.pos = "NOUN";
        if (i == 0) tok.sense = "s1";
        sent.tokens = {tok};
        sentences.push_back(std::move(sent));
    }
    const AnnotatedCorpus corpus = AnnotatedCorpus::from_sentences(std::move(sentences));

    SplitResult split;
    split.assignment.resize(4);
    split.assignment[0] = {Side::C1, "fill", {}};
    split.assignment[1] = {Side::C1, "fill", {}};
    split.assignment[2] = {Side::C2, "fill", {}};
    split.assignment[3] = {Side::C2, "fill", {}};

    SplitConfig config;
    auto gold = compute_gold(corpus, split, config);
    REQUIRE(gold.size() == 1);
    CHECK_FALSE(gold[0].scorable);
    mark_testset(gold, config);
    CHECK_FALSE(gold[0].in_testset);
}

TEST_CASE("testset filters use strict and inclusive boundaries") {
    SplitConfig config;  // re_max 0.5, min freq 50
    GoldRecord rec;
    rec.scorable = true;

    auto flagged = [&](std::uint64_t f1, std::uint64_t f2, double re) {
        std::vector<GoldRecord> records(1, rec);
        records[0].freq_c1 = f1;
        records[0].freq_c2 = f2;
        records[0].re = re;
        mark_testset(records, config);
        return records[0].in_testset;
    };

    CHECK_FALSE(flagged(200, 200, 0.5));    // exclusion at re >= 0.5
    CHECK(flagged(200, 200, 0.4999));
    CHECK_FALSE(flagged(49, 200, 0.1));     // below the frequency floor
    CHECK(flagged(50, 50, 0.49));
    CHECK_FALSE(flagged(200, 49, 0.1));
}

TEST_CASE("filter_testset returns the flagged subset") {
    SplitConfig config;
    std::vector<GoldRecord> records(3);
    for (GoldRecord& rec : records) {
        rec.scorable = true;
        rec.freq_c1 = rec.freq_c2 = 100;
        rec.re = 0.1;
    }
    records[1].re = 0.9;
    records[2].scorable = false;
    CHECK(filter_testset(records, config).size() == 1);
}

TEST_CASE("export writes the worked example verbatim") {
    const AnnotatedCorpus corpus = test::plant_corpus();
    Rng rng(1);
    const SplitResult split = split_corpus(corpus, {test::plant_target_plan()}, rng);
    SplitConfig config;
    auto gold = compute_gold(corpus, split, config);
    mark_testset(gold, config);

    test::TempDir dir;
    const ExportStats stats = export_outputs(corpus, split, gold, dir.str());

    const auto& lines = test::plant_extracted_lines();
    CHECK(test::read_file(dir.str("corpus1.txt")) == lines[2] + "\n" + lines[3] + "\n");
    CHECK(test::read_file(dir.str("corpus2.txt")) ==
          lines[0] + "\n" + lines[1] + "\n" + lines[4] + "\n");
    auto words_in = [](const std::string& line) {
        return 1 + std::count(line.begin(), line.end(), ' ');
    };
    CHECK(stats.tokens_c1 == static_cast<std::uint64_t>(words_in(lines[2]) + words_in(lines[3])));
    CHECK(stats.tokens_c2 ==
          static_cast<std::uint64_t>(words_in(lines[0]) + words_in(lines[1]) + words_in(lines[4])));

    const std::string gold_text = test::read_file(dir.str("gold.tsv"));
    CHECK(gold_text.find("plant\tNOUN\t1.000000\t1\t") != std::string::npos);
    const std::string log_text = test::read_file(dir.str("split.log.tsv"));
    CHECK(log_text.find("003\tC1\ttarget:plant") != std::string::npos);
    CHECK(log_text.find("001\tC2\ttarget:plant") != std::string::npos);
}

TEST_CASE("export of an empty corpus yields empty files") {
    const AnnotatedCorpus corpus;
    SplitResult split;
    test::TempDir dir;
    const ExportStats stats = export_outputs(corpus, split, {}, dir.str());
    CHECK(stats.tokens_c1 == 0);
    CHECK(test::read_file(dir.str("corpus1.txt")).empty());
    CHECK(test::read_file(dir.str("corpus2.txt")).empty());
    CHECK(test::read_file(dir.str("gold.tsv")) ==
          "lemma\tpos\tgraded\tbinary\tfreq_c1\tfreq_c2\tre\tis_target\tin_testset\n");
}

TEST_CASE("identical seeds export byte-identical outputs") {
    const AnnotatedCorpus corpus = test::pseudo_semcor(test::small_pseudo_spec(4));
    SplitConfig config;
    config.seed = 77;
    config.target_freq_min = 40;

    test::TempDir dir_a, dir_b;
    for (const auto* dir : {&dir_a, &dir_b}) {
        const SimulationResult sim = run_simulation(corpus, config);
        export_outputs(corpus, sim.split, sim.gold, dir->str());
    }
    for (const char* name :
         {"corpus1.txt", "corpus2.txt", "gold.tsv", "testset.tsv", "sfd.tsv", "split.log.tsv"}) {
        CHECK(test::read_file(dir_a.str(name)) == test::read_file(dir_b.str(name)));
        CHECK(!test::read_file(dir_a.str(name)).empty());
    }
}

TEST_CASE("gold scores are recomputable from the realized split") {
    const AnnotatedCorpus corpus = test::pseudo_semcor(test::small_pseudo_spec(8));
    SplitConfig config;
    config.seed = 13;
    config.target_freq_min = 40;
    const SimulationResult sim = run_simulation(corpus, config);

    // Rebuild per-side SFDs from the assignment alone and compare.
    for (const GoldRecord& rec : sim.gold) {
        std::vector<std::string> uses_c1, uses_c2;
        for (const Occurrence& occ : corpus.lemma_index().at(rec.lemma))
            (sim.split.assignment[occ.sentence].side == Side::C1 ? uses_c1 : uses_c2)
                .push_back(occ.sense);
        const auto t1 = build_sfd(rec.lemma, uses_c1, rec.t1.senses);
        const auto t2 = build_sfd(rec.lemma, uses_c2, rec.t2.senses);
        CHECK(t1.counts == rec.t1.counts);
        CHECK(t2.counts == rec.t2.counts);
        if (rec.scorable) {
            CHECK(graded_change(t1, t2) == doctest::Approx(rec.graded).epsilon(1e-12));
            CHECK(binary_change(t1, t2, config.binary_k) == rec.binary);
        }
    }
}

TEST_CASE("targets show maximal change on a clean synthetic corpus") {
    const AnnotatedCorpus corpus = test::disjoint_target_corpus();
    SplitConfig config;
    config.seed = 3;
    config.target_freq_min = 30;
    const SimulationResult sim = run_simulation(corpus, config);
    REQUIRE(sim.split.targets.size() == 3);

    double target_sum = 0.0;
    double nontarget_sum = 0.0;
    std::size_t nontargets = 0;
    for (const GoldRecord& rec : sim.gold) {
        if (rec.is_target) {
            CHECK(rec.graded == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(rec.binary == 1);
            target_sum += rec.graded;
        } else if (rec.scorable) {
            nontarget_sum += rec.graded;
            ++nontargets;
        }
    }
    REQUIRE(nontargets > 0);
    CHECK(target_sum / 3.0 > nontarget_sum / static_cast<double>(nontargets));
}

TEST_CASE("targets change more than non-targets at scale") {
    const AnnotatedCorpus corpus = test::pseudo_semcor(test::small_pseudo_spec(21));
    SplitConfig config;
    config.seed = 29;
    config.target_freq_min = 40;
    const SimulationResult sim = run_simulation(corpus, config);
    REQUIRE(!sim.split.targets.empty());

    double target_sum = 0.0, nontarget_sum = 0.0;
    std::size_t n_targets = 0, n_nontargets = 0;
    for (const GoldRecord& rec : sim.gold) {
        if (!rec.scorable) continue;
        if (rec.is_target) {
            target_sum += rec.graded;
            ++n_targets;
        } else {
            nontarget_sum += rec.graded;
            ++n_nontargets;
        }
    }
    REQUIRE(n_targets > 0);
    REQUIRE(n_nontargets > 0);
    CHECK(target_sum / n_targets > nontarget_sum / n_nontargets);
}

TEST_CASE("split config validation") {
    SplitConfig config;
    config.target_freq_min = 0;
    CHECK_THROWS_AS(config.validate(), Error);
    config = SplitConfig{};
    config.target_freq_min = 10;
    config.target_freq_max = 5;
    CHECK_THROWS_AS(config.validate(), Error);
    config = SplitConfig{};
    config.re_max = 0.0;
    CHECK_THROWS_AS(config.validate(), Error);
}

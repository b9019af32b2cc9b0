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

#include <functional>
#include <string>
#include <vector>

#include "lscsim/evaluation.hpp"
#include "lscsim/grid.hpp"
#include "lscsim/simulator.hpp"

namespace lscsim {

/// Full pipeline configuration. Loadable from a plain key=value file;
/// individual CLI flags override single keys.
struct PipelineConfig {
    std::string input;    // annotated corpus path
    std::string out_dir = "out";
    SplitConfig split;
    ModelGridSpec grid;
    std::size_t rand_trials = 1000;
    std::size_t jobs = 1;
};

/// Parses `key = value` lines ('#' starts a comment). Unknown keys throw.
PipelineConfig load_pipeline_config(const std::string& path);
void apply_config_entry(PipelineConfig& config, const std::string& key, const std::string& value);

using LogFn = std::function<void(const std::string&)>;

/// Stage 1: parse the annotated corpus, run the split, write corpus1.txt,
/// corpus2.txt, gold.tsv, testset.tsv, sfd.tsv, split.log.tsv and
/// simulate.log into out_dir.
void run_simulate(const PipelineConfig& config, const LogFn& log = nullptr);

/// Stage 2: read corpus1/2.txt and testset.tsv, run the model grid, write
/// predictions/<cell>.tsv (+ .meta) per cell.
void run_models(const PipelineConfig& config, const LogFn& log = nullptr);

/// Stage 3: score every prediction file against gold, add POLY/FREQ/RAND
/// baseline rows, write report.tsv and summary.tsv. Reads only stage
/// outputs, never the annotated corpus.
EvaluationReport run_evaluate(const PipelineConfig& config, const LogFn& log = nullptr);

/// All three stages in order.
EvaluationReport run_all(const PipelineConfig& config, const LogFn& log = nullptr);

/// Row of gold.tsv / testset.tsv as read back by stage 3 and tooling.
struct GoldFileRow {
    LemmaKey lemma;
    bool scorable = false;
    double graded = 0.0;
    int binary = 0;
    std::uint64_t freq_c1 = 0, freq_c2 = 0;
    double re = 0.0;
    bool is_target = false;
    bool in_testset = false;
};

std::vector<GoldFileRow> read_gold_file(const std::string& path);

/// Reconstructs minimal gold records (lemma, SFD pair, frequencies) from
/// gold.tsv plus sfd.tsv, enough to drive the baselines.
std::vector<GoldRecord> read_gold_records(const std::string& gold_path,
                                          const std::string& sfd_path);

void write_report(const EvaluationReport& report, const std::string& path);
void write_summary(const EvaluationReport& report, const std::string& path);

}  // namespace lscsim

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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lscsim/corpus.hpp"
#include "lscsim/rng.hpp"
#include "lscsim/simulator.hpp"

namespace lscsim {

/// Change-score predictions of one grid cell (or baseline). Lemmas absent
/// from the map were unpredictable for this cell.
struct PredictionSet {
    std::string id;
    std::map<LemmaKey, double> scores;
};

struct SpearmanResult {
    double rho = 0.0;
    std::size_t n = 0;        // overlapping lemmas actually used
    bool degenerate = false;  // a side had zero rank variance; rho reported as 0
};

/// Spearman's rank correlation with average-rank tie handling, over the
/// lemmas present in both the predictions and the gold map (missing
/// predictions are excluded pairwise). Throws below 3 overlapping lemmas.
SpearmanResult spearman(const PredictionSet& predictions,
                        const std::map<LemmaKey, double>& gold);

/// Average Precision of the prediction ranking (descending score, ties
/// broken by ascending lemma key) against binary gold labels: the mean
/// over positives of precision at each positive's rank. Throws when the
/// overlap contains no positive.
double average_precision(const PredictionSet& predictions, const std::map<LemmaKey, int>& gold);

struct RandomBaselineResult {
    double mean_ap = 0.0;
    double std_error = 0.0;
    double analytic = 0.0;  // positives / n
    std::size_t trials = 0;
};

/// Approximate random baseline: mean AP over uniformly random rankings of
/// the given label multiset, with its Monte-Carlo standard error.
RandomBaselineResult random_baseline_ap(const std::vector<int>& labels, std::size_t trials,
                                        Rng& rng);

/// Polysemy baseline: score = number of senses attested in t1+t2.
PredictionSet poly_baseline(const std::vector<GoldRecord>& records);

/// Normalized frequency difference baseline:
///   |f1/N1 - f2/N2| / max(f1/N1, f2/N2)
/// over the extracted corpus totals N1, N2; 0 when both sides are absent.
PredictionSet freq_baseline(const std::vector<GoldRecord>& records, std::uint64_t n1_total,
                            std::uint64_t n2_total);

/// One evaluated grid cell (already averaged over iterations).
struct ReportRow {
    std::string cell;  // e.g. "sgns+op+cd+d30"
    std::string model, alignment, measure;
    std::size_t dim = 0;
    std::size_t iterations = 1;
    std::optional<double> rho;
    bool degenerate = false;
    std::optional<double> ap;
    double coverage = 0.0;  // fraction of testset lemmas predicted
};

struct BaselineRow {
    std::string name;  // POLY / FREQ / RAND
    std::optional<double> rho;
    std::optional<double> ap;
    double coverage = 0.0;
};

struct EvaluationReport {
    std::vector<ReportRow> rows;
    std::vector<BaselineRow> baselines;

    std::optional<double> mean_rho, best_rho;
    std::string best_rho_cell;
    std::optional<double> mean_ap, best_ap;
    std::string best_ap_cell;
};

struct CellScore {
    std::string cell;  // iteration-free id
    std::string model, alignment, measure;
    std::size_t dim = 0;
    std::size_t iteration = 1;
    std::optional<double> rho;
    bool degenerate = false;
    std::optional<double> ap;
    double coverage = 0.0;
};

/// Averages per-iteration scores into per-cell rows, then fills the
/// mean/best aggregates over cells (per metric) and appends baselines.
EvaluationReport aggregate(const std::vector<CellScore>& iteration_scores,
                           std::vector<BaselineRow> baselines);

}  // namespace lscsim

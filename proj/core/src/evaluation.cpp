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
#include "lscsim/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(const std::vector<double>& values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

double pearson(const std::vector<double>& x, const std::vector<double>& y, bool& degenerate) {
    const double n = static_cast<double>(x.size());
    const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        degenerate = true;
        return 0.0;
    }
    degenerate = false;
    return sxy / std::sqrt(sxx * syy);
}

double ap_of_ranked_labels(const std::vector<int>& ranked) {
    std::size_t positives = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        if (ranked[i]) {
            ++positives;
            sum += static_cast<double>(positives) / static_cast<double>(i + 1);
        }
    }
    if (positives == 0) throw Error("average precision needs at least one positive label");
    return sum / static_cast<double>(positives);
}

}  // namespace

SpearmanResult spearman(const PredictionSet& predictions,
                        const std::map<LemmaKey, double>& gold) {
    std::vector<double> pred_values, gold_values;
    for (const auto& [key, gold_score] : gold) {
        const auto it = predictions.scores.find(key);
        if (it == predictions.scores.end()) continue;
        pred_values.push_back(it->second);
        gold_values.push_back(gold_score);
    }
    if (pred_values.size() < 3)
        throw Error("spearman needs at least 3 overlapping lemmas, got " +
                    std::to_string(pred_values.size()));
    SpearmanResult result;
    result.n = pred_values.size();
    result.rho =
        pearson(average_ranks(pred_values), average_ranks(gold_values), result.degenerate);
    return result;
}

double average_precision(const PredictionSet& predictions, const std::map<LemmaKey, int>& gold) {
    std::vector<std::pair<const LemmaKey*, double>> overlap;
    for (const auto& [key, label] : gold) {
        (void)label;
        const auto it = predictions.scores.find(key);
        if (it != predictions.scores.end()) overlap.emplace_back(&key, it->second);
    }
    std::sort(overlap.begin(), overlap.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return *a.first < *b.first;  // deterministic tie-break
    });
    std::vector<int> ranked;
    ranked.reserve(overlap.size());
    for (const auto& [key, score] : overlap) ranked.push_back(gold.at(*key));
    return ap_of_ranked_labels(ranked);
}

RandomBaselineResult random_baseline_ap(const std::vector<int>& labels, std::size_t trials,
                                        Rng& rng) {
    if (trials == 0) throw Error("random baseline needs at least one trial");
    const std::size_t positives =
        static_cast<std::size_t>(std::count(labels.begin(), labels.end(), 1));
    if (positives == 0) throw Error("random baseline needs at least one positive label");

    std::vector<int> shuffled = labels;
    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        fisher_yates(shuffled, rng);
        const double ap = ap_of_ranked_labels(shuffled);
        sum += ap;
        sum_sq += ap * ap;
    }
    RandomBaselineResult result;
    result.trials = trials;
    result.mean_ap = sum / static_cast<double>(trials);
    const double variance =
        std::max(0.0, sum_sq / static_cast<double>(trials) - result.mean_ap * result.mean_ap);
    result.std_error = std::sqrt(variance / static_cast<double>(trials));
    result.analytic = static_cast<double>(positives) / static_cast<double>(labels.size());
    return result;
}

PredictionSet poly_baseline(const std::vector<GoldRecord>& records) {
    PredictionSet set;
    set.id = "POLY";
    for (const GoldRecord& rec : records) {
        std::size_t attested = 0;
        for (std::size_t i = 0; i < rec.t1.counts.size(); ++i)
            if (rec.t1.counts[i] + rec.t2.counts[i] > 0) ++attested;
        set.scores[rec.lemma] = static_cast<double>(attested);
    }
    return set;
}

PredictionSet freq_baseline(const std::vector<GoldRecord>& records, std::uint64_t n1_total,
                            std::uint64_t n2_total) {
    if (n1_total == 0 || n2_total == 0)
        throw Error("frequency baseline needs non-empty corpora on both sides");
    PredictionSet set;
    set.id = "FREQ";
    for (const GoldRecord& rec : records) {
        const double f1 = static_cast<double>(rec.freq_c1) / static_cast<double>(n1_total);
        const double f2 = static_cast<double>(rec.freq_c2) / static_cast<double>(n2_total);
        const double hi = std::max(f1, f2);
        set.scores[rec.lemma] = hi == 0.0 ? 0.0 : std::abs(f1 - f2) / hi;
    }
    return set;
}

EvaluationReport aggregate(const std::vector<CellScore>& iteration_scores,
                           std::vector<BaselineRow> baselines) {
    EvaluationReport report;

    // Group iterations per cell, preserving first-seen order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<const CellScore*>> groups;
    for (const CellScore& score : iteration_scores) {
        auto& group = groups[score.cell];
        if (group.empty()) order.push_back(score.cell);
        group.push_back(&score);
    }

    for (const std::string& cell : order) {
        const auto& group = groups[cell];
        ReportRow row;
        row.cell = cell;
        row.model = group.front()->model;
        row.alignment = group.front()->alignment;
        row.measure = group.front()->measure;
        row.dim = group.front()->dim;
        row.iterations = group.size();

        double rho_sum = 0.0, ap_sum = 0.0, coverage_sum = 0.0;
        std::size_t rho_n = 0, ap_n = 0;
        for (const CellScore* score : group) {
            if (score->rho) {
                rho_sum += *score->rho;
                ++rho_n;
            }
            row.degenerate = row.degenerate || score->degenerate;
            if (score->ap) {
                ap_sum += *score->ap;
                ++ap_n;
            }
            coverage_sum += score->coverage;
        }
        if (rho_n > 0) row.rho = rho_sum / static_cast<double>(rho_n);
        if (ap_n > 0) row.ap = ap_sum / static_cast<double>(ap_n);
        row.coverage = coverage_sum / static_cast<double>(group.size());
        report.rows.push_back(std::move(row));
    }

    double rho_sum = 0.0, ap_sum = 0.0;
    std::size_t rho_n = 0, ap_n = 0;
    for (const ReportRow& row : report.rows) {
        if (row.rho) {
            rho_sum += *row.rho;
            ++rho_n;
            if (!report.best_rho || *row.rho > *report.best_rho) {
                report.best_rho = row.rho;
                report.best_rho_cell = row.cell;
            }
        }
        if (row.ap) {
            ap_sum += *row.ap;
            ++ap_n;
            if (!report.best_ap || *row.ap > *report.best_ap) {
                report.best_ap = row.ap;
                report.best_ap_cell = row.cell;
            }
        }
    }
    if (rho_n > 0) report.mean_rho = rho_sum / static_cast<double>(rho_n);
    if (ap_n > 0) report.mean_ap = ap_sum / static_cast<double>(ap_n);
    report.baselines = std::move(baselines);
    return report;
}

}  // namespace lscsim

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
#include <functional>
#include <string>
#include <vector>

#include "lscsim/cooc.hpp"
#include "lscsim/evaluation.hpp"
#include "lscsim/sgns.hpp"
#include "lscsim/svd.hpp"

namespace lscsim {

enum class ModelKind : std::uint8_t { Count, Ppmi, Svd, Sgns };
enum class AlignKind : std::uint8_t { Ci, Op, Wi };
enum class MeasureKind : std::uint8_t { Cd, Lnd };

const char* to_string(ModelKind kind);
const char* to_string(AlignKind kind);
const char* to_string(MeasureKind kind);
ModelKind parse_model(const std::string& name);
AlignKind parse_alignment(const std::string& name);
MeasureKind parse_measure(const std::string& name);

/// The evaluated model grid. Sparse models (count, ppmi) pair with CI/WI
/// and ignore dims; dense models (svd, sgns) pair with OP/WI at each dim.
/// Models with a random component run `iterations` times.
struct ModelGridSpec {
    std::vector<ModelKind> models{ModelKind::Count, ModelKind::Ppmi, ModelKind::Svd,
                                  ModelKind::Sgns};
    std::vector<AlignKind> alignments{AlignKind::Ci, AlignKind::Op, AlignKind::Wi};
    std::vector<MeasureKind> measures{MeasureKind::Cd, MeasureKind::Lnd};
    std::vector<std::size_t> dims{30, 100};
    std::size_t iterations = 5;
    std::size_t window = 10;
    std::size_t knn = 25;
    SgnsConfig sgns;      // dim and seed are set per cell
    SvdConfig svd;        // likewise
};

/// One grid cell: dim is 0 for sparse models (full co-occurrence width).
struct GridCell {
    ModelKind model{};
    AlignKind align{};
    MeasureKind measure{};
    std::size_t dim = 0;
    std::size_t iteration = 1;

    std::string base_id() const;  // model+alignment+measure+d<dim>
    std::string id() const;       // base_id() + "+i<iteration>"
};

struct GridPlan {
    std::vector<GridCell> cells;
    std::vector<std::string> skipped;  // unsupported combinations, e.g. "count+op"
};

GridPlan expand_grid(const ModelGridSpec& spec);

struct GridInputs {
    TokenLines c1, c2;
    std::vector<LemmaKey> targets;  // lemmas to predict change scores for
    std::uint64_t seed = 1;
    std::string corpus_id;
};

/// Runs every cell and writes predictions/<cell>.tsv plus a .meta
/// provenance sidecar into out_dir. Cells sharing trained spaces (same
/// model/alignment/dim/iteration) are computed together; independent jobs
/// run on up to `jobs` worker threads. Outputs are byte-identical for a
/// fixed seed regardless of the worker count. Returns the cell ids
/// written, in deterministic order.
std::vector<std::string> run_grid(const GridInputs& inputs, const ModelGridSpec& spec,
                                  const std::string& out_dir, std::size_t jobs = 1,
                                  const std::function<void(const std::string&)>& warn = nullptr);

/// Prediction file format: `lemma TAB pos TAB score`, score printed with
/// 6 decimals or the literal NA for unpredictable lemmas.
void write_predictions(const PredictionSet& predictions, const std::vector<LemmaKey>& all_targets,
                       const std::string& path);
PredictionSet read_predictions(const std::string& path);

}  // namespace lscsim

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
#include "lscsim/grid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "lscsim/align.hpp"
#include "lscsim/error.hpp"
#include "lscsim/measures.hpp"

namespace lscsim {

namespace {

namespace fs = std::filesystem;

std::string format6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& tag) {
    std::uint64_t sm = master;
    return splitmix64(sm) ^ fnv1a64(tag);
}

bool is_sparse(ModelKind kind) { return kind == ModelKind::Count || kind == ModelKind::Ppmi; }

// Inputs shared read-only by all jobs.
struct GridCaches {
    const GridInputs* inputs = nullptr;
    std::vector<std::string> target_words;  // unique lemma strings, sorted
    TokenLines wi_corpus;
    std::map<std::string, std::pair<std::string, std::string>> wi_renames;

    std::optional<CooccurrenceMatrix> count_c1, count_c2, count_wi;
    std::optional<CooccurrenceMatrix> ppmi_c1, ppmi_c2, ppmi_wi;
};

struct SpaceJob {
    ModelKind model{};
    AlignKind align{};
    std::size_t dim = 0;
    std::size_t iteration = 1;
    std::vector<GridCell> cells;  // same spaces, different measures

    std::string tag() const {
        std::ostringstream out;
        out << to_string(model) << '+' << to_string(align) << "+d" << dim << "+i" << iteration;
        return out.str();
    }
};

const CooccurrenceMatrix& counts_for(const GridCaches& caches, int which) {
    const auto& slot = which == 0   ? caches.count_c1
                       : which == 1 ? caches.count_c2
                                    : caches.count_wi;
    return *slot;
}

const CooccurrenceMatrix& ppmi_for(const GridCaches& caches, int which) {
    const auto& slot = which == 0 ? caches.ppmi_c1 : which == 1 ? caches.ppmi_c2 : caches.ppmi_wi;
    return *slot;
}

EmbeddingSpace build_dense_space(const GridCaches& caches, const ModelGridSpec& spec,
                                 const SpaceJob& job, int which, const std::string& side_tag) {
    const std::uint64_t seed = derive_seed(caches.inputs->seed, job.tag() + "/" + side_tag);
    if (job.model == ModelKind::Svd) {
        SvdConfig config = spec.svd;
        config.dim = job.dim;
        config.seed = seed;
        return svd_reduce(ppmi_for(caches, which), config);
    }
    SgnsConfig config = spec.sgns;
    config.dim = job.dim;
    config.window = spec.window;
    config.seed = seed;
    const TokenLines& corpus = which == 0   ? caches.inputs->c1
                               : which == 1 ? caches.inputs->c2
                                            : caches.wi_corpus;
    return train_sgns(corpus, config);
}

EmbeddingSpace build_sparse_space(const GridCaches& caches, const SpaceJob& job, int which) {
    Provenance prov;
    prov.model = to_string(job.model);
    const CooccurrenceMatrix& matrix =
        job.model == ModelKind::Count ? counts_for(caches, which) : ppmi_for(caches, which);
    return to_sparse_space(matrix, std::move(prov));
}

void write_meta(const fs::path& path, const GridCell& cell, const ModelGridSpec& spec,
                const GridInputs& inputs, const std::vector<std::uint64_t>& train_seeds) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << "cell\t" << cell.id() << '\n';
    out << "model\t" << to_string(cell.model) << '\n';
    out << "alignment\t" << to_string(cell.align) << '\n';
    out << "measure\t" << to_string(cell.measure) << '\n';
    out << "dim\t" << cell.dim << '\n';
    out << "iteration\t" << cell.iteration << '\n';
    out << "master_seed\t" << inputs.seed << '\n';
    for (std::size_t i = 0; i < train_seeds.size(); ++i)
        out << "train_seed_" << i + 1 << '\t' << train_seeds[i] << '\n';
    out << "corpus_id\t" << inputs.corpus_id << '\n';
    out << "window\t" << spec.window << '\n';
    if (cell.measure == MeasureKind::Lnd) out << "knn\t" << spec.knn << '\n';
    if (cell.model == ModelKind::Sgns) {
        out << "epochs\t" << spec.sgns.epochs << '\n';
        out << "negatives\t" << spec.sgns.negatives << '\n';
        out << "alpha\t" << spec.sgns.alpha << '\n';
        out << "min_alpha_ratio\t" << spec.sgns.min_alpha_ratio << '\n';
        out << "unigram_power\t" << spec.sgns.unigram_power << '\n';
        out << "threads\t1\n";
    }
    if (cell.model == ModelKind::Svd) {
        out << "oversample\t" << spec.svd.oversample << '\n';
        out << "power_iterations\t" << spec.svd.power_iterations << '\n';
        out << "dense_cutoff_cells\t" << spec.svd.dense_cutoff_cells << '\n';
    }
    out << "rng\t" << Rng::algorithm_id() << '\n';
}

void run_space_job(const SpaceJob& job, const GridCaches& caches, const ModelGridSpec& spec,
                   const fs::path& out_dir) {
    const GridInputs& inputs = *caches.inputs;

    // Build the spaces once per job; measures share them.
    EmbeddingSpace joint, left, right;
    std::vector<std::uint64_t> train_seeds;
    const bool wi = job.align == AlignKind::Wi;
    if (wi) {
        if (is_sparse(job.model)) {
            joint = build_sparse_space(caches, job, 2);
        } else {
            train_seeds.push_back(derive_seed(inputs.seed, job.tag() + "/joint"));
            joint = build_dense_space(caches, spec, job, 2, "joint");
        }
    } else if (job.align == AlignKind::Ci) {
        std::tie(left, right) =
            align_ci(build_sparse_space(caches, job, 0), build_sparse_space(caches, job, 1));
    } else {
        train_seeds.push_back(derive_seed(inputs.seed, job.tag() + "/c1"));
        train_seeds.push_back(derive_seed(inputs.seed, job.tag() + "/c2"));
        left = build_dense_space(caches, spec, job, 0, "c1");
        right = align_op(left, build_dense_space(caches, spec, job, 1, "c2"));
    }

    // Score each unique lemma string once, then emit per lemma key.
    for (const GridCell& cell : job.cells) {
        std::map<std::string, std::optional<double>> word_scores;
        for (const std::string& word : caches.target_words) {
            std::optional<double> score;
            try {
                if (wi) {
                    const auto& [w1, w2] = caches.wi_renames.at(word);
                    score = cell.measure == MeasureKind::Cd
                                ? cosine_distance(joint, w1, w2)
                                : lnd(joint, w1, w2, spec.knn);
                } else {
                    score = cell.measure == MeasureKind::Cd
                                ? cosine_distance(left, right, word)
                                : lnd(left, right, word, spec.knn);
                }
            } catch (const MissingWordError&) {
                score = std::nullopt;  // recorded as NA
            }
            word_scores.emplace(word, score);
        }

        PredictionSet predictions;
        predictions.id = cell.id();
        for (const LemmaKey& key : inputs.targets) {
            const auto& score = word_scores.at(key.lemma);
            if (score) predictions.scores[key] = *score;
        }
        write_predictions(predictions, inputs.targets, (out_dir / (cell.id() + ".tsv")).string());
        write_meta(out_dir / (cell.id() + ".meta"), cell, spec, inputs, train_seeds);
    }
}

}  // namespace

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Count: return "count";
        case ModelKind::Ppmi: return "ppmi";
        case ModelKind::Svd: return "svd";
        case ModelKind::Sgns: return "sgns";
    }
    return "?";
}

const char* to_string(AlignKind kind) {
    switch (kind) {
        case AlignKind::Ci: return "ci";
        case AlignKind::Op: return "op";
        case AlignKind::Wi: return "wi";
    }
    return "?";
}

const char* to_string(MeasureKind kind) {
    switch (kind) {
        case MeasureKind::Cd: return "cd";
        case MeasureKind::Lnd: return "lnd";
    }
    return "?";
}

ModelKind parse_model(const std::string& name) {
    if (name == "count") return ModelKind::Count;
    if (name == "ppmi") return ModelKind::Ppmi;
    if (name == "svd") return ModelKind::Svd;
    if (name == "sgns") return ModelKind::Sgns;
    throw Error("unknown model '" + name + "' (expected count|ppmi|svd|sgns)");
}

AlignKind parse_alignment(const std::string& name) {
    if (name == "ci") return AlignKind::Ci;
    if (name == "op") return AlignKind::Op;
    if (name == "wi") return AlignKind::Wi;
    throw Error("unknown alignment '" + name + "' (expected ci|op|wi)");
}

MeasureKind parse_measure(const std::string& name) {
    if (name == "cd") return MeasureKind::Cd;
    if (name == "lnd") return MeasureKind::Lnd;
    throw Error("unknown measure '" + name + "' (expected cd|lnd)");
}

std::string GridCell::base_id() const {
    std::ostringstream out;
    out << to_string(model) << '+' << to_string(align) << '+' << to_string(measure) << "+d" << dim;
    return out.str();
}

std::string GridCell::id() const { return base_id() + "+i" + std::to_string(iteration); }

GridPlan expand_grid(const ModelGridSpec& spec) {
    GridPlan plan;
    for (const ModelKind model : spec.models) {
        for (const AlignKind align : spec.alignments) {
            if (is_sparse(model) && align == AlignKind::Op) {
                // OP would need a rotation over the full co-occurrence width;
                // sparse spaces align by column intersection instead.
                plan.skipped.push_back(std::string(to_string(model)) + "+" + to_string(align));
                continue;
            }
            if (!is_sparse(model) && align == AlignKind::Ci) {
                plan.skipped.push_back(std::string(to_string(model)) + "+" + to_string(align));
                continue;
            }
            if (is_sparse(model)) {
                for (const MeasureKind measure : spec.measures)
                    plan.cells.push_back(GridCell{model, align, measure, 0, 1});
            } else {
                for (const std::size_t dim : spec.dims) {
                    for (std::size_t iter = 1; iter <= std::max<std::size_t>(spec.iterations, 1);
                         ++iter) {
                        for (const MeasureKind measure : spec.measures)
                            plan.cells.push_back(GridCell{model, align, measure, dim, iter});
                    }
                }
            }
        }
    }
    return plan;
}

void write_predictions(const PredictionSet& predictions, const std::vector<LemmaKey>& all_targets,
                       const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path);
    std::set<LemmaKey> ordered(all_targets.begin(), all_targets.end());
    for (const LemmaKey& key : ordered) {
        const auto it = predictions.scores.find(key);
        out << key.lemma << '\t' << to_string(key.pos) << '\t'
            << (it == predictions.scores.end() ? std::string("NA") : format6(it->second)) << '\n';
    }
}

PredictionSet read_predictions(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open prediction file: " + path);
    PredictionSet predictions;
    predictions.id = fs::path(path).stem().string();
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string lemma, pos, score;
        if (!std::getline(fields, lemma, '\t') || !std::getline(fields, pos, '\t') ||
            !std::getline(fields, score, '\t'))
            throw ParseError(line_no, "malformed prediction line in " + path);
        if (score == "NA") continue;
        const LemmaKey key = make_lemma_key(lemma, pos);
        if (!predictions.scores.emplace(key, std::stod(score)).second)
            throw ParseError(line_no, "duplicate lemma " + to_string(key) + " in " + path);
    }
    return predictions;
}

std::vector<std::string> run_grid(const GridInputs& inputs, const ModelGridSpec& spec,
                                  const std::string& out_dir, std::size_t jobs,
                                  const std::function<void(const std::string&)>& warn) {
    const GridPlan plan = expand_grid(spec);
    if (warn)
        for (const std::string& skipped : plan.skipped)
            warn("skipping unsupported grid combination " + skipped);
    if (plan.cells.empty()) {
        if (warn) warn("model grid is empty, nothing to do");
        return {};
    }
    if (inputs.targets.empty()) {
        if (warn) warn("no target lemmas to predict, nothing to do");
        return {};
    }

    GridCaches caches;
    caches.inputs = &inputs;
    {
        std::set<std::string> words;
        for (const LemmaKey& key : inputs.targets) words.insert(key.lemma);
        caches.target_words.assign(words.begin(), words.end());
    }

    // Group cells that share trained spaces.
    std::map<std::tuple<int, int, std::size_t, std::size_t>, SpaceJob> grouped;
    for (const GridCell& cell : plan.cells) {
        const auto key = std::make_tuple(static_cast<int>(cell.model), static_cast<int>(cell.align),
                                         cell.dim, cell.iteration);
        SpaceJob& job = grouped[key];
        job.model = cell.model;
        job.align = cell.align;
        job.dim = cell.dim;
        job.iteration = cell.iteration;
        job.cells.push_back(cell);
    }
    std::vector<const SpaceJob*> job_list;
    job_list.reserve(grouped.size());
    for (const auto& [key, job] : grouped) job_list.push_back(&job);

    // Shared matrices, built once up front.
    bool need_wi = false, need_counts[3] = {false, false, false}, need_ppmi[3] = {false, false,
                                                                                  false};
    for (const SpaceJob* job : job_list) {
        const bool wi = job->align == AlignKind::Wi;
        if (wi) need_wi = true;
        const int sides_begin = wi ? 2 : 0;
        const int sides_end = wi ? 3 : 2;
        for (int side = sides_begin; side < sides_end; ++side) {
            if (job->model == ModelKind::Count) need_counts[side] = true;
            if (job->model == ModelKind::Ppmi || job->model == ModelKind::Svd)
                need_ppmi[side] = true;
        }
    }
    if (need_wi) {
        WordInjectionResult injected = word_injection(inputs.c1, inputs.c2, caches.target_words);
        caches.wi_corpus = std::move(injected.corpus);
        caches.wi_renames = std::move(injected.renames);
    }
    for (int side = 0; side < 3; ++side) {
        if (!need_counts[side] && !need_ppmi[side]) continue;
        const TokenLines& corpus =
            side == 0 ? inputs.c1 : side == 1 ? inputs.c2 : caches.wi_corpus;
        CooccurrenceMatrix counts = build_count_matrix(corpus, spec.window);
        if (need_ppmi[side]) {
            auto& slot = side == 0 ? caches.ppmi_c1 : side == 1 ? caches.ppmi_c2 : caches.ppmi_wi;
            slot = ppmi(counts);
        }
        if (need_counts[side]) {
            auto& slot =
                side == 0 ? caches.count_c1 : side == 1 ? caches.count_c2 : caches.count_wi;
            slot = std::move(counts);
        }
    }

    const fs::path dir = fs::path(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir)) throw IoError("cannot create " + out_dir);

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t index = next.fetch_add(1);
            if (index >= job_list.size()) return;
            try {
                run_space_job(*job_list[index], caches, spec, dir);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    const std::size_t n_workers = std::max<std::size_t>(1, std::min(jobs, job_list.size()));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<std::string> written;
    written.reserve(plan.cells.size());
    for (const GridCell& cell : plan.cells) written.push_back(cell.id());
    std::sort(written.begin(), written.end());
    return written;
}

}  // namespace lscsim

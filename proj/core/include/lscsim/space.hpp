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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lscsim {

/// Word <-> id mapping. Ids are assignment-ordered and dense.
class Vocabulary {
public:
    std::uint32_t add(const std::string& word) {
        const auto [it, inserted] = ids_.emplace(word, static_cast<std::uint32_t>(words_.size()));
        if (inserted) words_.push_back(word);
        return it->second;
    }

    std::optional<std::uint32_t> find(const std::string& word) const {
        const auto it = ids_.find(word);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& word(std::uint32_t id) const { return words_[id]; }
    const std::vector<std::string>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Everything needed to regenerate a trained space: model, alignment,
/// source corpus, hyperparameters, seed and iteration index.
struct Provenance {
    std::string model;
    std::string alignment;
    std::string corpus_id;
    std::vector<std::pair<std::string, std::string>> params;
    std::uint64_t seed = 0;
    std::size_t iteration = 1;

    void set(const std::string& key, const std::string& value) { params.emplace_back(key, value); }
};

using SparseRow = std::vector<std::pair<std::uint32_t, float>>;  // sorted by column id

/// Vocabulary-indexed word vectors, dense (|V| x dim, row-major) or sparse
/// (per-row sorted column/value pairs over a named column vocabulary).
/// Dense vectors are stored in double precision so that exact-rank SVD
/// reductions preserve dot products to tight tolerances.
struct EmbeddingSpace {
    enum class Storage : std::uint8_t { Dense, Sparse };

    Vocabulary vocab;
    Storage storage = Storage::Dense;
    std::size_t dim = 0;  // dense width; sparse spaces use columns.size()
    std::vector<double> dense;
    std::vector<SparseRow> rows;
    std::vector<std::string> columns;
    Provenance prov;

    bool is_dense() const { return storage == Storage::Dense; }

    std::span<const double> row_dense(std::uint32_t id) const {
        return {dense.data() + static_cast<std::size_t>(id) * dim, dim};
    }
    std::span<double> row_dense_mut(std::uint32_t id) {
        return {dense.data() + static_cast<std::size_t>(id) * dim, dim};
    }

    static EmbeddingSpace make_dense(Vocabulary vocab, std::size_t dim) {
        EmbeddingSpace space;
        space.vocab = std::move(vocab);
        space.storage = Storage::Dense;
        space.dim = dim;
        space.dense.assign(space.vocab.size() * dim, 0.0);
        return space;
    }
};

/// Dot products and norms that work across both storage kinds.
double dot_dense(std::span<const double> a, std::span<const double> b);
double dot_sparse(const SparseRow& a, const SparseRow& b);
double norm_dense(std::span<const double> a);
double norm_sparse(const SparseRow& a);

/// Cosine similarity of two rows of (possibly different) spaces with the
/// same storage kind and compatible columns. Returns 0 for zero vectors.
double row_cosine(const EmbeddingSpace& a, std::uint32_t ida, const EmbeddingSpace& b,
                  std::uint32_t idb);

/// True when the row has no nonzero component.
bool row_is_zero(const EmbeddingSpace& space, std::uint32_t id);

}  // namespace lscsim

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
#include "lscsim/cooc.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "lscsim/error.hpp"

namespace lscsim {

TokenLines read_token_lines(std::istream& in) {
    TokenLines lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::string> tokens;
        std::size_t start = 0;
        while (start < line.size()) {
            std::size_t end = line.find(' ', start);
            if (end == std::string::npos) end = line.size();
            if (end > start) tokens.push_back(line.substr(start, end - start));
            start = end + 1;
        }
        lines.push_back(std::move(tokens));
    }
    return lines;
}

TokenLines read_token_lines_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open token corpus: " + path);
    return read_token_lines(in);
}

double CooccurrenceMatrix::total() const {
    double sum = 0.0;
    for (const SparseRow& row : rows)
        for (const auto& [col, value] : row) sum += value;
    return sum;
}

CooccurrenceMatrix build_count_matrix(const TokenLines& corpus, std::size_t window) {
    CooccurrenceMatrix matrix;
    matrix.window = window;

    std::vector<std::vector<std::uint32_t>> id_lines;
    id_lines.reserve(corpus.size());
    std::size_t n_tokens = 0;
    for (const auto& line : corpus) {
        std::vector<std::uint32_t> ids;
        ids.reserve(line.size());
        for (const std::string& word : line) ids.push_back(matrix.vocab.add(word));
        n_tokens += ids.size();
        id_lines.push_back(std::move(ids));
    }
    if (n_tokens == 0) throw Error("cannot build a co-occurrence matrix from an empty corpus");

    std::vector<std::unordered_map<std::uint32_t, float>> accum(matrix.vocab.size());
    for (const auto& ids : id_lines) {
        const std::size_t len = ids.size();
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t lo = i > window ? i - window : 0;
            const std::size_t hi = std::min(len, i + window + 1);
            auto& row = accum[ids[i]];
            for (std::size_t j = lo; j < hi; ++j) {
                if (j == i) continue;
                row[ids[j]] += 1.0f;
            }
        }
    }

    matrix.rows.resize(matrix.vocab.size());
    for (std::size_t r = 0; r < accum.size(); ++r) {
        SparseRow row(accum[r].begin(), accum[r].end());
        std::sort(row.begin(), row.end());
        matrix.rows[r] = std::move(row);
    }
    return matrix;
}

CooccurrenceMatrix ppmi(const CooccurrenceMatrix& counts) {
    const double total = counts.total();
    if (total <= 0.0) throw Error("ppmi of an all-zero matrix");

    std::vector<double> row_sums(counts.rows.size(), 0.0);
    std::vector<double> col_sums(counts.vocab.size(), 0.0);
    for (std::size_t r = 0; r < counts.rows.size(); ++r) {
        for (const auto& [col, value] : counts.rows[r]) {
            row_sums[r] += value;
            col_sums[col] += value;
        }
    }

    CooccurrenceMatrix out;
    out.vocab = counts.vocab;
    out.window = counts.window;
    out.rows.resize(counts.rows.size());
    for (std::size_t r = 0; r < counts.rows.size(); ++r) {
        SparseRow row;
        row.reserve(counts.rows[r].size());
        for (const auto& [col, value] : counts.rows[r]) {
            const double pmi =
                std::log(static_cast<double>(value) * total / (row_sums[r] * col_sums[col]));
            if (pmi > 0.0) row.emplace_back(col, static_cast<float>(pmi));
        }
        out.rows[r] = std::move(row);
    }
    return out;
}

EmbeddingSpace to_sparse_space(const CooccurrenceMatrix& matrix, Provenance prov) {
    EmbeddingSpace space;
    space.vocab = matrix.vocab;
    space.storage = EmbeddingSpace::Storage::Sparse;
    space.rows = matrix.rows;
    space.columns = matrix.vocab.words();
    space.dim = space.columns.size();
    space.prov = std::move(prov);
    return space;
}

}  // namespace lscsim

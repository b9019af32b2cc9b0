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
#include <iosfwd>
#include <string>
#include <vector>

#include "lscsim/space.hpp"

namespace lscsim {

using TokenLines = std::vector<std::vector<std::string>>;

/// Reads whitespace-separated token lines (one sentence per line) as
/// written by the simulator's corpus export. Blank lines are kept as
/// empty sentences.
TokenLines read_token_lines(std::istream& in);
TokenLines read_token_lines_file(const std::string& path);

/// Symmetric word-by-word co-occurrence counts. Rows and columns share
/// the vocabulary; values may be raw counts or PPMI weights.
struct CooccurrenceMatrix {
    Vocabulary vocab;
    std::vector<SparseRow> rows;  // sorted by column id
    std::size_t window = 10;

    double total() const;
};

/// Counts pairs within a symmetric window of the given radius, truncated
/// at sentence boundaries; each ordered pair (center, context) counts
/// once, so the aggregate matrix is symmetric. Throws on a corpus with no
/// tokens.
CooccurrenceMatrix build_count_matrix(const TokenLines& corpus, std::size_t window = 10);

/// Positive pointwise mutual information: cell = max(0, ln(p(w,c) /
/// (p(w) p(c)))). Zero-count cells stay zero and the result keeps the
/// sparsity structure.
CooccurrenceMatrix ppmi(const CooccurrenceMatrix& counts);

/// Wraps a matrix as a sparse embedding space (rows = word vectors,
/// columns = context words).
EmbeddingSpace to_sparse_space(const CooccurrenceMatrix& matrix, Provenance prov);

}  // namespace lscsim

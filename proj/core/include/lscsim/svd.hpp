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

#include "lscsim/cooc.hpp"
#include "lscsim/space.hpp"

namespace lscsim {

struct SvdConfig {
    std::size_t dim = 100;
    std::uint64_t seed = 1;

    // Small matrices are decomposed exactly; above the cutoff a seeded
    // randomized range finder with power iterations is used.
    std::size_t dense_cutoff_cells = 4'000'000;
    std::size_t oversample = 12;
    std::size_t power_iterations = 6;
};

/// Rank-d truncation of the matrix: word vectors are the rows of
/// U_d * Sigma_d. Deterministic for a fixed seed, up to the inherent sign
/// freedom of singular vectors. Throws when dim exceeds min(rows, cols).
EmbeddingSpace svd_reduce(const CooccurrenceMatrix& matrix, const SvdConfig& config);

inline EmbeddingSpace svd_reduce(const CooccurrenceMatrix& matrix, std::size_t dim) {
    SvdConfig config;
    config.dim = dim;
    return svd_reduce(matrix, config);
}

}  // namespace lscsim

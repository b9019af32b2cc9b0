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
#include "lscsim/space.hpp"

#include <cmath>

#include "lscsim/error.hpp"

namespace lscsim {

double dot_dense(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

double dot_sparse(const SparseRow& a, const SparseRow& b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (a[i].first > b[j].first) {
            ++j;
        } else {
            sum += static_cast<double>(a[i].second) * b[j].second;
            ++i;
            ++j;
        }
    }
    return sum;
}

double norm_dense(std::span<const double> a) { return std::sqrt(dot_dense(a, a)); }

double norm_sparse(const SparseRow& a) {
    double sum = 0.0;
    for (const auto& [col, value] : a) sum += static_cast<double>(value) * value;
    return std::sqrt(sum);
}

double row_cosine(const EmbeddingSpace& a, std::uint32_t ida, const EmbeddingSpace& b,
                  std::uint32_t idb) {
    if (a.is_dense() != b.is_dense()) throw Error("cosine across mixed storage kinds");
    double dot, na, nb;
    if (a.is_dense()) {
        if (a.dim != b.dim) throw Error("cosine across different dimensionalities");
        dot = dot_dense(a.row_dense(ida), b.row_dense(idb));
        na = norm_dense(a.row_dense(ida));
        nb = norm_dense(b.row_dense(idb));
    } else {
        dot = dot_sparse(a.rows[ida], b.rows[idb]);
        na = norm_sparse(a.rows[ida]);
        nb = norm_sparse(b.rows[idb]);
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (na * nb);
}

bool row_is_zero(const EmbeddingSpace& space, std::uint32_t id) {
    if (space.is_dense()) {
        for (const double v : space.row_dense(id))
            if (v != 0.0) return false;
        return true;
    }
    for (const auto& [col, value] : space.rows[id])
        if (value != 0.0f) return false;
    return true;
}

}  // namespace lscsim

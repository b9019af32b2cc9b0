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

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "lscsim/cooc.hpp"
#include "lscsim/space.hpp"

namespace lscsim {

struct SgnsConfig {
    std::size_t dim = 100;
    std::size_t epochs = 30;
    std::size_t negatives = 5;
    std::size_t window = 10;       // fixed symmetric window, no shrinking
    double alpha = 0.025;          // initial learning rate, linear decay
    double min_alpha_ratio = 1e-4; // floor as a fraction of alpha
    double unigram_power = 0.75;   // negative-sampling distribution exponent
    std::uint64_t seed = 1;
};

/// Logistic sigmoid with the argument clamped to +-30 so the loss and its
/// gradients stay finite.
template <typename T>
T sgns_sigmoid(T x) {
    if (x > T(30)) x = T(30);
    if (x < T(-30)) x = T(-30);
    return T(1) / (T(1) + std::exp(-x));
}

/// Loss of one (center, positive context, negative samples) step:
///   -log s(c.o) - sum_k log s(-c.n_k)
template <typename T>
T sgns_pair_loss(std::span<const T> center, std::span<const T> positive,
                 std::span<const std::span<const T>> negatives) {
    auto dot = [](std::span<const T> a, std::span<const T> b) {
        T sum = 0;
        for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
        return sum;
    };
    T loss = -std::log(sgns_sigmoid(dot(center, positive)));
    for (const auto& neg : negatives) loss -= std::log(sgns_sigmoid(-dot(center, neg)));
    return loss;
}

/// Analytic gradients of sgns_pair_loss with respect to every vector.
/// g_center/g_positive/g_negatives must be pre-sized like their inputs.
template <typename T>
void sgns_pair_gradients(std::span<const T> center, std::span<const T> positive,
                         std::span<const std::span<const T>> negatives, std::span<T> g_center,
                         std::span<T> g_positive, std::span<std::span<T>> g_negatives) {
    auto dot = [](std::span<const T> a, std::span<const T> b) {
        T sum = 0;
        for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
        return sum;
    };
    const T gpos = sgns_sigmoid(dot(center, positive)) - T(1);
    for (std::size_t i = 0; i < center.size(); ++i) {
        g_center[i] = gpos * positive[i];
        g_positive[i] = gpos * center[i];
    }
    for (std::size_t k = 0; k < negatives.size(); ++k) {
        const T gneg = sgns_sigmoid(dot(center, negatives[k]));
        for (std::size_t i = 0; i < center.size(); ++i) {
            g_center[i] += gneg * negatives[k][i];
            g_negatives[k][i] = gneg * center[i];
        }
    }
}

/// Skip-gram with negative sampling trained on token lines. Negatives are
/// drawn from the unigram^0.75 distribution via a seeded alias table; the
/// run is single-threaded and reproducible: same seed, same vectors.
/// Returns the center-word (input) matrix.
EmbeddingSpace train_sgns(const TokenLines& corpus, const SgnsConfig& config);

}  // namespace lscsim

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
#include "lscsim/sgns.hpp"

#include <algorithm>
#include <cmath>

#include "lscsim/error.hpp"
#include "lscsim/rng.hpp"

namespace lscsim {

namespace {

// Walker alias table: O(1) draws from the unigram^power distribution.
class AliasTable {
public:
    AliasTable(const std::vector<std::uint64_t>& counts, double power) {
        const std::size_t n = counts.size();
        prob_.resize(n);
        alias_.resize(n);
        std::vector<double> weights(n);
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = std::pow(static_cast<double>(counts[i]), power);
            total += weights[i];
        }
        std::vector<std::uint32_t> small, large;
        for (std::size_t i = 0; i < n; ++i) {
            weights[i] = weights[i] * static_cast<double>(n) / total;
            (weights[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
        }
        while (!small.empty() && !large.empty()) {
            const std::uint32_t s = small.back();
            small.pop_back();
            const std::uint32_t l = large.back();
            prob_[s] = weights[s];
            alias_[s] = l;
            weights[l] = weights[l] + weights[s] - 1.0;
            if (weights[l] < 1.0) {
                large.pop_back();
                small.push_back(l);
            }
        }
        for (const std::uint32_t i : large) prob_[i] = 1.0;
        for (const std::uint32_t i : small) prob_[i] = 1.0;
    }

    std::uint32_t sample(Rng& rng) const {
        const std::uint32_t slot = static_cast<std::uint32_t>(rng.below(prob_.size()));
        return rng.next_double() < prob_[slot] ? slot : alias_[slot];
    }

private:
    std::vector<double> prob_;
    std::vector<std::uint32_t> alias_;
};

}  // namespace

EmbeddingSpace train_sgns(const TokenLines& corpus, const SgnsConfig& config) {
    Vocabulary vocab;
    std::vector<std::vector<std::uint32_t>> lines;
    lines.reserve(corpus.size());
    std::size_t n_tokens = 0;
    for (const auto& line : corpus) {
        std::vector<std::uint32_t> ids;
        ids.reserve(line.size());
        for (const std::string& word : line) ids.push_back(vocab.add(word));
        n_tokens += ids.size();
        if (!ids.empty()) lines.push_back(std::move(ids));
    }
    if (n_tokens == 0) throw Error("cannot train SGNS on an empty corpus");

    std::vector<std::uint64_t> counts(vocab.size(), 0);
    for (const auto& ids : lines)
        for (const std::uint32_t id : ids) ++counts[id];
    const AliasTable negatives_table(counts, config.unigram_power);

    const std::size_t d = config.dim;
    EmbeddingSpace space = EmbeddingSpace::make_dense(std::move(vocab), d);
    // Training runs on float32 buffers for throughput; the final vectors
    // are copied into the space afterwards.
    std::vector<float> in(space.vocab.size() * d);
    std::vector<float> out(space.vocab.size() * d, 0.0f);

    Rng rng = Rng::derive(config.seed, "sgns/train");
    const float init_bound = 0.5f / static_cast<float>(d);
    for (float& v : in)
        v = (static_cast<float>(rng.next_double()) * 2.0f - 1.0f) * init_bound;

    const double total_positions =
        static_cast<double>(n_tokens) * static_cast<double>(std::max<std::size_t>(config.epochs, 1));
    const double min_alpha = config.alpha * config.min_alpha_ratio;
    std::size_t processed = 0;
    std::vector<float> center_grad(d);

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        for (const auto& ids : lines) {
            const std::size_t len = ids.size();
            for (std::size_t i = 0; i < len; ++i) {
                const double alpha = std::max(
                    min_alpha,
                    config.alpha * (1.0 - static_cast<double>(processed) / total_positions));
                ++processed;
                const std::uint32_t center = ids[i];
                float* const vc = in.data() + static_cast<std::size_t>(center) * d;
                const std::size_t lo = i > config.window ? i - config.window : 0;
                const std::size_t hi = std::min(len, i + config.window + 1);
                for (std::size_t j = lo; j < hi; ++j) {
                    if (j == i) continue;
                    const std::uint32_t positive = ids[j];
                    std::fill(center_grad.begin(), center_grad.end(), 0.0f);
                    for (std::size_t k = 0; k <= config.negatives; ++k) {
                        std::uint32_t sample;
                        float label;
                        if (k == 0) {
                            sample = positive;
                            label = 1.0f;
                        } else {
                            sample = negatives_table.sample(rng);
                            if (sample == positive) continue;
                            label = 0.0f;
                        }
                        float* const vo = out.data() + static_cast<std::size_t>(sample) * d;
                        float x = 0.0f;
                        for (std::size_t c = 0; c < d; ++c) x += vc[c] * vo[c];
                        const float g =
                            (label - sgns_sigmoid(x)) * static_cast<float>(alpha);
                        for (std::size_t c = 0; c < d; ++c) {
                            center_grad[c] += g * vo[c];
                            vo[c] += g * vc[c];
                        }
                    }
                    for (std::size_t c = 0; c < d; ++c) vc[c] += center_grad[c];
                }
            }
        }
    }

    for (std::size_t i = 0; i < in.size(); ++i) space.dense[i] = in[i];

    space.prov.model = "sgns";
    space.prov.seed = config.seed;
    space.prov.set("dim", std::to_string(config.dim));
    space.prov.set("epochs", std::to_string(config.epochs));
    space.prov.set("negatives", std::to_string(config.negatives));
    space.prov.set("window", std::to_string(config.window));
    space.prov.set("alpha", std::to_string(config.alpha));
    space.prov.set("unigram_power", std::to_string(config.unigram_power));
    space.prov.set("threads", "1");  // deterministic mode
    return space;
}

}  // namespace lscsim

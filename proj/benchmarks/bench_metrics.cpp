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
#include <benchmark/benchmark.h>

#include <vector>

#include "lscsim/metrics.hpp"
#include "lscsim/rng.hpp"

namespace {

lscsim::ProbabilityDistribution random_distribution(lscsim::Rng& rng, std::size_t n) {
    std::vector<double> probs(n);
    double total = 0.0;
    for (double& p : probs) total += (p = rng.next_double());
    for (double& p : probs) p /= total;
    return lscsim::ProbabilityDistribution{std::move(probs)};
}

void BM_Jsd(benchmark::State& state) {
    lscsim::Rng rng(1);
    const auto p = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
    const auto q = random_distribution(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lscsim::jsd(p, q));
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()));
}
BENCHMARK(BM_Jsd)->Arg(2)->Arg(8)->Arg(32)->Arg(128);

void BM_GradedChange(benchmark::State& state) {
    const lscsim::LemmaKey key = lscsim::make_lemma_key("bench", "NOUN");
    lscsim::Rng rng(2);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    lscsim::SenseFrequencyDistribution t1, t2;
    t1.lemma = t2.lemma = key;
    for (std::size_t i = 0; i < n; ++i) {
        t1.senses.push_back("s" + std::to_string(i));
        t1.counts.push_back(1 + rng.below(50));
        t2.counts.push_back(1 + rng.below(50));
    }
    t2.senses = t1.senses;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lscsim::graded_change(t1, t2));
    }
}
BENCHMARK(BM_GradedChange)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

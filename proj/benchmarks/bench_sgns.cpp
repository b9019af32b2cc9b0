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

#include <string>
#include <vector>

#include "lscsim/rng.hpp"
#include "lscsim/sgns.hpp"

namespace {

lscsim::TokenLines training_lines(std::size_t n_sentences) {
    lscsim::Rng rng(4);
    lscsim::TokenLines lines;
    for (std::size_t s = 0; s < n_sentences; ++s) {
        std::vector<std::string> line;
        const std::size_t len = 10 + rng.below(12);
        for (std::size_t t = 0; t < len; ++t)
            line.push_back("w" + std::to_string(rng.below(5000)));
        lines.push_back(std::move(line));
    }
    return lines;
}

// One epoch of training over ~30k tokens; items = token positions/s.
void BM_SgnsEpoch(benchmark::State& state) {
    const lscsim::TokenLines lines = training_lines(2000);
    std::size_t tokens = 0;
    for (const auto& line : lines) tokens += line.size();

    lscsim::SgnsConfig config;
    config.dim = static_cast<std::size_t>(state.range(0));
    config.epochs = 1;
    config.seed = 9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lscsim::train_sgns(lines, config));
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()) * static_cast<long>(tokens));
}
BENCHMARK(BM_SgnsEpoch)->Arg(30)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

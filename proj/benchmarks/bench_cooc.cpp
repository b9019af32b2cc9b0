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

#include "lscsim/cooc.hpp"
#include "lscsim/rng.hpp"

namespace {

lscsim::TokenLines synthetic_lines(std::size_t n_sentences, std::size_t vocab) {
    lscsim::Rng rng(3);
    lscsim::TokenLines lines;
    lines.reserve(n_sentences);
    for (std::size_t s = 0; s < n_sentences; ++s) {
        std::vector<std::string> line;
        const std::size_t len = 8 + rng.below(16);
        for (std::size_t t = 0; t < len; ++t)
            line.push_back("w" + std::to_string(rng.below(vocab)));
        lines.push_back(std::move(line));
    }
    return lines;
}

void BM_CountMatrix(benchmark::State& state) {
    const lscsim::TokenLines lines =
        synthetic_lines(static_cast<std::size_t>(state.range(0)), 2000);
    std::size_t tokens = 0;
    for (const auto& line : lines) tokens += line.size();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lscsim::build_count_matrix(lines, 10));
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()) * static_cast<long>(tokens));
}
BENCHMARK(BM_CountMatrix)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Ppmi(benchmark::State& state) {
    const lscsim::CooccurrenceMatrix counts =
        lscsim::build_count_matrix(synthetic_lines(2000, 2000), 10);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lscsim::ppmi(counts));
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()));
}
BENCHMARK(BM_Ppmi)->Unit(benchmark::kMillisecond);

}  // namespace

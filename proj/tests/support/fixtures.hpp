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

#include <string>
#include <vector>

#include "lscsim/corpus.hpp"
#include "lscsim/simulator.hpp"

namespace lscsim::test {

/// The five-sentence "plant" corpus in canonical format: three uses of
/// sense s1 (factory) and two of s2 (organism).
std::string plant_corpus_text();
AnnotatedCorpus plant_corpus();

/// Extracted token lines of the five sentences, in corpus order.
const std::vector<std::string>& plant_extracted_lines();

/// The target plan sending s2 to C1 and s1 to C2.
TargetPlan plant_target_plan();

/// A seed for which the no-plan fill split puts sentences {1,2,3} (by
/// position) into C1, realizing the T1=(2,1), T2=(1,1) example split.
std::uint64_t plant_nontarget_seed();

}  // namespace lscsim::test

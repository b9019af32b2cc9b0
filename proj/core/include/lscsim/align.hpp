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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lscsim/cooc.hpp"
#include "lscsim/space.hpp"

namespace lscsim {

/// Column Intersection: restricts two sparse spaces to their shared
/// context-word columns, in a common (sorted) column order. Throws when
/// the intersection is empty or a space is dense.
std::pair<EmbeddingSpace, EmbeddingSpace> align_ci(const EmbeddingSpace& a,
                                                   const EmbeddingSpace& b);

/// Orthogonal Procrustes: returns b rotated onto a. Rows of both spaces
/// are length-normalized, then mean-centered over the shared vocabulary
/// to solve for the orthogonal R minimizing ||A - B R||_F; the rotation
/// is applied to the uncentered normalized rows of b. Throws when the
/// shared vocabulary is empty or the spaces are not dense with equal dim.
EmbeddingSpace align_op(const EmbeddingSpace& a, const EmbeddingSpace& b);

struct WordInjectionResult {
    TokenLines corpus;  // c1 lines followed by c2 lines
    std::map<std::string, std::pair<std::string, std::string>> renames;
};

/// Word Injection: concatenates the corpora with every occurrence of a
/// target t rewritten t@1 in c1 and t@2 in c2. One space trained on the
/// result compares t@1 against t@2 directly, with no alignment step.
/// Throws on an empty target list, a target containing the marker, or a
/// corpus token that already collides with an injected name.
WordInjectionResult word_injection(const TokenLines& c1, const TokenLines& c2,
                                   const std::vector<std::string>& targets);

}  // namespace lscsim

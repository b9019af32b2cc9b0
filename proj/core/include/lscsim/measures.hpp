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

#include "lscsim/space.hpp"

namespace lscsim {

/// Cosine distance 1 - cos in [0,2] between a word's vectors in two
/// aligned spaces. Throws MissingWordError when the word is absent or has
/// a zero vector on either side.
double cosine_distance(const EmbeddingSpace& a, const EmbeddingSpace& b, const std::string& word);

/// Same-space form, used by word-injection setups: distance between two
/// words of one space (e.g. t@1 vs t@2).
double cosine_distance(const EmbeddingSpace& space, const std::string& word1,
                       const std::string& word2);

/// Local Neighborhood Distance: second-order change measure. N is the
/// union of the word's k nearest neighbors (by cosine) in each space,
/// restricted to the shared vocabulary; the result is 1 - cos(s_a, s_b)
/// where s_x holds the word's cosine similarities to N inside space x.
/// Neighbor ties break by word string. Throws MissingWordError when the
/// word is absent/zero or fewer than k shared candidates exist.
double lnd(const EmbeddingSpace& a, const EmbeddingSpace& b, const std::string& word,
           std::size_t k = 25);

/// Same-space form for word-injection setups: neighborhoods of word1 and
/// word2 within one space, both query words excluded as candidates.
double lnd(const EmbeddingSpace& space, const std::string& word1, const std::string& word2,
           std::size_t k = 25);

}  // namespace lscsim

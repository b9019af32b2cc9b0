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
#include "lscsim/align.hpp"

#include <doctest.h>

#include <cmath>

#include "lscsim/error.hpp"
#include "lscsim/measures.hpp"
#include "lscsim/rng.hpp"

using namespace lscsim;

namespace {

EmbeddingSpace sparse_space(const std::vector<std::string>& rows,
                            const std::vector<std::string>& cols,
                            const std::vector<std::vector<float>>& cells) {
    EmbeddingSpace space;
    space.storage = EmbeddingSpace::Storage::Sparse;
    for (const auto& w : rows) space.vocab.add(w);
    space.columns = cols;
    space.dim = cols.size();
    space.rows.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (cells[r][c] != 0.0f)
                space.rows[r].emplace_back(static_cast<std::uint32_t>(c), cells[r][c]);
    return space;
}

EmbeddingSpace random_dense(Rng& rng, const std::vector<std::string>& words, std::size_t dim) {
    Vocabulary vocab;
    for (const auto& w : words) vocab.add(w);
    EmbeddingSpace space = EmbeddingSpace::make_dense(std::move(vocab), dim);
    for (double& v : space.dense) v = rng.next_gaussian();
    return space;
}

// Random orthogonal matrix via Gram-Schmidt on gaussian columns.
std::vector<std::vector<double>> random_orthogonal(Rng& rng, std::size_t d) {
    std::vector<std::vector<double>> q(d, std::vector<double>(d));
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) q[r][c] = rng.next_gaussian();
        for (std::size_t prev = 0; prev < c; ++prev) {
            double dot = 0.0;
            for (std::size_t r = 0; r < d; ++r) dot += q[r][c] * q[r][prev];
            for (std::size_t r = 0; r < d; ++r) q[r][c] -= dot * q[r][prev];
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < d; ++r) norm += q[r][c] * q[r][c];
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < d; ++r) q[r][c] /= norm;
    }
    return q;
}

EmbeddingSpace apply_matrix(const EmbeddingSpace& space,
                            const std::vector<std::vector<double>>& m) {
    EmbeddingSpace out = space;
    for (std::uint32_t id = 0; id < space.vocab.size(); ++id) {
        const auto row = space.row_dense(id);
        auto out_row = out.row_dense_mut(id);
        for (std::size_t c = 0; c < space.dim; ++c) {
            double sum = 0.0;
            for (std::size_t r = 0; r < space.dim; ++r) sum += row[r] * m[r][c];
            out_row[c] = sum;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("column intersection keeps shared columns in shared order") {
    const EmbeddingSpace a =
        sparse_space({"w1", "w2"}, {"a", "b", "c"}, {{1, 2, 3}, {0, 1, 0}});
    const EmbeddingSpace b = sparse_space({"w1", "w3"}, {"b", "c", "d"}, {{5, 0, 2}, {1, 1, 1}});

    const auto [ra, rb] = align_ci(a, b);
    CHECK(ra.columns == std::vector<std::string>{"b", "c"});
    CHECK(rb.columns == std::vector<std::string>{"b", "c"});
    // w1 in a: b=2, c=3; w1 in b: b=5, c=0.
    CHECK(ra.rows[0] == SparseRow{{0, 2.0f}, {1, 3.0f}});
    CHECK(rb.rows[0] == SparseRow{{0, 5.0f}});
}

TEST_CASE("column intersection with identical columns is lossless") {
    const EmbeddingSpace a = sparse_space({"w"}, {"a", "b"}, {{1, 2}});
    const EmbeddingSpace b = sparse_space({"w"}, {"a", "b"}, {{3, 4}});
    const auto [ra, rb] = align_ci(a, b);
    CHECK(ra.rows[0] == a.rows[0]);
    CHECK(rb.rows[0] == b.rows[0]);
}

TEST_CASE("disjoint columns cannot be intersected") {
    const EmbeddingSpace a = sparse_space({"w"}, {"a"}, {{1}});
    const EmbeddingSpace b = sparse_space({"w"}, {"b"}, {{1}});
    CHECK_THROWS_AS(align_ci(a, b), Error);
}

TEST_CASE("procrustes on identical spaces is the identity") {
    Rng rng(41);
    const std::vector<std::string> words = {"w0", "w1", "w2", "w3", "w4", "w5", "w6", "w7"};
    const EmbeddingSpace a = random_dense(rng, words, 4);
    const EmbeddingSpace rotated = align_op(a, a);
    for (const std::string& w : words) {
        CHECK(cosine_distance(a, rotated, w) < 1e-9);
    }
}

TEST_CASE("procrustes recovers a random orthogonal transform") {
    Rng rng(42);
    std::vector<std::string> words;
    for (int i = 0; i < 40; ++i) words.push_back("w" + std::to_string(i));
    const std::size_t d = 6;
    const EmbeddingSpace a = random_dense(rng, words, d);
    const EmbeddingSpace b = apply_matrix(a, random_orthogonal(rng, d));

    const EmbeddingSpace aligned = align_op(a, b);
    for (const std::string& w : words) {
        CHECK(cosine_distance(a, aligned, w) < 1e-6);
    }
}

TEST_CASE("procrustes output is an orthogonal transform of the normalized rows") {
    // Pairwise dot products of normalized rows must be preserved, which
    // pins R^T R = I on the spanned subspace.
    Rng rng(43);
    std::vector<std::string> words;
    for (int i = 0; i < 30; ++i) words.push_back("w" + std::to_string(i));
    const EmbeddingSpace a = random_dense(rng, words, 5);
    const EmbeddingSpace b = random_dense(rng, words, 5);
    const EmbeddingSpace aligned = align_op(a, b);

    auto normalized_dot = [&](const EmbeddingSpace& space, std::uint32_t i, std::uint32_t j) {
        return row_cosine(space, i, space, j);
    };
    for (std::uint32_t i = 0; i < 10; ++i) {
        for (std::uint32_t j = 0; j < 10; ++j) {
            CHECK(normalized_dot(aligned, i, j) ==
                  doctest::Approx(normalized_dot(b, i, j)).epsilon(1e-6));
        }
    }
}

TEST_CASE("procrustes recovers a plane rotation exactly") {
    // 2D: b = a rotated by +30 degrees; alignment must rotate it back.
    const double theta = 30.0 * 3.14159265358979323846 / 180.0;
    const std::vector<std::vector<double>> rot = {{std::cos(theta), std::sin(theta)},
                                                  {-std::sin(theta), std::cos(theta)}};
    Rng rng(44);
    std::vector<std::string> words;
    for (int i = 0; i < 12; ++i) words.push_back("w" + std::to_string(i));
    const EmbeddingSpace a = random_dense(rng, words, 2);
    const EmbeddingSpace b = apply_matrix(a, rot);
    const EmbeddingSpace aligned = align_op(a, b);
    for (const std::string& w : words) CHECK(cosine_distance(a, aligned, w) < 1e-6);
}

TEST_CASE("procrustes rejects unusable inputs") {
    Rng rng(45);
    const EmbeddingSpace a = random_dense(rng, {"a", "b"}, 3);
    const EmbeddingSpace b = random_dense(rng, {"c", "d"}, 3);
    CHECK_THROWS_AS(align_op(a, b), Error);  // empty shared vocabulary

    const EmbeddingSpace c = random_dense(rng, {"a"}, 4);
    CHECK_THROWS_AS(align_op(a, c), Error);  // dimension mismatch
}

TEST_CASE("word injection renames targets per side") {
    const TokenLines c1 = {{"the", "plant", "grows"}, {"plant", "life"}};
    const TokenLines c2 = {{"plant", "equipment"}, {"a", "plant"}, {"the", "plant"}};
    const WordInjectionResult result = word_injection(c1, c2, {"plant"});

    std::size_t n1 = 0, n2 = 0, plain = 0;
    for (const auto& line : result.corpus) {
        for (const auto& word : line) {
            n1 += word == "plant@1";
            n2 += word == "plant@2";
            plain += word == "plant";
        }
    }
    CHECK(n1 == 2);
    CHECK(n2 == 3);
    CHECK(plain == 0);
    CHECK(result.corpus.size() == 5);
    CHECK(result.renames.at("plant") == std::pair<std::string, std::string>{"plant@1", "plant@2"});
}

TEST_CASE("word injection leaves non-targets untouched") {
    const TokenLines c1 = {{"a", "b"}};
    const TokenLines c2 = {{"c"}};
    const WordInjectionResult result = word_injection(c1, c2, {"zebra"});
    CHECK(result.corpus == TokenLines{{"a", "b"}, {"c"}});
}

TEST_CASE("word injection rejects unusable targets") {
    CHECK_THROWS_AS(word_injection({{"a"}}, {{"b"}}, {}), Error);
    CHECK_THROWS_AS(word_injection({{"a"}}, {{"b"}}, {"bad@name"}), Error);
    // Existing token colliding with an injected name.
    CHECK_THROWS_AS(word_injection({{"plant@1"}}, {{"x"}}, {"plant"}), Error);
}

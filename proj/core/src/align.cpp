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

#include <Eigen/Dense>
#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lscsim/error.hpp"

namespace lscsim {

namespace {

EmbeddingSpace project_columns(const EmbeddingSpace& space,
                               const std::vector<std::string>& shared_columns,
                               const std::unordered_map<std::string, std::uint32_t>& new_ids) {
    EmbeddingSpace out;
    out.vocab = space.vocab;
    out.storage = EmbeddingSpace::Storage::Sparse;
    out.columns = shared_columns;
    out.dim = shared_columns.size();
    out.prov = space.prov;
    out.prov.alignment = "ci";

    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    for (std::uint32_t old_id = 0; old_id < space.columns.size(); ++old_id) {
        const auto it = new_ids.find(space.columns[old_id]);
        if (it != new_ids.end()) remap.emplace(old_id, it->second);
    }

    out.rows.resize(space.rows.size());
    for (std::size_t r = 0; r < space.rows.size(); ++r) {
        SparseRow row;
        for (const auto& [col, value] : space.rows[r]) {
            const auto it = remap.find(col);
            if (it != remap.end()) row.emplace_back(it->second, value);
        }
        std::sort(row.begin(), row.end());
        out.rows[r] = std::move(row);
    }
    return out;
}

}  // namespace

std::pair<EmbeddingSpace, EmbeddingSpace> align_ci(const EmbeddingSpace& a,
                                                   const EmbeddingSpace& b) {
    if (a.is_dense() || b.is_dense())
        throw Error("column intersection requires sparse spaces with named columns");

    const std::set<std::string> cols_a(a.columns.begin(), a.columns.end());
    std::vector<std::string> shared;
    for (const std::string& col : std::set<std::string>(b.columns.begin(), b.columns.end()))
        if (cols_a.count(col)) shared.push_back(col);
    if (shared.empty()) throw Error("column intersection is empty");

    std::unordered_map<std::string, std::uint32_t> new_ids;
    for (std::uint32_t i = 0; i < shared.size(); ++i) new_ids.emplace(shared[i], i);
    return {project_columns(a, shared, new_ids), project_columns(b, shared, new_ids)};
}

EmbeddingSpace align_op(const EmbeddingSpace& a, const EmbeddingSpace& b) {
    if (!a.is_dense() || !b.is_dense())
        throw Error("orthogonal procrustes requires dense spaces");
    if (a.dim != b.dim) throw Error("orthogonal procrustes over different dimensionalities");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> shared;
    for (std::uint32_t ida = 0; ida < a.vocab.size(); ++ida) {
        if (const auto idb = b.vocab.find(a.vocab.word(ida))) shared.emplace_back(ida, *idb);
    }
    if (shared.empty()) throw Error("orthogonal procrustes: shared vocabulary is empty");

    using Eigen::MatrixXd;
    const Eigen::Index n = static_cast<Eigen::Index>(shared.size());
    const Eigen::Index d = static_cast<Eigen::Index>(a.dim);

    auto normalized_row = [](const EmbeddingSpace& space, std::uint32_t id) {
        Eigen::RowVectorXd row(space.dim);
        const auto values = space.row_dense(id);
        for (std::size_t c = 0; c < space.dim; ++c) row(static_cast<Eigen::Index>(c)) = values[c];
        const double norm = row.norm();
        if (norm > 0.0) row /= norm;
        return row;
    };

    MatrixXd x(n, d), y(n, d);
    for (Eigen::Index i = 0; i < n; ++i) {
        x.row(i) = normalized_row(a, shared[static_cast<std::size_t>(i)].first);
        y.row(i) = normalized_row(b, shared[static_cast<std::size_t>(i)].second);
    }
    const Eigen::RowVectorXd mean_x = x.colwise().mean();
    const Eigen::RowVectorXd mean_y = y.colwise().mean();
    x.rowwise() -= mean_x;
    y.rowwise() -= mean_y;

    // R = argmin ||X - Y R||_F over orthogonal R, via SVD of Y^T X.
    Eigen::JacobiSVD<MatrixXd> svd(y.transpose() * x, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const MatrixXd rotation = svd.matrixU() * svd.matrixV().transpose();

    EmbeddingSpace out = EmbeddingSpace::make_dense(b.vocab, b.dim);
    for (std::uint32_t id = 0; id < b.vocab.size(); ++id) {
        const Eigen::RowVectorXd rotated = normalized_row(b, id) * rotation;
        auto row = out.row_dense_mut(id);
        for (std::size_t c = 0; c < out.dim; ++c) row[c] = rotated(static_cast<Eigen::Index>(c));
    }
    out.prov = b.prov;
    out.prov.alignment = "op";
    return out;
}

WordInjectionResult word_injection(const TokenLines& c1, const TokenLines& c2,
                                   const std::vector<std::string>& targets) {
    if (targets.empty()) throw Error("word injection needs a non-empty target list");

    WordInjectionResult result;
    std::unordered_set<std::string> injected_names;
    for (const std::string& target : targets) {
        if (target.find('@') != std::string::npos)
            throw Error("word injection target '" + target + "' contains the marker character");
        auto [it, fresh] =
            result.renames.emplace(target, std::make_pair(target + "@1", target + "@2"));
        if (fresh) {
            injected_names.insert(it->second.first);
            injected_names.insert(it->second.second);
        }
    }

    result.corpus.reserve(c1.size() + c2.size());
    auto append = [&](const TokenLines& lines, bool first_side) {
        for (const auto& line : lines) {
            std::vector<std::string> out_line;
            out_line.reserve(line.size());
            for (const std::string& word : line) {
                if (injected_names.count(word))
                    throw Error("corpus token '" + word + "' collides with an injected name");
                const auto it = result.renames.find(word);
                out_line.push_back(it == result.renames.end()
                                       ? word
                                       : (first_side ? it->second.first : it->second.second));
            }
            result.corpus.push_back(std::move(out_line));
        }
    };
    append(c1, true);
    append(c2, false);
    return result;
}

}  // namespace lscsim

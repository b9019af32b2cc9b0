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
#include "lscsim/svd.hpp"

#include <Eigen/Dense>

#include "lscsim/error.hpp"
#include "lscsim/rng.hpp"

namespace lscsim {

namespace {

using Eigen::MatrixXd;

// A * B for the sparse co-occurrence matrix and a dense block.
MatrixXd sparse_times_dense(const CooccurrenceMatrix& a, const MatrixXd& b) {
    MatrixXd out = MatrixXd::Zero(static_cast<Eigen::Index>(a.rows.size()), b.cols());
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        for (const auto& [col, value] : a.rows[r]) {
            out.row(static_cast<Eigen::Index>(r)) +=
                static_cast<double>(value) * b.row(static_cast<Eigen::Index>(col));
        }
    }
    return out;
}

// A^T * B; the matrix is square but not necessarily symmetric cell-wise.
MatrixXd sparse_transpose_times_dense(const CooccurrenceMatrix& a, const MatrixXd& b) {
    MatrixXd out = MatrixXd::Zero(static_cast<Eigen::Index>(a.vocab.size()), b.cols());
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        for (const auto& [col, value] : a.rows[r]) {
            out.row(static_cast<Eigen::Index>(col)) +=
                static_cast<double>(value) * b.row(static_cast<Eigen::Index>(r));
        }
    }
    return out;
}

MatrixXd orthonormalize(const MatrixXd& y) {
    Eigen::HouseholderQR<MatrixXd> qr(y);
    MatrixXd q = MatrixXd::Identity(y.rows(), y.cols());
    q = qr.householderQ() * q;
    return q;
}

EmbeddingSpace make_space(const CooccurrenceMatrix& matrix, const MatrixXd& vectors,
                          std::size_t dim) {
    EmbeddingSpace space = EmbeddingSpace::make_dense(matrix.vocab, dim);
    for (std::uint32_t r = 0; r < space.vocab.size(); ++r) {
        auto row = space.row_dense_mut(r);
        for (std::size_t c = 0; c < dim; ++c)
            row[c] = vectors(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
    return space;
}

EmbeddingSpace svd_exact(const CooccurrenceMatrix& matrix, std::size_t dim) {
    const Eigen::Index n = static_cast<Eigen::Index>(matrix.rows.size());
    MatrixXd dense = MatrixXd::Zero(n, static_cast<Eigen::Index>(matrix.vocab.size()));
    for (std::size_t r = 0; r < matrix.rows.size(); ++r)
        for (const auto& [col, value] : matrix.rows[r])
            dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = value;

    Eigen::BDCSVD<MatrixXd> svd(dense, Eigen::ComputeThinU);
    const MatrixXd vectors = svd.matrixU().leftCols(static_cast<Eigen::Index>(dim)) *
                             svd.singularValues().head(static_cast<Eigen::Index>(dim)).asDiagonal();
    return make_space(matrix, vectors, dim);
}

EmbeddingSpace svd_randomized(const CooccurrenceMatrix& matrix, const SvdConfig& config) {
    const std::size_t n = matrix.rows.size();
    const std::size_t m = matrix.vocab.size();
    const std::size_t sketch = std::min(config.dim + config.oversample, std::min(n, m));

    Rng rng = Rng::derive(config.seed, "svd/range-finder");
    MatrixXd omega(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(sketch));
    for (Eigen::Index i = 0; i < omega.rows(); ++i)
        for (Eigen::Index j = 0; j < omega.cols(); ++j) omega(i, j) = rng.next_gaussian();

    MatrixXd q = orthonormalize(sparse_times_dense(matrix, omega));
    for (std::size_t it = 0; it < config.power_iterations; ++it) {
        const MatrixXd z = orthonormalize(sparse_transpose_times_dense(matrix, q));
        q = orthonormalize(sparse_times_dense(matrix, z));
    }

    // B = Q^T A, factored through its transpose to reuse the sparse kernels.
    const MatrixXd bt = sparse_transpose_times_dense(matrix, q);  // m x sketch
    Eigen::BDCSVD<MatrixXd> svd(bt.transpose(), Eigen::ComputeThinU);
    const Eigen::Index d = static_cast<Eigen::Index>(config.dim);
    const MatrixXd vectors =
        q * svd.matrixU().leftCols(d) * svd.singularValues().head(d).asDiagonal();
    return make_space(matrix, vectors, config.dim);
}

}  // namespace

EmbeddingSpace svd_reduce(const CooccurrenceMatrix& matrix, const SvdConfig& config) {
    const std::size_t n = matrix.rows.size();
    const std::size_t m = matrix.vocab.size();
    if (config.dim == 0 || config.dim > std::min(n, m))
        throw Error("svd_reduce: dimension " + std::to_string(config.dim) +
                    " out of range for a " + std::to_string(n) + "x" + std::to_string(m) +
                    " matrix");

    EmbeddingSpace space = (n * m <= config.dense_cutoff_cells)
                               ? svd_exact(matrix, config.dim)
                               : svd_randomized(matrix, config);
    space.prov.model = "svd";
    space.prov.seed = config.seed;
    space.prov.set("dim", std::to_string(config.dim));
    space.prov.set("window", std::to_string(matrix.window));
    return space;
}

}  // namespace lscsim

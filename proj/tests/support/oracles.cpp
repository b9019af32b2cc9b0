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
#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lscsim::test {

double oracle_jsd(const std::vector<double>& p, const std::vector<double>& q) {
    assert(p.size() == q.size());
    const double ln2 = std::log(2.0);
    double kl_p = 0.0, kl_q = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double m = (p[i] + q[i]) / 2.0;
        if (p[i] > 0.0) kl_p += p[i] * (std::log(p[i]) - std::log(m)) / ln2;
        if (q[i] > 0.0) kl_q += q[i] * (std::log(q[i]) - std::log(m)) / ln2;
    }
    return std::sqrt((kl_p + kl_q) / 2.0);
}

double oracle_spearman_d2(const std::vector<double>& a, const std::vector<double>& b) {
    assert(a.size() == b.size());
    const std::size_t n = a.size();
    auto ranks = [n](const std::vector<double>& values) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t less = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (values[j] < values[i]) ++less;
                if (j != i && values[j] == values[i])
                    throw std::invalid_argument("d^2 formula requires untied data");
            }
            out[i] = static_cast<double>(less + 1);
        }
        return out;
    };
    const std::vector<double> ra = ranks(a), rb = ranks(b);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) d2 += (ra[i] - rb[i]) * (ra[i] - rb[i]);
    const double dn = static_cast<double>(n);
    return 1.0 - 6.0 * d2 / (dn * (dn * dn - 1.0));
}

double oracle_average_precision(const std::vector<int>& ranked_labels) {
    std::size_t positives = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < ranked_labels.size(); ++i) {
        if (ranked_labels[i] == 1) {
            ++positives;
            sum += static_cast<double>(positives) / static_cast<double>(i + 1);
        }
    }
    assert(positives > 0);
    return sum / static_cast<double>(positives);
}

double oracle_exact_random_ap(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    double sum = 0.0;
    std::size_t arrangements = 0;
    do {
        sum += oracle_average_precision(labels);
        ++arrangements;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return sum / static_cast<double>(arrangements);
}

double frobenius_distance(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.rows == b.rows && a.cols == b.cols);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        const double d = a.data[i] - b.data[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

namespace {

// Cyclic Jacobi eigen-decomposition of the symmetric matrix A^T A.
// Returns eigenvalues (descending) and the rotation matrix V whose
// columns are the corresponding eigenvectors.
void jacobi_eigen(const DenseMatrix& a, std::vector<double>& eigenvalues, DenseMatrix& v) {
    const std::size_t n = a.cols;
    DenseMatrix s{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t r = 0; r < a.rows; ++r) sum += a.at(r, i) * a.at(r, j);
            s.at(i, j) = sum;
        }

    v = DenseMatrix{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;

    for (std::size_t sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += s.at(i, j) * s.at(i, j);
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(s.at(p, q)) < 1e-300) continue;
                const double theta = (s.at(q, q) - s.at(p, p)) / (2.0 * s.at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double snp = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double skp = s.at(k, p), skq = s.at(k, q);
                    s.at(k, p) = c * skp - snp * skq;
                    s.at(k, q) = snp * skp + c * skq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double spk = s.at(p, k), sqk = s.at(q, k);
                    s.at(p, k) = c * spk - snp * sqk;
                    s.at(q, k) = snp * spk + c * sqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - snp * vkq;
                    v.at(k, q) = snp * vkp + c * vkq;
                }
            }
        }
    }

    eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = std::max(0.0, s.at(i, i));

    // Sort eigenpairs descending.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return eigenvalues[x] > eigenvalues[y]; });
    std::vector<double> sorted_values(n);
    DenseMatrix sorted_v{n, n, std::vector<double>(n * n, 0.0)};
    for (std::size_t c = 0; c < n; ++c) {
        sorted_values[c] = eigenvalues[order[c]];
        for (std::size_t r = 0; r < n; ++r) sorted_v.at(r, c) = v.at(r, order[c]);
    }
    eigenvalues = std::move(sorted_values);
    v = std::move(sorted_v);
}

}  // namespace

DenseMatrix oracle_rank_k_approximation(const DenseMatrix& a, std::size_t k) {
    std::vector<double> eigenvalues;
    DenseMatrix v;
    jacobi_eigen(a, eigenvalues, v);
    const std::size_t n = a.cols;
    k = std::min(k, n);

    // A_k = A V_k V_k^T
    DenseMatrix av{a.rows, k, std::vector<double>(a.rows * k, 0.0)};
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < k; ++c) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) sum += a.at(r, j) * v.at(j, c);
            av.at(r, c) = sum;
        }
    DenseMatrix out{a.rows, n, std::vector<double>(a.rows * n, 0.0)};
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            double sum = 0.0;
            for (std::size_t c = 0; c < k; ++c) sum += av.at(r, c) * v.at(j, c);
            out.at(r, j) = sum;
        }
    return out;
}

std::vector<double> oracle_singular_values(const DenseMatrix& a) {
    std::vector<double> eigenvalues;
    DenseMatrix v;
    jacobi_eigen(a, eigenvalues, v);
    for (double& value : eigenvalues) value = std::sqrt(value);
    return eigenvalues;
}

}  // namespace lscsim::test

// Copyright 2026 The symcirc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symcirc/symrep.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace symcirc {

namespace {

std::vector<std::vector<int>> young_words(const YoungDiagram &shape) {
    if (shape.n() == 0) {
        return {{}};
    }
    std::vector<std::vector<int>> out;
    for (const auto &child : branching(shape).children) {
        int removed = 0;
        while (removed < child.num_rows() && child.rows()[removed] == shape.rows()[removed]) {
            removed++;
        }
        for (auto w : young_words(child)) {
            w.push_back(removed);
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

int StandardTableau::col_of(int v) const {
    int c = 0;
    for (int u = 0; u < v; u++) {
        if (row_of[u] == row_of[v]) {
            c++;
        }
    }
    return c;
}

int StandardTableau::content(int v) const {
    return col_of(v) - row_of[v];
}

std::vector<std::vector<int>> StandardTableau::rows() const {
    std::vector<std::vector<int>> out(shape.num_rows());
    for (size_t v = 0; v < row_of.size(); v++) {
        out[row_of[v]].push_back((int)v + 1);
    }
    return out;
}

IrrepRep::IrrepRep(const YoungDiagram &shape) : shape_(shape) {
    if (shape.n() < 1) {
        throw std::invalid_argument("build_irrep requires at least one box");
    }
    std::map<std::vector<int>, int> index;
    for (auto &w : young_words(shape)) {
        index[w] = (int)basis_.size();
        basis_.push_back({shape, std::move(w)});
    }
    int m = dim();
    for (int i = 0; i + 1 < n(); i++) {
        SparseGen g{std::vector<double>(m), std::vector<int>(m, -1), std::vector<double>(m, 0.0)};
        for (int k = 0; k < m; k++) {
            const auto &t = basis_[k];
            int axial = t.content(i + 1) - t.content(i);
            g.diag[k] = 1.0 / axial;
            if (axial != 1 && axial != -1) {
                auto w = t.row_of;
                std::swap(w[i], w[i + 1]);
                g.partner[k] = index.at(w);
                g.off[k] = std::sqrt(1.0 - 1.0 / ((double)axial * axial));
            }
        }
        gens_.push_back(std::move(g));
    }
}

Eigen::MatrixXd IrrepRep::generator(int i) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim(), dim());
    right_multiply_generator(m, i);
    return m;
}

void IrrepRep::right_multiply_generator(Eigen::MatrixXd &m, int i) const {
    const auto &g = gens_.at(i);
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int k = 0; k < dim(); k++) {
        out.col(k) = g.diag[k] * m.col(k);
        if (g.partner[k] >= 0) {
            out.col(k) += g.off[k] * m.col(g.partner[k]);
        }
    }
    m.swap(out);
}

void IrrepRep::left_multiply_generator(Eigen::MatrixXd &m, int i) const {
    const auto &g = gens_.at(i);
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (int k = 0; k < dim(); k++) {
        out.row(k) = g.diag[k] * m.row(k);
        if (g.partner[k] >= 0) {
            out.row(k) += g.off[k] * m.row(g.partner[k]);
        }
    }
    m.swap(out);
}

std::shared_ptr<const IrrepRep> build_irrep(const YoungDiagram &shape) {
    static std::mutex mu;
    static std::map<YoungDiagram, std::shared_ptr<const IrrepRep>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(shape);
        if (it != cache.end()) {
            return it->second;
        }
    }
    auto rep = std::make_shared<const IrrepRep>(shape);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(shape, rep).first->second;
}

Eigen::MatrixXd rep_matrix(const IrrepRep &rep, const Permutation &sigma) {
    if (sigma.size() != rep.n()) {
        throw std::invalid_argument("permutation size does not match the irrep");
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
    for (int i : sigma.adjacent_word()) {
        rep.right_multiply_generator(m, i);
    }
    return m;
}

double character(const YoungDiagram &shape, const Permutation &sigma) {
    static std::mutex mu;
    static std::map<std::pair<YoungDiagram, std::vector<int>>, double> cache;
    auto key = std::make_pair(shape, sigma.cycle_type());
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    double chi = rep_matrix(*build_irrep(shape), sigma).trace();
    // Characters of S_n are integers.
    chi = std::round(chi);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, chi);
    return chi;
}

TwistedIntertwiner find_twisted_intertwiner(const YoungDiagram &a, const YoungDiagram &b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("intertwiner requires diagrams with the same box count");
    }
    if (dim_M(a) != dim_M(b)) {
        throw std::invalid_argument("intertwiner requires equal dimensions, got " + std::to_string(dim_M(a)) +
                                    " and " + std::to_string(dim_M(b)));
    }
    auto ra = build_irrep(a);
    auto rb = build_irrep(b);
    int m = ra->dim();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(m, m);
    // J Ga + Gb J = 0 for every generator; column-major vec(A X B) = (B^T kron A) vec X.
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(m * m, m * m);
    for (int i = 0; i + 1 < a.n(); i++) {
        Eigen::MatrixXd ga = ra->generator(i);
        Eigen::MatrixXd gb = rb->generator(i);
        Eigen::MatrixXd L(m * m, m * m);
        for (int r = 0; r < m; r++) {
            for (int c = 0; c < m; c++) {
                L.block(r * m, c * m, m, m) = ga(c, r) * I + (r == c ? gb : Eigen::MatrixXd::Zero(m, m));
            }
        }
        gram += L.transpose() * L;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
    TwistedIntertwiner out;
    int null_dim = 0;
    for (int k = 0; k < m * m; k++) {
        null_dim += eig.eigenvalues()(k) < 1e-10 ? 1 : 0;
    }
    if (null_dim != 1) {
        return out;
    }
    Eigen::VectorXd v = eig.eigenvectors().col(0);
    Eigen::MatrixXd J = Eigen::Map<Eigen::MatrixXd>(v.data(), m, m);
    J *= std::sqrt((double)m) / J.norm();
    for (int r = 0; r < m; r++) {
        bool done = false;
        for (int c = 0; c < m; c++) {
            if (std::abs(J(r, c)) > 1e-8) {
                if (J(r, c) < 0) {
                    J = -J;
                }
                done = true;
                break;
            }
        }
        if (done) {
            break;
        }
    }
    out.J = J;
    out.exists = true;
    return out;
}

}  // namespace symcirc

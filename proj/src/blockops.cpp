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

#include "symcirc/blockops.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace symcirc {

namespace {

const cd I_UNIT(0.0, 1.0);

// Flattened real coordinates, weighted so that dot products match inner().
Eigen::VectorXd flat(const BlockOperator &a) {
    const auto &lay = *a.layout();
    int len = 0;
    for (int i = 0; i < lay.size(); i++) {
        len += 2 * lay[i].dim * lay[i].dim;
    }
    Eigen::VectorXd v(len);
    int p = 0;
    for (int i = 0; i < lay.size(); i++) {
        double s = std::sqrt(lay[i].weight);
        const auto &b = a.block(i);
        for (int r = 0; r < b.rows(); r++) {
            for (int c = 0; c < b.cols(); c++) {
                v(p++) = s * b(r, c).real();
                v(p++) = s * b(r, c).imag();
            }
        }
    }
    return v;
}

}  // namespace

std::shared_ptr<const SectorLayout> SectorLayout::schur_weyl(int n, int d) {
    if (n < 1 || d < 1) {
        throw std::invalid_argument("Schur-Weyl layout requires n >= 1 and d >= 1");
    }
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const SectorLayout>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, d});
    if (it != cache.end()) {
        return it->second;
    }
    auto lay = std::make_shared<SectorLayout>();
    lay->n_ = n;
    lay->d_ = d;
    lay->schur_weyl_ = true;
    for (const auto &shape : enumerate_diagrams(n, d)) {
        lay->irreps_.push_back(build_irrep(shape));
        lay->sectors_.push_back({shape, (int)dim_M(shape), (double)dim_Q(shape, d)});
    }
    cache[{n, d}] = lay;
    return lay;
}

std::shared_ptr<const SectorLayout> SectorLayout::custom(const std::vector<int> &dims,
                                                         const std::vector<double> &weights) {
    if (dims.size() != weights.size()) {
        throw std::invalid_argument("custom layout needs one weight per block");
    }
    auto lay = std::make_shared<SectorLayout>();
    for (size_t i = 0; i < dims.size(); i++) {
        if (dims[i] < 1 || !(weights[i] > 0)) {
            throw std::invalid_argument("custom layout blocks need positive size and weight");
        }
        lay->sectors_.push_back({YoungDiagram(), dims[i], weights[i]});
    }
    return lay;
}

int SectorLayout::index_of(const YoungDiagram &shape) const {
    for (int i = 0; i < size(); i++) {
        if (sectors_[i].shape == shape) {
            return i;
        }
    }
    throw std::invalid_argument("shape " + shape.str() + " is not a sector of this layout");
}

int SectorLayout::real_dim() const {
    int s = 0;
    for (const auto &sec : sectors_) {
        s += sec.dim * sec.dim;
    }
    return s;
}

BlockOperator::BlockOperator(LayoutPtr layout) : layout_(std::move(layout)) {
    for (const auto &sec : layout_->sectors()) {
        blocks_.push_back(Eigen::MatrixXcd::Zero(sec.dim, sec.dim));
    }
}

BlockOperator BlockOperator::identity(LayoutPtr layout) {
    BlockOperator out(std::move(layout));
    for (auto &b : out.blocks_) {
        b.setIdentity();
    }
    return out;
}

void BlockOperator::check_same_layout(const BlockOperator &o) const {
    if (layout_ != o.layout_) {
        throw std::invalid_argument("block operators live on different layouts");
    }
}

BlockOperator BlockOperator::operator+(const BlockOperator &o) const {
    BlockOperator out = *this;
    out += o;
    return out;
}

BlockOperator &BlockOperator::operator+=(const BlockOperator &o) {
    check_same_layout(o);
    for (size_t i = 0; i < blocks_.size(); i++) {
        blocks_[i] += o.blocks_[i];
    }
    return *this;
}

BlockOperator BlockOperator::operator-(const BlockOperator &o) const {
    check_same_layout(o);
    BlockOperator out = *this;
    for (size_t i = 0; i < blocks_.size(); i++) {
        out.blocks_[i] -= o.blocks_[i];
    }
    return out;
}

BlockOperator BlockOperator::operator*(const BlockOperator &o) const {
    check_same_layout(o);
    BlockOperator out(layout_);
    for (size_t i = 0; i < blocks_.size(); i++) {
        out.blocks_[i].noalias() = blocks_[i] * o.blocks_[i];
    }
    return out;
}

BlockOperator BlockOperator::operator*(cd s) const {
    BlockOperator out = *this;
    for (auto &b : out.blocks_) {
        b *= s;
    }
    return out;
}

BlockOperator BlockOperator::adjoint() const {
    BlockOperator out = *this;
    for (auto &b : out.blocks_) {
        b = b.adjoint().eval();
    }
    return out;
}

bool BlockOperator::is_anti_hermitian(double tol) const {
    for (const auto &b : blocks_) {
        if ((b + b.adjoint()).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

bool BlockOperator::is_hermitian(double tol) const {
    for (const auto &b : blocks_) {
        if ((b - b.adjoint()).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

bool BlockOperator::is_unitary(double tol) const {
    for (const auto &b : blocks_) {
        auto id = Eigen::MatrixXcd::Identity(b.rows(), b.cols());
        if ((b * b.adjoint() - id).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

double BlockOperator::max_abs() const {
    double m = 0;
    for (const auto &b : blocks_) {
        m = std::max(m, b.cwiseAbs().maxCoeff());
    }
    return m;
}

double BlockOperator::norm() const {
    return std::sqrt(std::max(0.0, inner(*this, *this).real()));
}

cd inner(const BlockOperator &a, const BlockOperator &b) {
    if (a.layout() != b.layout()) {
        throw std::invalid_argument("block operators live on different layouts");
    }
    cd s = 0;
    for (int i = 0; i < a.num_blocks(); i++) {
        s += (*a.layout())[i].weight * (a.block(i).adjoint() * b.block(i)).trace();
    }
    return s;
}

BlockOperator commutator(const BlockOperator &a, const BlockOperator &b) {
    return a * b - b * a;
}

cd weighted_trace(const BlockOperator &a) {
    cd s = 0;
    for (int i = 0; i < a.num_blocks(); i++) {
        s += (*a.layout())[i].weight * a.block(i).trace();
    }
    return s;
}

BlockOperator exp_anti_hermitian(const BlockOperator &a) {
    BlockOperator out(a.layout());
    for (int i = 0; i < a.num_blocks(); i++) {
        Eigen::MatrixXcd h = -I_UNIT * a.block(i);
        h = (0.5 * (h + h.adjoint())).eval();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
        Eigen::VectorXcd ph = (I_UNIT * eig.eigenvalues().cast<cd>()).array().exp();
        out.block(i) = eig.eigenvectors() * ph.asDiagonal() * eig.eigenvectors().adjoint();
    }
    return out;
}

BlockOperator embed_permutation(const LayoutPtr &layout, const Permutation &sigma) {
    if (!layout->is_schur_weyl()) {
        throw std::invalid_argument("permutations embed only into Schur-Weyl layouts");
    }
    if (sigma.size() != layout->n()) {
        throw std::invalid_argument("permutation size does not match n");
    }
    BlockOperator out(layout);
    for (int i = 0; i < layout->size(); i++) {
        out.block(i) = rep_matrix(layout->irrep(i), sigma).cast<cd>();
    }
    return out;
}

BlockOperator embed_permutation(int n, int d, const Permutation &sigma) {
    return embed_permutation(SectorLayout::schur_weyl(n, d), sigma);
}

std::vector<BlockOperator> local_generators(int n, int d, int k) {
    if (k < 2 || k > n) {
        throw std::invalid_argument("local_generators requires 2 <= k <= n");
    }
    auto lay = SectorLayout::schur_weyl(n, d);
    std::vector<BlockOperator> out;
    std::vector<Eigen::VectorXd> prints;
    auto add = [&](BlockOperator op) {
        Eigen::VectorXd f = flat(op);
        double nf = f.norm();
        if (nf < 1e-10) {
            return;
        }
        f /= nf;
        for (const auto &g : prints) {
            if ((g - f).norm() < 1e-10 || (g + f).norm() < 1e-10) {
                return;
            }
        }
        prints.push_back(std::move(f));
        out.push_back(std::move(op));
    };
    for (const auto &sigma : all_permutations(n)) {
        if ((int)sigma.support().size() > k) {
            continue;
        }
        Permutation inv = sigma.inverse();
        // sigma and its inverse give the same pair of generators up to sign.
        if (inv < sigma) {
            continue;
        }
        BlockOperator p = embed_permutation(lay, sigma);
        BlockOperator pd = embed_permutation(lay, inv);
        add((p + pd) * I_UNIT);
        add(p - pd);
    }
    return out;
}

BlockOperator reflection_generator(int n, int d, std::array<int, 3> triple, int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("reflection sign must be +1 or -1");
    }
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
        throw std::invalid_argument("reflection triple must be distinct");
    }
    for (int q : triple) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("reflection triple out of range");
        }
    }
    auto lay = SectorLayout::schur_weyl(n, d);
    BlockOperator proj(lay);
    for (const auto &tau : all_permutations(3)) {
        // Conjugate the S_3 element onto the chosen qudits.
        std::vector<int> one_line(n);
        for (int q = 0; q < n; q++) {
            one_line[q] = q + 1;
        }
        for (int a = 0; a < 3; a++) {
            one_line[triple[a] - 1] = triple[tau(a)];
        }
        auto sigma = Permutation::from_one_line(one_line);
        double c = (sign == 1 ? 1.0 : (double)tau.sign()) / 6.0;
        proj += embed_permutation(lay, sigma) * cd(c);
    }
    return proj * cd(0.0, std::numbers::pi);
}

BlockOperator C_operator(int d) {
    if (d < 2) {
        throw std::invalid_argument("C_operator requires d >= 2");
    }
    auto lay = SectorLayout::schur_weyl(3, d);
    BlockOperator out = BlockOperator::identity(lay);
    for (int i = 0; i < lay->size(); i++) {
        const auto &rows = (*lay)[i].shape.rows();
        double c;
        if (rows.size() == 1) {
            c = 2.0 * (d - 1) * (d - 2);
        } else if (rows.size() == 2) {
            c = -1.0 * (d + 2) * (d - 2);
        } else {
            c = 2.0 * (d + 2) * (d + 1);
        }
        out.block(i) *= c;
    }
    return out;
}

BlockOperator C_operator_from_permutations(int d) {
    auto lay = SectorLayout::schur_weyl(3, d);
    double dd = d;
    BlockOperator out = BlockOperator::identity(lay) * cd(4.0);
    out += (embed_permutation(lay, Permutation::cycle(3, {1, 2, 3})) +
            embed_permutation(lay, Permutation::cycle(3, {1, 3, 2}))) *
           cd(dd * dd);
    out += (embed_permutation(lay, Permutation::transposition(3, 1, 2)) +
            embed_permutation(lay, Permutation::transposition(3, 1, 3)) +
            embed_permutation(lay, Permutation::transposition(3, 2, 3))) *
           cd(-2.0 * dd);
    return out;
}

BlockOperator transposition_sum(int n, int d) {
    auto lay = SectorLayout::schur_weyl(n, d);
    BlockOperator out(lay);
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            out += embed_permutation(lay, Permutation::transposition(n, i, j));
        }
    }
    return out;
}

}  // namespace symcirc

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

#ifndef SYMCIRC_BLOCKOPS_HPP
#define SYMCIRC_BLOCKOPS_HPP

#include <array>
#include <complex>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "symcirc/partitions.hpp"
#include "symcirc/permutation.hpp"
#include "symcirc/symrep.hpp"

namespace symcirc {

using cd = std::complex<double>;

struct Sector {
    YoungDiagram shape;
    int dim = 0;
    /// Multiplicity of the block in the full space (dim_Q for Schur-Weyl layouts).
    double weight = 1.0;
};

/// The ordered list of blocks an operator is stored in.
class SectorLayout {
   public:
    /// Blocks over enumerate_diagrams(n, d). Cached per (n, d).
    static std::shared_ptr<const SectorLayout> schur_weyl(int n, int d);
    /// Unlabeled blocks of the given sizes (shapes are empty; n = d = 0).
    static std::shared_ptr<const SectorLayout> custom(const std::vector<int> &dims, const std::vector<double> &weights);

    int n() const {
        return n_;
    }
    int d() const {
        return d_;
    }
    int size() const {
        return (int)sectors_.size();
    }
    const Sector &operator[](int i) const {
        return sectors_[i];
    }
    const std::vector<Sector> &sectors() const {
        return sectors_;
    }
    /// Throws std::invalid_argument if the shape is not in the layout.
    int index_of(const YoungDiagram &shape) const;
    bool is_schur_weyl() const {
        return schur_weyl_;
    }
    const IrrepRep &irrep(int i) const {
        return *irreps_.at(i);
    }
    /// Sum of dim^2: the real dimension of the anti-Hermitian block operators.
    int real_dim() const;

   private:
    int n_ = 0;
    int d_ = 0;
    bool schur_weyl_ = false;
    std::vector<Sector> sectors_;
    std::vector<std::shared_ptr<const IrrepRep>> irreps_;
};

using LayoutPtr = std::shared_ptr<const SectorLayout>;

/// An SU(d)-invariant operator stored as one complex block per sector.
class BlockOperator {
   public:
    BlockOperator() = default;
    /// Zero operator.
    explicit BlockOperator(LayoutPtr layout);
    static BlockOperator identity(LayoutPtr layout);

    const LayoutPtr &layout() const {
        return layout_;
    }
    int n() const {
        return layout_->n();
    }
    int d() const {
        return layout_->d();
    }
    int num_blocks() const {
        return (int)blocks_.size();
    }
    const Eigen::MatrixXcd &block(int i) const {
        return blocks_[i];
    }
    Eigen::MatrixXcd &block(int i) {
        return blocks_[i];
    }
    const Eigen::MatrixXcd &block(const YoungDiagram &shape) const {
        return blocks_[layout_->index_of(shape)];
    }
    Eigen::MatrixXcd &block(const YoungDiagram &shape) {
        return blocks_[layout_->index_of(shape)];
    }

    BlockOperator operator+(const BlockOperator &o) const;
    BlockOperator operator-(const BlockOperator &o) const;
    BlockOperator operator*(const BlockOperator &o) const;
    BlockOperator operator*(cd s) const;
    BlockOperator &operator+=(const BlockOperator &o);
    BlockOperator adjoint() const;

    bool is_anti_hermitian(double tol) const;
    bool is_hermitian(double tol) const;
    bool is_unitary(double tol) const;
    /// Largest absolute entry over all blocks.
    double max_abs() const;
    /// Weighted Hilbert-Schmidt norm sqrt(sum_l w_l |A_l|_F^2).
    double norm() const;

   private:
    void check_same_layout(const BlockOperator &o) const;
    LayoutPtr layout_;
    std::vector<Eigen::MatrixXcd> blocks_;
};

inline BlockOperator operator*(cd s, const BlockOperator &a) {
    return a * s;
}

/// sum_l w_l Tr(A_l^dagger B_l): the full-space Hilbert-Schmidt product.
cd inner(const BlockOperator &a, const BlockOperator &b);
BlockOperator commutator(const BlockOperator &a, const BlockOperator &b);
/// sum_l w_l Tr(A_l).
cd weighted_trace(const BlockOperator &a);

/// exp(A) blockwise, for anti-Hermitian A (via the Hermitian eigendecomposition of iA).
BlockOperator exp_anti_hermitian(const BlockOperator &a);

BlockOperator embed_permutation(const LayoutPtr &layout, const Permutation &sigma);
BlockOperator embed_permutation(int n, int d, const Permutation &sigma);

/// For every permutation whose support fits inside k qudits, i(P + P^dagger) and
/// (P - P^dagger), with zero and duplicate operators removed.
std::vector<BlockOperator> local_generators(int n, int d, int k);

/// i*pi times the symmetrizer (sign = +1) or antisymmetrizer (sign = -1) of the
/// 1-based qudits in `triple`.
BlockOperator reflection_generator(int n, int d, std::array<int, 3> triple, int sign);

/// The three-qudit operator whose trace against a Hamiltonian decides membership
/// in the 2-local algebra: c_[3] = 2(d-1)(d-2), c_[2,1] = -(d+2)(d-2),
/// c_[1,1,1] = 2(d+2)(d+1) on each block.
BlockOperator C_operator(int d);
/// d^2 (P_(123) + P_(132)) - 2d (P12 + P13 + P23) + 4 I, built from permutations.
BlockOperator C_operator_from_permutations(int d);

/// sum_{i<j} P_ij; acts on each block as the scalar content_sum.
BlockOperator transposition_sum(int n, int d);

}  // namespace symcirc

#endif

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

#ifndef SYMCIRC_SYMREP_HPP
#define SYMCIRC_SYMREP_HPP

#include <memory>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symcirc/partitions.hpp"
#include "symcirc/permutation.hpp"

namespace symcirc {

/// A standard Young tableau, stored as the row of each entry: row_of[v] is the
/// 0-based row holding the value v+1.
struct StandardTableau {
    YoungDiagram shape;
    std::vector<int> row_of;

    int col_of(int v) const;
    /// col - row of the cell holding v+1.
    int content(int v) const;
    /// Row-by-row filling with 1-based entries.
    std::vector<std::vector<int>> rows() const;
};

/// An irrep of S_n in Young's orthogonal form.
///
/// Basis order: basis(lambda) is the concatenation, over branching(lambda).children
/// in that order, of basis(child) with n placed in the removed box. Restricting
/// to S_{n-1} is therefore block diagonal with the child irreps in branching order.
class IrrepRep {
   public:
    explicit IrrepRep(const YoungDiagram &shape);

    const YoungDiagram &shape() const {
        return shape_;
    }
    int n() const {
        return shape_.n();
    }
    int dim() const {
        return (int)basis_.size();
    }
    const std::vector<StandardTableau> &basis() const {
        return basis_;
    }
    /// Dense matrix of the adjacent transposition swapping 0-based points i, i+1.
    Eigen::MatrixXd generator(int i) const;
    /// M * G_i computed in O(dim^2).
    void right_multiply_generator(Eigen::MatrixXd &m, int i) const;
    /// G_i * M computed in O(dim^2).
    void left_multiply_generator(Eigen::MatrixXd &m, int i) const;

   private:
    struct SparseGen {
        std::vector<double> diag;
        std::vector<int> partner;  // -1 if the swapped tableau is not standard
        std::vector<double> off;
    };
    YoungDiagram shape_;
    std::vector<StandardTableau> basis_;
    std::vector<SparseGen> gens_;
};

/// Cached, shared construction.
std::shared_ptr<const IrrepRep> build_irrep(const YoungDiagram &shape);
Eigen::MatrixXd rep_matrix(const IrrepRep &rep, const Permutation &sigma);
double character(const YoungDiagram &shape, const Permutation &sigma);

struct TwistedIntertwiner {
    Eigen::MatrixXd J;
    bool exists = false;
};
/// Solves J P_a(s) J^T = sgn(s) P_b(s) over the generators. J is normalized to be
/// orthogonal with its first nonzero entry (row-major) positive.
/// Throws std::invalid_argument if dim_M differs.
TwistedIntertwiner find_twisted_intertwiner(const YoungDiagram &a, const YoungDiagram &b);

}  // namespace symcirc

#endif

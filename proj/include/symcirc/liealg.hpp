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

#ifndef SYMCIRC_LIEALG_HPP
#define SYMCIRC_LIEALG_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "symcirc/blockops.hpp"

namespace symcirc {

constexpr double kDefaultTol = 1e-9;

/// Real coordinates of the anti-Hermitian part of an operator. Per block (scaled
/// by sqrt(weight)): Im of each diagonal entry, then sqrt(2) Re and sqrt(2) Im of
/// each entry above the diagonal, row-major. Euclidean dot products of these
/// vectors equal the weighted inner product Re <A, B>.
Eigen::VectorXd lie_coords(const BlockOperator &a);
BlockOperator from_lie_coords(const LayoutPtr &layout, const Eigen::VectorXd &v);

/// Orthonormal basis of a real Lie algebra of anti-Hermitian block operators.
struct LieBasis {
    LayoutPtr layout;
    std::vector<BlockOperator> elements;
    /// Column i holds lie_coords(elements[i]).
    Eigen::MatrixXd coords;
    double tol = kDefaultTol;
    bool closed = false;
    /// The first seed_count elements span the generators.
    int seed_count = 0;

    int dim() const {
        return (int)elements.size();
    }
    int ambient_dim() const {
        return layout->real_dim();
    }
};

/// Lie closure of anti-Hermitian generators. Commutators [e_i, e_j], j < i, are
/// scanned in order of i then j; a residual larger than tol after projection on
/// the current span becomes a new element. max_dim <= 0 means no cap. If the cap
/// stops the scan early, closed is false. Commutator batches are evaluated on up
/// to SYMCIRC_THREADS threads; insertion order does not depend on the thread count.
LieBasis closure(const std::vector<BlockOperator> &generators, double tol = kDefaultTol, int max_dim = 0);

/// Distance from the span of the basis, in the weighted norm.
double span_residual(const LieBasis &basis, const BlockOperator &a);
/// True iff both bases span the same subspace (to tol per element).
bool same_span(const LieBasis &a, const LieBasis &b, double tol);

/// Real rank of the basis restricted to the chosen sectors, optionally with the
/// per-block traces removed. Singular values above tol * sqrt(ambient_dim) count.
int projected_rank(const LieBasis &basis, const std::vector<int> &sectors, bool traceless_only);
int projected_rank(const LieBasis &basis, const std::vector<YoungDiagram> &sectors, bool traceless_only);

struct ConditionAResult {
    int sector = 0;
    YoungDiagram shape;
    int m = 0;
    int rank = 0;
    int required = 0;
    bool holds = false;
};
/// Holds iff the traceless projected rank reaches m^2 - 1: a subalgebra of u(m)
/// whose traceless part has that dimension contains su(m).
ConditionAResult check_condition_A(const LieBasis &basis, int sector);
ConditionAResult check_condition_A(const LieBasis &basis, const YoungDiagram &shape);

struct ConditionBResult {
    int sector_a = 0;
    int sector_b = 0;
    YoungDiagram shape_a;
    YoungDiagram shape_b;
    int m_a = 0;
    int m_b = 0;
    /// Unequal dimensions or m = 1: independent without a rank test.
    bool trivial = false;
    int rank = 0;
    bool independent = true;
    /// |Tr| of both blocks of exp(X) for a random algebra element X.
    double witness_trace_a = 0;
    double witness_trace_b = 0;
};

class InconsistentRankError : public std::runtime_error {
   public:
    InconsistentRankError(int rank, int m, const std::string &msg) : std::runtime_error(msg), rank(rank), m(m) {
    }
    int rank;
    int m;
};

/// Pair rank 2(m^2-1) means independent, m^2-1 correlated; anything else throws
/// InconsistentRankError.
ConditionBResult check_condition_B(const LieBasis &basis, int sector_a, int sector_b, std::uint64_t seed = 1);
ConditionBResult check_condition_B(const LieBasis &basis, const YoungDiagram &a, const YoungDiagram &b,
                                   std::uint64_t seed = 1);

struct Correlation {
    Eigen::MatrixXcd W;
    bool conjugated = false;
    /// Largest |W X_a W^dagger - X_b| (or with X_a conjugated) over the basis,
    /// on traceless parts.
    double residual = 0;
};
/// Finds unitary W with X_b = W X_a W^dagger (or W conj(X_a) W^dagger) for the
/// traceless parts of every basis element. The unconjugated solution is preferred
/// when both exist. W's first entry of modulus > 1e-8 (row-major) is made real
/// positive. Throws std::runtime_error if neither form fits to 1e-8.
Correlation find_correlation(const LieBasis &basis, int sector_a, int sector_b);
Correlation find_correlation(const LieBasis &basis, const YoungDiagram &a, const YoungDiagram &b);

/// Elements commuting with the whole algebra.
LieBasis center(const LieBasis &basis);
/// Span of all commutators of basis elements.
LieBasis derived_algebra(const LieBasis &basis);
int derived_dimension(const LieBasis &basis);

/// Thread cap from SYMCIRC_THREADS (default: hardware concurrency, at least 1).
int thread_cap();

}  // namespace symcirc

#endif

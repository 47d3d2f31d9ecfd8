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

#ifndef SYMCIRC_SEMIUNI_HPP
#define SYMCIRC_SEMIUNI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symcirc/blockops.hpp"
#include "symcirc/liealg.hpp"

namespace symcirc {

struct PairEntry {
    ConditionBResult result;
    /// The rank fell strictly between the correlated and independent values.
    bool inconsistent = false;
    std::string status() const;
};

struct CorrelationEntry {
    YoungDiagram shape_a;
    YoungDiagram shape_b;
    Correlation correlation;
};

struct SemiReport {
    int n = 0;
    int d = 0;
    int k = 0;
    double tol = kDefaultTol;
    /// False when the closure hit max_dim; the verdict is then unreliable.
    bool closed = true;
    bool verdict = false;
    int dim = 0;
    int ambient_dim = 0;
    /// sum (m^2 - 1) + |Lambda_{k,d}|.
    int expected_dim = 0;
    int center_dim = -1;
    int derived_dim = -1;
    std::vector<ConditionAResult> sectors;
    /// Equal-dimension pairs (m > 1) where both sectors satisfy condition A.
    std::vector<PairEntry> pairs;
    std::vector<CorrelationEntry> correlations;
    std::vector<std::string> notes;
};

struct SemiOptions {
    double tol = kDefaultTol;
    int max_dim = 0;
    std::uint64_t seed = 1;
    bool with_center = true;
    bool with_derived = true;
    bool with_correlations = true;
};

SemiReport check_semiuniversality(int n, int d, int k, const SemiOptions &opts = {});
/// Same checks on an already computed closure of k-local generators.
SemiReport semiuniversality_report(const LieBasis &basis, int k, const SemiOptions &opts = {});

struct VdetReport {
    int d = 0;
    bool in_v2 = true;
    /// d = 2: the [1,1,1] block is absent and the condition holds trivially.
    bool trivial = false;
    cd det_sym;
    cd det_mixed;
    cd det_anti;
    /// arg(det_mixed / (det_sym det_anti)) in (-pi, pi].
    double phase_gap = 0;
    std::string note;
};
/// Determinant test for three-qudit invariant unitaries:
/// det v_[2,1] == det v_[3] * det v_[1,1,1] (in phase, to 1e-8).
VdetReport classify_three_qudit_unitary(const BlockOperator &v);

struct TraceTestReport {
    bool in_v2 = true;
    double trace_hc = 0;
    double bound = 0;
};
/// Hamiltonians generating the 2-local three-qudit group: Tr(H C) = 0.
TraceTestReport hamiltonian_in_v23(const BlockOperator &h);

struct GateReport {
    /// No phase aligns J Y_[3,1] J^T with conj(Y_[2,1,1]).
    bool breaks = false;
    double min_distance = 0;
    double threshold = 0;
    double optimal_phase = 0;
    double trace_31 = 0;
    double trace_211 = 0;
    /// |Tr Y_[3,1]| != |Tr Y_[2,1,1]| (a sufficient test).
    bool trace_test_breaks = false;
};
GateReport gate_breaks_constraint(const BlockOperator &y);

struct GapRow {
    int n = 0;
    int closure_dim = 0;
    int full_dim = 0;
    BigInt gap;
    int expected_dim = 0;
    bool matches = false;
    /// gap > 0 whenever k < n and d >= 3.
    bool proper_ok = true;
};
std::vector<GapRow> gap_audit(const std::vector<int> &ns, int d, int k, double tol = kDefaultTol);

struct ExtensionReport {
    int dim_sub = 0;
    int dim_full = 0;
    int attempts = 0;
    bool irreducible = false;
    int closure_dim = 0;
    int expected_dim = 0;
    bool holds = false;
};
/// su(dim_sub) on the top-left corner plus one random traceless anti-Hermitian
/// element of u(dim_full); if the result acts irreducibly its closure must be
/// su(dim_full). Reducible samples are redrawn up to 10 times.
ExtensionReport validate_irreducible_extension(int dim_sub, int dim_full, std::uint64_t seed);

/// Complex dimension of the matrices commuting with every element.
int commutant_dimension(const std::vector<Eigen::MatrixXcd> &ops);

}  // namespace symcirc

#endif

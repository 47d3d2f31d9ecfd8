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

#ifndef SYMCIRC_DESIGNS_HPP
#define SYMCIRC_DESIGNS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "symcirc/partitions.hpp"
#include "symcirc/semiuni.hpp"

namespace symcirc {

struct DesignReport {
    int n = 0;
    int d = 0;
    /// (dim_M, shape) for every sector, sorted by dimension then descending-lex.
    std::vector<std::pair<std::int64_t, YoungDiagram>> sector_dims;
    YoungDiagram mu0;
    YoungDiagram mu1;
    std::int64_t third_min = 0;
    /// Sectors other than mu0, mu1 attaining third_min.
    std::vector<YoungDiagram> third_min_shapes;
    std::int64_t t_max = 0;
    /// n >= 9 and d < n - 1.
    bool hypotheses_hold = false;
    /// third_min == n(n-3)/2.
    bool matches_formula = false;
};
/// t-design order bound for 3-local circuits: t_max = (smallest sector dimension
/// other than [n] and [n-1,1]) - 1.
DesignReport design_order(int n, int d);

struct MuEigenRow {
    YoungDiagram shape;
    std::int64_t b2 = 0;
    /// Eigenvalues of A0 = B2/n - (n-3)/2 and A1 = (n-1)/2 - B2/n, stored times 2n
    /// so they stay integral.
    std::int64_t a0_times_2n = 0;
    std::int64_t a1_times_2n = 0;
};
struct MuProjectorReport {
    int n = 0;
    std::vector<MuEigenRow> rows;
    /// A0 = 1 on [n], 0 on [n-1,1]; A1 the reverse; A0 + A1 = 1 on both.
    bool identities_hold = false;
};
MuProjectorReport verify_mu_projectors(int n);

struct TwoDesignWitness {
    int n = 0;
    int d = 0;
    /// Correlated sector pairs of the 2-local closure (empty if semi-universal).
    std::vector<std::pair<YoungDiagram, YoungDiagram>> pairs;
    bool semi_universal = false;
};
/// The 2-local gate distribution cannot be a 2-design when its closure is not
/// semi-universal; the correlated pairs are the witness.
TwoDesignWitness two_design_failure(int n, int d, double tol = kDefaultTol);

}  // namespace symcirc

#endif

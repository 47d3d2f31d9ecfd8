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

#include "symcirc/designs.hpp"

#include <algorithm>
#include <stdexcept>

namespace symcirc {

DesignReport design_order(int n, int d) {
    if (n < 4 || d < 2) {
        throw std::invalid_argument("design_order requires n >= 4 and d >= 2");
    }
    DesignReport rep;
    rep.n = n;
    rep.d = d;
    rep.mu0 = YoungDiagram({n});
    rep.mu1 = YoungDiagram({n - 1, 1});
    for (const auto &lam : enumerate_diagrams(n, d)) {
        rep.sector_dims.push_back({dim_M(lam), lam});
    }
    std::stable_sort(rep.sector_dims.begin(), rep.sector_dims.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    rep.third_min = -1;
    for (const auto &[dim, lam] : rep.sector_dims) {
        if (lam == rep.mu0 || lam == rep.mu1) {
            continue;
        }
        if (rep.third_min < 0) {
            rep.third_min = dim;
        }
        if (dim == rep.third_min) {
            rep.third_min_shapes.push_back(lam);
        }
    }
    if (rep.third_min < 0) {
        throw std::logic_error("no sector besides [n] and [n-1,1]");
    }
    rep.t_max = rep.third_min - 1;
    rep.hypotheses_hold = n >= 9 && d < n - 1;
    rep.matches_formula = rep.third_min == (std::int64_t)n * (n - 3) / 2;
    return rep;
}

MuProjectorReport verify_mu_projectors(int n) {
    if (n < 3) {
        throw std::invalid_argument("verify_mu_projectors requires n >= 3");
    }
    MuProjectorReport rep;
    rep.n = n;
    YoungDiagram mu0({n});
    YoungDiagram mu1({n - 1, 1});
    rep.identities_hold = true;
    for (const auto &lam : enumerate_diagrams(n, n)) {
        MuEigenRow row;
        row.shape = lam;
        row.b2 = content_sum(lam);
        row.a0_times_2n = 2 * row.b2 - (std::int64_t)n * (n - 3);
        row.a1_times_2n = (std::int64_t)n * (n - 1) - 2 * row.b2;
        const std::int64_t one = 2 * (std::int64_t)n;
        if (lam == mu0) {
            rep.identities_hold &= row.a0_times_2n == one && row.a1_times_2n == 0;
        }
        if (lam == mu1) {
            rep.identities_hold &= row.a0_times_2n == 0 && row.a1_times_2n == one;
        }
        if (lam == mu0 || lam == mu1) {
            rep.identities_hold &= row.a0_times_2n + row.a1_times_2n == one;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

TwoDesignWitness two_design_failure(int n, int d, double tol) {
    if (d < 2 || n < 3) {
        throw std::invalid_argument("two_design_failure requires n >= 3 and d >= 2");
    }
    SemiOptions opts;
    opts.tol = tol;
    opts.with_center = false;
    opts.with_derived = false;
    opts.with_correlations = false;
    auto rep = check_semiuniversality(n, d, 2, opts);
    TwoDesignWitness w;
    w.n = n;
    w.d = d;
    w.semi_universal = rep.verdict;
    for (const auto &p : rep.pairs) {
        if (!p.result.independent) {
            w.pairs.push_back({p.result.shape_a, p.result.shape_b});
        }
    }
    return w;
}

}  // namespace symcirc

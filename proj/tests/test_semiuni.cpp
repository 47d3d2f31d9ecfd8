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

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "symcirc/semiuni.hpp"

using namespace symcirc;

namespace {

SemiOptions quick() {
    SemiOptions o;
    o.with_center = false;
    o.with_derived = false;
    o.with_correlations = false;
    return o;
}

std::vector<std::pair<YoungDiagram, YoungDiagram>> correlated(const SemiReport &r) {
    std::vector<std::pair<YoungDiagram, YoungDiagram>> out;
    for (const auto &p : r.pairs) {
        if (p.status() == "correlated") {
            out.push_back({p.result.shape_a, p.result.shape_b});
        }
    }
    return out;
}

BlockOperator r_plus(int n, int d) {
    return exp_anti_hermitian(reflection_generator(n, d, {1, 2, 3}, +1));
}

}  // namespace

TEST(verdicts, four_qudit_two_local_has_one_correlation) {
    for (int d : {3, 4}) {
        auto r = check_semiuniversality(4, d, 2);
        EXPECT_FALSE(r.verdict);
        auto c = correlated(r);
        ASSERT_EQ(c.size(), 1u) << d;
        EXPECT_EQ(c[0].first, YoungDiagram({3, 1}));
        EXPECT_EQ(c[0].second, YoungDiagram({2, 1, 1}));
        ASSERT_EQ(r.correlations.size(), 1u);
        EXPECT_LT(r.correlations[0].correlation.residual, 1e-8);
        for (const auto &s : r.sectors) {
            EXPECT_TRUE(s.holds) << s.shape.str();
        }
    }
    auto r = check_semiuniversality(4, 4, 2);
    EXPECT_EQ(r.derived_dim, 11);
    EXPECT_EQ(r.center_dim, 2);
}

TEST(verdicts, three_local_is_semi_universal) {
    for (auto [n, d] : {std::pair{4, 3}, std::pair{4, 4}, std::pair{5, 3}, std::pair{5, 4}}) {
        auto r = check_semiuniversality(n, d, 3, quick());
        EXPECT_TRUE(r.verdict) << n << " " << d;
        EXPECT_EQ(r.dim, r.expected_dim);
        EXPECT_TRUE(correlated(r).empty());
    }
}

TEST(verdicts, qubits_two_local_is_semi_universal) {
    for (int n : {4, 5}) {
        auto two = check_semiuniversality(n, 2, 2, quick());
        auto three = check_semiuniversality(n, 2, 3, quick());
        EXPECT_TRUE(two.verdict) << n;
        EXPECT_EQ(two.dim, three.dim) << n;
    }
}

TEST(verdicts, five_qudit_two_local_signature) {
    auto r = check_semiuniversality(5, 4, 2, quick());
    EXPECT_FALSE(r.verdict);
    for (const auto &s : r.sectors) {
        if (s.shape == YoungDiagram({3, 1, 1})) {
            EXPECT_FALSE(s.holds);
            EXPECT_EQ(s.rank, 15);
        } else {
            EXPECT_TRUE(s.holds) << s.shape.str();
        }
    }
    auto c = correlated(r);
    std::vector<std::pair<YoungDiagram, YoungDiagram>> expect = {
        {YoungDiagram({4, 1}), YoungDiagram({2, 1, 1, 1})},
        {YoungDiagram({3, 2}), YoungDiagram({2, 2, 1})},
    };
    std::sort(c.begin(), c.end());
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(c, expect);
}

TEST(verdicts, cap_reports_unclosed) {
    SemiOptions o = quick();
    o.max_dim = 10;
    auto r = check_semiuniversality(4, 4, 3, o);
    EXPECT_FALSE(r.closed);
    EXPECT_FALSE(r.verdict);
}

TEST(gap_formula, holds_for_small_systems) {
    for (int d : {3, 4}) {
        for (int k = 3; k <= 5; k++) {
            std::vector<int> ns;
            for (int n = k; n <= 5; n++) {
                ns.push_back(n);
            }
            for (const auto &row : gap_audit(ns, d, k)) {
                EXPECT_TRUE(row.matches) << row.n << " " << d << " " << k;
                EXPECT_TRUE(row.proper_ok);
                EXPECT_EQ(row.gap > 0, row.n > k);
                EXPECT_EQ(row.closure_dim < row.full_dim, row.n > k);
            }
        }
    }
    EXPECT_THROW(gap_audit({4}, 3, 2), std::invalid_argument);
}

TEST(three_qudit, determinant_test) {
    for (int d : {3, 4, 5}) {
        auto rep = classify_three_qudit_unitary(r_plus(3, d));
        EXPECT_FALSE(rep.in_v2);
        EXPECT_NEAR(std::abs(rep.phase_gap), std::numbers::pi, 1e-12);
        auto swap = classify_three_qudit_unitary(embed_permutation(3, d, Permutation::transposition(3, 1, 2)));
        EXPECT_TRUE(swap.in_v2);
        for (const auto &g : local_generators(3, d, 2)) {
            EXPECT_TRUE(classify_three_qudit_unitary(exp_anti_hermitian(g * cd(0.37))).in_v2);
        }
    }
    auto q = classify_three_qudit_unitary(r_plus(3, 2));
    EXPECT_TRUE(q.trivial);
    EXPECT_TRUE(q.in_v2);
    EXPECT_THROW(classify_three_qudit_unitary(reflection_generator(3, 3, {1, 2, 3}, 1)), std::invalid_argument);
}

TEST(three_qudit, trace_test) {
    for (int d : {3, 4}) {
        for (const auto &g : local_generators(3, d, 2)) {
            EXPECT_TRUE(hamiltonian_in_v23(g * cd(0, 1)).in_v2);
        }
        EXPECT_FALSE(hamiltonian_in_v23(reflection_generator(3, d, {1, 2, 3}, -1) * cd(0, -1)).in_v2);
    }
}

TEST(four_qudit, reflection_breaks_constraint) {
    for (int d : {3, 4}) {
        auto rep = gate_breaks_constraint(r_plus(4, d));
        EXPECT_TRUE(rep.breaks);
        EXPECT_TRUE(rep.trace_test_breaks);
        EXPECT_NEAR(rep.trace_31, 1.0, 1e-12);
        EXPECT_NEAR(rep.trace_211, 3.0, 1e-12);
        auto swap = gate_breaks_constraint(embed_permutation(4, d, Permutation::transposition(4, 2, 3)));
        EXPECT_FALSE(swap.breaks);
        EXPECT_LT(swap.min_distance, 1e-10);
    }
    EXPECT_THROW(gate_breaks_constraint(r_plus(4, 2)), std::invalid_argument);
}

TEST(irreducible_extension, irreducible_extensions_reach_full_su) {
    for (auto [sub, full, dim] : {std::tuple{3, 5, 24}, std::tuple{3, 4, 15}, std::tuple{2, 3, 8}}) {
        auto r = validate_irreducible_extension(sub, full, 4);
        EXPECT_TRUE(r.irreducible);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.closure_dim, dim);
        EXPECT_EQ(r.expected_dim, dim);
    }
}

TEST(commutant, dimensions) {
    Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(3, 3);
    z(0, 0) = 1;
    EXPECT_EQ(commutant_dimension({z}), 5);
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(3, 3);
    x(0, 1) = x(1, 2) = x(2, 0) = 1;
    EXPECT_EQ(commutant_dimension({z, x}), 1);
}

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
#include <map>

#include <gtest/gtest.h>

#include "symcirc/partitions.hpp"

using namespace symcirc;

namespace {

// Independent oracle: recursive partition count with parts bounded by `max_part`
// and at most `rows` parts.
std::int64_t brute_count(int n, int rows, int max_part) {
    if (n == 0) {
        return 1;
    }
    if (rows == 0) {
        return 0;
    }
    std::int64_t total = 0;
    for (int p = std::min(n, max_part); p >= 1; p--) {
        total += brute_count(n - p, rows - 1, p);
    }
    return total;
}

// Independent oracle: number of standard tableaux by removing corners.
std::int64_t syt_count(const YoungDiagram &lam) {
    static std::map<std::vector<int>, std::int64_t> memo;
    if (lam.n() <= 1) {
        return 1;
    }
    auto it = memo.find(lam.rows());
    if (it != memo.end()) {
        return it->second;
    }
    std::int64_t total = 0;
    for (int r : lam.removable_rows()) {
        total += syt_count(lam.remove_box(r));
    }
    memo[lam.rows()] = total;
    return total;
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; i++) {
        f *= i;
    }
    return f;
}

}  // namespace

TEST(young_diagram, rejects_bad_rows) {
    EXPECT_THROW(YoungDiagram({1, 2}), std::invalid_argument);
    EXPECT_THROW(YoungDiagram({2, 0}), std::invalid_argument);
    EXPECT_NO_THROW(YoungDiagram(std::vector<int>{}));
}

TEST(young_diagram, basic_shape_queries) {
    YoungDiagram lam({4, 2, 1});
    EXPECT_EQ(lam.n(), 7);
    EXPECT_EQ(lam.col_length(0), 3);
    EXPECT_EQ(lam.col_length(1), 2);
    EXPECT_EQ(lam.col_length(3), 1);
    EXPECT_EQ(lam.hook(0, 0), 6);
    EXPECT_EQ(lam.hook(0, 3), 1);
    EXPECT_EQ(lam.transpose(), YoungDiagram({3, 2, 1, 1}));
    EXPECT_EQ(lam.transpose().transpose(), lam);
    EXPECT_EQ(lam.str(), "[4,2,1]");
    EXPECT_EQ(lam.removable_rows(), (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(lam.remove_box(1), YoungDiagram({4, 1, 1}));
    EXPECT_EQ(lam.add_box(3), YoungDiagram({4, 2, 1, 1}));
    EXPECT_EQ(lam.add_box(2), YoungDiagram({4, 2, 2}));
    EXPECT_THROW(YoungDiagram({2, 2}).add_box(1), std::invalid_argument);
}

TEST(counting, small_values) {
    EXPECT_EQ(count_diagrams(4, 3), 4);
    EXPECT_EQ(count_diagrams(0, 5), 1);
    EXPECT_EQ(count_diagrams(3, 2), 2);
    EXPECT_EQ(count_diagrams(10, 10), 42);
    EXPECT_EQ(count_diagrams(100, 100), BigInt(190569292));
    EXPECT_EQ(count_diagrams(5, 1), 1);
}

TEST(counting, matches_recursive_oracle_and_enumeration) {
    for (int n = 0; n <= 16; n++) {
        for (int d = 1; d <= 7; d++) {
            auto diagrams = enumerate_diagrams(n, d);
            EXPECT_EQ(count_diagrams(n, d), BigInt(brute_count(n, d, n))) << n << " " << d;
            EXPECT_EQ((std::int64_t)diagrams.size(), brute_count(n, d, n));
            for (std::size_t i = 0; i + 1 < diagrams.size(); i++) {
                EXPECT_TRUE(diagrams[i + 1] < diagrams[i]);
            }
            for (const auto &lam : diagrams) {
                EXPECT_EQ(lam.n(), n);
                EXPECT_LE(lam.num_rows(), d);
            }
        }
    }
}

TEST(counting, table_matches_single_counts) {
    auto t = count_table(40, 4);
    for (int n = 0; n <= 40; n++) {
        EXPECT_EQ(t[n], count_diagrams(n, 4));
    }
}

TEST(counting, large_denominators_exact) {
    // count(10^4, d) - count(3, d), frozen from two independent dynamic programs.
    EXPECT_EQ(gap(10000, 3, 2), BigInt(4999));
    EXPECT_EQ(gap(10000, 3, 3), BigInt(8338331));
    EXPECT_EQ(gap(10000, 3, 4), BigInt("6954866109"));
    EXPECT_EQ(gap(10000, 3, 5), BigInt("3482649657359"));
    EXPECT_EQ(gap(10000, 3, 10), BigInt("778400276435728381405742"));
}

TEST(counting, gap_and_ratio_domain) {
    EXPECT_THROW(gap(5, 2, 3), std::invalid_argument);
    EXPECT_THROW(ratio(5, 2, 3), std::invalid_argument);
    EXPECT_THROW(ratio(3, 3, 3), std::domain_error);
    EXPECT_THROW(ratio(10, 5, 1), std::domain_error);
    EXPECT_EQ(gap(5, 3, 3), BigInt(2));
    Ratio r = ratio(6, 4, 3);
    EXPECT_EQ(r.num, BigInt(1));
    EXPECT_EQ(r.den, BigInt(4));
    EXPECT_DOUBLE_EQ(r.value(), 0.25);
}

TEST(counting, asymptotic_ratio_at_ten_thousand) {
    for (int d = 2; d <= 5; d++) {
        double c = count_diagrams(10000, d).convert_to<double>();
        double approx = std::pow(1e4, d - 1) / (double)(factorial(d) * factorial(d - 1));
        EXPECT_LE(std::abs(c / approx - 1.0), 0.1) << d;
    }
}

TEST(monotonicity, strict_for_three_or_more_rows) {
    for (int d = 3; d <= 10; d++) {
        auto r = check_monotonicity(d, 200);
        EXPECT_TRUE(r.ok()) << d;
        EXPECT_TRUE(r.equal_steps.empty()) << d;
    }
}

TEST(monotonicity, two_rows_plateau_every_other_step) {
    auto r = check_monotonicity(2, 60);
    EXPECT_TRUE(r.ok());
    std::vector<int> odd;
    for (int k = 3; k <= 60; k += 2) {
        odd.push_back(k);
    }
    EXPECT_EQ(r.equal_steps, odd);
    for (int k = 0; k <= 60; k++) {
        EXPECT_EQ(count_diagrams(k, 2), k / 2 + 1);
    }
}

TEST(dimensions, hook_length_matches_tableau_count) {
    for (int n = 1; n <= 9; n++) {
        std::int64_t sum_sq = 0;
        for (const auto &lam : enumerate_diagrams(n, n)) {
            EXPECT_EQ(dim_M(lam), syt_count(lam)) << lam.str();
            sum_sq += dim_M(lam) * dim_M(lam);
        }
        EXPECT_EQ(sum_sq, factorial(n));
    }
    EXPECT_EQ(dim_M(YoungDiagram({3, 1})), 3);
    EXPECT_EQ(dim_M(YoungDiagram({4, 2})), 9);
    EXPECT_EQ(dim_M(YoungDiagram({3, 2, 1})), 16);
}

TEST(dimensions, schur_weyl_identity) {
    for (int n = 1; n <= 8; n++) {
        for (int d = 1; d <= 5; d++) {
            std::int64_t total = 0;
            for (const auto &lam : enumerate_diagrams(n, d)) {
                total += dim_Q(lam, d) * dim_M(lam);
            }
            EXPECT_EQ(total, (std::int64_t)std::llround(std::pow(d, n))) << n << " " << d;
        }
    }
    EXPECT_EQ(dim_Q(YoungDiagram({2, 1}), 3), 8);
    EXPECT_EQ(dim_Q(YoungDiagram({1, 1, 1}), 2), 0);
    EXPECT_EQ(dim_Q(YoungDiagram({3}), 3), 10);
}

TEST(dimensions, content_sum) {
    EXPECT_EQ(content_sum(YoungDiagram({3, 1})), 2);
    EXPECT_EQ(content_sum(YoungDiagram({1, 1, 1})), -3);
    EXPECT_EQ(content_sum(YoungDiagram({2, 2})), 0);
    for (const auto &lam : enumerate_diagrams(7, 7)) {
        EXPECT_EQ(content_sum(lam.transpose()), -content_sum(lam));
    }
}

TEST(branching, children_and_order) {
    auto b = branching(YoungDiagram({3, 2, 1}));
    ASSERT_EQ(b.children.size(), 3u);
    EXPECT_EQ(b.children[0], YoungDiagram({3, 1, 1}));
    EXPECT_EQ(b.children[1], YoungDiagram({3, 2}));
    EXPECT_EQ(b.children[2], YoungDiagram({2, 2, 1}));
    for (int n = 2; n <= 9; n++) {
        for (const auto &lam : enumerate_diagrams(n, n)) {
            std::int64_t total = 0;
            for (const auto &c : branching(lam).children) {
                total += dim_M(c);
            }
            EXPECT_EQ(total, dim_M(lam));
        }
    }
}

TEST(branching, facts_fail_at_three_boxes_and_hold_beyond) {
    for (int d = 3; d <= 6; d++) {
        auto small = check_facts(3, d);
        EXPECT_TRUE(small.fact_holds(1));
        EXPECT_FALSE(small.fact_holds(2));
        EXPECT_FALSE(small.fact_holds(3));
        for (int m = 4; m <= 8; m++) {
            EXPECT_TRUE(check_facts(m, d).all_hold()) << m << " " << d;
        }
    }
}

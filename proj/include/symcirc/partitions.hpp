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

#ifndef SYMCIRC_PARTITIONS_HPP
#define SYMCIRC_PARTITIONS_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace symcirc {

using BigInt = boost::multiprecision::cpp_int;

/// An integer partition, drawn as a Young diagram with rows()[i] boxes in row i.
class YoungDiagram {
   public:
    YoungDiagram() = default;
    /// Throws std::invalid_argument unless rows are positive and non-increasing.
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int> &rows() const {
        return rows_;
    }
    int n() const {
        return n_;
    }
    int num_rows() const {
        return (int)rows_.size();
    }
    bool empty() const {
        return rows_.empty();
    }
    /// Number of boxes in column c (0-based).
    int col_length(int c) const;
    /// Hook length of cell (r, c), both 0-based.
    int hook(int r, int c) const;
    YoungDiagram transpose() const;
    /// Rows (0-based) whose last box can be removed leaving a valid diagram.
    std::vector<int> removable_rows() const;
    YoungDiagram remove_box(int row) const;
    YoungDiagram add_box(int row) const;

    std::string str() const;

    bool operator==(const YoungDiagram &other) const = default;
    /// Lexicographic comparison of row lists.
    std::strong_ordering operator<=>(const YoungDiagram &other) const {
        return rows_ <=> other.rows_;
    }

   private:
    std::vector<int> rows_;
    int n_ = 0;
};

struct BranchSet {
    YoungDiagram parent;
    /// Ordered by dim_M descending, ties broken descending-lex. This is also the
    /// block order of the Young basis (see symrep.hpp).
    std::vector<YoungDiagram> children;
};

/// Partitions of n with at most d parts, in descending lexicographic order.
std::vector<YoungDiagram> enumerate_diagrams(int n, int d);
BigInt count_diagrams(int n, int d);
/// counts[i] = count_diagrams(i, d) for i = 0..n_max.
std::vector<BigInt> count_table(int n_max, int d);

BranchSet branching(const YoungDiagram &lambda);

/// Number of standard tableaux (hook-length formula).
std::int64_t dim_M(const YoungDiagram &lambda);
/// Number of semistandard tableaux with entries 1..d.
std::int64_t dim_Q(const YoungDiagram &lambda, int d);
/// Sum of (col - row) over all cells.
std::int64_t content_sum(const YoungDiagram &lambda);

/// count(n, d) - count(k, d). Requires 3 <= k <= n.
BigInt gap(int n, int k, int d);

struct Ratio {
    BigInt num;
    BigInt den;
    double value() const;
};
/// (count(k,d) - count(3,d)) / (count(n,d) - count(3,d)). Requires 3 <= k <= n.
Ratio ratio(int n, int k, int d);

struct MonotonicityReport {
    int d = 0;
    int k_max = 0;
    /// k values (2..k_max) with count(k) == count(k-1).
    std::vector<int> equal_steps;
    /// k values where the expected pattern is broken.
    std::vector<int> violations;
    bool ok() const {
        return violations.empty();
    }
};
MonotonicityReport check_monotonicity(int d, int k_max);

struct FactCounterexample {
    int fact = 0;
    YoungDiagram lambda;
    std::string detail;
};

struct FactsReport {
    int m = 0;
    int d = 0;
    std::vector<FactCounterexample> counterexamples;
    bool fact_holds(int fact) const;
    bool all_hold() const {
        return counterexamples.empty();
    }
};
/// Exhaustively tests the three branching facts over every lambda with m+1 boxes,
/// at most d rows and dim_M(lambda) > 1:
///  1. every child of lambda has at most d rows;
///  2. some child of lambda has dim_M >= 3;
///  3. for every other such lambda', some child with dim_M >= 2 belongs to the
///     branching of exactly one of lambda, lambda'.
FactsReport check_facts(int m, int d);

}  // namespace symcirc

#endif

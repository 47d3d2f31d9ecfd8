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

#include "symcirc/partitions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace symcirc {

namespace {

std::int64_t to_int64(const BigInt &v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("value does not fit in 64 bits: " + v.str());
    }
    return v.convert_to<std::int64_t>();
}

void enumerate_rec(int remaining, int max_part, int parts_left, std::vector<int> &cur,
                   std::vector<YoungDiagram> &out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (parts_left == 0) {
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; p--) {
        // Remaining boxes must fit in the rows still available.
        if ((long long)p * parts_left < remaining) {
            break;
        }
        cur.push_back(p);
        enumerate_rec(remaining - p, p, parts_left - 1, cur, out);
        cur.pop_back();
    }
}

void require_k_range(int n, int k) {
    if (k < 3) {
        throw std::invalid_argument("formula requires semi-universality (k >= 3)");
    }
    if (k > n) {
        throw std::invalid_argument("k must not exceed n");
    }
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i] < 1) {
            throw std::invalid_argument("Young diagram rows must be positive");
        }
        if (i > 0 && rows_[i] > rows_[i - 1]) {
            throw std::invalid_argument("Young diagram rows must be non-increasing");
        }
        n_ += rows_[i];
    }
}

int YoungDiagram::col_length(int c) const {
    int k = 0;
    while (k < (int)rows_.size() && rows_[k] > c) {
        k++;
    }
    return k;
}

int YoungDiagram::hook(int r, int c) const {
    return (rows_[r] - c - 1) + (col_length(c) - r - 1) + 1;
}

YoungDiagram YoungDiagram::transpose() const {
    std::vector<int> cols;
    int w = rows_.empty() ? 0 : rows_[0];
    for (int c = 0; c < w; c++) {
        cols.push_back(col_length(c));
    }
    return YoungDiagram(std::move(cols));
}

std::vector<int> YoungDiagram::removable_rows() const {
    std::vector<int> out;
    for (int r = 0; r < (int)rows_.size(); r++) {
        if (r + 1 == (int)rows_.size() || rows_[r + 1] < rows_[r]) {
            out.push_back(r);
        }
    }
    return out;
}

YoungDiagram YoungDiagram::remove_box(int row) const {
    std::vector<int> r = rows_;
    r.at(row)--;
    if (r[row] == 0) {
        r.pop_back();
    }
    return YoungDiagram(std::move(r));
}

YoungDiagram YoungDiagram::add_box(int row) const {
    std::vector<int> r = rows_;
    if (row == (int)r.size()) {
        r.push_back(1);
    } else {
        r.at(row)++;
    }
    return YoungDiagram(std::move(r));
}

std::string YoungDiagram::str() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < rows_.size(); i++) {
        if (i) {
            out << ',';
        }
        out << rows_[i];
    }
    out << ']';
    return out.str();
}

std::vector<YoungDiagram> enumerate_diagrams(int n, int d) {
    if (n < 0 || d < 1) {
        throw std::invalid_argument("enumerate_diagrams requires n >= 0 and d >= 1");
    }
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    enumerate_rec(n, n, d, cur, out);
    return out;
}

std::vector<BigInt> count_table(int n_max, int d) {
    if (n_max < 0 || d < 1) {
        throw std::invalid_argument("count_table requires n >= 0 and d >= 1");
    }
    // Partitions into at most d parts == partitions into parts of size at most d.
    std::vector<BigInt> p(n_max + 1);
    p[0] = 1;
    for (int j = 1; j <= d; j++) {
        for (int i = j; i <= n_max; i++) {
            p[i] += p[i - j];
        }
    }
    return p;
}

BigInt count_diagrams(int n, int d) {
    return count_table(n, d)[n];
}

BranchSet branching(const YoungDiagram &lambda) {
    if (lambda.n() < 1) {
        throw std::invalid_argument("branching requires at least one box");
    }
    BranchSet out{lambda, {}};
    for (int r : lambda.removable_rows()) {
        out.children.push_back(lambda.remove_box(r));
    }
    std::stable_sort(out.children.begin(), out.children.end(), [](const YoungDiagram &a, const YoungDiagram &b) {
        auto da = dim_M(a);
        auto db = dim_M(b);
        if (da != db) {
            return da > db;
        }
        return a > b;
    });
    return out;
}

std::int64_t dim_M(const YoungDiagram &lambda) {
    BigInt num = 1;
    for (int i = 2; i <= lambda.n(); i++) {
        num *= i;
    }
    BigInt den = 1;
    for (int r = 0; r < lambda.num_rows(); r++) {
        for (int c = 0; c < lambda.rows()[r]; c++) {
            den *= lambda.hook(r, c);
        }
    }
    return to_int64(num / den);
}

std::int64_t dim_Q(const YoungDiagram &lambda, int d) {
    if (lambda.num_rows() > d) {
        return 0;
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int r = 0; r < lambda.num_rows(); r++) {
        for (int c = 0; c < lambda.rows()[r]; c++) {
            num *= d + c - r;
            den *= lambda.hook(r, c);
        }
    }
    return to_int64(num / den);
}

std::int64_t content_sum(const YoungDiagram &lambda) {
    std::int64_t s = 0;
    for (int r = 0; r < lambda.num_rows(); r++) {
        for (int c = 0; c < lambda.rows()[r]; c++) {
            s += c - r;
        }
    }
    return s;
}

BigInt gap(int n, int k, int d) {
    require_k_range(n, k);
    auto t = count_table(n, d);
    return t[n] - t[k];
}

double Ratio::value() const {
    return num.convert_to<double>() / den.convert_to<double>();
}

Ratio ratio(int n, int k, int d) {
    require_k_range(n, k);
    auto t = count_table(n, d);
    Ratio r{t[k] - t[3], t[n] - t[3]};
    if (r.den == 0) {
        throw std::domain_error("ratio undefined: count(n,d) == count(3,d)");
    }
    return r;
}

MonotonicityReport check_monotonicity(int d, int k_max) {
    if (d < 2 || k_max < 2) {
        throw std::invalid_argument("check_monotonicity requires d >= 2 and k_max >= 2");
    }
    MonotonicityReport rep;
    rep.d = d;
    rep.k_max = k_max;
    auto t = count_table(k_max, d);
    for (int k = 2; k <= k_max; k++) {
        bool equal = t[k] == t[k - 1];
        if (equal) {
            rep.equal_steps.push_back(k);
        }
        bool expected_equal = d == 2 && k % 2 == 1;
        if (equal != expected_equal || t[k] < t[k - 1]) {
            rep.violations.push_back(k);
        }
    }
    return rep;
}

bool FactsReport::fact_holds(int fact) const {
    return std::none_of(counterexamples.begin(), counterexamples.end(),
                        [&](const FactCounterexample &c) { return c.fact == fact; });
}

FactsReport check_facts(int m, int d) {
    if (m < 1 || d < 1) {
        throw std::invalid_argument("check_facts requires m >= 1 and d >= 1");
    }
    FactsReport rep;
    rep.m = m;
    rep.d = d;
    std::vector<YoungDiagram> lams;
    std::vector<std::vector<YoungDiagram>> kids;
    for (const auto &lam : enumerate_diagrams(m + 1, d)) {
        if (dim_M(lam) > 1) {
            lams.push_back(lam);
            kids.push_back(branching(lam).children);
        }
    }
    for (size_t a = 0; a < lams.size(); a++) {
        for (const auto &g : kids[a]) {
            if (g.num_rows() > d) {
                rep.counterexamples.push_back({1, lams[a], "child " + g.str() + " has more than d rows"});
            }
        }
        bool has3 = std::any_of(kids[a].begin(), kids[a].end(), [](const YoungDiagram &g) { return dim_M(g) >= 3; });
        if (!has3) {
            rep.counterexamples.push_back({2, lams[a], "no child with dim_M >= 3"});
        }
        for (size_t b = a + 1; b < lams.size(); b++) {
            auto in = [](const std::vector<YoungDiagram> &v, const YoungDiagram &g) {
                return std::find(v.begin(), v.end(), g) != v.end();
            };
            bool separated = false;
            for (const auto &g : kids[a]) {
                separated |= dim_M(g) >= 2 && !in(kids[b], g);
            }
            for (const auto &g : kids[b]) {
                separated |= dim_M(g) >= 2 && !in(kids[a], g);
            }
            if (!separated) {
                rep.counterexamples.push_back(
                    {3, lams[a], "no child with dim_M >= 2 separates it from " + lams[b].str()});
            }
        }
    }
    return rep;
}

}  // namespace symcirc

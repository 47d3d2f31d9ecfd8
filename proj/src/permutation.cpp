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

#include "symcirc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symcirc {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images_.resize(n);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
}

Permutation Permutation::from_one_line(const std::vector<int> &one_based) {
    int n = (int)one_based.size();
    Permutation p;
    p.images_.resize(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; i++) {
        int v = one_based[i] - 1;
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("not a permutation in one-line notation");
        }
        seen[v] = true;
        p.images_[i] = v;
    }
    return p;
}

Permutation Permutation::transposition(int n, int i, int j) {
    return cycle(n, {i, j});
}

Permutation Permutation::cycle(int n, const std::vector<int> &c) {
    Permutation p = identity(n);
    std::vector<bool> used(n, false);
    for (size_t k = 0; k < c.size(); k++) {
        int a = c[k] - 1;
        int b = c[(k + 1) % c.size()] - 1;
        if (a < 0 || a >= n || b < 0 || b >= n || used[a]) {
            throw std::invalid_argument("bad cycle");
        }
        used[a] = true;
        p.images_[a] = b;
    }
    return p;
}

Permutation Permutation::random(int n, std::mt19937_64 &rng) {
    Permutation p = identity(n);
    // Fisher-Yates with an explicit index draw, so results do not depend on the
    // standard library's shuffle implementation.
    for (int i = n - 1; i > 0; i--) {
        int j = (int)(rng() % (std::uint64_t)(i + 1));
        std::swap(p.images_[i], p.images_[j]);
    }
    return p;
}

Permutation Permutation::operator*(const Permutation &rhs) const {
    if (rhs.size() != size()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    Permutation out;
    out.images_.resize(size());
    for (int i = 0; i < size(); i++) {
        out.images_[i] = images_[rhs.images_[i]];
    }
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out;
    out.images_.resize(size());
    for (int i = 0; i < size(); i++) {
        out.images_[images_[i]] = i;
    }
    return out;
}

int Permutation::sign() const {
    return (size() - num_cycles()) % 2 == 0 ? 1 : -1;
}

int Permutation::num_cycles() const {
    return (int)cycle_type().size();
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<bool> seen(size(), false);
    std::vector<int> out;
    for (int i = 0; i < size(); i++) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            len++;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> Permutation::support() const {
    std::vector<int> out;
    for (int i = 0; i < size(); i++) {
        if (images_[i] != i) {
            out.push_back(i);
        }
    }
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); i++) {
        if (images_[i] != i) {
            return false;
        }
    }
    return true;
}

std::vector<int> Permutation::adjacent_word() const {
    // Bubble sort the one-line array; every swap at position j right-multiplies
    // by s_j, so p * s_{j1} * ... * s_{jk} = id and p = s_{jk} * ... * s_{j1}.
    std::vector<int> a = images_;
    std::vector<int> swaps;
    for (int pass = 0; pass < size(); pass++) {
        bool any = false;
        for (int j = 0; j + 1 < size(); j++) {
            if (a[j] > a[j + 1]) {
                std::swap(a[j], a[j + 1]);
                swaps.push_back(j);
                any = true;
            }
        }
        if (!any) {
            break;
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::vector<int> Permutation::one_line() const {
    std::vector<int> out(size());
    for (int i = 0; i < size(); i++) {
        out[i] = images_[i] + 1;
    }
    return out;
}

std::string Permutation::str() const {
    std::ostringstream out;
    out << '[';
    for (int i = 0; i < size(); i++) {
        if (i) {
            out << ',';
        }
        out << images_[i] + 1;
    }
    out << ']';
    return out.str();
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> a(n);
    std::iota(a.begin(), a.end(), 1);
    do {
        out.push_back(Permutation::from_one_line(a));
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

}  // namespace symcirc

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

#ifndef SYMCIRC_PERMUTATION_HPP
#define SYMCIRC_PERMUTATION_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace symcirc {

/// A permutation of {0, ..., n-1}. Public constructors and printing use 1-based
/// one-line notation: one_line()[k-1] is the image of k.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). Acting on qudits, the
/// operator P(s) moves the content of slot k to slot s(k), which makes
/// P(a * b) = P(a) P(b).
class Permutation {
   public:
    Permutation() = default;
    static Permutation identity(int n);
    /// Throws std::invalid_argument if the list is not a permutation of 1..n.
    static Permutation from_one_line(const std::vector<int> &one_based);
    /// Transposition of the 1-based points i and j.
    static Permutation transposition(int n, int i, int j);
    /// Cycle c[0] -> c[1] -> ... -> c[0] on 1-based points.
    static Permutation cycle(int n, const std::vector<int> &one_based_cycle);
    static Permutation random(int n, std::mt19937_64 &rng);

    int size() const {
        return (int)images_.size();
    }
    /// 0-based image.
    int operator()(int i) const {
        return images_[i];
    }
    Permutation operator*(const Permutation &rhs) const;
    Permutation inverse() const;
    int sign() const;
    int num_cycles() const;
    /// Cycle lengths, sorted descending.
    std::vector<int> cycle_type() const;
    /// 0-based points that are moved.
    std::vector<int> support() const;
    bool is_identity() const;
    /// Bubble-sort word w with this == s_{w[0]} * s_{w[1]} * ... where s_i swaps
    /// the 0-based points i and i+1.
    std::vector<int> adjacent_word() const;
    std::vector<int> one_line() const;
    std::string str() const;

    bool operator==(const Permutation &other) const = default;
    bool operator<(const Permutation &other) const {
        return images_ < other.images_;
    }

   private:
    std::vector<int> images_;
};

/// All n! permutations in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace symcirc

#endif

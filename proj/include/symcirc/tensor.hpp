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

#ifndef SYMCIRC_TENSOR_HPP
#define SYMCIRC_TENSOR_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "symcirc/partitions.hpp"
#include "symcirc/permutation.hpp"

namespace symcirc {

/// Largest number of amplitudes any dense state may hold.
constexpr std::int64_t kMaxAmplitudes = std::int64_t{1} << 20;

/// Thrown when a request exceeds a size guard.
class SizeGuardError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A vector in (C^d)^{(x) m}. Slot 1 is the most significant digit of the index.
struct DenseState {
    int d = 0;
    int m = 0;
    Eigen::VectorXcd amp;

    static DenseState zero(int d, int m);
    /// Product state |digits[0] digits[1] ...>.
    static DenseState basis(int d, const std::vector<int> &digits);
    static DenseState random(int d, int m, std::mt19937_64 &rng);
    double norm() const {
        return amp.norm();
    }
    DenseState operator+(const DenseState &o) const;
    DenseState operator-(const DenseState &o) const;
    DenseState operator*(std::complex<double> s) const;
};

DenseState kron(const DenseState &a, const DenseState &b);
/// Moves the content of slot k to slot sigma(k).
DenseState apply_permutation(const DenseState &psi, const Permutation &sigma);
/// Applies a permutation of `slots.size()` qudits to the listed 1-based slots.
DenseState apply_permutation_on(const DenseState &psi, const Permutation &sigma, const std::vector<int> &slots);

/// A real linear combination of qudit permutations.
struct PermutationSum {
    int n = 0;
    std::vector<std::pair<double, Permutation>> terms;
    DenseState apply(const DenseState &psi, const std::vector<int> &slots) const;
    DenseState apply(const DenseState &psi) const;
    /// Dense d^n x d^n matrix.
    Eigen::MatrixXcd matrix(int d) const;
};

/// Symmetrizer ([3]), antisymmetrizer ([1,1,1]) or their complement ([2,1]) on
/// three 1-based slots.
DenseState three_qudit_projector(const DenseState &psi, const YoungDiagram &lambda, std::array<int, 3> triple);

/// (1/sqrt(m!)) sum_s sgn(s) P(s) |v_1 ... v_m>.
DenseState wedge_state(const std::vector<Eigen::VectorXcd> &vectors);
/// Wedge of computational basis vectors |digits[0]> ^ |digits[1]> ^ ...
DenseState wedge_basis(int d, const std::vector<int> &digits);

/// The two ancilla (state, operator) pairs: which = 1 uses (P12 - P13)/sqrt(3),
/// which = 2 uses (-2 P12 + 2 P23 + P_c - P_c^-1)/3 with P_c: |abc> -> |bca>.
PermutationSum ancilla_operator(int which);
DenseState ancilla_state(int which, int d);

struct AncillaReport {
    int which = 0;
    int d = 0;
    /// |Z eta - eta|.
    double eigen_residual = 0;
    /// Largest |Z Pi_[3] e| and |Z Pi_[1,1,1] e| over basis states e.
    double sym_residual = 0;
    double anti_residual = 0;
    /// Largest |Z^2 Pi_[2,1] e - Pi_[2,1] e| over basis states e.
    double square_residual = 0;
    bool passes = false;
};
AncillaReport verify_ancilla_pair(int which, int d);

struct WedgeReport {
    int d = 0;
    int m = 0;
    std::array<int, 3> triple{};
    /// Norm of Pi_lambda |eta> for [3], [2,1], [1,1,1].
    std::array<double, 3> weights{};
    /// Distance of Pi_lambda |eta> from its expected value (0 or |eta>).
    std::array<double, 3> residuals{};
    bool passes = false;
};
/// d = 4: (|0>^|1>^|2>^|3>)^{(x)2}; d = 3: (|0>^|1>)^{(x)2} (x) |00>. The
/// projectors act on the first three slots of the register.
WedgeReport verify_wedge_eigen(int d);

/// Isotypic projector (dim_M / n!) sum_s chi(s) P(s). Requires n <= 8 and
/// d^n <= 3^8.
class CentralProjector {
   public:
    CentralProjector(int n, int d, const YoungDiagram &lambda);
    DenseState apply(const DenseState &psi) const;
    /// Tr(Pi_lambda A) for an operator given entrywise.
    std::complex<double> trace_with(const std::function<std::complex<double>(std::int64_t, std::int64_t)> &entry) const;

   private:
    int n_;
    int d_;
    YoungDiagram lambda_;
    std::vector<std::pair<double, Permutation>> terms_;
};
DenseState central_projector(int n, int d, const YoungDiagram &lambda, const DenseState &psi);

struct CenterlessReport {
    int n_sys = 0;
    int d = 0;
    std::vector<std::pair<YoungDiagram, double>> sector_traces;
    double max_trace = 0;
    double max_commutator = 0;
    bool centerless_ok = false;
    bool invariant_ok = false;
    bool passes() const {
        return centerless_ok && invariant_ok;
    }
};
/// H~ = H (x) Z_1 on n_sys + 3 qudits (ancillas last). Checks Tr(Pi_lambda H~) = 0
/// for every sector and [H~, u^{(x)(n_sys+3)}] = 0 for 20 random u.
CenterlessReport verify_centerless_hamiltonian(int n_sys, int d, const Eigen::MatrixXcd &h, std::uint64_t seed = 7);

/// SWAP of two qudits as a d^2 x d^2 matrix.
Eigen::MatrixXcd swap_matrix(int d);

}  // namespace symcirc

#endif

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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "symcirc/blockops.hpp"
#include "symcirc/serialize.hpp"
#include "symcirc/tensor.hpp"

using namespace symcirc;

TEST(dense_state, permutation_moves_slot_contents) {
    auto psi = DenseState::basis(2, {1, 0, 0});
    auto c = Permutation::cycle(3, {1, 2, 3});
    EXPECT_LE((apply_permutation(psi, c) - DenseState::basis(2, {0, 1, 0})).norm(), 0.0);
    std::mt19937_64 rng(3);
    auto x = DenseState::random(3, 4, rng);
    for (int t = 0; t < 10; t++) {
        auto a = Permutation::random(4, rng);
        auto b = Permutation::random(4, rng);
        EXPECT_LE((apply_permutation(x, a * b) - apply_permutation(apply_permutation(x, b), a)).norm(), 1e-12);
    }
    auto y = apply_permutation_on(x, Permutation::transposition(2, 1, 2), {2, 4});
    EXPECT_LE((y - apply_permutation(x, Permutation::transposition(4, 2, 4))).norm(), 1e-12);
}

TEST(dense_state, size_guards) {
    EXPECT_THROW(DenseState::zero(2, 21), SizeGuardError);
    EXPECT_NO_THROW(DenseState::zero(2, 20));
    EXPECT_THROW(CentralProjector(9, 2, YoungDiagram({9})), SizeGuardError);
    EXPECT_THROW(CentralProjector(8, 4, YoungDiagram({8})), SizeGuardError);
    EXPECT_THROW(verify_centerless_hamiltonian(5, 2, Eigen::MatrixXcd::Identity(32, 32)), SizeGuardError);
}

TEST(dense_state, json_round_trip) {
    std::mt19937_64 rng(8);
    auto x = DenseState::random(3, 3, rng);
    auto y = dense_state_from_json(json::parse(to_json(x).dump()));
    EXPECT_EQ((x - y).norm(), 0.0);
}

TEST(wedge, antisymmetric_and_normalized) {
    auto w = wedge_basis(4, {0, 1, 2});
    EXPECT_NEAR(w.norm(), 1.0, 1e-12);
    auto s = apply_permutation(w, Permutation::transposition(3, 1, 3));
    EXPECT_LE((s + w).norm(), 1e-12);
    EXPECT_LE(wedge_basis(3, {1, 1}).norm(), 1e-12);
}

TEST(three_qudit, projectors_resolve_identity) {
    std::mt19937_64 rng(4);
    auto x = DenseState::random(3, 4, rng);
    DenseState sum = DenseState::zero(3, 4);
    for (const auto &lam : {YoungDiagram({3}), YoungDiagram({2, 1}), YoungDiagram({1, 1, 1})}) {
        auto p = three_qudit_projector(x, lam, {1, 3, 4});
        EXPECT_LE((three_qudit_projector(p, lam, {1, 3, 4}) - p).norm(), 1e-12);
        sum = sum + p;
    }
    EXPECT_LE((sum - x).norm(), 1e-12);
}

TEST(central_projector, resolves_identity_and_has_right_trace) {
    std::mt19937_64 rng(6);
    for (auto [n, d] : {std::pair{3, 3}, std::pair{4, 2}, std::pair{4, 3}, std::pair{5, 2}}) {
        auto x = DenseState::random(d, n, rng);
        DenseState sum = DenseState::zero(d, n);
        for (const auto &lam : enumerate_diagrams(n, d)) {
            CentralProjector p(n, d, lam);
            auto px = p.apply(x);
            EXPECT_LE((p.apply(px) - px).norm(), 1e-11);
            sum = sum + px;
            auto id = [](std::int64_t r, std::int64_t c) { return std::complex<double>(r == c ? 1 : 0); };
            EXPECT_NEAR(p.trace_with(id).real(), (double)(dim_Q(lam, d) * dim_M(lam)), 1e-9);
        }
        EXPECT_LE((sum - x).norm(), 1e-11);
    }
}

TEST(central_projector, missing_sector_is_zero) {
    std::mt19937_64 rng(1);
    auto x = DenseState::random(2, 3, rng);
    EXPECT_LE(CentralProjector(3, 2, YoungDiagram({1, 1, 1})).apply(x).norm(), 1e-12);
}

TEST(cross_check, dense_and_block_sector_traces_agree) {
    // Tr(Pi_lambda P(s)) on the dense space equals dim_Q * Tr(block) of P(s).
    std::mt19937_64 rng(12);
    for (auto [n, d] : {std::pair{3, 3}, std::pair{4, 3}, std::pair{5, 2}}) {
        for (int t = 0; t < 4; t++) {
            auto s = Permutation::random(n, rng);
            PermutationSum ps{n, {{1.0, s}}};
            Eigen::MatrixXcd dense = ps.matrix(d);
            auto entry = [&](std::int64_t r, std::int64_t c) { return dense(r, c); };
            BlockOperator block = embed_permutation(n, d, s);
            for (const auto &lam : enumerate_diagrams(n, d)) {
                CentralProjector p(n, d, lam);
                std::complex<double> expect = (double)dim_Q(lam, d) * block.block(lam).trace();
                EXPECT_LE(std::abs(p.trace_with(entry) - expect), 1e-9) << lam.str() << " " << s.str();
            }
            EXPECT_NEAR(dense.trace().real(), weighted_trace(block).real(), 1e-9);
        }
    }
}

TEST(cross_check, permutations_span_the_invariant_algebra_when_d_is_small) {
    // With fewer levels than qudits the permutation operators are linearly
    // dependent, but they still span sum m^2 dimensions, the size of the blocks.
    for (auto [n, d] : {std::pair{4, 2}, std::pair{3, 2}, std::pair{4, 3}}) {
        auto perms = all_permutations(n);
        std::int64_t dim = 1;
        for (int i = 0; i < n; i++) {
            dim *= d;
        }
        Eigen::MatrixXcd vecs(dim * dim, perms.size());
        for (std::size_t i = 0; i < perms.size(); i++) {
            Eigen::MatrixXcd m = PermutationSum{n, {{1.0, perms[i]}}}.matrix(d);
            vecs.col(i) = Eigen::Map<Eigen::VectorXcd>(m.data(), m.size());
        }
        Eigen::FullPivLU<Eigen::MatrixXcd> lu(vecs);
        lu.setThreshold(1e-10);
        EXPECT_EQ(lu.rank(), SectorLayout::schur_weyl(n, d)->real_dim()) << n << " " << d;
    }
}

TEST(ancilla, both_pairs_pass) {
    for (int which : {1, 2}) {
        for (int d : {2, 3, 4}) {
            auto r = verify_ancilla_pair(which, d);
            EXPECT_TRUE(r.passes) << which << " " << d;
            EXPECT_LE(r.eigen_residual, 1e-10);
            EXPECT_LE(r.sym_residual, 1e-10);
            EXPECT_LE(r.anti_residual, 1e-10);
            EXPECT_LE(r.square_residual, 1e-10);
        }
    }
}

TEST(ancilla, wedge_eigen_equations) {
    auto four = verify_wedge_eigen(4);
    EXPECT_TRUE(four.passes);
    EXPECT_EQ(four.m, 8);
    auto three = verify_wedge_eigen(3);
    EXPECT_TRUE(three.passes);
    EXPECT_THROW(verify_wedge_eigen(5), std::invalid_argument);
}

TEST(ancilla, centerless_hamiltonians) {
    for (int d : {2, 3}) {
        auto one = verify_centerless_hamiltonian(1, d, Eigen::MatrixXcd::Identity(d, d));
        EXPECT_TRUE(one.centerless_ok) << d;
        EXPECT_TRUE(one.invariant_ok) << d;
        auto two = verify_centerless_hamiltonian(2, d, swap_matrix(d));
        EXPECT_TRUE(two.passes()) << d;
        EXPECT_LE(two.max_trace, 1e-9);
    }
}

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

#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "symcirc/liealg.hpp"
#include "symcirc/random.hpp"

using namespace symcirc;

namespace {

LieBasis local_closure(int n, int d, int k, double tol = kDefaultTol) {
    return closure(local_generators(n, d, k), tol);
}

}  // namespace

TEST(coords, round_trip_and_inner_product) {
    auto lay = SectorLayout::schur_weyl(4, 3);
    std::mt19937_64 rng(1);
    BlockOperator a(lay), b(lay);
    for (int i = 0; i < lay->size(); i++) {
        int m = (*lay)[i].dim;
        Eigen::MatrixXcd g = random_ginibre(m, m, rng);
        a.block(i) = g - g.adjoint();
        g = random_ginibre(m, m, rng);
        b.block(i) = g - g.adjoint();
    }
    Eigen::VectorXd va = lie_coords(a);
    EXPECT_EQ(va.size(), lay->real_dim());
    EXPECT_LE((from_lie_coords(lay, va) - a).max_abs(), 1e-13);
    EXPECT_NEAR(va.dot(lie_coords(b)), inner(a, b).real(), 1e-10);
}

TEST(closure, known_dimensions) {
    EXPECT_EQ(local_closure(3, 2, 2).dim(), 5);
    EXPECT_EQ(local_closure(3, 3, 2).dim(), 5);
    EXPECT_EQ(local_closure(3, 3, 3).dim(), 6);
    EXPECT_EQ(local_closure(4, 4, 2).dim(), 13);
    EXPECT_EQ(local_closure(4, 4, 3).dim(), 22);
    EXPECT_EQ(local_closure(5, 3, 3).dim(), 101);
}

TEST(closure, basis_is_orthonormal_and_closed) {
    auto b = local_closure(4, 3, 2);
    EXPECT_TRUE(b.closed);
    Eigen::MatrixXd g = b.coords.transpose() * b.coords;
    EXPECT_LE((g - Eigen::MatrixXd::Identity(b.dim(), b.dim())).cwiseAbs().maxCoeff(), 1e-10);
    for (int i = 0; i < b.dim(); i++) {
        for (int j = 0; j < i; j++) {
            EXPECT_LT(span_residual(b, commutator(b.elements[i], b.elements[j])), 1e-8);
        }
    }
}

TEST(closure, cap_marks_unclosed) {
    auto b = closure(local_generators(4, 4, 2), kDefaultTol, 8);
    EXPECT_FALSE(b.closed);
    EXPECT_LE(b.dim(), 8);
}

TEST(closure, rejects_bad_generators) {
    EXPECT_THROW(closure({}), std::invalid_argument);
    auto lay = SectorLayout::schur_weyl(3, 2);
    EXPECT_THROW(closure({BlockOperator::identity(lay)}), std::invalid_argument);
    auto a = local_generators(3, 2, 2);
    auto b = local_generators(3, 3, 2);
    EXPECT_THROW(closure({a[0], b[0]}), std::invalid_argument);
}

TEST(closure, independent_of_thread_count) {
    auto gens = local_generators(5, 3, 2);
    setenv("SYMCIRC_THREADS", "1", 1);
    auto one = closure(gens);
    setenv("SYMCIRC_THREADS", "3", 1);
    auto three = closure(gens);
    unsetenv("SYMCIRC_THREADS");
    ASSERT_EQ(one.dim(), three.dim());
    EXPECT_EQ((one.coords - three.coords).cwiseAbs().maxCoeff(), 0.0);
}

TEST(closure, span_does_not_depend_on_generator_order) {
    auto gens = local_generators(4, 3, 3);
    auto a = closure(gens);
    std::reverse(gens.begin(), gens.end());
    auto b = closure(gens);
    EXPECT_TRUE(same_span(a, b, 1e-8));
    EXPECT_FALSE(same_span(a, local_closure(4, 3, 2), 1e-8));
}

TEST(structure, center_and_derived_of_four_qudit_two_local) {
    auto b = local_closure(4, 4, 2);
    EXPECT_EQ(center(b).dim(), 2);
    EXPECT_EQ(derived_dimension(b), 11);
    EXPECT_EQ(derived_algebra(b).dim(), 11);
}

TEST(conditions, su_m_in_every_block_for_three_local) {
    auto b = local_closure(4, 3, 3);
    for (int i = 0; i < b.layout->size(); i++) {
        auto r = check_condition_A(b, i);
        EXPECT_TRUE(r.holds) << r.shape.str();
        EXPECT_EQ(r.rank, r.m * r.m - 1);
    }
    auto pair = check_condition_B(b, YoungDiagram({3, 1}), YoungDiagram({2, 1, 1}));
    EXPECT_FALSE(pair.trivial);
    EXPECT_TRUE(pair.independent);
    EXPECT_EQ(pair.rank, 16);
}

TEST(conditions, two_local_four_qudit_pair_is_correlated) {
    auto b = local_closure(4, 3, 2);
    auto pair = check_condition_B(b, YoungDiagram({3, 1}), YoungDiagram({2, 1, 1}));
    EXPECT_FALSE(pair.independent);
    EXPECT_EQ(pair.rank, 8);
    EXPECT_NEAR(pair.witness_trace_a, pair.witness_trace_b, 1e-9);
    auto c = find_correlation(b, YoungDiagram({3, 1}), YoungDiagram({2, 1, 1}));
    EXPECT_LT(c.residual, 1e-8);
    EXPECT_TRUE(c.conjugated);
    EXPECT_LE((c.W * c.W.adjoint() - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_TRUE(check_condition_B(b, YoungDiagram({4}), YoungDiagram({2, 2})).trivial);

    // W is the twisted intertwiner up to a phase.
    Eigen::MatrixXcd j = find_twisted_intertwiner(YoungDiagram({3, 1}), YoungDiagram({2, 1, 1})).J.cast<cd>();
    cd overlap = (j.adjoint() * c.W).trace();
    Eigen::MatrixXcd aligned = j * (overlap / std::abs(overlap));
    EXPECT_LE((c.W - aligned).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(structure, center_examples) {
    auto lay = SectorLayout::schur_weyl(4, 3);
    auto abelian = closure({BlockOperator::identity(lay) * cd(0, 1)});
    EXPECT_EQ(abelian.dim(), 1);
    EXPECT_EQ(center(abelian).dim(), 1);
    EXPECT_EQ(center(local_closure(4, 3, 3)).dim(), 3);
    EXPECT_EQ(center(local_closure(5, 3, 2)).dim(), 2);
}

TEST(conditions, so6_signature_is_tolerance_stable) {
    for (double tol : {1e-10, 1e-9, 1e-8}) {
        auto b = local_closure(5, 4, 2, tol);
        auto r = check_condition_A(b, YoungDiagram({3, 1, 1}));
        EXPECT_EQ(r.rank, 15) << tol;
        EXPECT_FALSE(r.holds);
        EXPECT_EQ(projected_rank(b, std::vector<YoungDiagram>{YoungDiagram({3, 1, 1})}, true), 15);
    }
}

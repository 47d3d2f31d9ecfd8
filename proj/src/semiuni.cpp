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

#include "symcirc/semiuni.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "symcirc/random.hpp"

namespace symcirc {

namespace {

double phase_of(cd z) {
    return std::arg(z);
}

}  // namespace

std::string PairEntry::status() const {
    if (inconsistent) {
        return "inconsistent";
    }
    if (result.trivial) {
        return "trivial";
    }
    return result.independent ? "independent" : "correlated";
}

SemiReport semiuniversality_report(const LieBasis &basis, int k, const SemiOptions &opts) {
    const auto &lay = *basis.layout;
    SemiReport rep;
    rep.n = lay.n();
    rep.d = lay.d();
    rep.k = k;
    rep.tol = basis.tol;
    rep.closed = basis.closed;
    rep.dim = basis.dim();
    rep.ambient_dim = lay.real_dim();
    rep.expected_dim = 0;
    for (const auto &s : lay.sectors()) {
        rep.expected_dim += s.dim * s.dim - 1;
    }
    rep.expected_dim += (int)count_diagrams(k, rep.d);

    bool all_a = true;
    for (int i = 0; i < lay.size(); i++) {
        rep.sectors.push_back(check_condition_A(basis, i));
        all_a &= rep.sectors.back().holds;
    }
    bool all_b = true;
    for (int a = 0; a < lay.size(); a++) {
        for (int b = a + 1; b < lay.size(); b++) {
            if (lay[a].dim != lay[b].dim || lay[a].dim == 1) {
                continue;
            }
            if (!rep.sectors[a].holds || !rep.sectors[b].holds) {
                rep.notes.push_back("pair " + lay[a].shape.str() + "," + lay[b].shape.str() +
                                    " not tested: condition A fails in one sector");
                continue;
            }
            PairEntry entry;
            try {
                entry.result = check_condition_B(basis, a, b, opts.seed);
            } catch (const InconsistentRankError &e) {
                entry.result.sector_a = a;
                entry.result.sector_b = b;
                entry.result.shape_a = lay[a].shape;
                entry.result.shape_b = lay[b].shape;
                entry.result.m_a = entry.result.m_b = lay[a].dim;
                entry.result.rank = e.rank;
                entry.result.independent = false;
                entry.inconsistent = true;
                rep.notes.push_back(e.what());
            }
            all_b &= entry.result.independent;
            if (!entry.result.independent && !entry.inconsistent && opts.with_correlations) {
                try {
                    rep.correlations.push_back({lay[a].shape, lay[b].shape, find_correlation(basis, a, b)});
                } catch (const std::runtime_error &e) {
                    rep.notes.push_back(e.what());
                }
            }
            rep.pairs.push_back(std::move(entry));
        }
    }
    rep.verdict = all_a && all_b;
    if (!rep.closed) {
        rep.notes.push_back("closure truncated at max_dim; verdict unreliable");
    }
    if (opts.with_center) {
        rep.center_dim = center(basis).dim();
    }
    if (opts.with_derived) {
        rep.derived_dim = derived_dimension(basis);
    }
    if (rep.verdict && rep.dim != rep.expected_dim) {
        rep.notes.push_back("semi-universal but closure dimension " + std::to_string(rep.dim) +
                            " differs from expected " + std::to_string(rep.expected_dim));
    }
    return rep;
}

SemiReport check_semiuniversality(int n, int d, int k, const SemiOptions &opts) {
    if (k < 2 || k > n) {
        throw std::invalid_argument("check_semiuniversality requires 2 <= k <= n");
    }
    auto basis = closure(local_generators(n, d, k), opts.tol, opts.max_dim);
    return semiuniversality_report(basis, k, opts);
}

VdetReport classify_three_qudit_unitary(const BlockOperator &v) {
    const auto &lay = *v.layout();
    if (!lay.is_schur_weyl() || lay.n() != 3) {
        throw std::invalid_argument("determinant test needs a three-qudit block operator");
    }
    if (!v.is_unitary(1e-10)) {
        throw std::invalid_argument("determinant test needs unitary blocks");
    }
    VdetReport rep;
    rep.d = lay.d();
    rep.det_sym = v.block(YoungDiagram({3})).determinant();
    rep.det_mixed = v.block(YoungDiagram({2, 1})).determinant();
    if (lay.d() == 2) {
        rep.trivial = true;
        rep.in_v2 = true;
        rep.det_anti = 1.0;
        rep.note = "condition holds trivially for d = 2 (no [1,1,1] sector)";
        return rep;
    }
    rep.det_anti = v.block(YoungDiagram({1, 1, 1})).determinant();
    for (cd z : {rep.det_sym, rep.det_mixed, rep.det_anti}) {
        if (std::abs(std::abs(z) - 1.0) > 1e-8) {
            throw std::runtime_error("determinant of a unitary block is not unimodular");
        }
    }
    rep.phase_gap = phase_of(rep.det_mixed / (rep.det_sym * rep.det_anti));
    rep.in_v2 = std::abs(rep.phase_gap) <= 1e-8;
    return rep;
}

TraceTestReport hamiltonian_in_v23(const BlockOperator &h) {
    const auto &lay = *h.layout();
    if (!lay.is_schur_weyl() || lay.n() != 3) {
        throw std::invalid_argument("trace test needs a three-qudit block operator");
    }
    if (!h.is_hermitian(1e-10 * (1.0 + h.max_abs()))) {
        throw std::invalid_argument("trace test needs a Hermitian operator");
    }
    BlockOperator c = C_operator(lay.d());
    if (c.layout() != h.layout()) {
        throw std::invalid_argument("operator must use the standard three-qudit layout");
    }
    TraceTestReport rep;
    rep.trace_hc = std::abs(weighted_trace(h * c));
    rep.bound = 1e-8 * h.norm() * c.norm();
    rep.in_v2 = rep.trace_hc <= rep.bound;
    return rep;
}

GateReport gate_breaks_constraint(const BlockOperator &y) {
    const auto &lay = *y.layout();
    if (!lay.is_schur_weyl() || lay.n() != 4 || lay.d() < 3) {
        throw std::invalid_argument("gate test needs a four-qudit block operator with d >= 3");
    }
    if (!y.is_unitary(1e-10)) {
        throw std::invalid_argument("gate test needs unitary blocks");
    }
    YoungDiagram s31({3, 1});
    YoungDiagram s211({2, 1, 1});
    Eigen::MatrixXcd j = find_twisted_intertwiner(s31, s211).J.cast<cd>();
    Eigen::MatrixXcd y1 = y.block(s31);
    Eigen::MatrixXcd y2c = y.block(s211).conjugate();
    Eigen::MatrixXcd m = j * y1 * j.transpose();
    cd overlap = (y2c.adjoint() * m).trace();
    double d2 = m.squaredNorm() + y2c.squaredNorm() - 2.0 * std::abs(overlap);
    GateReport rep;
    rep.min_distance = std::sqrt(std::max(0.0, d2));
    rep.optimal_phase = std::abs(overlap) > 0 ? std::arg(overlap) : 0.0;
    rep.threshold = 1e-8 * std::sqrt((double)m.rows());
    rep.breaks = rep.min_distance > rep.threshold;
    rep.trace_31 = std::abs(y1.trace());
    rep.trace_211 = std::abs(y.block(s211).trace());
    rep.trace_test_breaks = std::abs(rep.trace_31 - rep.trace_211) > 1e-10;
    return rep;
}

std::vector<GapRow> gap_audit(const std::vector<int> &ns, int d, int k, double tol) {
    if (k < 3) {
        throw std::invalid_argument("formula requires semi-universality (k >= 3)");
    }
    std::vector<GapRow> rows;
    for (int n : ns) {
        GapRow row;
        row.n = n;
        auto lay = SectorLayout::schur_weyl(n, d);
        row.full_dim = lay->real_dim();
        row.gap = gap(n, k, d);
        row.expected_dim = row.full_dim - row.gap.convert_to<int>();
        row.closure_dim = closure(local_generators(n, d, k), tol).dim();
        row.matches = row.closure_dim == row.expected_dim;
        row.proper_ok = !(k < n && d >= 3) || row.gap > 0;
        rows.push_back(std::move(row));
    }
    return rows;
}

int commutant_dimension(const std::vector<Eigen::MatrixXcd> &ops) {
    if (ops.empty()) {
        throw std::invalid_argument("commutant of an empty set");
    }
    int m = (int)ops[0].rows();
    Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m, m);
    Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(m * m, m * m);
    Eigen::MatrixXcd L(m * m, m * m);
    for (const auto &g : ops) {
        // vec(X g - g X) = (g^T kron I - I kron g) vec X.
        for (int r = 0; r < m; r++) {
            for (int c = 0; c < m; c++) {
                L.block(r * m, c * m, m, m) = g(c, r) * id;
                if (r == c) {
                    L.block(r * m, c * m, m, m) -= g;
                }
            }
        }
        gram.noalias() += L.adjoint() * L;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
    double top = std::max(1.0, eig.eigenvalues().maxCoeff());
    int k = 0;
    for (int i = 0; i < m * m; i++) {
        k += eig.eigenvalues()(i) <= 1e-10 * top ? 1 : 0;
    }
    return k;
}

ExtensionReport validate_irreducible_extension(int dim_sub, int dim_full, std::uint64_t seed) {
    if (dim_sub < 2 || dim_full <= dim_sub) {
        throw std::invalid_argument("irreducible extension requires 2 <= dim_sub < dim_full");
    }
    ExtensionReport rep;
    rep.dim_sub = dim_sub;
    rep.dim_full = dim_full;
    rep.expected_dim = dim_full * dim_full - 1;
    auto lay = SectorLayout::custom({dim_full}, {1.0});
    std::vector<BlockOperator> sub;
    for (int j = 0; j < dim_sub; j++) {
        for (int k = j + 1; k < dim_sub; k++) {
            BlockOperator x(lay);
            x.block(0)(j, k) = 1.0;
            x.block(0)(k, j) = -1.0;
            sub.push_back(x);
            BlockOperator y(lay);
            y.block(0)(j, k) = cd(0, 1);
            y.block(0)(k, j) = cd(0, 1);
            sub.push_back(y);
        }
        if (j + 1 < dim_sub) {
            BlockOperator h(lay);
            h.block(0)(j, j) = cd(0, 1);
            h.block(0)(j + 1, j + 1) = cd(0, -1);
            sub.push_back(h);
        }
    }
    std::mt19937_64 rng(seed);
    for (rep.attempts = 1; rep.attempts <= 10; rep.attempts++) {
        Eigen::MatrixXcd g = random_ginibre(dim_full, dim_full, rng);
        Eigen::MatrixXcd a = 0.5 * (g - g.adjoint());
        a.diagonal().array() -= a.trace() / (double)dim_full;
        BlockOperator extra(lay);
        extra.block(0) = a;
        auto gens = sub;
        gens.push_back(extra);
        auto basis = closure(gens);
        std::vector<Eigen::MatrixXcd> mats;
        for (const auto &e : basis.elements) {
            mats.push_back(e.block(0));
        }
        rep.irreducible = commutant_dimension(mats) == 1;
        rep.closure_dim = basis.dim();
        if (rep.irreducible) {
            rep.holds = rep.closure_dim == rep.expected_dim;
            return rep;
        }
    }
    rep.attempts = 10;
    rep.holds = false;
    return rep;
}

}  // namespace symcirc

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

#include "symcirc/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "symcirc/random.hpp"

namespace symcirc {

namespace {

const double SQRT2 = std::numbers::sqrt2;

std::vector<int> block_offsets(const SectorLayout &lay) {
    std::vector<int> off(lay.size() + 1, 0);
    for (int i = 0; i < lay.size(); i++) {
        off[i + 1] = off[i] + lay[i].dim * lay[i].dim;
    }
    return off;
}

// Writes lie_coords of (P - P^dagger) for block i into out[off..].
void write_block_coords_of_skew_part(const Eigen::MatrixXcd &p, double s, double *out) {
    int m = (int)p.rows();
    int q = 0;
    for (int j = 0; j < m; j++) {
        out[q++] = s * 2.0 * p(j, j).imag();
    }
    for (int j = 0; j < m; j++) {
        for (int k = j + 1; k < m; k++) {
            cd c = p(j, k) - std::conj(p(k, j));
            out[q++] = s * SQRT2 * c.real();
            out[q++] = s * SQRT2 * c.imag();
        }
    }
}

// lie_coords([a, b]) for anti-Hermitian a, b: [a, b] = ab - (ab)^dagger.
void commutator_coords(const BlockOperator &a, const BlockOperator &b, const std::vector<int> &off,
                       double *out) {
    const auto &lay = *a.layout();
    Eigen::MatrixXcd p;
    for (int i = 0; i < lay.size(); i++) {
        if (lay[i].dim == 1) {
            out[off[i]] = 0.0;
            continue;
        }
        p.noalias() = a.block(i) * b.block(i);
        write_block_coords_of_skew_part(p, std::sqrt(lay[i].weight), out + off[i]);
    }
}

template <typename F>
void parallel_for(int count, F f) {
    int threads = std::min(thread_cap(), count / 8);
    if (threads <= 1) {
        for (int j = 0; j < count; j++) {
            f(j);
        }
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) {
        pool.emplace_back([&, t]() {
            for (int j = t; j < count; j += threads) {
                f(j);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

// Growing orthonormal column set.
struct Span {
    Eigen::MatrixXd Q;
    int r = 0;

    explicit Span(int n) : Q(n, n) {
    }

    // v must already be orthogonal to columns [0, r0). Returns true if added.
    bool add_projected(Eigen::VectorXd v, int r0, double thresh) {
        if (r == Q.cols()) {
            return false;
        }
        if (r > r0) {
            auto fresh = Q.middleCols(r0, r - r0);
            v -= fresh * (fresh.transpose() * v);
        }
        if (v.norm() <= thresh) {
            return false;
        }
        auto all = Q.leftCols(r);
        v -= all * (all.transpose() * v);
        double nv = v.norm();
        if (nv <= thresh) {
            return false;
        }
        Q.col(r++) = v / nv;
        return true;
    }

    bool add(const Eigen::VectorXd &v, double thresh) {
        return add_projected(v, 0, thresh);
    }
};

// Projects the batch columns against the current span, then inserts them in order.
// Returns the number of accepted columns; stops early once the span reaches `stop_at`.
template <typename OnAdd>
int insert_batch(Span &span, Eigen::MatrixXd &batch, double thresh, int stop_at, OnAdd on_add) {
    int r0 = span.r;
    if (r0 > 0) {
        auto q = span.Q.leftCols(r0);
        Eigen::MatrixXd coef = q.transpose() * batch;
        batch.noalias() -= q * coef;
    }
    int added = 0;
    for (int j = 0; j < batch.cols(); j++) {
        if (span.r >= stop_at) {
            break;
        }
        if (span.add_projected(batch.col(j), r0, thresh)) {
            added++;
            on_add(span.r - 1);
        }
    }
    return added;
}

void require_anti_hermitian(const BlockOperator &g) {
    if (!g.is_anti_hermitian(1e-10 * (1.0 + g.max_abs()))) {
        throw std::invalid_argument("closure generators must be anti-Hermitian");
    }
}

LieBasis basis_from_span(const LayoutPtr &layout, const Span &span, double tol) {
    LieBasis out;
    out.layout = layout;
    out.tol = tol;
    out.coords = span.Q.leftCols(span.r);
    for (int k = 0; k < span.r; k++) {
        out.elements.push_back(from_lie_coords(layout, out.coords.col(k)));
    }
    return out;
}

Eigen::MatrixXd restricted_rows(const LieBasis &basis, const std::vector<int> &sectors, bool traceless_only) {
    const auto &lay = *basis.layout;
    auto off = block_offsets(lay);
    int rows = 0;
    for (int s : sectors) {
        if (s < 0 || s >= lay.size()) {
            throw std::invalid_argument("sector index out of range");
        }
        rows += lay[s].dim * lay[s].dim;
    }
    Eigen::MatrixXd out(rows, basis.dim());
    int p = 0;
    for (int s : sectors) {
        int m = lay[s].dim;
        auto blk = out.middleRows(p, m * m);
        blk = basis.coords.middleRows(off[s], m * m);
        if (traceless_only) {
            Eigen::RowVectorXd mean = blk.topRows(m).colwise().mean();
            blk.topRows(m).rowwise() -= mean;
        }
        p += m * m;
    }
    return out;
}

int numeric_rank(const Eigen::MatrixXd &a, double thresh) {
    if (a.rows() == 0 || a.cols() == 0) {
        return 0;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    const auto &s = svd.singularValues();
    int r = 0;
    for (int k = 0; k < s.size(); k++) {
        r += s(k) > thresh ? 1 : 0;
    }
    return r;
}

Eigen::MatrixXcd traceless(const Eigen::MatrixXcd &a) {
    Eigen::MatrixXcd out = a;
    cd t = a.trace() / (double)a.rows();
    out.diagonal().array() -= t;
    return out;
}

}  // namespace

int thread_cap() {
    if (const char *env = std::getenv("SYMCIRC_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) {
            return v;
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

Eigen::VectorXd lie_coords(const BlockOperator &a) {
    const auto &lay = *a.layout();
    auto off = block_offsets(lay);
    Eigen::VectorXd v(off.back());
    for (int i = 0; i < lay.size(); i++) {
        // Anti-Hermitian part (A - A^dagger)/2 is the skew part of P = A/2.
        write_block_coords_of_skew_part(a.block(i) * 0.5, std::sqrt(lay[i].weight), v.data() + off[i]);
    }
    return v;
}

BlockOperator from_lie_coords(const LayoutPtr &layout, const Eigen::VectorXd &v) {
    auto off = block_offsets(*layout);
    if (v.size() != off.back()) {
        throw std::invalid_argument("coordinate vector has the wrong length");
    }
    BlockOperator out(layout);
    for (int i = 0; i < layout->size(); i++) {
        int m = (*layout)[i].dim;
        double s = std::sqrt((*layout)[i].weight);
        auto &b = out.block(i);
        int q = off[i];
        for (int j = 0; j < m; j++) {
            b(j, j) = cd(0.0, v(q++) / s);
        }
        for (int j = 0; j < m; j++) {
            for (int k = j + 1; k < m; k++) {
                double re = v(q++);
                double im = v(q++);
                b(j, k) = cd(re, im) / (SQRT2 * s);
                b(k, j) = -std::conj(b(j, k));
            }
        }
    }
    return out;
}

LieBasis closure(const std::vector<BlockOperator> &generators, double tol, int max_dim) {
    if (generators.empty()) {
        throw std::invalid_argument("closure needs at least one generator");
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("closure tolerance must be positive");
    }
    LayoutPtr layout = generators[0].layout();
    for (const auto &g : generators) {
        if (g.layout() != layout) {
            throw std::invalid_argument("closure generators live on different layouts");
        }
        require_anti_hermitian(g);
    }
    const int N = layout->real_dim();
    const int cap = max_dim > 0 ? std::min(max_dim, N) : N;
    auto off = block_offsets(*layout);

    Span span(N);
    std::vector<BlockOperator> elems;
    auto on_add = [&](int k) { elems.push_back(from_lie_coords(layout, span.Q.col(k))); };

    bool truncated = false;
    for (const auto &g : generators) {
        Eigen::VectorXd v = lie_coords(g);
        double scale = v.norm();
        if (scale == 0) {
            continue;
        }
        int before = span.r;
        if (span.add(v, tol * scale)) {
            on_add(span.r - 1);
        }
        if (span.r > cap) {
            truncated = true;
            span.r = before;
            elems.pop_back();
            break;
        }
    }
    int seed_count = span.r;

    Eigen::MatrixXd batch;
    for (int i = 0; !truncated && i < span.r && span.r < N; i++) {
        if (i == 0) {
            continue;
        }
        batch.resize(N, i);
        parallel_for(i, [&](int j) { commutator_coords(elems[i], elems[j], off, batch.col(j).data()); });
        // Elements are unit norm, so the relative threshold tol * |e_i| |e_j| is tol.
        insert_batch(span, batch, tol, cap + 1, on_add);
        if (span.r > cap) {
            truncated = true;
            span.r = cap;
            elems.resize(cap);
        }
    }

    LieBasis out;
    out.layout = layout;
    out.tol = tol;
    out.coords = span.Q.leftCols(span.r);
    out.elements = std::move(elems);
    out.closed = !truncated;
    out.seed_count = seed_count;
    return out;
}

double span_residual(const LieBasis &basis, const BlockOperator &a) {
    Eigen::VectorXd v = lie_coords(a);
    if (basis.dim() > 0) {
        v -= basis.coords * (basis.coords.transpose() * v);
        v -= basis.coords * (basis.coords.transpose() * v);
    }
    // Non-anti-Hermitian content is never in the span.
    BlockOperator herm = (a + a.adjoint()) * cd(0.5);
    return std::sqrt(v.squaredNorm() + std::pow(herm.norm(), 2));
}

bool same_span(const LieBasis &a, const LieBasis &b, double tol) {
    if (a.dim() != b.dim()) {
        return false;
    }
    for (const auto &e : a.elements) {
        if (span_residual(b, e) > tol) {
            return false;
        }
    }
    for (const auto &e : b.elements) {
        if (span_residual(a, e) > tol) {
            return false;
        }
    }
    return true;
}

int projected_rank(const LieBasis &basis, const std::vector<int> &sectors, bool traceless_only) {
    double thresh = basis.tol * std::sqrt((double)basis.ambient_dim());
    return numeric_rank(restricted_rows(basis, sectors, traceless_only), thresh);
}

int projected_rank(const LieBasis &basis, const std::vector<YoungDiagram> &sectors, bool traceless_only) {
    std::vector<int> idx;
    for (const auto &s : sectors) {
        idx.push_back(basis.layout->index_of(s));
    }
    return projected_rank(basis, idx, traceless_only);
}

ConditionAResult check_condition_A(const LieBasis &basis, int sector) {
    ConditionAResult out;
    out.sector = sector;
    out.shape = (*basis.layout)[sector].shape;
    out.m = (*basis.layout)[sector].dim;
    out.required = out.m * out.m - 1;
    out.rank = out.m == 1 ? 0 : projected_rank(basis, std::vector<int>{sector}, true);
    out.holds = out.rank >= out.required;
    return out;
}

ConditionAResult check_condition_A(const LieBasis &basis, const YoungDiagram &shape) {
    return check_condition_A(basis, basis.layout->index_of(shape));
}

ConditionBResult check_condition_B(const LieBasis &basis, int a, int b, std::uint64_t seed) {
    if (a == b) {
        throw std::invalid_argument("condition B needs two distinct sectors");
    }
    const auto &lay = *basis.layout;
    ConditionBResult out;
    out.sector_a = a;
    out.sector_b = b;
    out.shape_a = lay[a].shape;
    out.shape_b = lay[b].shape;
    out.m_a = lay[a].dim;
    out.m_b = lay[b].dim;

    if (basis.dim() > 0) {
        std::mt19937_64 rng(seed);
        Eigen::VectorXd g(basis.dim());
        for (int k = 0; k < g.size(); k++) {
            g(k) = gaussian(rng);
        }
        BlockOperator x = from_lie_coords(basis.layout, basis.coords * g);
        BlockOperator v = exp_anti_hermitian(x);
        out.witness_trace_a = std::abs(v.block(a).trace());
        out.witness_trace_b = std::abs(v.block(b).trace());
    } else {
        out.witness_trace_a = out.m_a;
        out.witness_trace_b = out.m_b;
    }

    if (out.m_a != out.m_b || out.m_a == 1) {
        out.trivial = true;
        out.independent = true;
        return out;
    }
    int m = out.m_a;
    int full = m * m - 1;
    out.rank = projected_rank(basis, std::vector<int>{a, b}, true);
    if (out.rank == 2 * full) {
        out.independent = true;
    } else if (out.rank == full) {
        out.independent = false;
    } else {
        throw InconsistentRankError(out.rank, m,
                                    "inconsistent pair rank " + std::to_string(out.rank) + " for sectors " +
                                        out.shape_a.str() + ", " + out.shape_b.str() + " (m = " +
                                        std::to_string(m) + "); expected " + std::to_string(full) + " or " +
                                        std::to_string(2 * full));
    }
    return out;
}

ConditionBResult check_condition_B(const LieBasis &basis, const YoungDiagram &a, const YoungDiagram &b,
                                   std::uint64_t seed) {
    return check_condition_B(basis, basis.layout->index_of(a), basis.layout->index_of(b), seed);
}

Correlation find_correlation(const LieBasis &basis, int a, int b) {
    const auto &lay = *basis.layout;
    int m = lay[a].dim;
    if (lay[b].dim != m) {
        throw std::invalid_argument("correlated sectors must have equal dimension");
    }
    int nseed = std::max(1, std::min(basis.seed_count, basis.dim()));
    if (basis.dim() == 0) {
        throw std::runtime_error("empty basis has no correlation data");
    }
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(m, m);

    auto solve = [&](bool conj) -> Correlation {
        // W X_a' = X_b W with X_a' = X_a or conj(X_a); column-major vec:
        // (I kron X_b - X_a'^T kron I) vec W = 0.
        Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(m * m, m * m);
        Eigen::MatrixXcd L(m * m, m * m);
        for (int e = 0; e < nseed; e++) {
            Eigen::MatrixXcd xa = traceless(basis.elements[e].block(a));
            Eigen::MatrixXcd xb = traceless(basis.elements[e].block(b));
            if (conj) {
                xa = xa.conjugate().eval();
            }
            for (int r = 0; r < m; r++) {
                for (int c = 0; c < m; c++) {
                    L.block(r * m, c * m, m, m) = -xa(c, r) * I;
                    if (r == c) {
                        L.block(r * m, c * m, m, m) += xb;
                    }
                }
            }
            gram.noalias() += L.adjoint() * L;
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram);
        Eigen::VectorXcd w = eig.eigenvectors().col(0);
        Correlation c;
        c.conjugated = conj;
        c.W = Eigen::Map<Eigen::MatrixXcd>(w.data(), m, m);
        c.W *= std::sqrt((double)m) / c.W.norm();
        for (int r = 0, done = 0; r < m && !done; r++) {
            for (int k = 0; k < m; k++) {
                if (std::abs(c.W(r, k)) > 1e-8) {
                    c.W *= std::abs(c.W(r, k)) / c.W(r, k);
                    done = 1;
                    break;
                }
            }
        }
        double res = (c.W * c.W.adjoint() - I).cwiseAbs().maxCoeff();
        for (const auto &e : basis.elements) {
            Eigen::MatrixXcd xa = traceless(e.block(a));
            Eigen::MatrixXcd xb = traceless(e.block(b));
            if (conj) {
                xa = xa.conjugate().eval();
            }
            res = std::max(res, (c.W * xa * c.W.adjoint() - xb).cwiseAbs().maxCoeff());
        }
        c.residual = res;
        return c;
    };

    Correlation plain = solve(false);
    if (plain.residual <= 1e-8) {
        return plain;
    }
    Correlation twisted = solve(true);
    if (twisted.residual <= 1e-8) {
        return twisted;
    }
    throw std::runtime_error("no correlation between sectors " + lay[a].shape.str() + " and " + lay[b].shape.str() +
                             " fits to 1e-8 (best residuals " + std::to_string(plain.residual) + ", " +
                             std::to_string(twisted.residual) + ")");
}

Correlation find_correlation(const LieBasis &basis, const YoungDiagram &a, const YoungDiagram &b) {
    return find_correlation(basis, basis.layout->index_of(a), basis.layout->index_of(b));
}

LieBasis center(const LieBasis &basis) {
    const int N = basis.ambient_dim();
    const int r = basis.dim();
    auto off = block_offsets(*basis.layout);
    Span span(N);
    if (r == 0) {
        auto out = basis_from_span(basis.layout, span, basis.tol);
        out.closed = true;
        return out;
    }

    // The centralizer of a few generic elements of a compact Lie algebra is its
    // center; every candidate is then verified against the full basis.
    auto central_candidates = [&](const std::vector<BlockOperator> &probes) {
        Eigen::MatrixXd ad((int)probes.size() * N, r);
        for (size_t t = 0; t < probes.size(); t++) {
            parallel_for(r, [&](int i) {
                Eigen::VectorXd col(N);
                commutator_coords(basis.elements[i], probes[t], off, col.data());
                ad.block(t * N, i, N, 1) = col;
            });
        }
        Eigen::BDCSVD<Eigen::MatrixXd> svd(ad, Eigen::ComputeThinV);
        double thresh = 100.0 * basis.tol * std::sqrt((double)N) * std::max(1.0, svd.singularValues()(0));
        std::vector<Eigen::VectorXd> out;
        const auto &s = svd.singularValues();
        for (int k = 0; k < r; k++) {
            if (k >= s.size() || s(k) <= thresh) {
                out.push_back(basis.coords * svd.matrixV().col(k));
            }
        }
        return out;
    };

    std::mt19937_64 rng(0x5eedc3u);
    std::vector<BlockOperator> probes;
    for (int t = 0; t < 3; t++) {
        Eigen::VectorXd g(r);
        for (int k = 0; k < r; k++) {
            g(k) = gaussian(rng);
        }
        probes.push_back(from_lie_coords(basis.layout, basis.coords * (g / g.norm())));
    }
    auto candidates = central_candidates(probes);

    auto is_central = [&](const Eigen::VectorXd &z) {
        BlockOperator zop = from_lie_coords(basis.layout, z);
        Eigen::VectorXd col(N);
        for (int i = 0; i < r; i++) {
            commutator_coords(zop, basis.elements[i], off, col.data());
            if (col.norm() > 1e-8) {
                return false;
            }
        }
        return true;
    };
    bool ok = std::all_of(candidates.begin(), candidates.end(), is_central);
    if (!ok) {
        // Degenerate probes: fall back to the generating elements themselves.
        std::vector<BlockOperator> seeds(basis.elements.begin(), basis.elements.begin() + std::max(1, basis.seed_count));
        candidates = central_candidates(seeds);
    }
    for (const auto &z : candidates) {
        span.add(z, basis.tol);
    }
    auto out = basis_from_span(basis.layout, span, basis.tol);
    out.closed = true;
    out.seed_count = out.dim();
    return out;
}

LieBasis derived_algebra(const LieBasis &basis) {
    const int N = basis.ambient_dim();
    const int r = basis.dim();
    auto off = block_offsets(*basis.layout);
    // Compact algebras split as center + derived algebra, which fixes the target.
    const int target = r - center(basis).dim();
    Span span(N);
    Eigen::MatrixXd batch;
    for (int i = 1; i < r && span.r < target; i++) {
        batch.resize(N, i);
        parallel_for(i, [&](int j) {
            commutator_coords(basis.elements[i], basis.elements[j], off, batch.col(j).data());
        });
        insert_batch(span, batch, basis.tol, target, [](int) {});
    }
    auto out = basis_from_span(basis.layout, span, basis.tol);
    out.closed = true;
    out.seed_count = out.dim();
    return out;
}

int derived_dimension(const LieBasis &basis) {
    return derived_algebra(basis).dim();
}

}  // namespace symcirc

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

#include "symcirc/tensor.hpp"

#include <cmath>

#include "symcirc/random.hpp"
#include "symcirc/symrep.hpp"

namespace symcirc {

namespace {

using cd = std::complex<double>;

std::int64_t checked_size(int d, int m) {
    if (d < 1 || m < 0) {
        throw std::invalid_argument("dense state needs d >= 1 and m >= 0");
    }
    std::int64_t s = 1;
    for (int k = 0; k < m; k++) {
        s *= d;
        if (s > kMaxAmplitudes) {
            throw SizeGuardError("dense state with d^m > 2^20 amplitudes refused");
        }
    }
    return s;
}

std::vector<std::int64_t> strides(int d, int m) {
    std::vector<std::int64_t> st(m);
    std::int64_t s = 1;
    for (int k = m - 1; k >= 0; k--) {
        st[k] = s;
        s *= d;
    }
    return st;
}

// Index map of P(sigma): basis index i goes to out[i].
std::vector<std::int64_t> permutation_index_map(int d, int m, const Permutation &sigma) {
    std::int64_t size = checked_size(d, m);
    auto st = strides(d, m);
    std::vector<std::int64_t> target(m);
    for (int k = 0; k < m; k++) {
        target[k] = st[sigma(k)];
    }
    std::vector<std::int64_t> out(size);
    std::vector<int> digit(m, 0);
    std::int64_t idx = 0;
    for (std::int64_t i = 0; i < size; i++) {
        out[i] = idx;
        // Increment the digit counter (slot m-1 fastest).
        for (int k = m - 1; k >= 0; k--) {
            digit[k]++;
            idx += target[k];
            if (digit[k] < d) {
                break;
            }
            idx -= target[k] * d;
            digit[k] = 0;
        }
    }
    return out;
}

Permutation embed_on_slots(const Permutation &sigma, const std::vector<int> &slots, int m) {
    if ((int)slots.size() != sigma.size()) {
        throw std::invalid_argument("slot list does not match the permutation size");
    }
    std::vector<int> one_line(m);
    for (int q = 0; q < m; q++) {
        one_line[q] = q + 1;
    }
    for (size_t a = 0; a < slots.size(); a++) {
        if (slots[a] < 1 || slots[a] > m) {
            throw std::invalid_argument("slot out of range");
        }
        one_line[slots[a] - 1] = slots[sigma((int)a)];
    }
    return Permutation::from_one_line(one_line);
}

DenseState apply_single(const DenseState &psi, const Eigen::MatrixXcd &u, int slot) {
    auto st = strides(psi.d, psi.m);
    std::int64_t stride = st[slot];
    DenseState out = DenseState::zero(psi.d, psi.m);
    std::int64_t block = stride * psi.d;
    for (std::int64_t base = 0; base < psi.amp.size(); base += block) {
        for (std::int64_t low = 0; low < stride; low++) {
            for (int a = 0; a < psi.d; a++) {
                cd acc = 0;
                for (int b = 0; b < psi.d; b++) {
                    acc += u(a, b) * psi.amp(base + low + b * stride);
                }
                out.amp(base + low + a * stride) = acc;
            }
        }
    }
    return out;
}

PermutationSum s3_projector_sum(const YoungDiagram &lambda) {
    PermutationSum s;
    s.n = 3;
    bool anti = lambda == YoungDiagram({1, 1, 1});
    for (const auto &p : all_permutations(3)) {
        s.terms.push_back({(anti ? p.sign() : 1) / 6.0, p});
    }
    return s;
}

}  // namespace

DenseState DenseState::zero(int d, int m) {
    DenseState s;
    s.d = d;
    s.m = m;
    s.amp = Eigen::VectorXcd::Zero(checked_size(d, m));
    return s;
}

DenseState DenseState::basis(int d, const std::vector<int> &digits) {
    DenseState s = zero(d, (int)digits.size());
    std::int64_t idx = 0;
    for (int x : digits) {
        if (x < 0 || x >= d) {
            throw std::invalid_argument("basis digit out of range");
        }
        idx = idx * d + x;
    }
    s.amp(idx) = 1.0;
    return s;
}

DenseState DenseState::random(int d, int m, std::mt19937_64 &rng) {
    DenseState s = zero(d, m);
    s.amp = random_ginibre((int)s.amp.size(), 1, rng).col(0);
    s.amp /= s.amp.norm();
    return s;
}

DenseState DenseState::operator+(const DenseState &o) const {
    DenseState out = *this;
    out.amp += o.amp;
    return out;
}

DenseState DenseState::operator-(const DenseState &o) const {
    DenseState out = *this;
    out.amp -= o.amp;
    return out;
}

DenseState DenseState::operator*(cd s) const {
    DenseState out = *this;
    out.amp *= s;
    return out;
}

DenseState kron(const DenseState &a, const DenseState &b) {
    if (a.d != b.d) {
        throw std::invalid_argument("kron of states with different local dimension");
    }
    DenseState out = DenseState::zero(a.d, a.m + b.m);
    std::int64_t nb = b.amp.size();
    for (std::int64_t i = 0; i < a.amp.size(); i++) {
        out.amp.segment(i * nb, nb) = a.amp(i) * b.amp;
    }
    return out;
}

DenseState apply_permutation(const DenseState &psi, const Permutation &sigma) {
    if (sigma.size() != psi.m) {
        throw std::invalid_argument("permutation size does not match the qudit count");
    }
    auto map = permutation_index_map(psi.d, psi.m, sigma);
    DenseState out = DenseState::zero(psi.d, psi.m);
    for (std::int64_t i = 0; i < (std::int64_t)map.size(); i++) {
        out.amp(map[i]) = psi.amp(i);
    }
    return out;
}

DenseState apply_permutation_on(const DenseState &psi, const Permutation &sigma, const std::vector<int> &slots) {
    return apply_permutation(psi, embed_on_slots(sigma, slots, psi.m));
}

DenseState PermutationSum::apply(const DenseState &psi, const std::vector<int> &slots) const {
    DenseState out = DenseState::zero(psi.d, psi.m);
    for (const auto &[c, p] : terms) {
        out.amp += c * apply_permutation_on(psi, p, slots).amp;
    }
    return out;
}

DenseState PermutationSum::apply(const DenseState &psi) const {
    std::vector<int> slots(n);
    for (int k = 0; k < n; k++) {
        slots[k] = k + 1;
    }
    return apply(psi, slots);
}

Eigen::MatrixXcd PermutationSum::matrix(int d) const {
    std::int64_t size = checked_size(d, n);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(size, size);
    for (const auto &[c, p] : terms) {
        auto map = permutation_index_map(d, n, p);
        for (std::int64_t i = 0; i < size; i++) {
            out(map[i], i) += c;
        }
    }
    return out;
}

DenseState three_qudit_projector(const DenseState &psi, const YoungDiagram &lambda, std::array<int, 3> triple) {
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2]) {
        throw std::invalid_argument("projector triple must be distinct");
    }
    std::vector<int> slots(triple.begin(), triple.end());
    if (lambda == YoungDiagram({3}) || lambda == YoungDiagram({1, 1, 1})) {
        return s3_projector_sum(lambda).apply(psi, slots);
    }
    if (lambda == YoungDiagram({2, 1})) {
        DenseState sym = s3_projector_sum(YoungDiagram({3})).apply(psi, slots);
        DenseState anti = s3_projector_sum(YoungDiagram({1, 1, 1})).apply(psi, slots);
        return psi - sym - anti;
    }
    throw std::invalid_argument("three-qudit projector needs a diagram with 3 boxes");
}

DenseState wedge_state(const std::vector<Eigen::VectorXcd> &vectors) {
    if (vectors.empty()) {
        throw std::invalid_argument("wedge of no vectors");
    }
    int d = (int)vectors[0].size();
    int m = (int)vectors.size();
    DenseState prod = DenseState::zero(d, 0);
    prod.amp = Eigen::VectorXcd::Ones(1);
    for (const auto &v : vectors) {
        if (v.size() != d) {
            throw std::invalid_argument("wedge vectors must share one dimension");
        }
        DenseState single = DenseState::zero(d, 1);
        single.amp = v;
        prod = kron(prod, single);
    }
    DenseState out = DenseState::zero(d, m);
    double fact = 1;
    for (const auto &p : all_permutations(m)) {
        out.amp += (double)p.sign() * apply_permutation(prod, p).amp;
    }
    for (int k = 2; k <= m; k++) {
        fact *= k;
    }
    out.amp /= std::sqrt(fact);
    return out;
}

DenseState wedge_basis(int d, const std::vector<int> &digits) {
    std::vector<Eigen::VectorXcd> vs;
    for (int x : digits) {
        if (x < 0 || x >= d) {
            throw std::invalid_argument("basis digit out of range");
        }
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
        v(x) = 1.0;
        vs.push_back(v);
    }
    return wedge_state(vs);
}

PermutationSum ancilla_operator(int which) {
    PermutationSum z;
    z.n = 3;
    if (which == 1) {
        double s = 1.0 / std::sqrt(3.0);
        z.terms = {{s, Permutation::transposition(3, 1, 2)}, {-s, Permutation::transposition(3, 1, 3)}};
    } else if (which == 2) {
        // P_c moves slot 2 -> 1, 3 -> 2, 1 -> 3, i.e. |abc> -> |bca>.
        Permutation c = Permutation::from_one_line({3, 1, 2});
        z.terms = {{-2.0 / 3, Permutation::transposition(3, 1, 2)},
                   {2.0 / 3, Permutation::transposition(3, 2, 3)},
                   {1.0 / 3, c},
                   {-1.0 / 3, c.inverse()}};
    } else {
        throw std::invalid_argument("ancilla pair must be 1 or 2");
    }
    return z;
}

DenseState ancilla_state(int which, int d) {
    if (d < 2) {
        throw std::invalid_argument("ancilla states need d >= 2");
    }
    if (which == 1) {
        double r3 = std::sqrt(3.0);
        DenseState s = DenseState::basis(d, {1, 0, 0}) * 2.0 + DenseState::basis(d, {0, 1, 0}) * (r3 - 1.0) -
                       DenseState::basis(d, {0, 0, 1}) * (1.0 + r3);
        return s * (1.0 / (2.0 * r3));
    }
    if (which == 2) {
        return (DenseState::basis(d, {0, 1, 0}) - DenseState::basis(d, {1, 0, 0})) * (1.0 / std::sqrt(2.0));
    }
    throw std::invalid_argument("ancilla pair must be 1 or 2");
}

AncillaReport verify_ancilla_pair(int which, int d) {
    AncillaReport rep;
    rep.which = which;
    rep.d = d;
    PermutationSum z = ancilla_operator(which);
    DenseState eta = ancilla_state(which, d);
    if (std::abs(eta.norm() - 1.0) > 1e-12) {
        throw std::runtime_error("ancilla state is not normalized");
    }
    rep.eigen_residual = (z.apply(eta) - eta).norm();
    std::array<int, 3> t{1, 2, 3};
    std::int64_t size = eta.amp.size();
    for (std::int64_t i = 0; i < size; i++) {
        DenseState e = DenseState::zero(d, 3);
        e.amp(i) = 1.0;
        rep.sym_residual = std::max(rep.sym_residual, z.apply(three_qudit_projector(e, YoungDiagram({3}), t)).norm());
        rep.anti_residual =
            std::max(rep.anti_residual, z.apply(three_qudit_projector(e, YoungDiagram({1, 1, 1}), t)).norm());
        DenseState mixed = three_qudit_projector(e, YoungDiagram({2, 1}), t);
        rep.square_residual = std::max(rep.square_residual, (z.apply(z.apply(mixed)) - mixed).norm());
    }
    rep.passes = rep.eigen_residual <= 1e-10 && rep.sym_residual <= 1e-10 && rep.anti_residual <= 1e-10 &&
                 rep.square_residual <= 1e-10;
    return rep;
}

WedgeReport verify_wedge_eigen(int d) {
    WedgeReport rep;
    rep.d = d;
    rep.triple = {1, 2, 3};
    DenseState eta;
    int expected;
    if (d == 4) {
        DenseState w = wedge_basis(4, {0, 1, 2, 3});
        eta = kron(w, w);
        expected = 2;
    } else if (d == 3) {
        DenseState w = wedge_basis(3, {0, 1});
        eta = kron(kron(w, w), DenseState::basis(3, {0, 0}));
        expected = 1;
    } else {
        throw std::invalid_argument("wedge eigen-equations are checked for d = 3 and d = 4 only");
    }
    rep.m = eta.m;
    const YoungDiagram shapes[3] = {YoungDiagram({3}), YoungDiagram({2, 1}), YoungDiagram({1, 1, 1})};
    rep.passes = std::abs(eta.norm() - 1.0) <= 1e-12;
    for (int k = 0; k < 3; k++) {
        DenseState p = three_qudit_projector(eta, shapes[k], rep.triple);
        rep.weights[k] = p.norm();
        rep.residuals[k] = k == expected ? (p - eta).norm() : p.norm();
        rep.passes &= rep.residuals[k] <= 1e-10;
    }
    return rep;
}

CentralProjector::CentralProjector(int n, int d, const YoungDiagram &lambda) : n_(n), d_(d), lambda_(lambda) {
    if (lambda.n() != n) {
        throw std::invalid_argument("diagram size does not match n");
    }
    std::int64_t size = 1;
    for (int k = 0; k < n; k++) {
        size *= d;
    }
    if (n > 8 || size > 6561) {
        throw SizeGuardError("central projector limited to n <= 8 and d^n <= 3^8");
    }
    if (n < 1) {
        throw std::invalid_argument("central projector needs n >= 1");
    }
    double f = (double)dim_M(lambda);
    double nfact = 1;
    for (int k = 2; k <= n; k++) {
        nfact *= k;
    }
    for (const auto &p : all_permutations(n)) {
        double chi = character(lambda, p);
        if (chi != 0) {
            terms_.push_back({f * chi / nfact, p});
        }
    }
}

DenseState CentralProjector::apply(const DenseState &psi) const {
    if (psi.d != d_ || psi.m != n_) {
        throw std::invalid_argument("state does not match the projector's space");
    }
    DenseState out = DenseState::zero(d_, n_);
    for (const auto &[c, p] : terms_) {
        auto map = permutation_index_map(d_, n_, p);
        for (std::int64_t i = 0; i < (std::int64_t)map.size(); i++) {
            out.amp(map[i]) += c * psi.amp(i);
        }
    }
    return out;
}

cd CentralProjector::trace_with(const std::function<cd(std::int64_t, std::int64_t)> &entry) const {
    // Tr(P A) = sum_k A(k, pi(k)) where P|k> = |pi(k)>.
    cd total = 0;
    for (const auto &[c, p] : terms_) {
        auto map = permutation_index_map(d_, n_, p);
        cd t = 0;
        for (std::int64_t k = 0; k < (std::int64_t)map.size(); k++) {
            t += entry(k, map[k]);
        }
        total += c * t;
    }
    return total;
}

DenseState central_projector(int n, int d, const YoungDiagram &lambda, const DenseState &psi) {
    return CentralProjector(n, d, lambda).apply(psi);
}

CenterlessReport verify_centerless_hamiltonian(int n_sys, int d, const Eigen::MatrixXcd &h, std::uint64_t seed) {
    if (n_sys < 1 || n_sys + 3 > 7 || d < 2 || d > 3) {
        throw SizeGuardError("centerless check limited to n_sys + 3 <= 7 and d <= 3");
    }
    std::int64_t dsys = checked_size(d, n_sys);
    if (h.rows() != dsys || h.cols() != dsys) {
        throw std::invalid_argument("Hamiltonian has the wrong size for n_sys qudits");
    }
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-10 * (1.0 + h.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("Hamiltonian must be Hermitian");
    }
    CenterlessReport rep;
    rep.n_sys = n_sys;
    rep.d = d;
    int m = n_sys + 3;
    Eigen::MatrixXcd z = ancilla_operator(1).matrix(d);
    std::int64_t da = z.rows();
    double scale = 1.0 + h.norm() * z.norm();

    auto entry = [&](std::int64_t k, std::int64_t l) { return h(k / da, l / da) * z(k % da, l % da); };
    for (const auto &lam : enumerate_diagrams(m, d)) {
        double t = std::abs(CentralProjector(m, d, lam).trace_with(entry));
        rep.sector_traces.push_back({lam, t});
        rep.max_trace = std::max(rep.max_trace, t);
    }
    rep.centerless_ok = rep.max_trace <= 1e-9 * scale;

    auto apply_h = [&](const DenseState &psi) {
        // Index = sys * da + anc; column-major view has the ancilla index fastest.
        Eigen::Map<const Eigen::MatrixXcd> mat(psi.amp.data(), da, dsys);
        Eigen::MatrixXcd res = z * mat * h.transpose();
        DenseState out = psi;
        out.amp = Eigen::Map<Eigen::VectorXcd>(res.data(), res.size());
        return out;
    };
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 20; trial++) {
        Eigen::MatrixXcd u = random_unitary(d, rng);
        DenseState psi = DenseState::random(d, m, rng);
        auto apply_u = [&](DenseState s) {
            for (int slot = 0; slot < m; slot++) {
                s = apply_single(s, u, slot);
            }
            return s;
        };
        double r = (apply_h(apply_u(psi)) - apply_u(apply_h(psi))).norm();
        rep.max_commutator = std::max(rep.max_commutator, r);
    }
    rep.invariant_ok = rep.max_commutator <= 1e-9 * scale;
    return rep;
}

Eigen::MatrixXcd swap_matrix(int d) {
    PermutationSum s;
    s.n = 2;
    s.terms = {{1.0, Permutation::transposition(2, 1, 2)}};
    return s.matrix(d);
}

}  // namespace symcirc

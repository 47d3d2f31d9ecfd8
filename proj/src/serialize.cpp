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

#include "symcirc/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace symcirc {

std::string fmt17(double x) {
    char buf[64];
    if (x == 0) {
        x = 0.0;
    }
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string matrix_csv(const Eigen::MatrixXd &m) {
    std::ostringstream out;
    for (int r = 0; r < m.rows(); r++) {
        for (int c = 0; c < m.cols(); c++) {
            if (c) {
                out << ',';
            }
            out << fmt17(m(r, c));
        }
        out << '\n';
    }
    return out.str();
}

json to_json(const YoungDiagram &y) {
    return json(y.rows());
}

YoungDiagram diagram_from_json(const json &j) {
    return YoungDiagram(j.get<std::vector<int>>());
}

json to_json(const Eigen::MatrixXcd &m) {
    json re = json::array();
    json im = json::array();
    for (int r = 0; r < m.rows(); r++) {
        for (int c = 0; c < m.cols(); c++) {
            re.push_back(m(r, c).real());
            im.push_back(m(r, c).imag());
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

json to_json(const BlockOperator &a) {
    json blocks = json::array();
    for (int i = 0; i < a.num_blocks(); i++) {
        json m = to_json(a.block(i));
        blocks.push_back({{"shape", to_json((*a.layout())[i].shape)}, {"re", m["re"]}, {"im", m["im"]}});
    }
    return {{"n", a.n()}, {"d", a.d()}, {"blocks", blocks}};
}

BlockOperator block_operator_from_json(const json &j) {
    int n = j.at("n").get<int>();
    int d = j.at("d").get<int>();
    auto lay = SectorLayout::schur_weyl(n, d);
    BlockOperator out(lay);
    for (const auto &b : j.at("blocks")) {
        int idx = lay->index_of(diagram_from_json(b.at("shape")));
        int m = (*lay)[idx].dim;
        auto re = b.at("re").get<std::vector<double>>();
        auto im = b.contains("im") ? b.at("im").get<std::vector<double>>() : std::vector<double>(re.size(), 0.0);
        if ((int)re.size() != m * m || (int)im.size() != m * m) {
            throw std::invalid_argument("block " + (*lay)[idx].shape.str() + " has the wrong number of entries");
        }
        for (int r = 0; r < m; r++) {
            for (int c = 0; c < m; c++) {
                out.block(idx)(r, c) = cd(re[r * m + c], im[r * m + c]);
            }
        }
    }
    return out;
}

json to_json(const DenseState &s) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index i = 0; i < s.amp.size(); i++) {
        re.push_back(s.amp(i).real());
        im.push_back(s.amp(i).imag());
    }
    return {{"d", s.d}, {"m", s.m}, {"re", re}, {"im", im}};
}

DenseState dense_state_from_json(const json &j) {
    DenseState s = DenseState::zero(j.at("d").get<int>(), j.at("m").get<int>());
    auto re = j.at("re").get<std::vector<double>>();
    auto im = j.at("im").get<std::vector<double>>();
    if ((Eigen::Index)re.size() != s.amp.size() || (Eigen::Index)im.size() != s.amp.size()) {
        throw std::invalid_argument("state has the wrong number of amplitudes");
    }
    for (Eigen::Index i = 0; i < s.amp.size(); i++) {
        s.amp(i) = cd(re[i], im[i]);
    }
    return s;
}

json to_json(const SemiReport &r) {
    json sectors = json::array();
    for (const auto &s : r.sectors) {
        sectors.push_back(
            {{"shape", to_json(s.shape)}, {"m", s.m}, {"rank", s.rank}, {"required", s.required}, {"condA", s.holds}});
    }
    json pairs = json::array();
    for (const auto &p : r.pairs) {
        pairs.push_back({{"shapes", {to_json(p.result.shape_a), to_json(p.result.shape_b)}},
                         {"m", p.result.m_a},
                         {"rank", p.result.rank},
                         {"verdict", p.status()},
                         {"witness_traces", {p.result.witness_trace_a, p.result.witness_trace_b}}});
    }
    json corr = json::array();
    for (const auto &c : r.correlations) {
        corr.push_back({{"shapes", {to_json(c.shape_a), to_json(c.shape_b)}},
                        {"conjugated", c.correlation.conjugated},
                        {"residual", c.correlation.residual},
                        {"W", to_json(c.correlation.W)}});
    }
    return {{"n", r.n},
            {"d", r.d},
            {"k", r.k},
            {"tol", r.tol},
            {"closed", r.closed},
            {"semi_universal", r.verdict},
            {"dim", r.dim},
            {"expected_dim", r.expected_dim},
            {"ambient_dim", r.ambient_dim},
            {"center_dim", r.center_dim},
            {"derived_dim", r.derived_dim},
            {"per_sector", sectors},
            {"pairs", pairs},
            {"correlations", corr},
            {"notes", r.notes}};
}

json to_json(const VdetReport &r) {
    auto cj = [](cd z) { return json{z.real(), z.imag()}; };
    return {{"d", r.d},
            {"in_v2", r.in_v2},
            {"trivial", r.trivial},
            {"det_sym", cj(r.det_sym)},
            {"det_mixed", cj(r.det_mixed)},
            {"det_anti", cj(r.det_anti)},
            {"phase_gap", r.phase_gap},
            {"note", r.note}};
}

json to_json(const TraceTestReport &r) {
    return {{"in_v2", r.in_v2}, {"trace_hc", r.trace_hc}, {"bound", r.bound}};
}

json to_json(const GateReport &r) {
    return {{"breaks", r.breaks},
            {"min_distance", r.min_distance},
            {"threshold", r.threshold},
            {"optimal_phase", r.optimal_phase},
            {"trace_31", r.trace_31},
            {"trace_211", r.trace_211},
            {"trace_test_breaks", r.trace_test_breaks}};
}

json to_json(const AncillaReport &r) {
    return {{"which", r.which},
            {"d", r.d},
            {"eigen_residual", r.eigen_residual},
            {"sym_residual", r.sym_residual},
            {"anti_residual", r.anti_residual},
            {"square_residual", r.square_residual},
            {"passes", r.passes}};
}

json to_json(const WedgeReport &r) {
    return {{"d", r.d},
            {"m", r.m},
            {"triple", r.triple},
            {"shapes", {json({3}), json({2, 1}), json({1, 1, 1})}},
            {"weights", r.weights},
            {"residuals", r.residuals},
            {"passes", r.passes}};
}

json to_json(const CenterlessReport &r) {
    json traces = json::array();
    for (const auto &[lam, t] : r.sector_traces) {
        traces.push_back({{"shape", to_json(lam)}, {"abs_trace", t}});
    }
    return {{"n_sys", r.n_sys},
            {"d", r.d},
            {"sector_traces", traces},
            {"max_trace", r.max_trace},
            {"max_commutator", r.max_commutator},
            {"centerless_ok", r.centerless_ok},
            {"invariant_ok", r.invariant_ok},
            {"passes", r.passes()}};
}

json to_json(const DesignReport &r) {
    json dims = json::array();
    for (const auto &[dim, lam] : r.sector_dims) {
        dims.push_back({{"shape", to_json(lam)}, {"dim", dim}});
    }
    json shapes = json::array();
    for (const auto &s : r.third_min_shapes) {
        shapes.push_back(to_json(s));
    }
    return {{"n", r.n},
            {"d", r.d},
            {"mu0", to_json(r.mu0)},
            {"mu1", to_json(r.mu1)},
            {"third_min", r.third_min},
            {"third_min_shapes", shapes},
            {"t_max", r.t_max},
            {"hypotheses_hold", r.hypotheses_hold},
            {"matches_formula", r.matches_formula},
            {"sector_dims", dims}};
}

json to_json(const MuProjectorReport &r) {
    json rows = json::array();
    for (const auto &row : r.rows) {
        rows.push_back({{"shape", to_json(row.shape)},
                        {"b2", row.b2},
                        {"a0_times_2n", row.a0_times_2n},
                        {"a1_times_2n", row.a1_times_2n}});
    }
    return {{"n", r.n}, {"identities_hold", r.identities_hold}, {"rows", rows}};
}

json to_json(const FactsReport &r) {
    json ce = json::array();
    for (const auto &c : r.counterexamples) {
        ce.push_back({{"fact", c.fact}, {"lambda", to_json(c.lambda)}, {"detail", c.detail}});
    }
    return {{"m", r.m},
            {"d", r.d},
            {"fact1", r.fact_holds(1)},
            {"fact2", r.fact_holds(2)},
            {"fact3", r.fact_holds(3)},
            {"counterexamples", ce}};
}

json to_json(const MonotonicityReport &r) {
    return {{"d", r.d}, {"k_max", r.k_max}, {"ok", r.ok()}, {"equal_steps", r.equal_steps},
            {"violations", r.violations}};
}

}  // namespace symcirc

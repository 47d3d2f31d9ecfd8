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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "symcirc/blockops.hpp"
#include "symcirc/designs.hpp"
#include "symcirc/liealg.hpp"
#include "symcirc/partitions.hpp"
#include "symcirc/semiuni.hpp"
#include "symcirc/serialize.hpp"
#include "symcirc/symrep.hpp"
#include "symcirc/tensor.hpp"

namespace symcirc {
namespace {

constexpr int kMaxClosureN = 8;
constexpr int kMaxClosureAmbient = 2000;

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double tol = kDefaultTol;
    int max_dim = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string format;
    std::string expect;
};

struct Table {
    std::string schema;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    /// Emitted as "# key: value" lines in CSV and table output.
    std::vector<std::pair<std::string, std::string>> notes;
};

struct Output {
    json data;
    std::vector<Table> tables;
    std::string default_format = "json";
    /// Compared against --expect. Empty means the command has no verdict.
    std::string verdict;
    bool assertions_ok = true;
    std::string failure;
};

std::string num(double x) {
    return fmt17(x);
}
std::string num(std::int64_t x) {
    return std::to_string(x);
}
std::string num(int x) {
    return std::to_string(x);
}
std::string yes_no(bool b) {
    return b ? "true" : "false";
}

json big_json(const BigInt &x) {
    if (x >= 0 && x <= BigInt(std::numeric_limits<std::int64_t>::max())) {
        return json(x.convert_to<std::int64_t>());
    }
    return json(x.str());
}

std::vector<int> parse_int_list(const std::string &text) {
    std::string s;
    for (char c : text) {
        if (c != '[' && c != ']' && c != ' ') {
            s += c;
        }
    }
    std::vector<int> out;
    if (s.empty()) {
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception &) {
            throw UsageError("not an integer list: '" + text + "'");
        }
    }
    return out;
}

YoungDiagram parse_shape(const std::string &text) {
    auto rows = parse_int_list(text);
    try {
        return YoungDiagram(rows);
    } catch (const std::invalid_argument &e) {
        throw UsageError("bad shape '" + text + "': " + e.what());
    }
}

Permutation parse_perm(const std::string &text) {
    try {
        return Permutation::from_one_line(parse_int_list(text));
    } catch (const std::invalid_argument &e) {
        throw UsageError("bad permutation '" + text + "': " + e.what());
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("bad JSON in " + path + ": " + e.what());
    }
}

json matrix_json(const Eigen::MatrixXd &m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (int c = 0; c < m.cols(); c++) {
            row.push_back(m(r, c));
        }
        rows.push_back(row);
    }
    return rows;
}

Table matrix_table(const std::string &schema, const Eigen::MatrixXd &m) {
    Table t;
    t.schema = schema;
    for (int c = 0; c < m.cols(); c++) {
        t.header.push_back("c" + std::to_string(c));
    }
    for (int r = 0; r < m.rows(); r++) {
        std::vector<std::string> row;
        for (int c = 0; c < m.cols(); c++) {
            row.push_back(num(m(r, c)));
        }
        t.rows.push_back(row);
    }
    return t;
}

// ---------------------------------------------------------------- rendering

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + "\"";
}

void render_csv(const Output &o, std::ostream &out) {
    bool first = true;
    for (const auto &t : o.tables) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << "# schema: symcirc." << t.schema << ".v1\n";
        for (const auto &[k, v] : t.notes) {
            out << "# " << k << ": " << v << '\n';
        }
        for (std::size_t i = 0; i < t.header.size(); i++) {
            out << (i ? "," : "") << csv_field(t.header[i]);
        }
        out << '\n';
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < row.size(); i++) {
                out << (i ? "," : "") << csv_field(row[i]);
            }
            out << '\n';
        }
    }
}

void render_table(const Output &o, std::ostream &out) {
    bool first = true;
    for (const auto &t : o.tables) {
        if (!first) {
            out << '\n';
        }
        first = false;
        out << "== " << t.schema << '\n';
        for (const auto &[k, v] : t.notes) {
            out << k << ": " << v << '\n';
        }
        std::vector<std::size_t> width(t.header.size());
        for (std::size_t i = 0; i < t.header.size(); i++) {
            width[i] = t.header[i].size();
        }
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < row.size() && i < width.size(); i++) {
                width[i] = std::max(width[i], row[i].size());
            }
        }
        auto line = [&](const std::vector<std::string> &cells) {
            std::string s;
            for (std::size_t i = 0; i < cells.size(); i++) {
                if (i) {
                    s += "  ";
                }
                s += cells[i];
                if (i + 1 < cells.size()) {
                    s += std::string(width[i] - cells[i].size(), ' ');
                }
            }
            out << s << '\n';
        };
        line(t.header);
        std::vector<std::string> rule;
        for (auto w : width) {
            rule.push_back(std::string(w, '-'));
        }
        line(rule);
        for (const auto &row : t.rows) {
            line(row);
        }
    }
}

// --------------------------------------------------------------- partitions

struct PartitionArgs {
    bool count = false, list = false, gap = false, ratio = false, fig2 = false, fig3 = false, monotonic = false,
         facts = false, dims = false;
    int n = -1, k = -1, d = -1, m = -1;
    std::string d_list;
    int k_min = -1, k_max = -1, k_step = 1;
    std::string k_range;
    std::string shape;
};

// "a:b" or "a:b:step".
void apply_k_range(PartitionArgs &a) {
    if (a.k_range.empty()) {
        return;
    }
    std::string text = a.k_range;
    for (char &ch : text) {
        if (ch == ':') {
            ch = ',';
        }
    }
    auto v = parse_int_list(text);
    if (v.size() < 2 || v.size() > 3) {
        throw UsageError("--k-range must be a:b or a:b:step");
    }
    a.k_min = v[0];
    a.k_max = v[1];
    a.k_step = v.size() == 3 ? v[2] : 1;
}

int require(int v, const char *flag) {
    if (v < 0) {
        throw UsageError(std::string("missing ") + flag);
    }
    return v;
}

std::vector<int> d_values(const std::string &text, std::vector<int> fallback) {
    auto ds = text.empty() ? fallback : parse_int_list(text);
    for (int d : ds) {
        if (d < 1) {
            throw UsageError("--d-list entries must be >= 1");
        }
    }
    return ds;
}

Output cmd_partitions(PartitionArgs a, const RunConfig &) {
    apply_k_range(a);
    int modes = a.count + a.list + a.gap + a.ratio + a.fig2 + a.fig3 + a.monotonic + a.facts + a.dims;
    if (modes != 1) {
        throw UsageError("partitions: choose exactly one of --count --list --gap --ratio --fig2 --fig3 "
                         "--monotonic --facts --dims");
    }
    Output o;
    if (a.count) {
        int n = require(a.n, "--n");
        int d = require(a.d, "--d");
        BigInt c = count_diagrams(n, d);
        o.data = {{"n", n}, {"d", d}, {"count", big_json(c)}};
        o.tables.push_back({"partitions.count", {"n", "d", "count"}, {{num(n), num(d), c.str()}}, {}});
        o.verdict = c.str();
    } else if (a.list) {
        int n = require(a.n, "--n");
        int d = require(a.d, "--d");
        json rows = json::array();
        Table t{"partitions.list", {"shape", "dim_M", "dim_Q"}, {}, {}};
        for (const auto &lam : enumerate_diagrams(n, d)) {
            rows.push_back({{"shape", to_json(lam)}, {"dim_M", dim_M(lam)}, {"dim_Q", dim_Q(lam, d)}});
            t.rows.push_back({lam.str(), num(dim_M(lam)), num(dim_Q(lam, d))});
        }
        o.data = {{"n", n}, {"d", d}, {"diagrams", rows}};
        o.tables.push_back(t);
        o.verdict = std::to_string(t.rows.size());
    } else if (a.gap) {
        int n = require(a.n, "--n");
        int k = require(a.k, "--k");
        int d = require(a.d, "--d");
        BigInt g = gap(n, k, d);
        o.data = {{"n", n}, {"k", k}, {"d", d}, {"gap", big_json(g)}};
        o.tables.push_back({"partitions.gap", {"n", "k", "d", "gap"}, {{num(n), num(k), num(d), g.str()}}, {}});
        o.verdict = g.str();
    } else if (a.ratio) {
        int n = require(a.n, "--n");
        int k = require(a.k, "--k");
        int d = require(a.d, "--d");
        Ratio r = ratio(n, k, d);
        o.data = {{"n", n},       {"k", k}, {"d", d}, {"numerator", big_json(r.num)}, {"denominator", big_json(r.den)},
                  {"ratio", r.value()}};
        o.tables.push_back({"partitions.ratio",
                            {"n", "k", "d", "numerator", "denominator", "ratio"},
                            {{num(n), num(k), num(d), r.num.str(), r.den.str(), num(r.value())}},
                            {}});
        o.verdict = num(r.value());
    } else if (a.fig2) {
        int n = a.n < 0 ? 10000 : a.n;
        int k_max = a.k_max < 0 ? n : a.k_max;
        int k_min = a.k_min < 0 ? 3 : a.k_min;
        if (k_min < 3 || k_max > n || k_min > k_max || a.k_step < 1) {
            throw UsageError("--fig2 needs 3 <= k-min <= k-max <= n and k-step >= 1");
        }
        o.default_format = "csv";
        Table t{"partitions.fig2", {"k", "d", "ratio"}, {}, {{"n", num(n)}}};
        json dens = json::array();
        json rows = json::array();
        for (int d : d_values(a.d_list, {2, 3, 4, 5, 10})) {
            auto counts = count_table(n, d);
            BigInt den = counts[n] - counts[3];
            if (den == 0) {
                throw std::domain_error("ratio undefined: count(n, d) == count(3, d)");
            }
            dens.push_back({{"d", d}, {"denominator", big_json(den)}});
            t.notes.push_back({"denominator d=" + std::to_string(d), den.str()});
            for (int k = k_min; k <= k_max; k += a.k_step) {
                double v = Ratio{counts[k] - counts[3], den}.value();
                t.rows.push_back({num(k), num(d), num(v)});
                rows.push_back({k, d, v});
            }
        }
        o.data = {{"n", n}, {"denominators", dens}, {"columns", {"k", "d", "ratio"}}, {"rows", rows}};
        o.tables.push_back(t);
    } else if (a.fig3) {
        int k_max = a.k_max < 0 ? 60 : a.k_max;
        int k_min = a.k_min < 0 ? 0 : a.k_min;
        if (k_min > k_max || a.k_step < 1) {
            throw UsageError("--fig3 needs k-min <= k-max and k-step >= 1");
        }
        o.default_format = "csv";
        Table t{"partitions.fig3", {"k", "d", "count"}, {}, {}};
        json rows = json::array();
        for (int d : d_values(a.d_list, {2, 3, 4})) {
            auto counts = count_table(k_max, d);
            for (int k = k_min; k <= k_max; k += a.k_step) {
                t.rows.push_back({num(k), num(d), counts[k].str()});
                rows.push_back({k, d, big_json(counts[k])});
            }
        }
        o.data = {{"columns", {"k", "d", "count"}}, {"rows", rows}};
        o.tables.push_back(t);
    } else if (a.monotonic) {
        int k_max = a.k_max < 0 ? 200 : a.k_max;
        Table t{"partitions.monotonic", {"d", "k_max", "ok", "equal_steps", "violations"}, {}, {}};
        json reps = json::array();
        bool all_ok = true;
        for (int d : d_values(a.d_list, {2, 3, 4, 5, 6, 7, 8, 9, 10})) {
            auto r = check_monotonicity(d, k_max);
            all_ok &= r.ok();
            reps.push_back(to_json(r));
            t.rows.push_back({num(d), num(k_max), yes_no(r.ok()), num((int)r.equal_steps.size()),
                              num((int)r.violations.size())});
        }
        o.data = {{"reports", reps}};
        o.tables.push_back(t);
        o.verdict = all_ok ? "ok" : "violated";
    } else if (a.facts) {
        int m = require(a.m, "--m");
        int d = require(a.d, "--d");
        auto r = check_facts(m, d);
        o.data = to_json(r);
        Table t{"partitions.facts", {"fact", "lambda", "detail"}, {}, {}};
        for (const auto &c : r.counterexamples) {
            t.rows.push_back({num(c.fact), c.lambda.str(), c.detail});
        }
        t.notes = {{"fact1", yes_no(r.fact_holds(1))}, {"fact2", yes_no(r.fact_holds(2))},
                   {"fact3", yes_no(r.fact_holds(3))}};
        o.tables.push_back(t);
        o.verdict = r.all_hold() ? "hold" : "fail";
    } else {
        if (a.shape.empty()) {
            throw UsageError("--dims needs --shape");
        }
        YoungDiagram lam = parse_shape(a.shape);
        o.data = {{"shape", to_json(lam)}, {"dim_M", dim_M(lam)}, {"content_sum", content_sum(lam)}};
        Table t{"partitions.dims", {"shape", "dim_M", "content_sum"}, {{lam.str(), num(dim_M(lam)),
                                                                         num(content_sum(lam))}}, {}};
        if (a.d >= 0) {
            o.data["d"] = a.d;
            o.data["dim_Q"] = dim_Q(lam, a.d);
            t.header.push_back("dim_Q");
            t.rows[0].push_back(num(dim_Q(lam, a.d)));
        }
        o.tables.push_back(t);
        o.verdict = num(dim_M(lam));
    }
    return o;
}

// ---------------------------------------------------------------------- rep

struct RepArgs {
    std::string shape, perm, twin;
    bool character = false;
};

Output cmd_rep(const RepArgs &a, const RunConfig &) {
    if (a.shape.empty()) {
        throw UsageError("rep: --shape is required");
    }
    YoungDiagram lam = parse_shape(a.shape);
    if (lam.n() > 10) {
        throw SizeGuardError("rep: shapes are limited to n <= 10");
    }
    auto rep = build_irrep(lam);
    Output o;
    if (!a.twin.empty()) {
        YoungDiagram mu = parse_shape(a.twin);
        auto tw = find_twisted_intertwiner(lam, mu);
        o.data = {{"a", to_json(lam)}, {"b", to_json(mu)}, {"exists", tw.exists}};
        o.verdict = tw.exists ? "exists" : "none";
        if (tw.exists) {
            auto rep_b = build_irrep(mu);
            double worst = 0;
            if (lam.n() <= 7) {
                for (const auto &s : all_permutations(lam.n())) {
                    Eigen::MatrixXd lhs = tw.J * rep_matrix(*rep, s) * tw.J.transpose();
                    Eigen::MatrixXd rhs = s.sign() * rep_matrix(*rep_b, s);
                    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
                }
                o.data["max_residual"] = worst;
            }
            o.data["J"] = matrix_json(tw.J);
            o.tables.push_back(matrix_table("rep.intertwiner", tw.J));
        } else {
            o.tables.push_back({"rep.intertwiner", {"exists"}, {{"false"}}, {}});
        }
        return o;
    }
    if (!a.perm.empty()) {
        Permutation s = parse_perm(a.perm);
        if (s.size() != lam.n()) {
            throw UsageError("rep: --perm must permute " + std::to_string(lam.n()) + " points");
        }
        if (a.character) {
            double chi = character(lam, s);
            o.data = {{"shape", to_json(lam)}, {"perm", s.one_line()}, {"character", chi}};
            o.tables.push_back({"rep.character", {"shape", "perm", "character"}, {{lam.str(), s.str(), num(chi)}}, {}});
            o.verdict = num(chi);
            return o;
        }
        Eigen::MatrixXd m = rep_matrix(*rep, s);
        o.data = {{"shape", to_json(lam)}, {"perm", s.one_line()}, {"dim", rep->dim()}, {"matrix", matrix_json(m)}};
        o.tables.push_back(matrix_table("rep.matrix", m));
        return o;
    }
    json basis = json::array();
    Table tb{"rep.basis", {"index", "tableau"}, {}, {}};
    for (int i = 0; i < rep->dim(); i++) {
        auto rows = rep->basis()[i].rows();
        basis.push_back(rows);
        std::string s;
        for (std::size_t r = 0; r < rows.size(); r++) {
            s += r ? "/" : "";
            for (std::size_t c = 0; c < rows[r].size(); c++) {
                s += (c ? " " : "") + std::to_string(rows[r][c]);
            }
        }
        tb.rows.push_back({num(i), s});
    }
    json gens = json::array();
    o.tables.push_back(tb);
    for (int i = 0; i + 1 < lam.n(); i++) {
        Eigen::MatrixXd g = rep->generator(i);
        gens.push_back(matrix_json(g));
        Table t = matrix_table("rep.generator", g);
        t.notes.push_back({"transposition", "(" + std::to_string(i + 1) + " " + std::to_string(i + 2) + ")"});
        o.tables.push_back(t);
    }
    o.data = {{"shape", to_json(lam)}, {"dim", rep->dim()}, {"basis", basis}, {"generators", gens}};
    return o;
}

// ------------------------------------------------------------------ closure

struct ClosureArgs {
    int n = -1, d = -1, k = -1;
    bool with_center = false, with_derived = false, audit = false;
    std::string n_list;
};

void guard_closure(int n, int d) {
    if (n < 1 || d < 1) {
        throw UsageError("--n and --d must be positive");
    }
    if (n > kMaxClosureN) {
        throw SizeGuardError("closure is limited to n <= " + std::to_string(kMaxClosureN));
    }
    int ambient = SectorLayout::schur_weyl(n, d)->real_dim();
    if (ambient > kMaxClosureAmbient) {
        throw SizeGuardError("closure ambient dimension " + std::to_string(ambient) + " exceeds the guard of " +
                             std::to_string(kMaxClosureAmbient));
    }
}

Output cmd_closure(const ClosureArgs &a, const RunConfig &cfg) {
    int d = require(a.d, "--d");
    int k = require(a.k, "--k");
    Output o;
    if (a.audit) {
        auto ns = parse_int_list(a.n_list.empty() ? std::to_string(require(a.n, "--n")) : a.n_list);
        for (int n : ns) {
            guard_closure(n, d);
        }
        auto rows = gap_audit(ns, d, k, cfg.tol);
        Table t{"closure.audit", {"n", "closure_dim", "full_dim", "gap", "expected_dim", "matches", "proper"}, {}, {}};
        json js = json::array();
        for (const auto &r : rows) {
            t.rows.push_back({num(r.n), num(r.closure_dim), num(r.full_dim), r.gap.str(), num(r.expected_dim),
                              yes_no(r.matches), yes_no(r.proper_ok)});
            js.push_back({{"n", r.n},
                          {"closure_dim", r.closure_dim},
                          {"full_dim", r.full_dim},
                          {"gap", big_json(r.gap)},
                          {"expected_dim", r.expected_dim},
                          {"matches", r.matches},
                          {"proper", r.proper_ok}});
            if (!r.matches || !r.proper_ok) {
                o.assertions_ok = false;
                o.failure += "n=" + std::to_string(r.n) + ": closure dim " + std::to_string(r.closure_dim) +
                             ", expected " + std::to_string(r.expected_dim) + "\n";
            }
        }
        o.data = {{"d", d}, {"k", k}, {"tol", cfg.tol}, {"rows", js}};
        o.tables.push_back(t);
        return o;
    }
    int n = require(a.n, "--n");
    guard_closure(n, d);
    auto gens = local_generators(n, d, k);
    auto basis = closure(gens, cfg.tol, cfg.max_dim);
    o.data = {{"n", n},
              {"d", d},
              {"k", k},
              {"tol", cfg.tol},
              {"generators", (int)gens.size()},
              {"dim", basis.dim()},
              {"ambient_dim", basis.ambient_dim()},
              {"closed", basis.closed}};
    Table t{"closure.summary", {"n", "d", "k", "generators", "dim", "ambient_dim", "closed"}, {}, {}};
    t.rows.push_back({num(n), num(d), num(k), num((int)gens.size()), num(basis.dim()), num(basis.ambient_dim()),
                      yes_no(basis.closed)});
    if (a.with_center) {
        int c = center(basis).dim();
        o.data["center_dim"] = c;
        t.header.push_back("center_dim");
        t.rows[0].push_back(num(c));
    }
    if (a.with_derived) {
        int dd = derived_dimension(basis);
        o.data["derived_dim"] = dd;
        t.header.push_back("derived_dim");
        t.rows[0].push_back(num(dd));
    }
    o.tables.push_back(t);
    o.verdict = std::to_string(basis.dim());
    return o;
}

// -------------------------------------------------------------------- check

struct CheckArgs {
    std::string mode;
    int n = -1, d = -1, k = -1;
    std::string gate, input;
    int dim_sub = -1, dim_full = -1;
    bool no_extras = false;
};

BlockOperator load_operator(const std::string &path, int n, int d) {
    BlockOperator op = block_operator_from_json(read_json_file(path));
    if (op.n() != n || (d >= 0 && op.d() != d)) {
        throw UsageError("operator in " + path + " has the wrong n or d");
    }
    return op;
}

BlockOperator named_hamiltonian(const std::string &gate, int n, int d) {
    const cd minus_i(0, -1);
    if (gate == "rplus") {
        return reflection_generator(n, d, {1, 2, 3}, +1) * minus_i;
    }
    if (gate == "rminus") {
        return reflection_generator(n, d, {1, 2, 3}, -1) * minus_i;
    }
    if (gate == "swap12") {
        return embed_permutation(n, d, Permutation::transposition(n, 1, 2));
    }
    if (gate == "cycle") {
        auto c = Permutation::cycle(n, {1, 2, 3});
        return embed_permutation(n, d, c) + embed_permutation(n, d, c.inverse());
    }
    throw UsageError("unknown --gate '" + gate + "' (rplus, rminus, swap12, cycle)");
}

// exp(iH) for the named Hamiltonian, with H = pi * projector for rplus/rminus.
BlockOperator named_unitary(const std::string &gate, int n, int d) {
    if (gate == "swap12") {
        return embed_permutation(n, d, Permutation::transposition(n, 1, 2));
    }
    if (gate == "cycle") {
        return embed_permutation(n, d, Permutation::cycle(n, {1, 2, 3}));
    }
    return exp_anti_hermitian(named_hamiltonian(gate, n, d) * cd(0, 1));
}

Output cmd_check(const CheckArgs &a, const RunConfig &cfg) {
    Output o;
    if (a.mode == "semiuni") {
        int n = require(a.n, "--n");
        int d = require(a.d, "--d");
        int k = require(a.k, "--k");
        guard_closure(n, d);
        SemiOptions opts;
        opts.tol = cfg.tol;
        opts.max_dim = cfg.max_dim;
        opts.seed = cfg.seed;
        opts.with_center = opts.with_derived = opts.with_correlations = !a.no_extras;
        auto rep = check_semiuniversality(n, d, k, opts);
        o.data = to_json(rep);
        std::string verdict = !rep.closed ? "undetermined" : rep.verdict ? "semi-universal" : "not-semi-universal";
        Table s{"check.semiuni.sectors", {"shape", "m", "rank", "required", "condA"}, {}, {}};
        s.notes = {{"verdict", verdict},
                   {"dim", num(rep.dim)},
                   {"expected_dim", num(rep.expected_dim)},
                   {"ambient_dim", num(rep.ambient_dim)}};
        for (const auto &c : rep.sectors) {
            s.rows.push_back({c.shape.str(), num(c.m), num(c.rank), num(c.required), yes_no(c.holds)});
        }
        Table p{"check.semiuni.pairs", {"shape_a", "shape_b", "m", "rank", "verdict", "witness_a", "witness_b"}, {}, {}};
        for (const auto &e : rep.pairs) {
            p.rows.push_back({e.result.shape_a.str(), e.result.shape_b.str(), num(e.result.m_a), num(e.result.rank),
                              e.status(), num(e.result.witness_trace_a), num(e.result.witness_trace_b)});
        }
        o.tables = {s, p};
        o.verdict = verdict;
    } else if (a.mode == "vdet") {
        int d = require(a.d, "--d");
        BlockOperator v = a.input.empty() ? named_unitary(a.gate.empty() ? "rplus" : a.gate, 3, d)
                                          : load_operator(a.input, 3, d);
        auto rep = classify_three_qudit_unitary(v);
        o.data = to_json(rep);
        o.tables.push_back({"check.vdet",
                            {"d", "in_v2", "trivial", "phase_gap"},
                            {{num(d), yes_no(rep.in_v2), yes_no(rep.trivial), num(rep.phase_gap)}},
                            {}});
        o.verdict = rep.in_v2 ? "in-v2" : "not-in-v2";
    } else if (a.mode == "trhc") {
        int d = require(a.d, "--d");
        BlockOperator h = a.input.empty() ? named_hamiltonian(a.gate.empty() ? "rplus" : a.gate, 3, d)
                                          : load_operator(a.input, 3, d);
        auto rep = hamiltonian_in_v23(h);
        o.data = to_json(rep);
        o.data["d"] = d;
        o.tables.push_back({"check.trhc",
                            {"d", "in_v2", "trace_hc", "bound"},
                            {{num(d), yes_no(rep.in_v2), num(rep.trace_hc), num(rep.bound)}},
                            {}});
        o.verdict = rep.in_v2 ? "in-v2" : "not-in-v2";
    } else if (a.mode == "gate4") {
        int d = require(a.d, "--d");
        BlockOperator y = a.input.empty() ? named_unitary(a.gate.empty() ? "rplus" : a.gate, 4, d)
                                          : load_operator(a.input, 4, d);
        auto rep = gate_breaks_constraint(y);
        o.data = to_json(rep);
        o.data["d"] = d;
        o.tables.push_back({"check.gate4",
                            {"d", "breaks", "min_distance", "threshold", "trace_31", "trace_211"},
                            {{num(d), yes_no(rep.breaks), num(rep.min_distance), num(rep.threshold),
                              num(rep.trace_31), num(rep.trace_211)}},
                            {}});
        o.verdict = rep.breaks ? "breaks" : "preserves";
    } else if (a.mode == "extension") {
        int sub = require(a.dim_sub, "--dim-sub");
        int full = require(a.dim_full, "--dim-full");
        if (full > 40 || sub < 2 || sub >= full) {
            throw SizeGuardError("extension needs 2 <= dim-sub < dim-full <= 40");
        }
        auto rep = validate_irreducible_extension(sub, full, cfg.seed);
        o.data = {{"dim_sub", rep.dim_sub},           {"dim_full", rep.dim_full},
                  {"attempts", rep.attempts},         {"irreducible", rep.irreducible},
                  {"closure_dim", rep.closure_dim},   {"expected_dim", rep.expected_dim},
                  {"holds", rep.holds}};
        o.tables.push_back({"check.extension",
                            {"dim_sub", "dim_full", "attempts", "irreducible", "closure_dim", "expected_dim", "holds"},
                            {{num(sub), num(full), num(rep.attempts), yes_no(rep.irreducible), num(rep.closure_dim),
                              num(rep.expected_dim), yes_no(rep.holds)}},
                            {}});
        if (rep.irreducible && !rep.holds) {
            o.assertions_ok = false;
            o.failure = "irreducible instance closed to dimension " + std::to_string(rep.closure_dim) + ", expected " +
                        std::to_string(rep.expected_dim) + "\n";
        }
        o.verdict = rep.holds ? "holds" : "fails";
    } else {
        throw UsageError("check: --mode must be semiuni, vdet, trhc, gate4 or extension");
    }
    return o;
}

// ------------------------------------------------------------------ ancilla

struct AncillaArgs {
    int pair = -1;
    bool wedge = false, centerless = false;
    int n = -1, d = -1;
    std::string hamiltonian;
};

Output cmd_ancilla(const AncillaArgs &a, const RunConfig &cfg) {
    int modes = (a.pair >= 0) + a.wedge + a.centerless;
    if (modes != 1) {
        throw UsageError("ancilla: choose exactly one of --pair, --wedge, --centerless");
    }
    Output o;
    if (a.pair >= 0) {
        if (a.pair != 1 && a.pair != 2) {
            throw UsageError("--pair must be 1 or 2");
        }
        std::vector<int> ds = a.d >= 0 ? std::vector<int>{a.d} : std::vector<int>{2, 3, 4};
        Table t{"ancilla.pair", {"pair", "d", "eigen", "sym", "anti", "square", "passes"}, {}, {}};
        json reps = json::array();
        for (int d : ds) {
            auto r = verify_ancilla_pair(a.pair, d);
            reps.push_back(to_json(r));
            t.rows.push_back({num(a.pair), num(d), num(r.eigen_residual), num(r.sym_residual), num(r.anti_residual),
                              num(r.square_residual), yes_no(r.passes)});
            if (!r.passes) {
                o.assertions_ok = false;
                o.failure += "pair " + std::to_string(a.pair) + " d=" + std::to_string(d) + ": eigen " +
                             num(r.eigen_residual) + ", sym " + num(r.sym_residual) + ", anti " +
                             num(r.anti_residual) + ", square " + num(r.square_residual) + "\n";
            }
        }
        o.data = {{"reports", reps}};
        o.tables.push_back(t);
    } else if (a.wedge) {
        int d = require(a.d, "--d");
        if (d != 3 && d != 4) {
            throw UsageError("--wedge supports d = 3 and d = 4");
        }
        auto r = verify_wedge_eigen(d);
        o.data = to_json(r);
        Table t{"ancilla.wedge", {"shape", "weight", "residual"}, {}, {{"d", num(d)}, {"qudits", num(r.m)}}};
        const char *names[3] = {"[3]", "[2,1]", "[1,1,1]"};
        for (int i = 0; i < 3; i++) {
            t.rows.push_back({names[i], num(r.weights[i]), num(r.residuals[i])});
        }
        o.tables.push_back(t);
        if (!r.passes) {
            o.assertions_ok = false;
            o.failure = "wedge residuals " + num(r.residuals[0]) + ", " + num(r.residuals[1]) + ", " +
                        num(r.residuals[2]) + "\n";
        }
    } else {
        int n_sys = require(a.n, "--n");
        int d = require(a.d, "--d");
        if (n_sys < 1 || n_sys + 3 > 7 || d < 2 || d > 3) {
            throw SizeGuardError("--centerless needs 1 <= n <= 4 system qudits and d in {2, 3}");
        }
        std::string which = a.hamiltonian.empty() ? (n_sys == 2 ? "swap" : "identity") : a.hamiltonian;
        int dim = 1;
        for (int i = 0; i < n_sys; i++) {
            dim *= d;
        }
        Eigen::MatrixXcd h;
        if (which == "identity") {
            h = Eigen::MatrixXcd::Identity(dim, dim);
        } else if (which == "swap") {
            if (n_sys != 2) {
                throw UsageError("--hamiltonian swap needs --n 2");
            }
            h = swap_matrix(d);
        } else {
            throw UsageError("--hamiltonian must be identity or swap");
        }
        auto r = verify_centerless_hamiltonian(n_sys, d, h, cfg.seed);
        o.data = to_json(r);
        o.data["hamiltonian"] = which;
        Table t{"ancilla.centerless", {"shape", "abs_trace"}, {}, {}};
        for (const auto &[lam, tr] : r.sector_traces) {
            t.rows.push_back({lam.str(), num(tr)});
        }
        t.notes = {{"max_commutator", num(r.max_commutator)},
                   {"centerless", yes_no(r.centerless_ok)},
                   {"invariant", yes_no(r.invariant_ok)}};
        o.tables.push_back(t);
        if (!r.passes()) {
            o.assertions_ok = false;
            o.failure = "centerless: max trace " + num(r.max_trace) + ", max commutator " + num(r.max_commutator) + "\n";
        }
    }
    return o;
}

// ------------------------------------------------------------------- design

struct DesignArgs {
    int n = -1, d = -1;
    bool mu = false, two_design = false;
};

Output cmd_design(const DesignArgs &a, const RunConfig &cfg) {
    int n = require(a.n, "--n");
    Output o;
    if (a.mu && a.two_design) {
        throw UsageError("design: --mu and --two-design are exclusive");
    }
    if (a.mu) {
        if (n > 60) {
            throw SizeGuardError("--mu is limited to n <= 60");
        }
        auto r = verify_mu_projectors(n);
        o.data = to_json(r);
        Table t{"design.mu", {"shape", "b2", "a0_times_2n", "a1_times_2n"}, {}, {}};
        for (const auto &row : r.rows) {
            t.rows.push_back({row.shape.str(), num(row.b2), num(row.a0_times_2n), num(row.a1_times_2n)});
        }
        t.notes = {{"identities_hold", yes_no(r.identities_hold)}};
        o.tables.push_back(t);
        if (!r.identities_hold) {
            o.assertions_ok = false;
            o.failure = "A0/A1 identities fail at n=" + std::to_string(n) + "\n";
        }
        return o;
    }
    int d = require(a.d, "--d");
    if (a.two_design) {
        guard_closure(n, d);
        auto w = two_design_failure(n, d, cfg.tol);
        json pairs = json::array();
        Table t{"design.two_design", {"shape_a", "shape_b"}, {}, {{"semi_universal", yes_no(w.semi_universal)}}};
        for (const auto &[x, y] : w.pairs) {
            pairs.push_back({to_json(x), to_json(y)});
            t.rows.push_back({x.str(), y.str()});
        }
        o.data = {{"n", n}, {"d", d}, {"semi_universal", w.semi_universal}, {"correlated_pairs", pairs}};
        o.tables.push_back(t);
        o.verdict = w.pairs.empty() ? "no-witness" : "not-2-design";
        return o;
    }
    if (n > 60) {
        throw SizeGuardError("design is limited to n <= 60");
    }
    auto r = design_order(n, d);
    o.data = to_json(r);
    Table t{"design.sectors", {"shape", "dim"}, {}, {}};
    for (const auto &[dim, lam] : r.sector_dims) {
        t.rows.push_back({lam.str(), num(dim)});
    }
    std::string shapes;
    for (const auto &s : r.third_min_shapes) {
        shapes += (shapes.empty() ? "" : " ") + s.str();
    }
    t.notes = {{"third_min", num(r.third_min)},
               {"third_min_shapes", shapes},
               {"t_max", num(r.t_max)},
               {"hypotheses_hold", yes_no(r.hypotheses_hold)},
               {"matches_formula", yes_no(r.matches_formula)}};
    o.tables.push_back(t);
    o.verdict = num(r.t_max);
    return o;
}

int emit(const Output &o, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    std::string format = cfg.format.empty() ? o.default_format : cfg.format;
    std::ostringstream text;
    if (format == "json") {
        text << o.data.dump(2) << '\n';
    } else if (format == "csv") {
        render_csv(o, text);
    } else {
        render_table(o, text);
    }
    if (cfg.out.empty()) {
        out << text.str();
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            err << "error: cannot write " << cfg.out << '\n';
            return kExitUsage;
        }
        f << text.str();
    }
    if (!o.assertions_ok) {
        err << "verification failed\n" << o.failure;
        return kExitAssertion;
    }
    if (!cfg.expect.empty()) {
        if (o.verdict.empty()) {
            err << "error: this command has no verdict to compare with --expect\n";
            return kExitUsage;
        }
        if (o.verdict != cfg.expect) {
            err << "expectation failed: expected " << cfg.expect << ", got " << o.verdict << '\n';
            return kExitAssertion;
        }
    }
    return kExitOk;
}

void add_common(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--tol", cfg.tol, "numerical tolerance, in (0, 1e-3]")->check(CLI::Range(0.0, 1e-3));
    sub->add_option("--max-dim", cfg.max_dim, "cap on the closure dimension (0: none)")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", cfg.seed, "seed for randomized witnesses");
    sub->add_option("--out", cfg.out, "write the result to this file");
    sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--expect", cfg.expect, "fail (exit 1) unless the verdict equals this value");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"symcirc: Schur-Weyl block computations for SU(d)-invariant qudit circuits", "symcirc"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a TOML/INI file");
    RunConfig cfg;

    PartitionArgs pa;
    auto *p = app.add_subcommand("partitions", "Young diagram counts, gaps, ratios and figure data");
    p->add_flag("--count", pa.count, "number of diagrams with n boxes and at most d rows");
    p->add_flag("--list", pa.list, "list the diagrams with their dimensions");
    p->add_flag("--gap", pa.gap, "count(n, d) - count(k, d)");
    p->add_flag("--ratio", pa.ratio, "(count(k) - count(3)) / (count(n) - count(3))");
    p->add_flag("--fig2", pa.fig2, "CSV k,d,ratio for k-min..k-max at fixed n (default 10000)");
    p->add_flag("--fig3", pa.fig3, "CSV k,d,count for k = 0..k-max");
    p->add_flag("--monotonic", pa.monotonic, "check that counts increase strictly in k");
    p->add_flag("--facts", pa.facts, "check the three branching facts at m boxes");
    p->add_flag("--dims", pa.dims, "dimensions of one shape");
    p->add_option("--n", pa.n)->check(CLI::NonNegativeNumber);
    p->add_option("--k", pa.k)->check(CLI::NonNegativeNumber);
    p->add_option("--d", pa.d)->check(CLI::NonNegativeNumber);
    p->add_option("--m", pa.m)->check(CLI::PositiveNumber);
    p->add_option("--d-list", pa.d_list, "comma-separated d values");
    p->add_option("--k-min", pa.k_min)->check(CLI::NonNegativeNumber);
    p->add_option("--k-max", pa.k_max)->check(CLI::NonNegativeNumber);
    p->add_option("--k-step", pa.k_step);
    p->add_option("--k-range", pa.k_range, "k range a:b or a:b:step (overrides --k-min/--k-max/--k-step)");
    p->add_option("--shape", pa.shape, "row lengths, e.g. 3,1");
    add_common(p, cfg);

    RepArgs ra;
    auto *r = app.add_subcommand("rep", "S_n irreps in Young's orthogonal form");
    r->add_option("--shape", ra.shape, "row lengths, e.g. 3,1");
    r->add_option("--perm", ra.perm, "1-based one-line notation, e.g. 2,1,3,4");
    r->add_option("--twin", ra.twin, "find the sign-twisted intertwiner to this shape");
    r->add_flag("--character", ra.character, "print the character of --perm");
    add_common(r, cfg);

    ClosureArgs ca;
    auto *c = app.add_subcommand("closure", "Lie closure of the k-local generators");
    c->add_option("--n", ca.n);
    c->add_option("--d", ca.d);
    c->add_option("--k", ca.k)->check(CLI::PositiveNumber);
    c->add_flag("--center", ca.with_center, "also report the center dimension");
    c->add_flag("--derived", ca.with_derived, "also report the derived algebra dimension");
    c->add_flag("--audit", ca.audit, "compare dimensions with the partition-gap formula");
    c->add_option("--n-list", ca.n_list, "n values for --audit");
    add_common(c, cfg);

    CheckArgs ka;
    auto *k = app.add_subcommand("check", "universality verdicts and gate tests");
    k->add_option("--mode", ka.mode, "semiuni, vdet, trhc, gate4 or extension")->required();
    k->add_option("--n", ka.n);
    k->add_option("--d", ka.d);
    k->add_option("--k", ka.k)->check(CLI::PositiveNumber);
    k->add_option("--gate", ka.gate, "rplus, rminus, swap12 or cycle");
    k->add_option("--input", ka.input, "block operator JSON file");
    k->add_option("--dim-sub", ka.dim_sub);
    k->add_option("--dim-full", ka.dim_full);
    k->add_flag("--no-extras", ka.no_extras, "skip center, derived algebra and correlations");
    add_common(k, cfg);

    AncillaArgs aa;
    auto *an = app.add_subcommand("ancilla", "ancilla constructions on dense states");
    an->add_option("--pair", aa.pair, "ancilla pair 1 or 2");
    an->add_flag("--wedge", aa.wedge, "wedge-state eigenvector test");
    an->add_flag("--centerless", aa.centerless, "centerless Hamiltonian test");
    an->add_option("--n", aa.n, "system qudits for --centerless");
    an->add_option("--d", aa.d);
    an->add_option("--hamiltonian", aa.hamiltonian, "identity or swap");
    add_common(an, cfg);

    DesignArgs da;
    auto *de = app.add_subcommand("design", "t-design order bounds");
    de->add_option("--n", da.n);
    de->add_option("--d", da.d);
    de->add_flag("--mu", da.mu, "A0/A1 eigenvalue identities");
    de->add_flag("--two-design", da.two_design, "correlated pairs of the 2-local closure");
    add_common(de, cfg);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output o;
        if (p->parsed()) {
            o = cmd_partitions(pa, cfg);
        } else if (r->parsed()) {
            o = cmd_rep(ra, cfg);
        } else if (c->parsed()) {
            o = cmd_closure(ca, cfg);
        } else if (k->parsed()) {
            o = cmd_check(ka, cfg);
        } else if (an->parsed()) {
            o = cmd_ancilla(aa, cfg);
        } else {
            o = cmd_design(da, cfg);
        }
        return emit(o, cfg, out, err);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "failure: " << e.what() << '\n';
        return kExitAssertion;
    }
}

}  // namespace symcirc

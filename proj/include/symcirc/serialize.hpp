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

#ifndef SYMCIRC_SERIALIZE_HPP
#define SYMCIRC_SERIALIZE_HPP

#include <string>

#include <Eigen/Dense>

#include "json.hpp"
#include "symcirc/blockops.hpp"
#include "symcirc/designs.hpp"
#include "symcirc/liealg.hpp"
#include "symcirc/semiuni.hpp"
#include "symcirc/tensor.hpp"

namespace symcirc {

using json = nlohmann::ordered_json;

/// 17 significant digits, the precision used by every text output.
std::string fmt17(double x);
/// Row-major CSV, one matrix row per line.
std::string matrix_csv(const Eigen::MatrixXd &m);

json to_json(const YoungDiagram &y);
YoungDiagram diagram_from_json(const json &j);
json to_json(const BlockOperator &a);
/// Reads {n, d, blocks: [{shape, re, im}]} onto the Schur-Weyl layout of (n, d).
BlockOperator block_operator_from_json(const json &j);
json to_json(const DenseState &s);
DenseState dense_state_from_json(const json &j);
json to_json(const Eigen::MatrixXcd &m);

json to_json(const SemiReport &r);
json to_json(const VdetReport &r);
json to_json(const TraceTestReport &r);
json to_json(const GateReport &r);
json to_json(const AncillaReport &r);
json to_json(const WedgeReport &r);
json to_json(const CenterlessReport &r);
json to_json(const DesignReport &r);
json to_json(const MuProjectorReport &r);
json to_json(const FactsReport &r);
json to_json(const MonotonicityReport &r);

}  // namespace symcirc

#endif

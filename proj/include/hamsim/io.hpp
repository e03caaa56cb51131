// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "hamsim/bipartite.hpp"
#include "hamsim/error_basis.hpp"
#include "hamsim/evolution.hpp"
#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"
#include "hamsim/real_matrix.hpp"
#include "hamsim/synthesis.hpp"

// JSON interchange. Matrices are {"d": n, "entries": [[re, im], ...]} in
// row-major order; composite documents embed them under named keys. Output
// is written with a fixed key order and %.17g numbers, so equal inputs give
// byte-equal output and doubles survive a round trip exactly. Parsing errors
// surface as ValidationError.
namespace hamsim::io {

// Reads a whole file, or standard input when path is "-".
std::string read_input(const std::string &path);

CMat matrix_from_json(const std::string &text);
std::vector<CMat> group_generators_from_json(const std::string &text);
PulseSequence sequence_from_json(const std::string &text);
// Plan files carry no Hamiltonian; the caller supplies it and the realized
// target is recomputed from the stored terms.
SimulationPlan plan_from_json(const std::string &text, const Hamiltonian &h);
RealMat real_matrix_from_json(const std::string &text);
// Distinguishes plan files ("terms") from sequence files ("pulses").
bool json_is_plan(const std::string &text);

std::string matrix_to_json(const CMat &m);
std::string matrices_to_json(std::size_t d, const std::vector<CMat> &mats);
std::string group_to_json(const MatrixGroup &g);
std::string sequence_to_json(const PulseSequence &seq);
// Sequence document with the decoupled Hamiltonian attached under an extra
// key; still loads as a plain sequence.
std::string decouple_to_json(const PulseSequence &seq, const CMat &h_decoupled);
std::string plan_to_json(const SimulationPlan &plan);
std::string bipartite_to_json(const BipartitePlan &plan);
std::string birkhoff_to_json(const BirkhoffDecomposition &b);
std::string transformer_to_json(bool verdict, std::size_t order, double criterion);
std::string scalar_to_json(double v);
std::string reports_to_json(bool passed, bool monotone,
                            const std::vector<EvolutionReport> &reports);

}  // namespace hamsim::io

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

#include "hamsim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "hamsim/errors.hpp"
#include "json.hpp"

namespace hamsim::io {

namespace {

using nlohmann::json;

json parse(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what());
    }
}

const json &field(const json &j, const char *key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ValidationError(std::string("missing key \"") + key + "\"");
    }
    return *it;
}

double as_number(const json &j, const char *what) {
    if (!j.is_number()) {
        throw ValidationError(std::string(what) + " is not a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ValidationError(std::string(what) + " is not finite");
    }
    return v;
}

CMat matrix_from(const json &j) {
    if (!j.is_object()) {
        throw ValidationError("matrix is not an object");
    }
    double draw = as_number(field(j, "d"), "matrix dimension");
    auto d = static_cast<std::size_t>(draw);
    if (d == 0 || static_cast<double>(d) != draw) {
        throw ValidationError("matrix dimension is not a positive integer");
    }
    const json &entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != d * d) {
        throw ValidationError("matrix entry count does not match d*d");
    }
    std::vector<cplx> a;
    a.reserve(d * d);
    for (const auto &e : entries) {
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("matrix entry is not an [re, im] pair");
        }
        a.emplace_back(as_number(e[0], "matrix entry"), as_number(e[1], "matrix entry"));
    }
    return CMat(d, std::move(a));
}

// %.17g keeps every double bit-exact through a decimal round trip.
void put_num(std::string &out, double v) {
    if (!std::isfinite(v)) {
        throw ToleranceError("refusing to write a non-finite number");
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

void put_matrix(std::string &out, const CMat &m) {
    out += "{\"d\":";
    put_num(out, static_cast<double>(m.dim()));
    out += ",\"entries\":[";
    const auto &a = m.data();
    for (std::size_t i = 0; i < a.size(); i++) {
        if (i) out += ',';
        out += '[';
        put_num(out, a[i].real());
        out += ',';
        put_num(out, a[i].imag());
        out += ']';
    }
    out += "]}";
}

}  // namespace

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

CMat matrix_from_json(const std::string &text) { return matrix_from(parse(text)); }

std::vector<CMat> group_generators_from_json(const std::string &text) {
    json j = parse(text);
    const json *list = nullptr;
    if (j.is_array()) {
        list = &j;
    } else if (j.is_object() && j.contains("generators")) {
        list = &j["generators"];
    } else if (j.is_object() && j.contains("elements")) {
        list = &j["elements"];
    } else {
        throw ValidationError(
            "expected a matrix array or an object with \"generators\"/\"elements\"");
    }
    if (!list->is_array() || list->empty()) {
        throw ValidationError("group file holds no matrices");
    }
    std::vector<CMat> out;
    out.reserve(list->size());
    for (const auto &e : *list) out.push_back(matrix_from(e));
    return out;
}

PulseSequence sequence_from_json(const std::string &text) {
    json j = parse(text);
    if (!j.is_object()) {
        throw ValidationError("sequence is not an object");
    }
    PulseSequence seq;
    seq.dim = static_cast<std::size_t>(as_number(field(j, "d"), "sequence dimension"));
    seq.overhead = as_number(field(j, "overhead"), "overhead");
    const json &cyc = field(j, "cyclic");
    if (!cyc.is_boolean()) {
        throw ValidationError("\"cyclic\" is not a boolean");
    }
    seq.cyclic = cyc.get<bool>();
    const json &pulses = field(j, "pulses");
    if (!pulses.is_array()) {
        throw ValidationError("\"pulses\" is not an array");
    }
    for (const auto &p : pulses) {
        seq.pulses.push_back(
            {matrix_from(field(p, "V")), as_number(field(p, "tau"), "tau")});
    }
    seq.validate();
    return seq;
}

SimulationPlan plan_from_json(const std::string &text, const Hamiltonian &h) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("terms")) {
        throw ValidationError("plan file has no \"terms\"");
    }
    std::string status = field(j, "status").get<std::string>();
    if (status != "success" && status != "infeasible") {
        throw ValidationError("unknown plan status \"" + status + "\"");
    }
    std::vector<PlanTerm> terms;
    for (const auto &t : field(j, "terms")) {
        if (t.contains("V")) {
            throw ValidationError("term has a right-side factor; two-sided plans "
                                  "cannot be loaded as single-system plans");
        }
        double tau = as_number(field(t, "tau"), "tau");
        CMat u = matrix_from(field(t, "U"));
        if (u.dim() != h.dim()) {
            throw ValidationError("plan term dimension does not match H");
        }
        if (tau <= 0.0) {
            throw ValidationError("plan term has non-positive weight");
        }
        terms.push_back({tau, std::move(u)});
    }
    SimulationPlan plan{status == "success" ? PlanStatus::kSuccess
                                            : PlanStatus::kInfeasible,
                        h,
                        Hamiltonian::zero(h.dim()),
                        std::move(terms),
                        0.0,
                        0.0,
                        0.0};
    for (const auto &t : plan.terms) plan.overhead += t.tau;
    // The stored target is whatever the terms realize; lower bound and
    // residual follow from that, so the file's own copies are not trusted.
    plan.h_target = average_hamiltonian(plan, h);
    if (!plan.h_target.is_zero()) {
        plan.lower_bound = majorization_lower_bound(h, plan.h_target);
    }
    return plan;
}

RealMat real_matrix_from_json(const std::string &text) {
    json j = parse(text);
    if (!j.is_array() || j.empty()) {
        throw ValidationError("expected a non-empty array of rows");
    }
    std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<double> data;
    for (std::size_t r = 0; r < rows; r++) {
        const json &row = j[r];
        if (!row.is_array() || row.empty()) {
            throw ValidationError("matrix row is not a non-empty array");
        }
        if (r == 0) {
            cols = row.size();
            data.reserve(rows * cols);
        } else if (row.size() != cols) {
            throw ValidationError("matrix rows have different lengths");
        }
        for (const auto &e : row) data.push_back(as_number(e, "matrix entry"));
    }
    return RealMat(rows, cols, std::move(data));
}

bool json_is_plan(const std::string &text) {
    json j = parse(text);
    if (j.is_object() && j.contains("terms")) return true;
    if (j.is_object() && j.contains("pulses")) return false;
    throw ValidationError("input is neither a plan (\"terms\") nor a sequence "
                          "(\"pulses\")");
}

std::string matrix_to_json(const CMat &m) {
    std::string out;
    put_matrix(out, m);
    out += '\n';
    return out;
}

std::string matrices_to_json(std::size_t d, const std::vector<CMat> &mats) {
    std::string out = "{\"d\":";
    put_num(out, static_cast<double>(d));
    out += ",\"elements\":[";
    for (std::size_t i = 0; i < mats.size(); i++) {
        if (i) out += ',';
        put_matrix(out, mats[i]);
    }
    out += "]}\n";
    return out;
}

std::string group_to_json(const MatrixGroup &g) {
    std::string out = "{\"d\":";
    put_num(out, static_cast<double>(g.dim));
    out += ",\"elements\":[";
    for (std::size_t i = 0; i < g.elements.size(); i++) {
        if (i) out += ',';
        put_matrix(out, g.elements[i]);
    }
    out += "],\"generators\":[";
    for (std::size_t i = 0; i < g.generators.size(); i++) {
        if (i) out += ',';
        put_matrix(out, g.elements[g.generators[i]]);
    }
    out += "]}\n";
    return out;
}

namespace {

void put_sequence_body(std::string &out, const PulseSequence &seq) {
    out += "\"d\":";
    put_num(out, static_cast<double>(seq.dim));
    out += ",\"overhead\":";
    put_num(out, seq.overhead);
    out += ",\"cyclic\":";
    out += seq.cyclic ? "true" : "false";
    out += ",\"pulses\":[";
    for (std::size_t i = 0; i < seq.pulses.size(); i++) {
        if (i) out += ',';
        out += "{\"V\":";
        put_matrix(out, seq.pulses[i].v);
        out += ",\"tau\":";
        put_num(out, seq.pulses[i].tau);
        out += '}';
    }
    out += ']';
}

}  // namespace

std::string sequence_to_json(const PulseSequence &seq) {
    std::string out = "{";
    put_sequence_body(out, seq);
    out += "}\n";
    return out;
}

std::string decouple_to_json(const PulseSequence &seq, const CMat &h_decoupled) {
    std::string out = "{";
    put_sequence_body(out, seq);
    out += ",\"h_decoupled\":";
    put_matrix(out, h_decoupled);
    out += "}\n";
    return out;
}

std::string plan_to_json(const SimulationPlan &plan) {
    std::string out = "{\"status\":\"";
    out += plan.status == PlanStatus::kSuccess ? "success" : "infeasible";
    out += "\",\"d\":";
    put_num(out, static_cast<double>(plan.h.dim()));
    out += ",\"overhead\":";
    put_num(out, plan.overhead);
    out += ",\"lower_bound\":";
    put_num(out, plan.lower_bound);
    out += ",\"residual\":";
    put_num(out, plan.residual);
    out += ",\"terms\":[";
    for (std::size_t i = 0; i < plan.terms.size(); i++) {
        if (i) out += ',';
        out += "{\"tau\":";
        put_num(out, plan.terms[i].tau);
        out += ",\"U\":";
        put_matrix(out, plan.terms[i].u);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string bipartite_to_json(const BipartitePlan &plan) {
    std::string out = "{\"d\":";
    put_num(out, static_cast<double>(plan.dim_local));
    out += ",\"overhead\":";
    put_num(out, plan.overhead());
    out += ",\"residual\":";
    put_num(out, plan.residual);
    out += ",\"terms\":[";
    for (std::size_t i = 0; i < plan.terms.size(); i++) {
        if (i) out += ',';
        out += "{\"tau\":";
        put_num(out, plan.terms[i].tau);
        out += ",\"U\":";
        put_matrix(out, plan.terms[i].u);
        out += ",\"V\":";
        put_matrix(out, plan.terms[i].v);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string birkhoff_to_json(const BirkhoffDecomposition &b) {
    std::string out = "{\"n\":";
    put_num(out, static_cast<double>(b.n));
    out += ",\"terms\":[";
    for (std::size_t i = 0; i < b.terms.size(); i++) {
        if (i) out += ',';
        out += "{\"p\":";
        put_num(out, b.terms[i].p);
        out += ",\"perm\":[";
        for (std::size_t k = 0; k < b.terms[i].perm.size(); k++) {
            if (k) out += ',';
            put_num(out, static_cast<double>(b.terms[i].perm[k]));
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

std::string transformer_to_json(bool verdict, std::size_t order, double criterion) {
    std::string out = "{\"is_transformer\":";
    out += verdict ? "true" : "false";
    out += ",\"order\":";
    put_num(out, static_cast<double>(order));
    out += ",\"criterion\":";
    put_num(out, criterion);
    out += "}\n";
    return out;
}

std::string scalar_to_json(double v) {
    std::string out;
    put_num(out, v);
    out += '\n';
    return out;
}

std::string reports_to_json(bool passed, bool monotone,
                            const std::vector<EvolutionReport> &reports) {
    std::string out = "{\"passed\":";
    out += passed ? "true" : "false";
    out += ",\"monotone\":";
    out += monotone ? "true" : "false";
    out += ",\"reports\":[";
    for (std::size_t i = 0; i < reports.size(); i++) {
        const auto &r = reports[i];
        if (i) out += ',';
        out += "{\"t\":";
        put_num(out, r.t);
        out += ",\"error\":";
        put_num(out, r.error);
        out += ",\"error_aligned\":";
        put_num(out, r.error_aligned);
        out += ",\"scaling_ratio\":";
        put_num(out, r.scaling_ratio);
        out += ",\"exact\":";
        put_matrix(out, r.exact);
        out += ",\"sequenced\":";
        put_matrix(out, r.sequenced);
        out += '}';
    }
    out += "]}\n";
    return out;
}

}  // namespace hamsim::io

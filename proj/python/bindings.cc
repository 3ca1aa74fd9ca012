// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0
//
// Python extension: JSON-text in, JSON-text out; lambda_forge/__init__.py converts to dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lambda_forge/json_io.h"

namespace py = pybind11;
namespace lf = lambda_forge;
using lf::json;

namespace {

std::string membership(const std::string &op) {
    auto cert = lf::membership(lf::operator_from_json(lf::parse_json_text(op)));
    return lf::certificate_to_json(cert).dump();
}

std::string is_vertex(const std::string &op) {
    return lf::vertex_report_to_json(lf::is_vertex(lf::operator_from_json(lf::parse_json_text(op)))).dump();
}

std::string stabilizer_states(int n) {
    if (n < 1 || n > 3) throw std::invalid_argument("n must be 1..3");
    json arr = json::array();
    for (const auto &st : lf::stabilizer_states(n)) arr.push_back(lf::stabilizer_to_json(st));
    return arr.dump();
}

std::string cnc_vertices(int n) {
    if (n < 1 || n > 2) throw std::invalid_argument("n must be 1 or 2");
    json arr = json::array();
    for (const auto &c : lf::enumerate_cnc_vertices(n)) arr.push_back(lf::cnc_to_json(c));
    return arr.dump();
}

std::string cnc_operator(const std::string &set) {
    return lf::operator_to_json(lf::build_cnc_operator(lf::cnc_from_json(lf::parse_json_text(set)))).dump();
}

std::string orbit_family() {
    json arr = json::array();
    for (const auto &p : lf::enumerate_family_params()) arr.push_back(lf::orbit_params_to_json(p));
    return arr.dump();
}

std::string orbit_vertex(const std::string &params) {
    return lf::operator_to_json(lf::build_orbit_vertex(lf::orbit_params_from_json(lf::parse_json_text(params)))).dump();
}

std::string alpha0() {
    return json{{"params", lf::orbit_params_to_json(lf::alpha0_params())},
                {"operator", lf::operator_to_json(lf::build_orbit_vertex(lf::alpha0_params()))}}
        .dump();
}

std::string phi(const std::string &op, const std::string &params) {
    lf::QOperator x = lf::operator_from_json(lf::parse_json_text(op));
    lf::PhiParams p = lf::phi_params_from_json(lf::parse_json_text(params));
    return lf::operator_to_json(lf::phi_general(x, p)).dump();
}

std::string project(const std::string &op, const std::string &label, int s) {
    lf::QOperator a = lf::operator_from_json(lf::parse_json_text(op));
    return lf::operator_to_json(lf::project(a, lf::PauliPoint::from_label(label), s)).dump();
}

std::string reduce(const std::string &request, const std::vector<int> &coins) {
    json in = lf::parse_json_text(request);
    lf::LiftedInstance inst = lf::lifted_from_json(in.at("instance"));
    if (!in.contains("n")) in["n"] = inst.n();
    return lf::reduced_to_json(lf::reduce_sequence(inst, lf::sequence_from_json(in), coins)).dump();
}

struct Prepared {
    lf::Mixture init;
    lf::MeasSequence seq;
    lf::SimOptions opt;
};

Prepared prepare(const std::string &circuit, bool fallback) {
    json in = lf::parse_json_text(circuit);
    Prepared p;
    p.opt.oracle_fallback = fallback;
    p.seq = lf::compile_circuit(lf::circuit_from_json(in));
    p.init = lf::mixture_from_json(in.at("initial"), p.opt);
    return p;
}

std::string simulate_exact(const std::string &circuit, bool fallback) {
    Prepared p = prepare(circuit, fallback);
    lf::Distribution d;
    {
        py::gil_scoped_release release;
        d = lf::simulate_exact(p.init, p.seq, p.opt);
    }
    return lf::distribution_to_json(d).dump();
}

std::string sample(const std::string &circuit, uint64_t seed, uint64_t shots, int jobs, bool fallback) {
    Prepared p = prepare(circuit, fallback);
    std::map<std::vector<int>, uint64_t> counts;
    {
        py::gil_scoped_release release;
        counts = lf::sample_counts(p.init, p.seq, seed, shots, jobs > 0 ? jobs : lf::default_jobs(), p.opt);
    }
    json arr = json::array();
    for (const auto &[o, c] : counts) arr.push_back(json{{"outcomes", o}, {"count", c}});
    return arr.dump();
}

std::string lemma_check(int samples, uint64_t seed) {
    auto l1 = lf::lemma1_sweep(samples, seed);
    auto l2 = lf::lemma2_sweep(samples, seed);
    auto l3 = lf::lemma3_identities();
    return json{{"lemma1", {{"checked", l1.checked}, {"failures", l1.failures.size()}}},
                {"lemma2", {{"checked", l2.checked}, {"failures", l2.failures.size()}}},
                {"lemma3", {{"checked", l3.total()}, {"failures", l3.failures.size()}}}}
        .dump();
}

std::string poset() { return lf::poset_to_json(lf::export_isotropic_poset()).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact stabilizer-polytope tools (JSON text interface)";
    py::register_exception<lf::InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);
    m.attr("SCHEMA_VERSION") = lf::kSchemaVersion;
    m.def("membership", &membership, py::arg("operator"));
    m.def("is_vertex", &is_vertex, py::arg("operator"));
    m.def("stabilizer_states", &stabilizer_states, py::arg("n"));
    m.def("cnc_vertices", &cnc_vertices, py::arg("n"));
    m.def("cnc_operator", &cnc_operator, py::arg("cnc_set"));
    m.def("orbit_family", &orbit_family);
    m.def("orbit_vertex", &orbit_vertex, py::arg("params"));
    m.def("alpha0", &alpha0);
    m.def("phi", &phi, py::arg("operator"), py::arg("params"));
    m.def("project", &project, py::arg("operator"), py::arg("label"), py::arg("outcome"));
    m.def("reduce", &reduce, py::arg("request"), py::arg("coins"));
    m.def("simulate_exact", &simulate_exact, py::arg("circuit"), py::arg("oracle_fallback") = false);
    m.def("sample", &sample, py::arg("circuit"), py::arg("seed"), py::arg("shots"), py::arg("jobs") = 0,
          py::arg("oracle_fallback") = false);
    m.def("lemma_check", &lemma_check, py::arg("samples") = 100, py::arg("seed") = 1);
    m.def("poset", &poset);
}

// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/json_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lambda_forge {

namespace {

[[noreturn]] void fail(const std::string &what) { throw std::invalid_argument(what); }

const json &member(const json &j, const char *key, const char *ctx) {
    if (!j.is_object() || !j.contains(key)) fail(std::string(ctx) + ": missing \"" + key + "\"");
    return j.at(key);
}

std::string as_string(const json &j, const char *ctx) {
    if (!j.is_string()) fail(std::string(ctx) + ": expected a string");
    return j.get<std::string>();
}

int as_int(const json &j, const char *ctx) {
    if (!j.is_number_integer()) fail(std::string(ctx) + ": expected an integer");
    return j.get<int>();
}

int as_bit(const json &j, const char *ctx) {
    int b = as_int(j, ctx);
    if (b != 0 && b != 1) fail(std::string(ctx) + ": expected 0 or 1");
    return b;
}

PauliPoint point_from(const json &j, int n, const char *ctx) {
    PauliPoint p = PauliPoint::from_label(as_string(j, ctx));
    if (n >= 0 && p.n != n) fail(std::string(ctx) + ": label \"" + p.label() + "\" has the wrong length");
    return p;
}

Rational rational_from(const json &j, const char *ctx) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    fail(std::string(ctx) + ": expected a rational string \"p/q\"");
}

}  // namespace

json field_to_json(const FieldElem &x) {
    if (x.is_rational()) return rational_to_string(x.a());
    return field_pair_to_json(x);
}

json field_pair_to_json(const FieldElem &x) {
    json j;
    j["a"] = rational_to_string(x.a());
    j["b"] = rational_to_string(x.b());
    return j;
}

json field_to_float_json(const FieldElem &x) { return x.to_double(); }

FieldElem field_from_json(const json &j) {
    if (j.is_object()) {
        Rational a = j.contains("a") ? rational_from(j.at("a"), "field element a") : Rational(0);
        Rational b = j.contains("b") ? rational_from(j.at("b"), "field element b") : Rational(0);
        return FieldElem(a, b);
    }
    return FieldElem(rational_from(j, "field element"));
}

json operator_to_json(const QOperator &a) {
    json j;
    j["schema"] = kSchemaVersion;
    j["n"] = a.n();
    json c = json::object();
    for (const auto &[v, x] : a.coeffs()) c[v.label()] = field_pair_to_json(x);
    j["coeffs"] = c;
    return j;
}

QOperator operator_from_json(const json &j) {
    int n = as_int(member(j, "n", "operator"), "operator n");
    if (n <= 0 || n > kMaxQubits) fail("operator: n out of range");
    const json &c = member(j, "coeffs", "operator");
    if (!c.is_object()) fail("operator: \"coeffs\" must be an object");
    QOperator a(n);
    for (const auto &[label, val] : c.items()) {
        PauliPoint p = PauliPoint::from_label(label);
        if (p.n != n) fail("operator: label \"" + label + "\" does not have length n");
        a.add_to(p, field_from_json(val));
    }
    return a;
}

json assignment_to_json(const ValueAssignment &g) {
    json j = json::object();
    for (const auto &[v, b] : g) j[v.label()] = b;
    return j;
}

ValueAssignment assignment_from_json(const json &j, int n) {
    if (!j.is_object()) fail("assignment: expected an object of label: bit");
    ValueAssignment g;
    for (const auto &[label, val] : j.items()) {
        PauliPoint p = PauliPoint::from_label(label);
        if (p.n != n) fail("assignment: label \"" + label + "\" has the wrong length");
        g[p] = as_bit(val, "assignment value");
    }
    return g;
}

json stabilizer_to_json(const StabilizerState &s) {
    json j;
    j["generators"] = s.generator_labels();
    return j;
}

StabilizerState stabilizer_from_json(const json &j) {
    const json &g = member(j, "generators", "stabilizer state");
    if (!g.is_array()) fail("stabilizer state: \"generators\" must be an array");
    std::vector<std::string> labels;
    for (const auto &x : g) labels.push_back(as_string(x, "generator"));
    return StabilizerState::from_generators(labels);
}

json tableau_to_json(const CliffordTableau &c) {
    json j;
    for (int k = 0; k < c.n(); k++) j["x" + std::to_string(k + 1)] = c.x_images()[size_t(k)].to_string();
    for (int k = 0; k < c.n(); k++) j["z" + std::to_string(k + 1)] = c.z_images()[size_t(k)].to_string();
    return j;
}

CliffordTableau tableau_from_json(const json &j) {
    if (!j.is_object()) fail("tableau: expected an object");
    int n = int(j.size()) / 2;
    if (n <= 0 || int(j.size()) != 2 * n) fail("tableau: needs x1..xn and z1..zn");
    std::vector<PhasedPauli> xs, zs;
    for (int k = 1; k <= n; k++) {
        std::string xk = "x" + std::to_string(k), zk = "z" + std::to_string(k);
        xs.push_back(PhasedPauli::from_string(as_string(member(j, xk.c_str(), "tableau"), "tableau image")));
        zs.push_back(PhasedPauli::from_string(as_string(member(j, zk.c_str(), "tableau"), "tableau image")));
    }
    CliffordTableau c(xs, zs);
    c.validate();
    return c;
}

json cnc_to_json(const CncSet &c) {
    json j;
    json om = json::array();
    for (const auto &v : c.omega) om.push_back(v.label());
    j["omega"] = om;
    j["gamma"] = assignment_to_json(c.gamma);
    return j;
}

CncSet cnc_from_json(const json &j) {
    const json &om = member(j, "omega", "cnc set");
    if (!om.is_array() || om.empty()) fail("cnc set: \"omega\" must be a nonempty array");
    CncSet c;
    c.n = PauliPoint::from_label(as_string(om.at(0), "omega label")).n;
    for (const auto &x : om) c.omega.insert(point_from(x, c.n, "omega label"));
    c.gamma = assignment_from_json(member(j, "gamma", "cnc set"), c.n);
    c.validate();
    return c;
}

json subspace_to_json(const Subspace &s) {
    json j = json::array();
    for (const auto &b : s.basis()) j.push_back(b.label());
    return j;
}

Subspace subspace_from_json(const json &j, int n) {
    if (!j.is_array()) fail("subspace: expected an array of basis labels");
    std::vector<PauliPoint> pts;
    for (const auto &x : j) pts.push_back(point_from(x, n, "subspace label"));
    return Subspace::span(n, pts);
}

json orbit_params_to_json(const OrbitVertexParams &p) {
    json j;
    j["I"] = subspace_to_json(p.I);
    j["gamma"] = assignment_to_json(p.gamma);
    json c = json::array();
    for (const auto &s : p.C) c.push_back(subspace_to_json(s));
    j["collection"] = c;
    j["gamma_prime"] = assignment_to_json(p.gamma_p);
    return j;
}

OrbitVertexParams orbit_params_from_json(const json &j) {
    Subspace i = subspace_from_json(member(j, "I", "orbit params"), 2);
    ValueAssignment g = assignment_from_json(member(j, "gamma", "orbit params"), 2);
    g[PauliPoint::zero(2)] = 0;
    const json &c = member(j, "collection", "orbit params");
    if (!c.is_array()) fail("orbit params: \"collection\" must be an array");
    Collection coll;
    for (const auto &s : c) coll.push_back(subspace_from_json(s, 2));
    ValueAssignment gp = assignment_from_json(member(j, "gamma_prime", "orbit params"), 2);
    gp[PauliPoint::zero(2)] = 0;
    return make_orbit_params(i, g, coll, gp);
}

json phi_params_to_json(const PhiParams &p) {
    json j;
    j["m"] = p.m;
    j["n"] = p.n;
    j["j"] = StabilizerState{p.j, restrict_assignment(p.r, p.j.element_set())}.generator_labels();
    j["tableau"] = tableau_to_json(p.tableau);
    return j;
}

PhiParams phi_params_from_json(const json &j) {
    int m = as_int(member(j, "m", "phi params"), "phi params m");
    StabilizerState st = stabilizer_from_json(json{{"generators", member(j, "j", "phi params")}});
    PhiParams p;
    if (j.contains("tableau")) {
        p.n = st.space.n();
        p.m = m;
        p.j = st.space;
        p.r = st.values;
        p.tableau = tableau_from_json(j.at("tableau"));
    } else {
        p = PhiParams::make(m, st.space, st.values);
    }
    if (j.contains("n") && as_int(j.at("n"), "phi params n") != p.n) fail("phi params: n disagrees with J");
    p.validate();
    return p;
}

json lifted_to_json(const LiftedInstance &inst) {
    json j;
    j["m"] = inst.m;
    j["sigma"] = stabilizer_to_json(inst.sigma);
    j["tableau"] = tableau_to_json(inst.u);
    return j;
}

LiftedInstance lifted_from_json(const json &j) {
    LiftedInstance inst;
    inst.m = as_int(member(j, "m", "lifted instance"), "lifted instance m");
    inst.sigma = stabilizer_from_json(member(j, "sigma", "lifted instance"));
    if (j.contains("tableau")) {
        inst.u = tableau_from_json(j.at("tableau"));
    } else {
        inst.u = CliffordTableau::identity(inst.m + inst.sigma.space.n());
    }
    inst.validate();
    return inst;
}

Descriptor descriptor_for_operator(const QOperator &a, const SimOptions &opt) {
    if (auto c = as_cnc(a)) return Descriptor::from_cnc(*c);
    if (auto p = find_orbit_params(a)) return Descriptor::from_orbit(*p);
    if (!opt.oracle_fallback) {
        fail("unsupported vertex class: operator is neither a cnc nor an orbit vertex (enable the oracle fallback)");
    }
    if (a.n() > 4) fail("oracle fallback limited to n <= 4");
    return Descriptor::from_operator(a);
}

json descriptor_to_json(const Descriptor &d) {
    json j;
    j["type"] = d.class_name();
    switch (d.kind) {
        case Descriptor::Kind::kCnc:
            j.update(cnc_to_json(d.cnc));
            break;
        case Descriptor::Kind::kOrbit:
            j.update(orbit_params_to_json(d.orbit));
            break;
        case Descriptor::Kind::kPhi: {
            j.update(lifted_to_json(d.phi.reducer.instance()));
            json fr = json::array();
            for (const auto &r : d.phi.reducer.frame()) fr.push_back(json{{"g", r.g.to_string()}, {"o", r.o.to_string()}});
            if (!fr.empty()) j["frame"] = fr;
            j["inner"] = descriptor_to_json(*d.phi.inner);
            break;
        }
        case Descriptor::Kind::kOperator:
            j.update(operator_to_json(d.op));
            break;
    }
    return j;
}

Descriptor descriptor_from_json(const json &j, const SimOptions &opt) {
    std::string type = as_string(member(j, "type", "descriptor"), "descriptor type");
    if (type == "cnc") return Descriptor::from_cnc(cnc_from_json(j));
    if (type == "stabilizer") {
        StabilizerState st = stabilizer_from_json(j);
        if (!st.space.is_maximal_isotropic()) fail("stabilizer descriptor: generators must define a pure state");
        CncSet c;
        c.n = st.space.n();
        c.omega = st.space.element_set();
        c.gamma = st.values;
        return Descriptor::from_cnc(c);
    }
    if (type == "orbit") return Descriptor::from_orbit(orbit_params_from_json(j));
    if (type == "phi") {
        LiftedInstance inst = lifted_from_json(j);
        Descriptor d = Descriptor::from_phi(inst, descriptor_from_json(member(j, "inner", "phi descriptor"), opt));
        if (j.contains("frame")) {
            std::vector<FrameRotation> frame;
            for (const auto &r : j.at("frame")) {
                frame.push_back(FrameRotation{PhasedPauli::from_string(as_string(member(r, "g", "frame"), "frame g")),
                                              PhasedPauli::from_string(as_string(member(r, "o", "frame"), "frame o"))});
            }
            d.phi.reducer.restore_frame(frame);
        }
        return d;
    }
    if (type == "operator") return descriptor_for_operator(operator_from_json(j), opt);
    fail("unsupported descriptor type \"" + type + "\"");
}

Mixture mixture_from_json(const json &j, const SimOptions &opt) {
    std::string type = as_string(member(j, "type", "initial state"), "initial state type");
    if (type == "mixture") {
        const json &comps = member(j, "components", "mixture");
        if (!comps.is_array() || comps.empty()) fail("mixture: \"components\" must be a nonempty array");
        Mixture m;
        for (const auto &c : comps) {
            m.push_back(WeightedDescriptor{field_from_json(member(c, "weight", "mixture component")),
                                           descriptor_from_json(member(c, "descriptor", "mixture component"), opt)});
        }
        return m;
    }
    if (type == "decomposition") {
        QOperator rho = operator_from_json(member(j, "state", "decomposition"));
        std::string pool_name = j.contains("pool") ? as_string(j.at("pool"), "decomposition pool") : "cnc";
        if (rho.n() > 2) fail("decomposition: pools are available for n <= 2");
        std::vector<Descriptor> pool;
        for (auto &c : enumerate_cnc_vertices(rho.n())) pool.push_back(Descriptor::from_cnc(std::move(c)));
        if (pool_name == "cnc+orbit") {
            if (rho.n() != 2) fail("decomposition: the orbit pool needs n = 2");
            for (const auto &p : enumerate_family_params()) pool.push_back(Descriptor::from_orbit(p));
        } else if (pool_name != "cnc") {
            fail("decomposition: unknown pool \"" + pool_name + "\"");
        }
        std::vector<QOperator> ops;
        for (const auto &d : pool) ops.push_back(d.to_operator());
        Decomposition dec = decompose(rho, ops);
        if (!dec.feasible) throw InfeasibleError("decomposition: state is not a convex combination of the pool");
        Mixture m;
        for (size_t i = 0; i < pool.size(); i++) {
            if (!dec.weights[i].is_zero()) m.push_back(WeightedDescriptor{dec.weights[i], pool[i]});
        }
        return m;
    }
    return {WeightedDescriptor{FieldElem(1), descriptor_from_json(j, opt)}};
}

json mixture_to_json(const Mixture &m) {
    json comps = json::array();
    for (const auto &wd : m) {
        comps.push_back(json{{"weight", field_to_json(wd.weight)}, {"descriptor", descriptor_to_json(wd.desc)}});
    }
    return json{{"type", "mixture"}, {"components", comps}};
}

json condition_to_json(const Condition &c) { return json{{"step", c.step}, {"outcome", c.outcome}}; }

namespace {

std::optional<Condition> condition_from_json(const json &st) {
    if (!st.contains("if")) return std::nullopt;
    const json &c = st.at("if");
    return Condition{as_int(member(c, "step", "condition"), "condition step"),
                     as_bit(member(c, "outcome", "condition"), "condition outcome")};
}

PhasedPauli observable_from(const json &j, int n) {
    PhasedPauli p = PhasedPauli::from_string(as_string(j, "measured label"));
    if (p.point.n != n) fail("measurement \"" + p.to_string() + "\" does not have length n");
    if (!p.is_hermitian()) fail("measurement \"" + p.to_string() + "\" is not Hermitian");
    return p;
}

}  // namespace

json sequence_to_json(const MeasSequence &s) {
    json steps = json::array();
    for (const auto &st : s.steps) {
        json e{{"measure", st.observable.to_string()}};
        if (st.cond) e["if"] = condition_to_json(*st.cond);
        steps.push_back(e);
    }
    return json{{"n", s.n}, {"steps", steps}};
}

MeasSequence sequence_from_json(const json &j) {
    MeasSequence s;
    s.n = as_int(member(j, "n", "sequence"), "sequence n");
    const json &steps = member(j, "steps", "sequence");
    if (!steps.is_array()) fail("sequence: \"steps\" must be an array");
    for (const auto &st : steps) {
        if (st.contains("gate")) fail("sequence: gates are only allowed in circuits");
        s.steps.push_back(MeasStep{observable_from(member(st, "measure", "step"), s.n), condition_from_json(st)});
    }
    s.validate();
    return s;
}

Circuit circuit_from_json(const json &j) {
    Circuit c;
    c.n = as_int(member(j, "n", "circuit"), "circuit n");
    if (c.n <= 0 || c.n > kMaxQubits) fail("circuit: n out of range");
    const json &steps = member(j, "steps", "circuit");
    if (!steps.is_array()) fail("circuit: \"steps\" must be an array");
    for (const auto &st : steps) {
        CircuitStep cs;
        if (st.contains("gate")) {
            if (st.contains("if")) fail("circuit: gates cannot be conditioned");
            cs.is_gate = true;
            cs.gate_text = as_string(st.at("gate"), "gate");
            cs.gate = parse_gate(c.n, cs.gate_text);
        } else {
            cs.measure = MeasStep{observable_from(member(st, "measure", "step"), c.n), condition_from_json(st)};
        }
        c.steps.push_back(std::move(cs));
    }
    return c;
}

json distribution_to_json(const Distribution &d, bool as_float) {
    json arr = json::array();
    for (const auto &[o, p] : d) {
        arr.push_back(json{{"outcomes", o}, {"probability", as_float ? field_to_float_json(p) : field_to_json(p)}});
    }
    return arr;
}

Distribution distribution_from_json(const json &j) {
    if (!j.is_array()) fail("distribution: expected an array");
    Distribution d;
    for (const auto &e : j) {
        std::vector<int> o;
        for (const auto &x : member(e, "outcomes", "distribution entry")) o.push_back(as_int(x, "outcome"));
        d[o] += field_from_json(member(e, "probability", "distribution entry"));
    }
    return d;
}

json transcript_to_json(const Transcript &t, bool as_float) {
    json steps = json::array();
    for (const auto &s : t.steps) {
        steps.push_back(json{{"outcome", s.outcome},
                             {"probability", as_float ? field_to_float_json(s.probability) : field_to_json(s.probability)},
                             {"kind", s.kind}});
    }
    return json{{"initial_index", t.initial_index}, {"steps", steps}};
}

json reduced_to_json(const ReducedSequence &r) {
    json steps = json::array();
    for (const auto &st : r.steps) {
        json e;
        switch (st.kind) {
            case ReducedKind::kMeasure:
                e["kind"] = "measure";
                e["measure"] = st.reduced.to_string();
                break;
            case ReducedKind::kFixed:
                e["kind"] = "fixed";
                e["outcome"] = st.fixed_outcome;
                break;
            case ReducedKind::kCoin:
                e["kind"] = "coin";
                e["stabilizer"] = st.g.to_string();
                break;
        }
        e["pulled_back"] = st.pulled.to_string();
        if (st.cond) e["if"] = condition_to_json(*st.cond);
        steps.push_back(e);
    }
    return json{{"m", r.m}, {"steps", steps}, {"coins", r.coins}};
}

json certificate_to_json(const FacetCertificate &c) {
    json j;
    j["schema"] = kSchemaVersion;
    j["member"] = c.member();
    j["min_value"] = field_to_json(c.min_value());
    json facets = json::object();
    const auto &states = stabilizer_states(c.op.n());
    for (size_t i = 0; i < states.size(); i++) facets[states[i].label()] = field_to_json(c.facet_values[i]);
    j["facets"] = facets;
    json active = json::array();
    for (size_t i : c.active_set) active.push_back(states[i].label());
    j["active"] = active;
    if (c.violation) {
        json tied = json::array();
        for (size_t i : c.minimizers()) tied.push_back(states[i].label());
        j["violation"] = json{{"state", states[*c.violation].label()},
                              {"generators", states[*c.violation].generator_labels()},
                              {"value", field_to_json(c.facet_values[*c.violation])},
                              {"tied", tied}};
    }
    return j;
}

json vertex_report_to_json(const VertexReport &r) {
    return json{{"vertex", r.vertex}, {"rank", r.rank}, {"needed", r.needed}, {"active", r.active}};
}

json poset_to_json(const IsoPoset &p) {
    json nodes = json::array(), edges = json::array();
    for (size_t i = 0; i < p.lines.size(); i++) {
        nodes.push_back(json{{"id", "L" + std::to_string(i)}, {"dim", 1}, {"basis", subspace_to_json(p.lines[i])},
                             {"highlighted", false}});
    }
    for (size_t i = 0; i < p.planes.size(); i++) {
        nodes.push_back(json{{"id", "P" + std::to_string(i)}, {"dim", 2}, {"basis", subspace_to_json(p.planes[i])},
                             {"highlighted", bool(p.highlighted[i])}});
    }
    for (const auto &[l, q] : p.edges) {
        edges.push_back(json{{"from", "L" + std::to_string(l)}, {"to", "P" + std::to_string(q)}});
    }
    return json{{"schema", kSchemaVersion}, {"nodes", nodes}, {"edges", edges}};
}

std::string poset_to_dot(const IsoPoset &p) {
    std::ostringstream out;
    out << "graph isotropic_poset {\n  rankdir=BT;\n";
    auto name = [](const Subspace &s) {
        std::string t;
        for (const auto &b : s.basis()) t += (t.empty() ? "" : ",") + b.label();
        return "<" + t + ">";
    };
    for (size_t i = 0; i < p.lines.size(); i++) out << "  L" << i << " [label=\"" << name(p.lines[i]) << "\"];\n";
    for (size_t i = 0; i < p.planes.size(); i++) {
        out << "  P" << i << " [label=\"" << name(p.planes[i]) << "\", shape=box";
        if (p.highlighted[i]) out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (const auto &[l, q] : p.edges) out << "  L" << l << " -- P" << q << ";\n";
    out << "}\n";
    return out.str();
}

json parse_json_text(const std::string &text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        fail("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) fail("cannot open \"" + path + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

}  // namespace lambda_forge

// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0
//
// lambda-forge: command-line front end.  Every command prints one JSON payload on stdout
// (or to --output) and maps its status to the exit code: ok 0, error 1, violation 2,
// infeasible 3.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "lambda_forge/json_io.h"

namespace lf = lambda_forge;
using lf::json;

namespace {

enum class Status { kOk = 0, kError = 1, kViolation = 2, kInfeasible = 3 };

struct CommandResult {
    Status status = Status::kOk;
    json payload;
    std::string diagnostics;
    std::string text;  // raw text output instead of JSON (poset --dot)
};

json read_input(const std::string &path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return lf::parse_json_text(buf.str());
    }
    return lf::read_json_file(path);
}

json with_schema(json j) {
    json out;
    out["schema"] = lf::kSchemaVersion;
    for (auto &[k, v] : j.items()) {
        if (k != "schema") out[k] = v;
    }
    return out;
}

int parse_bit(const std::string &s) {
    if (s == "0" || s == "+" || s == "+1") return 0;
    if (s == "1" || s == "-" || s == "-1") return 1;
    throw std::invalid_argument("outcome must be 0/1 (or +1/-1), got \"" + s + "\"");
}

std::vector<int> parse_coins(const std::string &s) {
    std::vector<int> out;
    for (char c : s) {
        if (c == '0' || c == '1') {
            out.push_back(c - '0');
        } else if (c != ',' && c != ' ') {
            throw std::invalid_argument("coin schedule must consist of 0/1 characters");
        }
    }
    return out;
}

json pieces_to_json(const std::vector<lf::WeightedCnc> &pieces) {
    json arr = json::array();
    for (const auto &p : pieces) {
        arr.push_back(json{{"weight", lf::field_to_json(p.weight)}, {"cnc", lf::cnc_to_json(p.set)},
                           {"operator", lf::operator_to_json(lf::build_cnc_operator(p.set))}});
    }
    return arr;
}

// ---- membership / vertex ----------------------------------------------------------------

struct MembershipArgs {
    std::string file;
    bool vertex = false;
};

CommandResult cmd_membership(const MembershipArgs &a) {
    lf::QOperator x = lf::operator_from_json(read_input(a.file));
    auto cert = lf::membership(x);
    CommandResult r;
    r.payload = lf::certificate_to_json(cert);
    if (a.vertex) r.payload["vertex_report"] = lf::vertex_report_to_json(lf::is_vertex(x));
    if (!cert.member()) {
        r.status = Status::kViolation;
        r.diagnostics = "violated facet " + cert.state(*cert.violation).label() + " with value " +
                        lf::field_to_json(cert.min_value()).dump();
    }
    return r;
}

CommandResult cmd_vertex(const std::string &file) {
    lf::QOperator x = lf::operator_from_json(read_input(file));
    auto cert = lf::membership(x);
    CommandResult r;
    json p;
    p["member"] = cert.member();
    if (!cert.member()) {
        p["violation"] = lf::certificate_to_json(cert)["violation"];
        r.status = Status::kViolation;
        r.diagnostics = "operator is not in the polytope";
    } else {
        auto rep = lf::is_vertex(x);
        p.update(lf::vertex_report_to_json(rep));
        if (!rep.vertex) {
            r.status = Status::kInfeasible;
            r.diagnostics = "member but not a vertex: active rank " + std::to_string(rep.rank) + " < " +
                            std::to_string(rep.needed);
        }
    }
    r.payload = with_schema(p);
    return r;
}

// ---- enumerate-stabilizers --------------------------------------------------------------

CommandResult cmd_enumerate_stabilizers(int n, bool count_only) {
    if (n < 1 || n > 3) throw std::invalid_argument("enumerate-stabilizers supports 1 <= n <= 3");
    const auto &states = lf::stabilizer_states(n);
    json p{{"n", n}, {"count", states.size()}};
    if (!count_only) {
        json arr = json::array();
        for (const auto &st : states) arr.push_back(json{{"label", st.label()}, {"generators", st.generator_labels()}});
        p["states"] = arr;
    }
    return CommandResult{Status::kOk, with_schema(p), "", ""};
}

// ---- cnc --------------------------------------------------------------------------------

struct CncArgs {
    std::string file;
    int enumerate = 0;
    bool count_only = false;
    bool recognize = false;
    std::string measure;
    std::string outcome = "0";
};

CommandResult cmd_cnc(const CncArgs &a) {
    CommandResult r;
    if (a.enumerate) {
        if (a.enumerate < 1 || a.enumerate > 2) throw std::invalid_argument("cnc --enumerate supports n = 1, 2");
        auto verts = lf::enumerate_cnc_vertices(a.enumerate);
        json p{{"n", a.enumerate}, {"count", verts.size()}};
        if (!a.count_only) {
            json arr = json::array();
            for (const auto &c : verts) arr.push_back(lf::cnc_to_json(c));
            p["vertices"] = arr;
        }
        r.payload = with_schema(p);
        return r;
    }
    if (a.file.empty()) throw std::invalid_argument("cnc: give a file or --enumerate N");
    json in = read_input(a.file);
    if (a.recognize) {
        lf::QOperator x = lf::operator_from_json(in);
        auto c = lf::as_cnc(x);
        json p{{"cnc", bool(c)}};
        if (c) p["set"] = lf::cnc_to_json(*c);
        r.payload = with_schema(p);
        if (!c) {
            r.status = Status::kInfeasible;
            r.diagnostics = "operator is not a cnc operator";
        }
        return r;
    }
    lf::CncSet c = lf::cnc_from_json(in);
    if (!a.measure.empty()) {
        lf::PauliPoint pt = lf::PauliPoint::from_label(a.measure);
        if (pt.n != c.n || pt.is_zero()) throw std::invalid_argument("cnc: measured label must be a nonidentity Pauli on n qubits");
        r.payload = with_schema(json{{"pieces", pieces_to_json(lf::cnc_update(c, pt, parse_bit(a.outcome)))}});
        return r;
    }
    lf::QOperator x = lf::build_cnc_operator(c);
    r.payload = with_schema(json{{"set", lf::cnc_to_json(c)},
                                 {"maximal", lf::is_maximal_cnc(c.omega, c.n)},
                                 {"operator", lf::operator_to_json(x)},
                                 {"member", lf::membership(x).member()},
                                 {"vertex_report", lf::vertex_report_to_json(lf::is_vertex(x))}});
    return r;
}

// ---- orbit ------------------------------------------------------------------------------

struct OrbitArgs {
    bool count = false;
    bool verify = false;
    bool alpha0 = false;
    std::string update_file;
    std::string measure;
    std::string outcome = "0";
};

CommandResult cmd_orbit(const OrbitArgs &a) {
    CommandResult r;
    if (!a.update_file.empty()) {
        json in = read_input(a.update_file);
        lf::OrbitVertexParams p;
        if (in.contains("coeffs")) {
            auto found = lf::find_orbit_params(lf::operator_from_json(in));
            if (!found) throw std::invalid_argument("orbit: operator is not a vertex of the orbit family");
            p = *found;
        } else {
            p = lf::orbit_params_from_json(in);
        }
        lf::PauliPoint pt = lf::PauliPoint::from_label(a.measure);
        if (pt.n != 2 || pt.is_zero()) throw std::invalid_argument("orbit: measured label must be a nonidentity two-qubit Pauli");
        r.payload = with_schema(json{{"case", lf::orbit_update_case(p, pt)},
                                     {"pieces", pieces_to_json(lf::orbit_update(p, pt, parse_bit(a.outcome)))}});
        return r;
    }
    if (a.alpha0) {
        auto p = lf::alpha0_params();
        r.payload = with_schema(json{{"params", lf::orbit_params_to_json(p)},
                                     {"operator", lf::operator_to_json(lf::build_orbit_vertex(p))}});
        return r;
    }
    const auto &params = lf::enumerate_family_params();
    if (a.count || a.verify) {
        json p{{"count", params.size()}};
        if (a.verify) {
            auto family = lf::enumerate_family();
            auto orbit = lf::clifford_orbit(lf::alpha0_table(), lf::CliffordTableau::generators(2));
            std::set<lf::QOperator> fam(family.begin(), family.end()), orb(orbit.begin(), orbit.end());
            bool equal = fam == orb;
            p["bfs_count"] = orb.size();
            p["equal"] = equal;
            if (!equal) {
                r.status = Status::kViolation;
                r.diagnostics = "parameter family and Clifford orbit differ";
            }
        }
        r.payload = with_schema(p);
        return r;
    }
    json verts = json::array();
    for (const auto &p : params) {
        verts.push_back(json{{"params", lf::orbit_params_to_json(p)},
                             {"coeffs", lf::operator_to_json(lf::build_orbit_vertex(p))["coeffs"]}});
    }
    json prov{{"generator", "lambda-forge orbit"},
              {"construction", "closed-form vertices from (I, gamma, collection, gamma_prime)"},
              {"seed_vertex", lf::orbit_params_to_json(lf::alpha0_params())},
              {"equivalent_to", "orbit of the seed vertex under the two-qubit Clifford group"}};
    r.payload = with_schema(json{{"n", 2}, {"count", params.size()}, {"provenance", prov}, {"vertices", verts}});
    return r;
}

// ---- phi --------------------------------------------------------------------------------

struct PhiArgs {
    std::string op_file;
    std::string params_file;
    bool preimage = false;
};

CommandResult cmd_phi(const PhiArgs &a) {
    lf::QOperator x = lf::operator_from_json(read_input(a.op_file));
    lf::PhiParams params = lf::phi_params_from_json(read_input(a.params_file));
    CommandResult r;
    if (a.preimage) {
        lf::QOperator pre = lf::phi_preimage(x, params);
        r.payload = with_schema(json{{"operator", lf::operator_to_json(pre)}, {"cnc", bool(lf::as_cnc(pre))}});
        return r;
    }
    if (x.n() != params.m) throw std::invalid_argument("phi: operator size differs from params m");
    auto cert = lf::membership(x);
    lf::QOperator y = lf::phi_general(x, params);
    json p{{"params", lf::phi_params_to_json(params)},
           {"operator", lf::operator_to_json(y)},
           {"input_member", cert.member()},
           {"vertex_report", lf::vertex_report_to_json(lf::is_vertex(y))},
           {"cnc", bool(lf::as_cnc(y))}};
    r.payload = with_schema(p);
    if (!cert.member()) {
        r.status = Status::kViolation;
        r.diagnostics = "input operator is not in the polytope";
    }
    return r;
}

// ---- reduce -----------------------------------------------------------------------------

struct ReduceArgs {
    std::string file;
    std::string coins;
    std::string x_file;
};

CommandResult cmd_reduce(const ReduceArgs &a) {
    json in = read_input(a.file);
    if (!in.contains("instance")) throw std::invalid_argument("reduce: input needs \"instance\" and \"steps\"");
    lf::LiftedInstance inst = lf::lifted_from_json(in.at("instance"));
    json seqj = in;
    if (!seqj.contains("n")) seqj["n"] = inst.n();
    lf::MeasSequence seq = lf::sequence_from_json(seqj);
    auto red = lf::reduce_sequence(inst, seq, parse_coins(a.coins));
    CommandResult r;
    json p = lf::reduced_to_json(red);
    if (!a.x_file.empty()) {
        lf::QOperator x = lf::operator_from_json(read_input(a.x_file));
        lf::Distribution reduced = lf::reduced_run_distribution(x, inst, seq);
        lf::Distribution oracle = lf::born_oracle(lf::lifted_state(x, inst), seq);
        p["distribution"] = lf::distribution_to_json(reduced);
        p["matches_oracle"] = reduced == oracle;
        if (reduced != oracle) {
            r.status = Status::kViolation;
            r.diagnostics = "reduced run disagrees with the Born rule on the lifted state";
        }
    }
    r.payload = with_schema(p);
    return r;
}

// ---- simulate ---------------------------------------------------------------------------

struct SimulateArgs {
    std::string file;
    bool exact = false;
    bool as_float = false;
    bool oracle_fallback = false;
    std::optional<uint64_t> seed;
    uint64_t shots = 1;
    int jobs = 0;
};

CommandResult cmd_simulate(const SimulateArgs &a) {
    json in = read_input(a.file);
    lf::SimOptions opt;
    opt.oracle_fallback = a.oracle_fallback;
    lf::Circuit circ = lf::circuit_from_json(in);
    lf::MeasSequence seq = lf::compile_circuit(circ);
    if (!in.contains("initial")) throw std::invalid_argument("circuit: missing \"initial\"");
    lf::Mixture init = lf::mixture_from_json(in.at("initial"), opt);
    json p{{"n", circ.n}, {"sequence", lf::sequence_to_json(seq)["steps"]}};
    if (a.exact || !a.seed) {
        p["mode"] = "exact";
        p["distribution"] = lf::distribution_to_json(lf::simulate_exact(init, seq, opt), a.as_float);
    } else if (a.shots <= 1) {
        p["mode"] = "sample";
        p["seed"] = *a.seed;
        p["transcript"] = lf::transcript_to_json(lf::simulate_sample(init, seq, *a.seed, opt), a.as_float);
    } else {
        int jobs = a.jobs > 0 ? a.jobs : lf::default_jobs();
        auto counts = lf::sample_counts(init, seq, *a.seed, a.shots, jobs, opt);
        json arr = json::array();
        for (const auto &[o, c] : counts) arr.push_back(json{{"outcomes", o}, {"count", c}});
        p["mode"] = "sample";
        p["seed"] = *a.seed;
        p["shots"] = a.shots;
        p["counts"] = arr;
    }
    return CommandResult{Status::kOk, with_schema(p), "", ""};
}

// ---- poset ------------------------------------------------------------------------------

CommandResult cmd_poset(bool dot) {
    auto poset = lf::export_isotropic_poset();
    CommandResult r;
    if (dot) {
        r.text = lf::poset_to_dot(poset);
    } else {
        r.payload = lf::poset_to_json(poset);
    }
    return r;
}

// ---- lemma-check ------------------------------------------------------------------------

json sweep_to_json(const lf::IdentitySweep &s) {
    json ex = json::array();
    for (size_t i = 0; i < s.failures.size() && i < 5; i++) ex.push_back(s.failures[i]);
    return json{{"checked", s.checked}, {"failures", s.failures.size()}, {"ok", s.ok()}, {"examples", ex}};
}

CommandResult cmd_lemma_check(const std::string &which, int samples, uint64_t seed) {
    if (which != "1" && which != "2" && which != "3" && which != "all") {
        throw std::invalid_argument("lemma-check: --lemma must be 1, 2, 3 or all");
    }
    json p;
    bool ok = true;
    if (which == "1" || which == "all") {
        auto s = lf::lemma1_sweep(samples, seed);
        ok = ok && s.ok();
        p["lemma1"] = sweep_to_json(s);
    }
    if (which == "2" || which == "all") {
        auto s = lf::lemma2_sweep(samples, seed);
        ok = ok && s.ok();
        p["lemma2"] = sweep_to_json(s);
    }
    if (which == "3" || which == "all") {
        auto rep = lf::lemma3_identities();
        ok = ok && rep.ok();
        json ex = json::array();
        for (size_t i = 0; i < rep.failures.size() && i < 5; i++) ex.push_back(rep.failures[i]);
        p["lemma3"] = json{{"checked", rep.total()},
                           {"per_identity", std::vector<int>(rep.checked, rep.checked + 5)},
                           {"failures", rep.failures.size()},
                           {"ok", rep.ok()},
                           {"examples", ex}};
    }
    CommandResult r{ok ? Status::kOk : Status::kViolation, with_schema(p), ok ? "" : "identity failures found", ""};
    return r;
}

int emit(const CommandResult &r, const std::string &output) {
    std::string body = r.text.empty() ? r.payload.dump(2) + "\n" : r.text;
    if (output.empty() || output == "-") {
        std::cout << body;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write \"" << output << "\"\n";
            return int(Status::kError);
        }
        out << body;
    }
    if (!r.diagnostics.empty()) std::cerr << r.diagnostics << "\n";
    return int(r.status);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"lambda-forge: exact tools for the stabilizer polytope"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write the payload to a file instead of stdout");

    MembershipArgs mem;
    auto *c_mem = app.add_subcommand("membership", "Facet certificate for an operator");
    c_mem->add_option("file", mem.file, "Operator JSON ('-' for stdin)")->required();
    c_mem->add_flag("--vertex", mem.vertex, "Also report vertex certification");

    std::string vertex_file;
    auto *c_vert = app.add_subcommand("vertex", "Vertex certification (exit 3: member but not a vertex)");
    c_vert->add_option("file", vertex_file, "Operator JSON")->required();

    int stab_n = 1;
    bool stab_count = false;
    auto *c_stab = app.add_subcommand("enumerate-stabilizers", "List pure stabilizer states");
    c_stab->add_option("n", stab_n, "Number of qubits (1..3)")->required();
    c_stab->add_flag("--count", stab_count, "Only print the count");

    CncArgs cnc;
    auto *c_cnc = app.add_subcommand("cnc", "cnc sets: inspect, update, recognise or enumerate");
    c_cnc->add_option("file", cnc.file, "cnc set JSON {omega, gamma} (operator JSON with --recognize)");
    c_cnc->add_option("--enumerate", cnc.enumerate, "Enumerate maximal cnc vertices for n qubits");
    c_cnc->add_flag("--count", cnc.count_only, "With --enumerate, only print the count");
    c_cnc->add_flag("--recognize", cnc.recognize, "Decide whether an operator is a cnc operator");
    c_cnc->add_option("--measure", cnc.measure, "Apply the measurement update for this Pauli label");
    c_cnc->add_option("--outcome", cnc.outcome, "Outcome bit for --measure");

    OrbitArgs orb;
    auto *c_orb = app.add_subcommand("orbit", "The 1920 two-qubit orbit vertices");
    c_orb->add_flag("--count", orb.count, "Only print the number of vertices");
    c_orb->add_flag("--verify", orb.verify, "Compare the family with the Clifford orbit of the seed vertex");
    c_orb->add_flag("--alpha0", orb.alpha0, "Print the seed vertex and its parameters");
    auto *o_upd = c_orb->add_option("--update", orb.update_file, "Orbit params or operator JSON to update");
    c_orb->add_option("--measure", orb.measure, "Pauli label for --update")->needs(o_upd);
    c_orb->add_option("--outcome", orb.outcome, "Outcome bit for --update");

    PhiArgs phi;
    auto *c_phi = app.add_subcommand("phi", "Lift an operator with a stabilizer tail");
    c_phi->add_option("operator", phi.op_file, "Operator JSON")->required();
    c_phi->add_option("params", phi.params_file, "Params JSON {m, j, tableau?}")->required();
    c_phi->add_flag("--preimage", phi.preimage, "Recover X from a lifted operator instead");

    ReduceArgs red;
    auto *c_red = app.add_subcommand("reduce", "Rewrite a measurement sequence on a lifted state");
    c_red->add_option("file", red.file, "JSON {instance, steps}")->required();
    c_red->add_option("--coins", red.coins, "Coin outcomes for the random steps, e.g. 0110");
    c_red->add_option("--check", red.x_file, "Operator X: also compare the reduced run with the Born rule");

    SimulateArgs sim;
    auto *c_sim = app.add_subcommand("simulate", "Run a circuit exactly or by sampling");
    c_sim->add_option("file", sim.file, "Circuit JSON")->required();
    c_sim->add_flag("--exact", sim.exact, "Exact outcome distribution (default without --seed)");
    c_sim->add_option("--seed", sim.seed, "Sampling seed");
    c_sim->add_option("--shots", sim.shots, "Number of samples (1 prints a transcript)");
    c_sim->add_option("--jobs", sim.jobs, "Worker threads (default LAMBDA_FORGE_JOBS or 1)");
    c_sim->add_flag("--float", sim.as_float, "Render probabilities as decimals");
    c_sim->add_flag("--oracle-fallback", sim.oracle_fallback, "Allow dense operators without a closed-form update");

    bool poset_dot = false, poset_json = false;
    auto *c_pos = app.add_subcommand("poset", "Isotropic subspaces of two qubits ordered by inclusion");
    auto *f_dot = c_pos->add_flag("--dot", poset_dot, "Graphviz output");
    c_pos->add_flag("--json", poset_json, "JSON output (default)")->excludes(f_dot);

    std::string lemma = "all";
    int samples = 100;
    uint64_t lemma_seed = 1;
    auto *c_lem = app.add_subcommand("lemma-check", "Run the trace and decomposition identity suites");
    c_lem->add_option("--lemma", lemma, "1, 2, 3 or all");
    c_lem->add_option("--samples", samples, "Random operators per suite");
    c_lem->add_option("--seed", lemma_seed, "Seed for the random operators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return int(Status::kError);
    }

    try {
        CommandResult r;
        if (c_mem->parsed()) {
            r = cmd_membership(mem);
        } else if (c_vert->parsed()) {
            r = cmd_vertex(vertex_file);
        } else if (c_stab->parsed()) {
            r = cmd_enumerate_stabilizers(stab_n, stab_count);
        } else if (c_cnc->parsed()) {
            r = cmd_cnc(cnc);
        } else if (c_orb->parsed()) {
            r = cmd_orbit(orb);
        } else if (c_phi->parsed()) {
            r = cmd_phi(phi);
        } else if (c_red->parsed()) {
            r = cmd_reduce(red);
        } else if (c_sim->parsed()) {
            r = cmd_simulate(sim);
        } else if (c_pos->parsed()) {
            r = cmd_poset(poset_dot);
        } else {
            r = cmd_lemma_check(lemma, samples, lemma_seed);
        }
        return emit(r, output);
    } catch (const lf::InfeasibleError &e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return int(Status::kInfeasible);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return int(Status::kError);
    }
}

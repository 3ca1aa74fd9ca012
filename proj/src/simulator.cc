// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#include "lambda_forge/simulator.h"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace lambda_forge {

Descriptor Descriptor::from_cnc(CncSet c) {
    c.validate();
    Descriptor d;
    d.kind = Kind::kCnc;
    d.cnc = std::move(c);
    return d;
}

Descriptor Descriptor::from_orbit(OrbitVertexParams p) {
    p.validate();
    Descriptor d;
    d.kind = Kind::kOrbit;
    d.orbit = std::move(p);
    return d;
}

Descriptor Descriptor::from_phi(const LiftedInstance &inst, Descriptor inner) {
    if (inner.n() != inst.m) throw std::invalid_argument("phi descriptor: inner descriptor has wrong size");
    Descriptor d;
    d.kind = Kind::kPhi;
    d.phi.reducer = SequenceReducer(inst);
    d.phi.inner = std::make_shared<const Descriptor>(std::move(inner));
    return d;
}

Descriptor Descriptor::from_operator(QOperator a) {
    Descriptor d;
    d.kind = Kind::kOperator;
    d.op = std::move(a);
    return d;
}

int Descriptor::n() const {
    switch (kind) {
        case Kind::kCnc:
            return cnc.n;
        case Kind::kOrbit:
            return 2;
        case Kind::kPhi:
            return phi.reducer.instance().n();
        case Kind::kOperator:
            return op.n();
    }
    return 0;
}

std::string Descriptor::class_name() const {
    switch (kind) {
        case Kind::kCnc:
            return "cnc";
        case Kind::kOrbit:
            return "orbit";
        case Kind::kPhi:
            return "phi";
        case Kind::kOperator:
            return "operator";
    }
    return "unknown";
}

QOperator Descriptor::to_operator() const {
    switch (kind) {
        case Kind::kCnc:
            return build_cnc_operator(cnc);
        case Kind::kOrbit:
            return build_orbit_vertex(orbit);
        case Kind::kPhi:
            return phi.reducer.represented(phi.inner->to_operator());
        case Kind::kOperator:
            return op;
    }
    return QOperator();
}

namespace {

std::vector<WeightedDescriptor> from_cnc_pieces(const std::vector<WeightedCnc> &pieces) {
    std::vector<WeightedDescriptor> out;
    out.reserve(pieces.size());
    for (const auto &p : pieces) {
        Descriptor d;
        d.kind = Descriptor::Kind::kCnc;
        d.cnc = p.set;
        out.push_back(WeightedDescriptor{p.weight, std::move(d)});
    }
    return out;
}

}  // namespace

std::vector<WeightedDescriptor> update_descriptor(const Descriptor &d, const PhasedPauli &observable, int s,
                                                  const SimOptions &opt, bool *coin) {
    if (observable.point.n != d.n()) throw std::invalid_argument("update: observable size differs from the descriptor");
    if (!observable.is_hermitian() || observable.point.is_zero()) {
        throw std::invalid_argument("update: observable must be a nonidentity Hermitian Pauli");
    }
    if (coin) *coin = false;
    int t = (s + observable.sign_bit()) & 1;
    switch (d.kind) {
        case Descriptor::Kind::kCnc:
            return from_cnc_pieces(cnc_update(d.cnc, observable.point, t));
        case Descriptor::Kind::kOrbit:
            return from_cnc_pieces(orbit_update(d.orbit, observable.point, t));
        case Descriptor::Kind::kPhi: {
            ReducedStep st = d.phi.reducer.classify(observable);
            if (st.kind == ReducedKind::kFixed) {
                if (st.fixed_outcome != (s & 1)) return {};
                return {WeightedDescriptor{FieldElem(1), d}};
            }
            if (st.kind == ReducedKind::kCoin) {
                if (coin) *coin = true;
                Descriptor next = d;
                next.phi.reducer.apply_coin(st, s);
                return {WeightedDescriptor{FieldElem::frac(1, 2), std::move(next)}};
            }
            std::vector<WeightedDescriptor> out;
            for (auto &piece : update_descriptor(*d.phi.inner, st.reduced, s, opt)) {
                Descriptor next;
                next.kind = Descriptor::Kind::kPhi;
                next.phi.reducer = d.phi.reducer;
                next.phi.inner = std::make_shared<const Descriptor>(std::move(piece.desc));
                out.push_back(WeightedDescriptor{piece.weight, std::move(next)});
            }
            return out;
        }
        case Descriptor::Kind::kOperator: {
            if (!opt.oracle_fallback) {
                throw std::invalid_argument("unsupported vertex class \"operator\": no closed-form update (enable the oracle fallback)");
            }
            if (d.op.n() > 4) throw std::invalid_argument("oracle fallback limited to n <= 4");
            QOperator next = project(d.op, observable.point, t);
            if (next.is_zero()) return {};
            FieldElem w = next.trace();
            if (w.is_zero()) throw std::logic_error("oracle fallback: nonzero branch with zero trace");
            return {WeightedDescriptor{w, Descriptor::from_operator(next.scaled(w.inverse()))}};
        }
    }
    return {};
}

Mixture update_mixture(const Mixture &m, const PhasedPauli &observable, int s, const SimOptions &opt) {
    Mixture out;
    for (const auto &wd : m) {
        for (auto &piece : update_descriptor(wd.desc, observable, s, opt)) {
            out.push_back(WeightedDescriptor{wd.weight * piece.weight, std::move(piece.desc)});
        }
    }
    return out;
}

FieldElem mixture_weight(const Mixture &m) {
    FieldElem t;
    for (const auto &wd : m) t += wd.weight;
    return t;
}

QOperator mixture_operator(const Mixture &m) {
    if (m.empty()) throw std::invalid_argument("mixture_operator: empty mixture");
    QOperator a(m.front().desc.n());
    for (const auto &wd : m) a = a + wd.desc.to_operator().scaled(wd.weight);
    return a;
}

namespace {

void check_initial(const Mixture &initial, const MeasSequence &seq) {
    if (initial.empty()) throw std::invalid_argument("simulate: empty initial mixture");
    FieldElem total;
    for (const auto &wd : initial) {
        if (wd.weight.sign() < 0) throw std::invalid_argument("simulate: negative initial weight");
        if (wd.desc.n() != seq.n) throw std::invalid_argument("simulate: descriptor size differs from the sequence");
        total += wd.weight;
    }
    if (total != FieldElem(1)) throw std::invalid_argument("simulate: initial weights must sum to 1");
    seq.validate();
}

void exact_dfs(const Mixture &m, const MeasSequence &seq, std::vector<int> &outcomes, const SimOptions &opt,
               Distribution &out) {
    size_t k = outcomes.size();
    if (k == seq.steps.size()) {
        FieldElem p = mixture_weight(m);
        if (!p.is_zero()) out[outcomes] += p;
        return;
    }
    const auto &st = seq.steps[k];
    if (!condition_holds(st.cond, outcomes)) {
        outcomes.push_back(-1);
        exact_dfs(m, seq, outcomes, opt, out);
        outcomes.pop_back();
        return;
    }
    for (int s = 0; s < 2; s++) {
        Mixture next = update_mixture(m, st.observable, s, opt);
        if (next.empty()) continue;
        outcomes.push_back(s);
        exact_dfs(next, seq, outcomes, opt, out);
        outcomes.pop_back();
    }
}

size_t draw_index(const std::vector<FieldElem> &weights, const FieldElem &total, std::mt19937_64 &rng) {
    if (weights.size() == 1) return 0;
    double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng) * total.to_double();
    double acc = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        acc += weights[i].to_double();
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

Transcript sample_with(const Mixture &initial, const MeasSequence &seq, std::mt19937_64 &rng, const SimOptions &opt) {
    Transcript tr;
    std::vector<FieldElem> w0;
    for (const auto &wd : initial) w0.push_back(wd.weight);
    tr.initial_index = draw_index(w0, FieldElem(1), rng);
    Descriptor cur = initial[tr.initial_index].desc;
    std::vector<int> outcomes;
    for (const auto &st : seq.steps) {
        if (!condition_holds(st.cond, outcomes)) {
            tr.steps.push_back(TranscriptStep{-1, FieldElem(1), "skipped"});
            outcomes.push_back(-1);
            continue;
        }
        bool coin = false;
        std::vector<WeightedDescriptor> branch[2];
        FieldElem q[2];
        for (int s = 0; s < 2; s++) {
            branch[s] = update_descriptor(cur, st.observable, s, opt, &coin);
            for (const auto &p : branch[s]) q[s] += p.weight;
        }
        int s;
        if (q[1].is_zero()) {
            s = 0;
        } else if (q[0].is_zero()) {
            s = 1;
        } else {
            s = draw_index({q[0], q[1]}, q[0] + q[1], rng) == 0 ? 0 : 1;
        }
        std::vector<FieldElem> pw;
        for (const auto &p : branch[s]) pw.push_back(p.weight);
        cur = branch[s][draw_index(pw, q[s], rng)].desc;
        bool fixed = q[s] == FieldElem(1) && !coin;
        tr.steps.push_back(TranscriptStep{s, q[s], coin ? "coin" : fixed ? "fixed" : "measure"});
        outcomes.push_back(s);
    }
    return tr;
}

}  // namespace

Distribution simulate_exact(const Mixture &initial, const MeasSequence &seq, const SimOptions &opt) {
    check_initial(initial, seq);
    Distribution out;
    std::vector<int> outcomes;
    exact_dfs(initial, seq, outcomes, opt, out);
    return out;
}

std::vector<int> Transcript::outcomes() const {
    std::vector<int> o;
    for (const auto &s : steps) o.push_back(s.outcome);
    return o;
}

Transcript simulate_sample(const Mixture &initial, const MeasSequence &seq, uint64_t seed, const SimOptions &opt) {
    check_initial(initial, seq);
    std::mt19937_64 rng(seed);
    return sample_with(initial, seq, rng, opt);
}

std::map<std::vector<int>, uint64_t> sample_counts(const Mixture &initial, const MeasSequence &seq, uint64_t seed,
                                                   uint64_t shots, int jobs, const SimOptions &opt) {
    check_initial(initial, seq);
    if (jobs < 1) jobs = 1;
    std::vector<std::map<std::vector<int>, uint64_t>> partial(static_cast<size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(jobs));
    auto worker = [&](int j) {
        try {
            for (uint64_t k = uint64_t(j); k < shots; k += uint64_t(jobs)) {
                std::seed_seq ss{uint32_t(seed), uint32_t(seed >> 32), uint32_t(k), uint32_t(k >> 32)};
                std::mt19937_64 rng(ss);
                partial[size_t(j)][sample_with(initial, seq, rng, opt).outcomes()]++;
            }
        } catch (...) {
            errors[size_t(j)] = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    for (int j = 1; j < jobs; j++) threads.emplace_back(worker, j);
    worker(0);
    for (auto &t : threads) t.join();
    for (auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::map<std::vector<int>, uint64_t> total;
    for (const auto &p : partial) {
        for (const auto &[k, c] : p) total[k] += c;
    }
    return total;
}

int default_jobs() {
    const char *env = std::getenv("LAMBDA_FORGE_JOBS");
    if (!env || !*env) return 1;
    char *end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) return 1;
    return int(std::min<long>(v, 256));
}

}  // namespace lambda_forge

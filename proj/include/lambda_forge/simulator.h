// Copyright 2026 The lambda-forge Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LAMBDA_FORGE_SIMULATOR_H
#define LAMBDA_FORGE_SIMULATOR_H

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lambda_forge/circuit.h"
#include "lambda_forge/cnc.h"
#include "lambda_forge/orbit2.h"
#include "lambda_forge/reduction.h"

namespace lambda_forge {

struct Descriptor;

/// U (X tensor Pi_sigma) U^dagger with X given by an inner descriptor, plus the reducer frame.
struct PhiLift {
    SequenceReducer reducer;
    std::shared_ptr<const Descriptor> inner;
};

/// A vertex class with a closed-form measurement update.
struct Descriptor {
    enum class Kind { kCnc, kOrbit, kPhi, kOperator };
    Kind kind = Kind::kCnc;
    CncSet cnc;
    OrbitVertexParams orbit;
    PhiLift phi;
    QOperator op;  // kOperator: dense fallback, only with SimOptions::oracle_fallback

    static Descriptor from_cnc(CncSet c);
    static Descriptor from_orbit(OrbitVertexParams p);
    static Descriptor from_phi(const LiftedInstance &inst, Descriptor inner);
    static Descriptor from_operator(QOperator a);

    int n() const;
    std::string class_name() const;
    QOperator to_operator() const;
};

struct WeightedDescriptor {
    FieldElem weight;
    Descriptor desc;
};
using Mixture = std::vector<WeightedDescriptor>;

struct SimOptions {
    bool oracle_fallback = false;  // allow kOperator descriptors (n <= 4)
};

/// The outcome-s branch of measuring `observable` on one descriptor: pieces whose weights sum to Q(s | desc).
/// `coin` is set when the step was a uniformly random register-B step of a lifted descriptor.
std::vector<WeightedDescriptor> update_descriptor(const Descriptor &d, const PhasedPauli &observable, int s,
                                                  const SimOptions &opt = {}, bool *coin = nullptr);
/// The outcome-s branch of a mixture (weights unnormalized; their sum is the outcome probability).
Mixture update_mixture(const Mixture &m, const PhasedPauli &observable, int s, const SimOptions &opt = {});
FieldElem mixture_weight(const Mixture &m);
QOperator mixture_operator(const Mixture &m);

/// Exhaustive branch tree with exact probabilities; zero-probability leaves are omitted.
Distribution simulate_exact(const Mixture &initial, const MeasSequence &seq, const SimOptions &opt = {});

struct TranscriptStep {
    int outcome = -1;       // -1: skipped by its condition
    FieldElem probability;  // Q(outcome | current descriptor), exact
    std::string kind;       // "measure", "coin", "fixed" or "skipped"
};
struct Transcript {
    size_t initial_index = 0;
    std::vector<TranscriptStep> steps;
    std::vector<int> outcomes() const;
};

/// One trajectory: draw the initial descriptor from the weights, then per step draw (piece, outcome).
Transcript simulate_sample(const Mixture &initial, const MeasSequence &seq, uint64_t seed, const SimOptions &opt = {});
/// Outcome counts over `shots` trajectories; shot k uses the seed sequence (seed, k), so counts do not
/// depend on `jobs`.
std::map<std::vector<int>, uint64_t> sample_counts(const Mixture &initial, const MeasSequence &seq, uint64_t seed,
                                                   uint64_t shots, int jobs, const SimOptions &opt = {});

/// Default worker count: LAMBDA_FORGE_JOBS if set and positive, else 1.
int default_jobs();

}  // namespace lambda_forge

#endif

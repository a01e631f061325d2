// Copyright 2026 The poni Authors
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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poni/coset_state.h"
#include "poni/stats.h"
#include "poni/subspace.h"

namespace poni {

/// Adversaries here act on product-state registers with the cosetsim
/// operation set only. General entangled strategies are out of scope.
inline constexpr std::string_view kAdversaryScope =
    "adversaries restricted to product-state registers and cosetsim operations";

/// What the hacker half walks away with.
struct HackerRegister {
    std::optional<CosetState> state;
    std::vector<F2Vector> classical;
};

struct SplitRegisters {
    std::optional<CosetState> prover;
    HackerRegister hacker;
};

/// Side information given to the hacker: the description S + x.
struct HackerKnowledge {
    Coset s_plus_x;
};

struct Adversary {
    std::string name;
    /// Consumes the register.
    std::function<SplitRegisters(CosetState, Rng &)> split;
    /// Answers one PoNI session from the prover register and the OSP register.
    std::function<F2Vector(std::optional<CosetState> &prover, CosetState osp_register, Rng &)> prover_strategy;
    /// Returns a candidate for S^perp + z.
    std::function<F2Vector(HackerRegister &, const HackerKnowledge &, Rng &)> hacker_strategy;
};

/// P keeps the whole register and answers honestly; H gets nothing.
Adversary honest_keeper();
/// Measures in the computational basis; P keeps |v> and H gets v.
Adversary comp_measure_splitter();
/// Measures in the Hadamard basis; P keeps the collapsed register and H gets w in S^perp + z.
Adversary hadamard_measure_splitter();

std::vector<std::string> builtin_adversary_names();
std::optional<Adversary> builtin_adversary(std::string_view name);

/// The second-stage guess for S^perp + z when nothing better is held: a
/// uniform member of co(S^perp) (one point per coset).
F2Vector uniform_dual_guess(const Subspace &S, Rng &rng);

struct ExpectedRates {
    double accept = 0;
    double hacker = 0;
    double simultaneous = 0;

    bool operator==(const ExpectedRates &) const = default;
};

struct TrialRecord {
    uint64_t trial = 0;
    bool accept = false;
    bool hacker = false;
    bool simultaneous() const { return accept && hacker; }

    bool operator==(const TrialRecord &) const = default;
};

struct GameReport {
    std::string game;
    std::string adversary;
    DimensionProfile profile;
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t n_audits = 0;
    uint64_t accept_count = 0;
    uint64_t hacker_success_count = 0;
    uint64_t simultaneous_count = 0;
    std::optional<ExpectedRates> expected;
    std::vector<TrialRecord> log;

    double accept_rate() const { return rate(accept_count); }
    double hacker_rate() const { return rate(hacker_success_count); }
    double simultaneous_rate() const { return rate(simultaneous_count); }
    double rate(uint64_t count) const { return trials == 0 ? 0.0 : static_cast<double>(count) / trials; }

    std::string to_json() const;
    std::string to_csv() const;

    bool operator==(const GameReport &) const = default;
};

struct GameConfig {
    DimensionProfile profile;
    uint64_t trials = 1000;
    uint64_t seed = 1;
    /// 0 picks the hardware concurrency. Results do not depend on it.
    unsigned threads = 1;
};

/// Counting-argument rates for the built-in adversaries, if known.
std::optional<ExpectedRates> expected_moe_rates(std::string_view adversary, const DimensionProfile &p);
std::optional<ExpectedRates> expected_cd_rates(std::string_view first, std::string_view second,
                                               const DimensionProfile &p);

GameReport run_poni_moe(const Adversary &adv, const GameConfig &cfg);
GameReport run_enc_search_game(const Adversary &adv, uint64_t n_audits, const GameConfig &cfg);

/// One CD-Game instance: R < S < T, x in co(S), z in (co(S^perp) n R^perp) + z_Rperp.
struct CdInstance {
    Subspace R, S, T;
    F2Vector x;
    F2Vector x_T;
    F2Vector z_Rperp;
    F2Vector z;
};

CdInstance sample_cd_instance(const DimensionProfile &p, Rng &rng);

struct CdFirst {
    std::string name;
    /// (v1, rho) from the coset state.
    std::function<std::pair<F2Vector, HackerRegister>(CosetState, const CdInstance &, Rng &)> run;
};

struct CdSecond {
    std::string name;
    /// v2 from rho and aux_2 = (S, T + x_T, R^perp + z_Rperp).
    std::function<F2Vector(HackerRegister &, const CdInstance &, Rng &)> run;
};

/// Measures computationally and outputs the outcome; rho is empty.
CdFirst cd_computational_measurer();
/// Measures in the Hadamard basis, keeps the outcome in rho, guesses v1.
CdFirst cd_hadamard_measurer();
/// Returns a held dual vector if rho has one, else a uniform candidate from
/// (co(S^perp) n R^perp) + z_Rperp.
CdSecond cd_best_counting();
/// Always outputs z_Rperp.
CdSecond cd_fixed_guess();

GameReport run_cd_game(const CdFirst &a1, const CdSecond &a2, const GameConfig &cfg);

struct MixedStateReport {
    size_t n = 0;
    size_t d_S = 0;
    size_t d_W = 0;
    uint64_t samples = 0;
    /// Trace distance between the S1- and S2-conditioned estimates.
    double distance_s1_s2 = 0;
    /// Trace distances of each estimate from the uniform mixture over W + x_W.
    double distance_s1_uniform = 0;
    double distance_s2_uniform = 0;
    /// S1 estimate with x drawn from W + x_W + c, c outside W, against the uniform mixture.
    double control_distance = 0;
};

MixedStateReport test_mixed_state_identity(size_t n, size_t d_S, size_t d_W, uint64_t samples, uint64_t seed);

struct DistributionReport {
    DimensionProfile profile;
    uint64_t samples = 0;
    ChiSquareResult chi;
    std::vector<uint64_t> left_hist;
    std::vector<uint64_t> right_hist;
    double left_equal_rate = 0;
    double right_equal_rate = 0;
    /// Exact Pr[W = T_W + S] on the left; the right side has it with probability 1.
    double left_equal_exact = 0;
    /// 2^{-(d_R+1)}, the recomputed tail bound.
    double recomputed_bound = 0;
    /// The bound as printed simplifies to 2^{d_R+1}, which exceeds 1.
    double printed_bound = 0;
};

DistributionReport test_distribution_1sample(const DimensionProfile &p, uint64_t samples, uint64_t seed);
DistributionReport test_distribution_1sample(size_t lambda, uint64_t samples, uint64_t seed);

struct IntersectionReport {
    size_t lambda = 0;
    uint64_t samples = 0;
    uint64_t hits = 0;
    double rate = 0;
    /// 1 - 2^{-lambda/6 + 1}.
    double bound = 0;
    double sigma = 0;
    bool meets_bound() const { return rate >= bound - 3 * sigma; }
};

IntersectionReport test_intersection_claim(size_t lambda, uint64_t samples, uint64_t seed);

struct ExtractionReport {
    size_t lambda = 0;
    uint64_t trials = 0;
    uint64_t successes = 0;
    uint64_t intersection_hits = 0;
    uint64_t successes_given_intersection = 0;
};

/// Runs the extractor against an honest prover holding a fresh |S_{x,z}>.
ExtractionReport run_extraction_experiment(size_t lambda, uint64_t trials, uint64_t seed, unsigned threads = 1);

/// Calls fn(i, rng_i) for i in [0, trials) with rng_i = trial_rng(seed, i).
void parallel_trials(uint64_t trials, uint64_t seed, unsigned threads,
                     const std::function<void(uint64_t, Rng &)> &fn);

}  // namespace poni

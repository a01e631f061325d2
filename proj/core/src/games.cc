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

#include "poni/games.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "poni/enc.h"
#include "poni/extract.h"
#include "poni/osp.h"
#include "poni/poni.h"
#include "poni/statevector.h"
#include "poni/store.h"

namespace poni {

namespace {

F2Vector honest_answer(std::optional<CosetState> &prover, CosetState osp_register, Rng &rng) {
    if (!prover) {
        return measure_computational(std::move(osp_register), rng);
    }
    auto out = transversal_cnot_measure(std::move(*prover), std::move(osp_register), rng);
    prover = std::move(out.residual);
    return out.value;
}

/// Drives an adversarial prover; ignores the correction that follows an Acc.
class StrategyProver : public FrameHandler {
   public:
    StrategyProver(PoniResponder responder, OspReceiver &osp, Rng &rng) : inner_(std::move(responder), osp, rng) {}

    std::vector<Frame> handle(const Frame &in) override {
        if (in.type == MessageType::PoniCorrection && inner_.state() == CosetProver::State::Done) {
            return {};
        }
        return inner_.handle(in);
    }

   private:
    CosetProver inner_;
};

double pow2(double e) { return std::ldexp(1.0, static_cast<int>(e)); }

void tally(GameReport &r, std::vector<TrialRecord> log) {
    r.log = std::move(log);
    for (const auto &t : r.log) {
        r.accept_count += t.accept;
        r.hacker_success_count += t.hacker;
        r.simultaneous_count += t.simultaneous();
    }
}

nlohmann::json profile_json(const DimensionProfile &p) {
    return {{"n", p.n}, {"d_R", p.d_R}, {"d_S", p.d_S}, {"d_T", p.d_T}, {"d_W", p.d_W}};
}

double trace_distance(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a - b, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

void add_projector(Eigen::MatrixXcd &rho, const Statevector &sv, double weight) {
    auto amps = sv.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> psi(amps.data(), static_cast<Eigen::Index>(amps.size()));
    rho.noalias() += weight * (psi * psi.adjoint());
}

}  // namespace

void parallel_trials(uint64_t trials, uint64_t seed, unsigned threads,
                     const std::function<void(uint64_t, Rng &)> &fn) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, std::max<uint64_t>(trials, 1)));
    if (threads <= 1) {
        for (uint64_t i = 0; i < trials; ++i) {
            Rng rng = trial_rng(seed, i);
            fn(i, rng);
        }
        return;
    }
    std::exception_ptr failure;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (uint64_t i = t; i < trials; i += threads) {
                    Rng rng = trial_rng(seed, i);
                    fn(i, rng);
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

F2Vector uniform_dual_guess(const Subspace &S, Rng &rng) {
    return dual(S).canonical_rep(F2Vector::random(S.ambient_dim(), rng));
}

Adversary honest_keeper() {
    Adversary a;
    a.name = "honest_keeper";
    a.split = [](CosetState st, Rng &) {
        SplitRegisters regs;
        regs.prover = std::move(st);
        return regs;
    };
    a.prover_strategy = honest_answer;
    a.hacker_strategy = [](HackerRegister &, const HackerKnowledge &k, Rng &rng) {
        return uniform_dual_guess(k.s_plus_x.space(), rng);
    };
    return a;
}

Adversary comp_measure_splitter() {
    Adversary a;
    a.name = "comp_measure_splitter";
    a.split = [](CosetState st, Rng &rng) {
        F2Vector v = measure_computational(std::move(st), rng);
        SplitRegisters regs;
        regs.prover = CosetState::basis_state(v);
        regs.hacker.classical.push_back(v);
        return regs;
    };
    a.prover_strategy = honest_answer;
    a.hacker_strategy = [](HackerRegister &, const HackerKnowledge &k, Rng &rng) {
        return uniform_dual_guess(k.s_plus_x.space(), rng);
    };
    return a;
}

Adversary hadamard_measure_splitter() {
    Adversary a;
    a.name = "hadamard_measure_splitter";
    a.split = [](CosetState st, Rng &rng) {
        const size_t n = st.ambient_dim();
        F2Vector w = measure_hadamard(std::move(st), rng);
        SplitRegisters regs;
        // H^n |w>: every basis vector, phase (-1)^{v.w}.
        regs.prover.emplace(Subspace::full(n), F2Vector(n), w);
        regs.hacker.classical.push_back(w);
        return regs;
    };
    a.prover_strategy = honest_answer;
    a.hacker_strategy = [](HackerRegister &h, const HackerKnowledge &k, Rng &rng) {
        if (h.classical.empty()) {
            return uniform_dual_guess(k.s_plus_x.space(), rng);
        }
        return h.classical.front();
    };
    return a;
}

std::vector<std::string> builtin_adversary_names() {
    return {"honest_keeper", "comp_measure_splitter", "hadamard_measure_splitter"};
}

std::optional<Adversary> builtin_adversary(std::string_view name) {
    if (name == "honest_keeper") {
        return honest_keeper();
    }
    if (name == "comp_measure_splitter") {
        return comp_measure_splitter();
    }
    if (name == "hadamard_measure_splitter") {
        return hadamard_measure_splitter();
    }
    return std::nullopt;
}

std::optional<ExpectedRates> expected_moe_rates(std::string_view adversary, const DimensionProfile &p) {
    // H's only handle on z is a guess over the 2^{d_S} cosets of S^perp.
    const double guess = pow2(-static_cast<double>(p.d_S));
    if (adversary == "honest_keeper" || adversary == "comp_measure_splitter") {
        return ExpectedRates{1.0, guess, guess};
    }
    if (adversary == "hadamard_measure_splitter") {
        // The collapsed register spans all of F_2^n, so v is uniform and lands in T + x_T w.p. |T| / 2^n.
        double acc = pow2(static_cast<double>(p.d_T) - static_cast<double>(p.n));
        return ExpectedRates{acc, 1.0, acc};
    }
    return std::nullopt;
}

std::optional<ExpectedRates> expected_cd_rates(std::string_view first, std::string_view second,
                                               const DimensionProfile &p) {
    const double candidates = pow2(-static_cast<double>(p.d_S - p.d_R));
    const double blind_v1 = pow2(static_cast<double>(p.d_S) - static_cast<double>(p.n));
    if (first == "computational_measurer" && (second == "best_counting" || second == "fixed_guess")) {
        return ExpectedRates{1.0, candidates, candidates};
    }
    if (first == "hadamard_measurer" && second == "best_counting") {
        return ExpectedRates{blind_v1, 1.0, blind_v1};
    }
    if (first == "hadamard_measurer" && second == "fixed_guess") {
        return ExpectedRates{blind_v1, candidates, blind_v1 * candidates};
    }
    return std::nullopt;
}

std::string GameReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["game"] = game;
    j["adversary"] = adversary;
    j["scope"] = std::string(kAdversaryScope);
    j["profile"] = profile_json(profile);
    j["seed"] = seed;
    j["trials"] = trials;
    j["n_audits"] = n_audits;
    j["counts"] = {{"accept", accept_count}, {"hacker", hacker_success_count}, {"simultaneous", simultaneous_count}};
    j["rates"] = {{"accept", accept_rate()}, {"hacker", hacker_rate()}, {"simultaneous", simultaneous_rate()}};
    if (expected && trials > 0) {
        auto band = [&](double p) {
            auto b = binomial_band(p, trials);
            return nlohmann::json{{"expected", p}, {"lo", b.lo}, {"hi", b.hi}};
        };
        j["bands"] = {{"accept", band(expected->accept)},
                      {"hacker", band(expected->hacker)},
                      {"simultaneous", band(expected->simultaneous)}};
    }
    return j.dump(2);
}

std::string GameReport::to_csv() const {
    std::ostringstream out;
    out << "trial,accept,hacker,simultaneous\n";
    for (const auto &t : log) {
        out << t.trial << ',' << t.accept << ',' << t.hacker << ',' << t.simultaneous() << '\n';
    }
    return out.str();
}

CdInstance sample_cd_instance(const DimensionProfile &p, Rng &rng) {
    CdInstance in;
    in.S = sample_subspace(Subspace::full(p.n), p.d_S, rng);
    in.R = sample_subspace(in.S, p.d_R, rng);
    in.T = sample_superspace(in.S, p.d_T, rng);
    in.x = in.S.canonical_rep(F2Vector::random(p.n, rng));
    in.x_T = in.T.canonical_rep(in.x);
    Subspace r_perp = dual(in.R);
    in.z_Rperp = r_perp.canonical_rep(F2Vector::random(p.n, rng));
    Subspace u = intersect(co_space(dual(in.S)), r_perp);
    in.z = u.random_element(rng) ^ in.z_Rperp;
    return in;
}

GameReport run_poni_moe(const Adversary &adv, const GameConfig &cfg) {
    const auto &p = cfg.profile;
    std::vector<TrialRecord> log(cfg.trials);
    parallel_trials(cfg.trials, cfg.seed, cfg.threads, [&](uint64_t i, Rng &rng) {
        CdInstance inst = sample_cd_instance(p, rng);
        SplitRegisters regs = adv.split(CosetState(inst.S, inst.x, inst.z), rng);

        IdealOsp osp;
        CosetVerifier verifier(CosetVerifierCtx(Coset(inst.S, inst.x), p), osp, 1, 0, rng);
        StrategyProver prover(
            [&](CosetState reg, Rng &r) { return adv.prover_strategy(regs.prover, std::move(reg), r); }, osp, rng);
        Transcript transcript;
        exchange(verifier.start(), verifier, Party::Verifier, prover, transcript);

        TrialRecord rec;
        rec.trial = i;
        rec.accept = verifier.done() && !verifier.aborted() && verifier.result().decision == Decision::Acc;
        F2Vector v_h = adv.hacker_strategy(regs.hacker, HackerKnowledge{Coset(inst.S, inst.x)}, rng);
        rec.hacker = Coset(dual(inst.S), inst.z).contains(v_h);
        log[i] = rec;
    });
    GameReport r;
    r.game = "poni_moe";
    r.adversary = adv.name;
    r.profile = p;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    r.expected = expected_moe_rates(adv.name, p);
    tally(r, std::move(log));
    return r;
}

GameReport run_enc_search_game(const Adversary &adv, uint64_t n_audits, const GameConfig &cfg) {
    const PoniEncryption scheme(cfg.profile.n);
    std::vector<TrialRecord> log(cfg.trials);
    parallel_trials(cfg.trials, cfg.seed, cfg.threads, [&](uint64_t i, Rng &rng) {
        TrialRecord rec;
        rec.trial = i;

        KeyPair keys = scheme.keygen(rng);
        VerificationKey vk = scheme.vkgen(rng);
        F2Vector m = F2Vector::random(scheme.message_bits(), rng);
        auto enc = scheme.encrypt(keys.pk, m, vk, rng);
        vk = enc.next_vk;
        const uint64_t index = enc.ct.index;

        MemoryStore store;
        store.put(enc.ct);
        IdealOsp osp;
        for (uint64_t a = 0; a < n_audits; ++a) {
            auto res = audit(store, index, scheme, vk, keys.pk.ahe, osp, osp, rng, a + 1);
            if (res.decision != Decision::Acc) {
                log[i] = rec;
                return;
            }
        }
        Ciphertext ct = *store.take(index);
        SplitRegisters regs = adv.split(std::move(*ct.quantum), rng);
        ct.quantum.reset();

        EncVerifierSession verifier(scheme, vk, keys.pk.ahe, index, osp, n_audits + 1, rng);
        StrategyProver prover(
            [&](CosetState reg, Rng &r) { return adv.prover_strategy(regs.prover, std::move(reg), r); }, osp, rng);
        Transcript transcript;
        exchange(verifier.start(), verifier, Party::Verifier, prover, transcript);
        rec.accept = verifier.done() && !verifier.aborted() && verifier.decision() == Decision::Acc;

        // H holds sk, vk and the classical parts of ct.
        auto [S, x] = scheme.coset_for(vk, index);
        F2Vector v_h = adv.hacker_strategy(regs.hacker, HackerKnowledge{Coset(S, x)}, rng);
        MaskedMessage opened = scheme.open_ct1(keys.sk, ct);
        F2Vector z_cor = scheme.open_ct2(keys.sk, ct);
        F2Vector guess = (opened.M_S * (v_h ^ z_cor)) ^ opened.masked;
        rec.hacker = guess == m;
        log[i] = rec;
    });
    GameReport r;
    r.game = "poni_enc_search";
    r.adversary = adv.name;
    r.profile = cfg.profile;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    r.n_audits = n_audits;
    r.expected = expected_moe_rates(adv.name, cfg.profile);
    tally(r, std::move(log));
    return r;
}

CdFirst cd_computational_measurer() {
    return CdFirst{"computational_measurer", [](CosetState st, const CdInstance &, Rng &rng) {
                       return std::pair{measure_computational(std::move(st), rng), HackerRegister{}};
                   }};
}

CdFirst cd_hadamard_measurer() {
    return CdFirst{"hadamard_measurer", [](CosetState st, const CdInstance &, Rng &rng) {
                       const size_t n = st.ambient_dim();
                       HackerRegister rho;
                       rho.classical.push_back(measure_hadamard(std::move(st), rng));
                       return std::pair{F2Vector::random(n, rng), std::move(rho)};
                   }};
}

CdSecond cd_best_counting() {
    return CdSecond{"best_counting", [](HackerRegister &rho, const CdInstance &in, Rng &rng) {
                        if (!rho.classical.empty()) {
                            return rho.classical.front();
                        }
                        Subspace u = intersect(co_space(dual(in.S)), dual(in.R));
                        return u.random_element(rng) ^ in.z_Rperp;
                    }};
}

CdSecond cd_fixed_guess() {
    return CdSecond{"fixed_guess", [](HackerRegister &, const CdInstance &in, Rng &) { return in.z_Rperp; }};
}

GameReport run_cd_game(const CdFirst &a1, const CdSecond &a2, const GameConfig &cfg) {
    const auto &p = cfg.profile;
    std::vector<TrialRecord> log(cfg.trials);
    parallel_trials(cfg.trials, cfg.seed, cfg.threads, [&](uint64_t i, Rng &rng) {
        CdInstance inst = sample_cd_instance(p, rng);
        auto [v1, rho] = a1.run(CosetState(inst.S, inst.x, inst.z), inst, rng);
        F2Vector v2 = a2.run(rho, inst, rng);
        TrialRecord rec;
        rec.trial = i;
        rec.accept = Coset(inst.S, inst.x).contains(v1);
        rec.hacker = Coset(dual(inst.S), inst.z).contains(v2);
        log[i] = rec;
    });
    GameReport r;
    r.game = "cd_game";
    r.adversary = a1.name + "+" + a2.name;
    r.profile = p;
    r.seed = cfg.seed;
    r.trials = cfg.trials;
    r.expected = expected_cd_rates(a1.name, a2.name, p);
    tally(r, std::move(log));
    return r;
}

MixedStateReport test_mixed_state_identity(size_t n, size_t d_S, size_t d_W, uint64_t samples, uint64_t seed) {
    if (n > 10) {
        throw std::invalid_argument("test_mixed_state_identity: n must be at most 10");
    }
    if (d_S > d_W || d_W > n || samples == 0) {
        throw std::invalid_argument("test_mixed_state_identity: need d_S <= d_W <= n and samples > 0");
    }
    Rng rng = trial_rng(seed, 0);
    Subspace W = sample_subspace(Subspace::full(n), d_W, rng);
    F2Vector x_W = W.canonical_rep(F2Vector::random(n, rng));
    Subspace S1 = sample_subspace(W, d_S, rng);
    Subspace S2 = S1;
    if (gaussian_binomial(d_W, d_S) > 1) {
        while (S2 == S1) {
            S2 = sample_subspace(W, d_S, rng);
        }
    }
    F2Vector outside(n);
    for (size_t j = 0; j < n; ++j) {
        if (!W.contains(F2Vector::unit(n, j))) {
            outside = F2Vector::unit(n, j);
            break;
        }
    }

    const auto dim = static_cast<Eigen::Index>(uint64_t{1} << n);
    const double weight = 1.0 / static_cast<double>(samples);
    auto estimate = [&](const Subspace &S, const F2Vector &shift) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
        for (uint64_t s = 0; s < samples; ++s) {
            F2Vector x = W.random_element(rng) ^ x_W ^ shift;
            F2Vector z = F2Vector::random(n, rng);
            add_projector(rho, to_statevector(CosetState(S, x, z)), weight);
        }
        return rho;
    };
    Eigen::MatrixXcd uniform = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto &w : Coset(W, x_W).elements()) {
        auto idx = static_cast<Eigen::Index>(w.to_u64());
        uniform(idx, idx) = 1.0 / std::ldexp(1.0, static_cast<int>(d_W));
    }

    Eigen::MatrixXcd rho1 = estimate(S1, F2Vector(n));
    Eigen::MatrixXcd rho2 = estimate(S2, F2Vector(n));
    Eigen::MatrixXcd control = estimate(S1, outside);

    MixedStateReport r;
    r.n = n;
    r.d_S = d_S;
    r.d_W = d_W;
    r.samples = samples;
    r.distance_s1_s2 = trace_distance(rho1, rho2);
    r.distance_s1_uniform = trace_distance(rho1, uniform);
    r.distance_s2_uniform = trace_distance(rho2, uniform);
    r.control_distance = trace_distance(control, uniform);
    return r;
}

DistributionReport test_distribution_1sample(const DimensionProfile &p, uint64_t samples, uint64_t seed) {
    const size_t n = p.n;
    const size_t bins = (n + 1) * 2 * (n + 1);
    auto bin = [&](const Subspace &first, const Subspace &second, const Subspace &S, bool &equal) {
        size_t a = intersect(second, S).dim();
        equal = first == sum(second, S);
        return (a * 2 + (equal ? 1 : 0)) * (n + 1) + first.dim();
    };
    DistributionReport r;
    r.profile = p;
    r.samples = samples;
    r.left_hist.assign(bins, 0);
    r.right_hist.assign(bins, 0);
    uint64_t left_eq = 0;
    uint64_t right_eq = 0;
    for (uint64_t i = 0; i < samples; ++i) {
        Rng rng = trial_rng(seed, i);
        Subspace S = sample_subspace(Subspace::full(n), p.d_S, rng);
        bool eq = false;

        Subspace W = sample_superspace(S, p.d_W, rng);
        Subspace T_W = sample_subspace(W, p.d_T, rng);
        ++r.left_hist[bin(W, T_W, S, eq)];
        left_eq += eq;

        Subspace R = sample_subspace(S, p.d_R, rng);
        Subspace T_R = sample_superspace(R, p.d_T, rng);
        ++r.right_hist[bin(sum(T_R, S), T_R, S, eq)];
        right_eq += eq;
    }
    r.chi = chi_square_two_sample(r.left_hist, r.right_hist);
    r.left_equal_rate = static_cast<double>(left_eq) / static_cast<double>(samples);
    r.right_equal_rate = static_cast<double>(right_eq) / static_cast<double>(samples);
    // T_W + S = W iff the annihilators of T_W and S inside W meet only in 0.
    r.left_equal_exact = 1.0;
    for (size_t i = 0; i < p.d_W - p.d_T; ++i) {
        r.left_equal_exact *= (pow2(static_cast<double>(p.d_W)) - pow2(static_cast<double>(p.d_W - p.d_S + i))) /
                              (pow2(static_cast<double>(p.d_W)) - pow2(static_cast<double>(i)));
    }
    r.recomputed_bound = pow2(-static_cast<double>(p.d_R + 1));
    r.printed_bound = pow2(static_cast<double>(p.d_R + 1));
    return r;
}

DistributionReport test_distribution_1sample(size_t lambda, uint64_t samples, uint64_t seed) {
    return test_distribution_1sample(DimensionProfile::standard(lambda), samples, seed);
}

IntersectionReport test_intersection_claim(size_t lambda, uint64_t samples, uint64_t seed) {
    auto p = DimensionProfile::standard(lambda);
    IntersectionReport r;
    r.lambda = lambda;
    r.samples = samples;
    for (uint64_t i = 0; i < samples; ++i) {
        Rng rng = trial_rng(seed, i);
        Subspace S = sample_subspace(Subspace::full(lambda), p.d_S, rng);
        Subspace T = sample_superspace(S, p.d_T, rng);
        Subspace R = sample_subspace(S, p.d_R, rng);
        Subspace T_R = sample_superspace(R, p.d_T, rng);
        r.hits += intersect(T, T_R) == R;
    }
    r.rate = static_cast<double>(r.hits) / static_cast<double>(samples);
    r.bound = 1.0 - pow2(-static_cast<double>(lambda / 6) + 1);
    r.sigma = std::sqrt(r.bound * (1 - r.bound) / static_cast<double>(samples));
    return r;
}

ExtractionReport run_extraction_experiment(size_t lambda, uint64_t trials, uint64_t seed, unsigned threads) {
    auto p = DimensionProfile::standard(lambda);
    struct Outcome {
        bool success = false;
        bool intersection = false;
    };
    std::vector<Outcome> outcomes(trials);
    parallel_trials(trials, seed, threads, [&](uint64_t i, Rng &rng) {
        Subspace S = sample_subspace(Subspace::full(lambda), p.d_S, rng);
        F2Vector x = S.canonical_rep(F2Vector::random(lambda, rng));
        F2Vector z = F2Vector::random(lambda, rng);
        Subspace R = sample_subspace(S, p.d_R, rng);
        Subspace T = sample_superspace(S, p.d_T, rng);
        F2Vector x_T = T.canonical_rep(x);
        IdealOsp osp;
        CosetProver prover(CosetState(S, x, z), osp, rng);
        auto trace = extract_traced(R, T, x_T, prover, osp, rng);
        outcomes[i] = Outcome{Coset(S, x).contains(trace.output), trace.intersection_is_R};
    });
    ExtractionReport r;
    r.lambda = lambda;
    r.trials = trials;
    for (const auto &o : outcomes) {
        r.successes += o.success;
        r.intersection_hits += o.intersection;
        r.successes_given_intersection += o.success && o.intersection;
    }
    return r;
}

}  // namespace poni

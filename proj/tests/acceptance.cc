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


// Acceptance suite. One PASS/FAIL line per criterion; exit status 0 only
// when every criterion passes. Tolerances and budgets are fixed below.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "poni/enc.h"
#include "poni/errors.h"
#include "poni/extract.h"
#include "poni/games.h"
#include "poni/poni.h"
#include "poni/statevector.h"
#include "poni/stats.h"
#include "poni/store.h"
#include "poni/wire.h"
#include "support/enumerate.h"
#include "support/golden.h"
#include "support/process.h"

namespace {

using namespace poni;
namespace fs = std::filesystem;
using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr uint64_t kSeed = 0xACCE97;
constexpr double kFidelityTol = 1e-9;
constexpr double kProbTol = 1e-12;
constexpr double kSigmas = 3.0;
constexpr double kChiAlpha = 0.01;
constexpr double kTraceDistanceMax = 0.1;

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
};

double sigma_of(double p, uint64_t n) { return std::sqrt(p * (1 - p) / static_cast<double>(n)); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Subspace random_subspace(size_t n, Rng &rng) {
    return sample_subspace(Subspace::full(n), uniform_below(rng, n + 1), rng);
}

CosetState random_coset_state(size_t n, Rng &rng) {
    Subspace S = random_subspace(n, rng);
    return CosetState(S, F2Vector::random(n, rng), F2Vector::random(n, rng));
}

std::vector<uint64_t> coset_indices(const Coset &c) {
    std::vector<uint64_t> out;
    for (const auto &e : c.elements()) {
        out.push_back(e.to_u64());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Support of an outcome distribution, and whether it is uniform on it.
std::pair<std::vector<uint64_t>, bool> support_of(const std::vector<double> &probs) {
    std::vector<uint64_t> out;
    for (uint64_t i = 0; i < probs.size(); ++i) {
        if (probs[i] > kProbTol) {
            out.push_back(i);
        }
    }
    bool uniform = !out.empty();
    for (uint64_t i : out) {
        uniform = uniform && std::abs(probs[i] - 1.0 / static_cast<double>(out.size())) < kFidelityTol;
    }
    return {out, uniform};
}

// ---------------------------------------------------------------------------

Outcome oracle_equivalence() {
    constexpr uint64_t kScripts = 1000;
    uint64_t steps = 0;
    uint64_t failures = 0;
    double worst = 0;
    std::string first;
    auto fail = [&](uint64_t script, const std::string &what) {
        if (failures++ == 0) {
            first = "script " + std::to_string(script) + ": " + what;
        }
    };
    auto check_fidelity = [&](uint64_t script, const Statevector &a, const Statevector &b) {
        double dev = std::abs(fidelity(a, b) - 1.0);
        worst = std::max(worst, dev);
        ++steps;
        if (dev > kFidelityTol) {
            fail(script, "fidelity deviation " + fmt(dev));
        }
    };

    for (uint64_t s = 0; s < kScripts; ++s) {
        Rng rng = trial_rng(kSeed + 1, s);
        const size_t n = 1 + uniform_below(rng, 10);
        CosetState sym = random_coset_state(n, rng);
        Statevector sv = to_statevector(sym);
        const uint64_t len = 2 + uniform_below(rng, 7);
        for (uint64_t k = 0; k < len; ++k) {
            uint64_t op = uniform_below(rng, n <= 5 ? 4 : 3);
            if (op == 0) {
                F2Vector a = F2Vector::random(n, rng);
                F2Vector b = F2Vector::random(n, rng);
                sym = apply_pauli(std::move(sym), a, b);
                sv.apply_z(b.to_u64());
                sv.apply_x(a.to_u64());
                check_fidelity(s, sv, to_statevector(sym));
            } else if (op == 1) {
                auto [supp, uniform] = support_of(sv.outcome_probabilities(0, n));
                ++steps;
                if (supp != coset_indices(sym.support()) || !uniform) {
                    fail(s, "computational support mismatch");
                }
            } else if (op == 2) {
                Statevector h = sv;
                h.apply_hadamard(0, n);
                auto [supp, uniform] = support_of(h.outcome_probabilities(0, n));
                ++steps;
                if (supp != coset_indices(sym.hadamard_support()) || !uniform) {
                    fail(s, "Hadamard support mismatch");
                }
            } else {
                CosetState tgt = random_coset_state(n, rng);
                Coset expected(sum(sym.space(), tgt.space()), sym.x() ^ tgt.x());
                Statevector joint = sv.tensor(to_statevector(tgt));
                joint.apply_transversal_cnot(n);
                auto probs = joint.outcome_probabilities(n, n);
                auto [supp, uniform] = support_of(probs);
                auto out = transversal_cnot_measure(std::move(sym), std::move(tgt), rng);
                if (supp != coset_indices(expected) || !uniform || probs[out.value.to_u64()] <= kProbTol ||
                    !out.residual) {
                    fail(s, "CNOT outcome support mismatch");
                    break;
                }
                auto [p, residual] = joint.project(n, n, out.value.to_u64());
                check_fidelity(s, residual, to_statevector(*out.residual));
                sym = std::move(*out.residual);
                sv = std::move(residual);
            }
        }
        // Terminal destructive measurement in a random basis.
        bool hadamard = uniform_below(rng, 2) == 1;
        Statevector view = sv;
        if (hadamard) {
            view.apply_hadamard(0, n);
        }
        auto probs = view.outcome_probabilities(0, n);
        OracleMeasurement om = oracle_measure(view, 0, n, rng);
        Coset supp = hadamard ? sym.hadamard_support() : sym.support();
        F2Vector v = hadamard ? measure_hadamard(std::move(sym), rng) : measure_computational(std::move(sym), rng);
        ++steps;
        if (probs[v.to_u64()] <= kProbTol || !supp.contains(F2Vector::from_u64(n, om.outcome))) {
            fail(s, "terminal measurement outside the shared support");
        }
    }
    return {failures == 0, std::to_string(kScripts) + " scripts, " + std::to_string(steps) +
                               " checked steps, max |F-1| = " + fmt(worst) + ", failures " +
                               std::to_string(failures) + (first.empty() ? "" : " (" + first + ")")};
}

Outcome poni_completeness() {
    constexpr uint64_t kRegisters = 1000;
    constexpr uint64_t kSessions = 10;
    const auto profile = DimensionProfile::standard(24);
    uint64_t accepts = 0;
    uint64_t preserved = 0;
    for (uint64_t r = 0; r < kRegisters; ++r) {
        Rng rng = trial_rng(kSeed + 2, r);
        Subspace S = sample_subspace(Subspace::full(profile.n), profile.d_S, rng);
        F2Vector x = S.canonical_rep(F2Vector::random(profile.n, rng));
        F2Vector z = F2Vector::random(profile.n, rng);
        CosetState st(S, x, z);
        IdealOsp osp;
        for (uint64_t k = 0; k < kSessions; ++k) {
            auto run = run_poni(std::move(st), CosetVerifierCtx(Coset(S, x), profile), osp, rng, k + 1, r);
            accepts += run.result.decision == Decision::Acc;
            z ^= run.result.z_correction;
            if (!run.residual) {
                break;
            }
            preserved += run.residual->same_state(CosetState(S, x, z));
            st = std::move(*run.residual);
        }
    }
    const uint64_t total = kRegisters * kSessions;
    return {accepts == total && preserved == total,
            std::to_string(accepts) + "/" + std::to_string(total) + " Acc, residual z matched in " +
                std::to_string(preserved) + "/" + std::to_string(total)};
}

Outcome coset_remainder_exactness() {
    uint64_t checked = 0;
    uint64_t rejected = 0;
    uint64_t failures = 0;

    // n <= 4: every (T1, T2, x1, x2), including inputs that break the promise.
    for (size_t n = 1; n <= 4; ++n) {
        auto subs = testing::all_subspaces(n);
        const uint64_t size = uint64_t{1} << n;
        for (const auto &a : subs) {
            for (const auto &b : subs) {
                for (uint64_t x1 = 0; x1 < size; ++x1) {
                    for (uint64_t x2 = 0; x2 < size; ++x2) {
                        uint64_t truth = testing::translate_mask(a.mask, x1) & testing::translate_mask(b.mask, x2);
                        try {
                            Coset r = coset_remainder({a.space, b.space, F2Vector::from_u64(n, x1),
                                                       F2Vector::from_u64(n, x2)});
                            uint64_t got = 0;
                            for (const auto &e : r.elements()) {
                                got |= uint64_t{1} << e.to_u64();
                            }
                            failures += got != truth;
                            ++checked;
                        } catch (const PromiseViolation &) {
                            failures += truth != 0;
                            ++rejected;
                        }
                    }
                }
            }
        }
    }

    // n = 5, 6: every promise class. The answer commutes with a common shift
    // of x1, x2 and with moving x1 within T1 + x1, so x2 = 0 and one x1 per
    // class of (T1 + T2) / T1 cover all promise-satisfying inputs.
    for (size_t n = 5; n <= 6; ++n) {
        auto subs = testing::all_subspaces(n);
        const uint64_t size = uint64_t{1} << n;
        const F2Vector zero(n);
        for (const auto &a : subs) {
            std::vector<uint8_t> can(size);
            for (uint64_t v = 0; v < size; ++v) {
                can[v] = static_cast<uint8_t>(a.space.canonical_rep(F2Vector::from_u64(n, v)).to_u64());
            }
            for (const auto &b : subs) {
                CosetRemainder rem(a.space, b.space);
                uint64_t classes = 0;
                for (uint8_t t : b.elements) {
                    uint64_t c = can[t];
                    if ((classes >> c) & 1) {
                        continue;
                    }
                    classes |= uint64_t{1} << c;
                    uint64_t truth = testing::translate_mask(a.mask, c) & b.mask;
                    Coset r = rem(F2Vector::from_u64(n, c), zero);
                    uint64_t off = r.offset().to_u64();
                    // truth is affine, so the offset plus offset + each basis
                    // vector inside it and a matching size pin the coset down.
                    bool ok = std::popcount(truth) == (1 << r.space().dim()) && ((truth >> off) & 1);
                    for (const auto &bv : r.space().basis()) {
                        ok = ok && ((truth >> (off ^ bv.to_u64())) & 1);
                    }
                    failures += !ok;
                    ++checked;
                }
            }
        }
    }

    // n = 24: random instances with membership verification.
    constexpr uint64_t kRandom = 10000;
    const size_t n = 24;
    for (uint64_t i = 0; i < kRandom; ++i) {
        Rng rng = trial_rng(kSeed + 3, i);
        Subspace T1 = random_subspace(n, rng);
        Subspace T2 = random_subspace(n, rng);
        F2Vector x = F2Vector::random(n, rng);
        F2Vector x1 = x ^ T1.random_element(rng);
        F2Vector x2 = x ^ T2.random_element(rng);
        Coset r = coset_remainder({T1, T2, x1, x2});
        bool ok = r.space() == intersect(T1, T2) && T1.contains(r.offset() ^ x) && T2.contains(r.offset() ^ x);
        for (int k = 0; k < 4 && ok; ++k) {
            F2Vector e = r.random_element(rng);
            ok = Coset(T1, x1).contains(e) && Coset(T2, x2).contains(e);
        }
        failures += !ok;
        ++checked;
    }
    return {failures == 0, std::to_string(checked) + " promise instances checked, " + std::to_string(rejected) +
                               " promise violations rejected, failures " + std::to_string(failures)};
}

Outcome extractor_success() {
    constexpr uint64_t kTrials = 10000;
    auto r = run_extraction_experiment(36, kTrials, kSeed + 4);
    const double p = 1.0 - std::ldexp(1.0, -5);
    const double floor = p - kSigmas * sigma_of(p, kTrials);
    const double rate = static_cast<double>(r.successes) / kTrials;
    bool ok = rate >= floor && r.intersection_hits > 0 && r.successes_given_intersection == r.intersection_hits;
    return {ok, "rate " + fmt(rate) + " >= " + fmt(floor) + ", given T n T_R = R: " +
                    std::to_string(r.successes_given_intersection) + "/" + std::to_string(r.intersection_hits)};
}

Outcome distribution_lemmas() {
    auto dist = test_distribution_1sample(24, 10000, kSeed + 5);
    auto i24 = test_intersection_claim(24, 10000, kSeed + 6);
    auto i36 = test_intersection_claim(36, 10000, kSeed + 7);
    auto mixed = test_mixed_state_identity(6, 2, 4, 4000, kSeed + 8);
    bool ok = dist.chi.p_value > kChiAlpha && i24.meets_bound() && i36.meets_bound() &&
              mixed.distance_s1_s2 < kTraceDistanceMax;
    return {ok, "chi-square p " + fmt(dist.chi.p_value) + " (dof " + std::to_string(dist.chi.dof) +
                    ", left Pr[first = second + S] " + fmt(dist.left_equal_rate) + " (exact " +
                    fmt(dist.left_equal_exact) + "), right " + fmt(dist.right_equal_rate) +
                    "); intersection 24: " + fmt(i24.rate) + " vs " + fmt(i24.bound) + ", 36: " + fmt(i36.rate) +
                    " vs " + fmt(i36.bound) + "; trace distance S1/S2 " + fmt(mixed.distance_s1_s2) +
                    "; printed proof bound 2^(d_R+1) = " + fmt(dist.printed_bound) + " > 1, tested 2^-(d_R+1) = " +
                    fmt(dist.recomputed_bound)};
}

Outcome encryption_through_audits() {
    constexpr uint64_t kTrials = 1000;
    constexpr uint64_t kAudits = 10;
    PoniEncryption scheme(24);
    uint64_t correct = 0;
    uint64_t accepts = 0;
    for (uint64_t t = 0; t < kTrials; ++t) {
        Rng rng = trial_rng(kSeed + 9, t);
        KeyPair keys = scheme.keygen(rng);
        VerificationKey vk = scheme.vkgen(rng);
        F2Vector m = F2Vector::random(scheme.message_bits(), rng);
        auto enc = scheme.encrypt(keys.pk, m, vk, rng);
        MemoryStore store;
        store.put(enc.ct);
        IdealOsp osp;
        for (uint64_t k = 0; k < kAudits; ++k) {
            auto res = audit(store, enc.ct.index, scheme, enc.next_vk, keys.pk.ahe, osp, osp, rng, k + 1);
            accepts += res.decision == Decision::Acc;
        }
        auto ct = store.take(enc.ct.index);
        correct += ct && scheme.decrypt(keys.sk, std::move(*ct), rng) == m;
    }
    return {correct == kTrials && accepts == kTrials * kAudits,
            std::to_string(correct) + "/" + std::to_string(kTrials) + " decrypted correctly after " +
                std::to_string(kAudits) + " audits each (" + std::to_string(accepts) + " Acc)"};
}

Outcome attack_tradeoff() {
    constexpr uint64_t kTrials = 10000;
    const double sim_cap = std::ldexp(1.0, -6);

    GameConfig comp_cfg{DimensionProfile::standard(24), kTrials, kSeed + 10, 1};
    auto comp = run_poni_moe(comp_measure_splitter(), comp_cfg);
    const double p_h = std::ldexp(1.0, -8);
    const double h_cap = p_h + kSigmas * sigma_of(p_h, kTrials);
    bool comp_ok = comp.accept_count == kTrials && comp.hacker_rate() <= h_cap && comp.simultaneous_rate() <= sim_cap;

    GameConfig had_cfg{DimensionProfile::standard(12), kTrials, kSeed + 11, 1};
    auto had = run_poni_moe(hadamard_measure_splitter(), had_cfg);
    auto band = binomial_band(std::ldexp(1.0, -6), kTrials, kSigmas);
    const double had_sim_cap = sim_cap + kSigmas * sigma_of(sim_cap, kTrials);
    bool had_ok = had.hacker_success_count == kTrials && band.contains(had.accept_rate()) &&
                  had.simultaneous_rate() <= had_sim_cap;

    return {comp_ok && had_ok,
            "comp (lambda 24): accept " + fmt(comp.accept_rate()) + ", hacker " + fmt(comp.hacker_rate()) +
                " <= " + fmt(h_cap) + ", simultaneous " + fmt(comp.simultaneous_rate()) + " <= " + fmt(sim_cap) +
                "; hadamard (lambda 12): hacker " + fmt(had.hacker_rate()) + ", accept " + fmt(had.accept_rate()) +
                " in [" + fmt(band.lo) + ", " + fmt(band.hi) + "], simultaneous " + fmt(had.simultaneous_rate()) +
                " <= " + fmt(had_sim_cap)};
}

Outcome cd_game_bound() {
    constexpr uint64_t kTrials = 10000;
    auto profile = DimensionProfile::standard(36);
    GameConfig cfg{profile, kTrials, kSeed + 12, 1};
    auto r = run_cd_game(cd_computational_measurer(), cd_best_counting(), cfg);
    auto band = binomial_band(std::ldexp(1.0, -static_cast<int>(profile.d_S - profile.d_R)), kTrials, kSigmas);
    return {band.contains(r.simultaneous_rate()), "simultaneous " + fmt(r.simultaneous_rate()) + " in [" +
                                                      fmt(band.lo) + ", " + fmt(band.hi) + "] around " +
                                                      fmt(band.p)};
}

Outcome counting_suite() {
    uint64_t mismatches = 0;
    uint64_t pairs = 0;
    for (size_t d = 0; d <= 5; ++d) {
        std::vector<cpp_int> counts(d + 1);
        for (const auto &s : testing::all_subspaces(d)) {
            counts[s.space.dim()] += 1;
        }
        for (size_t k = 0; k <= d; ++k) {
            mismatches += gaussian_binomial(d, k) != counts[k];
            ++pairs;
        }
    }
    uint64_t ratio_checks = 0;
    uint64_t ratio_failures = 0;
    for (size_t d = 0; d <= 20; ++d) {
        for (size_t k = 0; k <= d; ++k) {
            const cpp_int denom = gaussian_binomial(d, k);
            for (size_t r = 0; r <= k; ++r) {
                cpp_rational ratio(gaussian_binomial(d - r, k - r), denom);
                cpp_rational bound(cpp_int(1), cpp_int(1) << (r * (d - k)));
                bool strict = r >= 1 && k < d;
                ratio_failures += strict ? !(ratio < bound) : !(ratio == bound);
                ++ratio_checks;
            }
        }
    }
    return {mismatches == 0 && ratio_failures == 0,
            std::to_string(pairs) + " (d, k) pairs vs enumeration, " + std::to_string(mismatches) +
                " mismatches; " + std::to_string(ratio_checks) + " exact ratio checks, " +
                std::to_string(ratio_failures) + " failures"};
}

Outcome transport() {
    std::vector<std::string> problems;

    auto golden = testing::read_binary(fs::path(PONI_GOLDEN_DIR) / "audit_transcript.bin");
    auto fresh = testing::golden_audit_transcript();
    if (golden.empty() || golden != fresh) {
        problems.push_back("golden transcript differs (" + std::to_string(fresh.size()) + " vs " +
                           std::to_string(golden.size()) + " bytes)");
    }

    constexpr uint64_t kFuzz = 10000;
    static constexpr uint8_t kTypes[] = {0x01, 0x02, 0x10, 0x11, 0x12, 0x13, 0xFF};
    uint64_t panics = 0;
    uint64_t roundtrip_failures = 0;
    for (uint64_t i = 0; i < kFuzz; ++i) {
        Rng rng = trial_rng(kSeed + 13, i);
        std::vector<uint8_t> junk(uniform_below(rng, 64));
        for (auto &b : junk) {
            b = static_cast<uint8_t>(rng());
        }
        if (junk.size() >= kFrameHeaderSize && uniform_below(rng, 2) == 0) {
            // Plausible header: small length, sometimes a known type.
            junk[0] = junk[1] = 0;
            junk[2] = static_cast<uint8_t>(uniform_below(rng, 2));
            junk[4] = kTypes[uniform_below(rng, std::size(kTypes))];
        }
        try {
            auto res = decode_frame(junk);
            if (res.status == DecodeStatus::Ok && (!res.frame || res.consumed > junk.size())) {
                ++panics;
            }
        } catch (...) {
            ++panics;
        }

        Frame f{static_cast<MessageType>(kTypes[uniform_below(rng, std::size(kTypes))]), {}};
        f.payload.resize(uniform_below(rng, 300));
        for (auto &b : f.payload) {
            b = static_cast<uint8_t>(rng());
        }
        auto bytes = encode_frame(f);
        auto back = decode_frame(bytes);
        if (back.status != DecodeStatus::Ok || back.consumed != bytes.size() || !back.frame || *back.frame != f ||
            encode_frame(*back.frame) != bytes) {
            ++roundtrip_failures;
        }
    }
    if (panics != 0 || roundtrip_failures != 0) {
        problems.push_back("fuzz: " + std::to_string(panics) + " decoder panics, " +
                           std::to_string(roundtrip_failures) + " round-trip failures");
    }

    std::string cli_detail;
    {
        fs::path root = fs::temp_directory_path() / ("poni-accept-" + std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
        const std::string cli = PONI_CLI_PATH;
        const std::vector<std::string> common = {"--store", (root / "store").string(), "--keys",
                                                 (root / "keys").string()};
        auto cmd = [&](std::vector<std::string> args) {
            args.insert(args.begin(), cli);
            args.insert(args.end(), common.begin(), common.end());
            return testing::run_process(args);
        };
        const std::string msg = "a5";
        bool ok = cmd({"keygen", "--seed", "11"}).exit_code == 0 &&
                  cmd({"vkgen", "--lambda", "24", "--seed", "12"}).exit_code == 0 &&
                  cmd({"encrypt", "--lambda", "24", "--msg", msg, "--seed", "13"}).exit_code == 0;
        std::vector<std::string> daemon_argv = {cli,         "daemon", "--addr", "127.0.0.1:0", "--port-file",
                                                (root / "port").string(), "--seed", "14"};
        daemon_argv.insert(daemon_argv.end(), common.begin(), common.end());
        int audits_ok = 0;
        std::string decrypted;
        if (ok) {
            testing::ChildProcess daemon(daemon_argv);
            auto port = testing::wait_for_port_file(root / "port", std::chrono::seconds(10));
            if (port) {
                const std::string addr = "127.0.0.1:" + std::to_string(*port);
                for (int k = 0; k < 10; ++k) {
                    auto r = cmd({"audit", "--index", "1", "--addr", addr, "--seed", std::to_string(100 + k)});
                    audits_ok += r.exit_code == 0 && r.out == "Acc\n";
                }
            }
            daemon.stop();
            auto d = cmd({"decrypt", "--index", "1"});
            if (d.exit_code == 0) {
                decrypted = d.out;
            }
        }
        ok = ok && audits_ok == 10 && decrypted == msg + "\n";
        cli_detail = "CLI: " + std::to_string(audits_ok) + "/10 audits exit 0, decrypt printed '" +
                     decrypted.substr(0, decrypted.find('\n')) + "'";
        if (!ok) {
            problems.push_back(cli_detail);
        }
        fs::remove_all(root);
    }

    std::string detail = "golden " + std::to_string(fresh.size()) + " bytes; fuzz " + std::to_string(kFuzz) +
                         " junk + " + std::to_string(kFuzz) + " valid frames; " + cli_detail;
    for (const auto &p : problems) {
        detail += "; FAILED " + p;
    }
    return {problems.empty(), detail};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"poni acceptance suite"};
    std::vector<int> only;
    app.add_option("--only", only, "run just these criteria");
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "oracle equivalence", 60, oracle_equivalence},
        {2, "PoNI completeness and state preservation", 30, poni_completeness},
        {3, "coset remainder exactness", 60, coset_remainder_exactness},
        {4, "extractor success", 120, extractor_success},
        {5, "distribution lemmas", 300, distribution_lemmas},
        {6, "encryption correctness through audits", 120, encryption_through_audits},
        {7, "attack trade-off", 180, attack_tradeoff},
        {8, "CD-game bound", 60, cd_game_bound},
        {9, "counting suite", 10, counting_suite},
        {10, "transport", 60, transport},
    };

    int failed = 0;
    int ran = 0;
    for (const auto &c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) {
            continue;
        }
        ++ran;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.budget_s;
        bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("%s [%d] %s: %s (%.1f s of %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), secs, c.budget_s, in_time ? "" : ", over budget");
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria passed\n", ran - failed, ran);
    return failed == 0 ? 0 : 1;
}

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


#include <benchmark/benchmark.h>

#include <vector>

#include "poni/coset_state.h"
#include "poni/enc.h"
#include "poni/extract.h"
#include "poni/poni.h"
#include "poni/store.h"
#include "poni/subspace.h"

namespace poni {
namespace {

std::vector<F2Vector> random_rows(size_t n, size_t k, Rng &rng) {
    std::vector<F2Vector> rows;
    for (size_t i = 0; i < k; ++i) {
        rows.push_back(F2Vector::random(n, rng));
    }
    return rows;
}

void BM_Rref(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(1);
    F2Matrix m(n, random_rows(n, n / 2, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_Rref)->Arg(24)->Arg(36)->Arg(96)->Arg(256);

void BM_CanonicalRep(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(2);
    auto S = sample_subspace(Subspace::full(n), n / 3, rng);
    auto v = F2Vector::random(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(S.canonical_rep(v));
    }
}
BENCHMARK(BM_CanonicalRep)->Arg(24)->Arg(36)->Arg(96)->Arg(256);

void BM_Dual(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(3);
    auto S = sample_subspace(Subspace::full(n), n / 3, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dual(S));
    }
}
BENCHMARK(BM_Dual)->Arg(24)->Arg(36)->Arg(96);

void BM_Intersect(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(4);
    auto A = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    auto B = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect(A, B));
    }
}
BENCHMARK(BM_Intersect)->Arg(24)->Arg(36)->Arg(96);

void BM_CosetRemainder(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(5);
    auto T1 = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    auto T2 = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    auto x = F2Vector::random(n, rng);
    RemainderInput in{T1, T2, T1.canonical_rep(x), T2.canonical_rep(x)};
    for (auto _ : state) {
        benchmark::DoNotOptimize(coset_remainder(in));
    }
}
BENCHMARK(BM_CosetRemainder)->Arg(24)->Arg(36);

void BM_CosetRemainderPrepared(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(6);
    auto T1 = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    auto T2 = sample_subspace(Subspace::full(n), 2 * n / 3, rng);
    CosetRemainder remainder(T1, T2);
    auto x = F2Vector::random(n, rng);
    auto x1 = T1.canonical_rep(x);
    auto x2 = T2.canonical_rep(x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(remainder(x1, x2));
    }
}
BENCHMARK(BM_CosetRemainderPrepared)->Arg(24)->Arg(36);

void BM_RunPoni(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    auto p = DimensionProfile::standard(n);
    Rng rng(7);
    auto S = sample_subspace(Subspace::full(n), p.d_S, rng);
    auto x = S.canonical_rep(F2Vector::random(n, rng));
    std::optional<CosetState> reg;
    reg.emplace(S, x, F2Vector(n));
    uint64_t session = 0;
    for (auto _ : state) {
        IdealOsp osp;
        auto run = run_poni(std::move(*reg), CosetVerifierCtx(Coset(S, x), p), osp, rng, ++session);
        reg = std::move(run.residual);
    }
}
BENCHMARK(BM_RunPoni)->Arg(24)->Arg(36)->Arg(96);

void BM_Audit(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(8);
    PoniEncryption scheme(n);
    auto keys = scheme.keygen(rng);
    auto vk = scheme.vkgen(rng);
    auto enc = scheme.encrypt(keys.pk, F2Vector(scheme.message_bits()), vk, rng);
    MemoryStore store;
    store.put(enc.ct);
    IdealOsp osp;
    uint64_t session = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit(store, 1, scheme, enc.next_vk, keys.pk.ahe, osp, osp, rng, ++session));
    }
}
BENCHMARK(BM_Audit)->Arg(24)->Arg(36);

void BM_EncryptDecrypt(benchmark::State &state) {
    const auto n = static_cast<size_t>(state.range(0));
    Rng rng(9);
    PoniEncryption scheme(n);
    auto keys = scheme.keygen(rng);
    auto vk = scheme.vkgen(rng);
    auto m = F2Vector::random(scheme.message_bits(), rng);
    for (auto _ : state) {
        auto enc = scheme.encrypt(keys.pk, m, vk, rng);
        benchmark::DoNotOptimize(scheme.decrypt(keys.sk, std::move(enc.ct), rng));
    }
}
BENCHMARK(BM_EncryptDecrypt)->Arg(24)->Arg(36);

}  // namespace
}  // namespace poni

BENCHMARK_MAIN();

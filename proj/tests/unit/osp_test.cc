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


#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <utility>

#include "poni/errors.h"
#include "poni/osp.h"
#include "poni/statevector.h"
#include "poni/stats.h"
#include "support/util.h"

namespace poni {
namespace {

using testing::random_subspace;

TEST(IdealOsp, DeliversTheMaskedCosetState) {
    Rng rng(40);
    for (int t = 0; t < 200; ++t) {
        const size_t n = 1 + uniform_below(rng, 10);
        auto T = random_subspace(n, rng);
        auto run = ideal_osp(T, t, rng);
        EXPECT_EQ(run.state.space(), T);
        EXPECT_EQ(run.state.x(), run.sender.x_osp);
        EXPECT_EQ(run.state.z(), run.sender.z_osp);
        // Literal |T_{x,z}> from the masks.
        Statevector lit(n);
        lit[0] = 0;
        double amp = 1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(T.dim())));
        for (const auto &e : Coset(T, run.sender.x_osp).elements()) {
            lit[e.to_u64()] = e.dot(run.sender.z_osp) ? -amp : amp;
        }
        EXPECT_NEAR(fidelity(lit, to_statevector(run.state)), 1.0, 1e-9);
    }
}

TEST(IdealOsp, MasksAreUniformOverCanonicalRepresentatives) {
    Rng rng(41);
    auto T = random_subspace(8, 4, rng);
    auto coT = co_space(T).elements();
    auto coTperp = co_space(dual(T)).elements();
    ASSERT_EQ(coT.size() * coTperp.size(), 256u);
    std::map<std::pair<uint64_t, uint64_t>, uint64_t> counts;
    for (int i = 0; i < 10000; ++i) {
        auto m = sample_osp_masks(T, rng);
        ++counts[{m.x_osp.to_u64(), m.z_osp.to_u64()}];
    }
    std::vector<uint64_t> h;
    for (const auto &x : coT) {
        for (const auto &z : coTperp) {
            auto it = counts.find({x.to_u64(), z.to_u64()});
            h.push_back(it == counts.end() ? 0 : it->second);
        }
    }
    uint64_t total = 0;
    for (auto c : h) {
        total += c;
    }
    ASSERT_EQ(total, 10000u);
    EXPECT_GT(chi_square_uniform(h).p_value, 0.01);
}

TEST(IdealOsp, ReceiverViewDependsOnlyOnSizeAndSession) {
    Rng rng(42);
    for (int t = 0; t < 50; ++t) {
        auto a = ideal_osp(random_subspace(16, rng), 9, rng);
        auto b = ideal_osp(random_subspace(16, rng), 9, rng);
        EXPECT_EQ(a.transcript.receiver_view(), b.transcript.receiver_view());
    }
    auto c = ideal_osp(random_subspace(16, rng), 10, rng);
    auto d = ideal_osp(random_subspace(17, rng), 9, rng);
    auto base = ideal_osp(random_subspace(16, rng), 9, rng).transcript.receiver_view();
    EXPECT_NE(c.transcript.receiver_view(), base);
    EXPECT_NE(d.transcript.receiver_view(), base);
}

TEST(IdealOsp, MailboxIsPerSession) {
    Rng rng(43);
    IdealOsp osp;
    auto T = random_subspace(6, rng);
    auto [out1, prep1] = osp.prepare(T, 1, rng);
    auto [out2, prep2] = osp.prepare(T, 2, rng);
    EXPECT_EQ(osp.pending(), 2u);
    auto [st2, ack2] = osp.receive(prep2);
    EXPECT_EQ(st2.x(), out2.x_osp);
    EXPECT_EQ(parse_osp_ack(ack2).session, 2u);
    EXPECT_THROW(osp.receive(prep2), ProtocolError);
    EXPECT_EQ(osp.pending(), 1u);
    EXPECT_THROW(osp.receive(to_frame(OspPrepareMsg{1, 7})), ProtocolError);
}

TEST(FileChannelOsp, HandsTheRegisterAcrossInstances) {
    Rng rng(44);
    auto dir = std::filesystem::temp_directory_path() / ("poni-osp-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    {
        FileChannelOsp sender(dir);
        FileChannelOsp receiver(dir);
        auto T = random_subspace(20, rng);
        auto [out, prep] = sender.prepare(T, 5, rng);
        auto [st, ack] = receiver.receive(prep);
        EXPECT_TRUE(st.same_state(CosetState(T, out.x_osp, out.z_osp)));
        EXPECT_EQ(parse_osp_ack(ack).session, 5u);
        EXPECT_TRUE(std::filesystem::is_empty(dir));
        EXPECT_THROW(receiver.receive(prep), ProtocolError);
    }
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace poni

// Copyright 2026 The pingpong-eve Authors
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

#include "pingpong/rng.h"

#include "gtest/gtest.h"

using namespace pingpong;

TEST(Rng, same_seed_same_stream) {
    Rng a(7), b(7);
    for (int i = 0; i < 100; i++) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(Rng, substreams_depend_only_on_seed_and_index) {
    Rng parent(42);
    parent.next_u64();
    Rng fresh(42);
    ASSERT_EQ(parent.substream(3).next_u64(), fresh.substream(3).next_u64());
    ASSERT_NE(fresh.substream(3).next_u64(), fresh.substream(4).next_u64());
}

TEST(Rng, uniform_in_unit_interval) {
    Rng rng(1);
    double total = 0;
    for (int i = 0; i < 100000; i++) {
        double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        total += u;
    }
    ASSERT_NEAR(total / 100000, 0.5, 0.005);
}

TEST(Rng, bernoulli_edges) {
    Rng rng(2);
    for (int i = 0; i < 1000; i++) {
        ASSERT_FALSE(rng.bernoulli(0.0));
        ASSERT_TRUE(rng.bernoulli(1.0));
    }
}

// Copyright 2026 The IonSim Authors
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

#include "ionsim/rng.h"

#include <cmath>

namespace ionsim {

namespace {

std::mt19937_64 seeded_engine(std::initializer_list<uint32_t> words) {
    std::seed_seq seq(words);
    return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(uint64_t seed)
    : engine_(seeded_engine({(uint32_t)seed, (uint32_t)(seed >> 32)})) {
}

RngStream::RngStream(uint64_t base_seed, uint64_t trial, StreamTag tag)
    : engine_(seeded_engine(
          {(uint32_t)base_seed,
           (uint32_t)(base_seed >> 32),
           (uint32_t)trial,
           (uint32_t)(trial >> 32),
           (uint32_t)tag})) {
}

double RngStream::uniform() {
    draws_++;
    return (double)(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2 * uniform() - 1;
        v = 2 * uniform() - 1;
        s = u * u + v * v;
    } while (s >= 1 || s == 0);
    double f = std::sqrt(-2 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
}

}  // namespace ionsim

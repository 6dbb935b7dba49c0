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

#ifndef IONSIM_RNG_H
#define IONSIM_RNG_H

#include <cstdint>
#include <random>

namespace ionsim {

/// Independent random streams used by one trial.
enum class StreamTag : uint32_t {
    OpError = 1,
    Emission = 2,
    Measurement = 3,
};

/// Seeded random source with platform-independent output.
///
/// std::mt19937_64 and std::seed_seq are fully specified by the standard, so
/// they are reproducible everywhere. The standard distributions are not, so
/// uniform and gaussian variates are derived here from raw engine output.
class RngStream {
   public:
    explicit RngStream(uint64_t seed);
    /// Stream for (base seed, trial, tag). Different tags never share state.
    RngStream(uint64_t base_seed, uint64_t trial, StreamTag tag);

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via the Marsaglia polar method.
    double gaussian();
    double gaussian(double mean, double stddev) {
        return mean + stddev * gaussian();
    }

    uint64_t draws() const {
        return draws_;
    }

   private:
    std::mt19937_64 engine_;
    uint64_t draws_ = 0;
    double spare_ = 0;
    bool has_spare_ = false;
};

}  // namespace ionsim

#endif

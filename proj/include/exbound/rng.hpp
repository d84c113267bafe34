#pragma once

#include <cstdint>
#include <random>

#include "exbound/numerics.hpp"

namespace exbound::mc {

// Substream families. The numeric values are part of the reproducibility
// contract: changing one changes every seeded result in that family.
enum class Domain : std::uint32_t {
  ChshSetting = 1,
  NcSetting = 2,
  ChshExclusivity = 3,
  NcExclusivity = 4,
  RandomStates = 5,
};

struct StreamKey {
  std::uint64_t master;
  Domain domain;
  std::uint64_t index;
};

std::uint64_t splitmix64(std::uint64_t& state);

// Independent generator for one (master seed, domain, index) triple. No state
// is shared between streams, so streams can be consumed in any order or in
// parallel.
std::mt19937_64 make_stream(const StreamKey& key);

// Haar-distributed pure state: normalized complex Gaussian vector.
numerics::StateVector random_state(std::size_t dim, std::mt19937_64& rng);

}  // namespace exbound::mc

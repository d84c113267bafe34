#include "exbound/rng.hpp"

#include <vector>

namespace exbound::mc {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_stream(const StreamKey& key) {
  std::uint64_t state = key.master;
  const std::uint64_t a = splitmix64(state);
  state ^= static_cast<std::uint64_t>(key.domain) * 0xd1b54a32d192ed03ULL;
  const std::uint64_t b = splitmix64(state);
  state ^= key.index * 0x8cb92ba72f3d8dd7ULL;
  const std::uint64_t c = splitmix64(state);
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                    static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
  return std::mt19937_64(seq);
}

numerics::StateVector random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<numerics::Complex> amps(dim);
  for (auto& z : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z = {re, im};
  }
  return numerics::StateVector(std::move(amps)).normalized();
}

}  // namespace exbound::mc

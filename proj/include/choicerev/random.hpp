#ifndef CHOICEREV_RANDOM_HPP
#define CHOICEREV_RANDOM_HPP

// Seeded generation helpers. std::mt19937_64 output is fixed by the standard,
// but the standard distributions are not, so draws go through these instead
// to keep generated artifacts identical across toolchains.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace choicerev {

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) { return bound ? rng() % bound : 0; }

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace choicerev

#endif  // CHOICEREV_RANDOM_HPP

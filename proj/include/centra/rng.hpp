#ifndef CENTRA_RNG_HPP
#define CENTRA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "centra/permutation.hpp"

namespace centra {

// std::mt19937_64's output sequence is pinned by the standard, so a seed
// reproduces bit-identically everywhere. std::uniform_int_distribution is
// not, so bounded draws go through this rejection sampler instead.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

// Fisher-Yates over a value vector, in place.
template <typename T>
void shuffle_values(std::vector<T>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(values[i - 1], values[j]);
  }
}

inline Permutation random_permutation(int degree, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  shuffle_values(images, rng);
  return Permutation(std::move(images));
}

}  // namespace centra

#endif  // CENTRA_RNG_HPP

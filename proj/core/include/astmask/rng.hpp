#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace astmask {

// Deterministic 64-bit hash (FNV-1a). Used to derive per-record seeds from
// string identifiers so sharded runs agree on a record's stream regardless
// of processing order.
std::uint64_t fnv1a64(std::string_view s);

// Mixes a seed with a stream tag into a fresh seed. Forked streams are
// statistically independent of each other and of the parent.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag);

// xoshiro256** seeded through splitmix64. The generator and every
// distribution helper below are specified bit-for-bit by this file, with no
// dependence on libstdc++/libc++ distribution internals, so seeded outputs
// are identical across compilers and platforms.
//
// Stream splitting: fork(tag) derives an independent generator from the
// *original seed* and the tag, not from the current state, so the set of
// child streams does not depend on how many draws the parent has made.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double next_double();

  // Uniform integer in [0, n). n must be > 0. Unbiased (rejection sampling).
  std::uint64_t uniform_below(std::uint64_t n);

  // Uniform integer in [lo, hi] inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p) { return next_double() < p; }

  Rng fork(std::uint64_t tag) const { return Rng(mix_seed(seed_, tag)); }
  Rng fork(std::string_view tag) const { return fork(fnv1a64(tag)); }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_below(i));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace astmask

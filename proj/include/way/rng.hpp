#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace way::rng {

// splitmix64-style mixing for deriving child stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Deterministic random source. mt19937_64 output is pinned by the standard,
// and every distribution below is implemented here on top of the raw stream,
// so identical seeds give identical draws on every platform. The std::
// distribution adapters are deliberately not used for that reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t u64() { return engine_(); }

  // Uniform in [0, 1) with 53 bits of precision.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  std::uint64_t uniform_int(std::uint64_t n);

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  bool bernoulli(double p) { return u01() < p; }

  // Box-Muller.
  double normal(double mean = 0.0, double stddev = 1.0);

  double exponential(double mean);

  // Knuth's product-of-uniforms method; fine for small lambda.
  int poisson(double lambda);

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), returned sorted ascending.
  std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

  // Independent child stream seeded from this stream's seed and `stream_id`.
  // Does not consume state from the parent.
  Rng derive(std::uint64_t stream_id) const { return Rng(mix_seed(seed_, stream_id)); }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace way::rng

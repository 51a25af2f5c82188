#pragma once

// Random valid instances by rejection sampling.

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "kummer/invariants.hpp"

namespace kummer {

struct GeneratorConfig {
  std::vector<u64> primes_p{2};
  std::vector<unsigned> exponents_n{1};
  std::vector<int> factor_counts{1, 2, 3};  ///< choices for m
  /// Fixed l1 / l2; drawn from primes below `l_bound` (excluding p) when unset.
  std::optional<u64> l1;
  std::optional<u64> l2;
  u64 l_bound = 200;
  std::size_t max_attempts = 100000;
};

struct RejectionCounts {
  std::size_t zero_pair = 0;
  std::size_t intersection = 0;
  std::size_t eps0_minimal = 0;

  std::size_t total() const noexcept { return zero_pair + intersection + eps0_minimal; }
};

class InstanceGenerator {
 public:
  InstanceGenerator(GeneratorConfig config, u64 seed);

  /// Pairs are uniform in (Z/p^n)^2; draws violating a hypothesis are rejected
  /// and counted. Throws Error after max_attempts consecutive rejections.
  TowerSpec next();

  const RejectionCounts& rejections() const noexcept { return rejections_; }

 private:
  u64 pick_prime_l(u64 p, u64 avoid);

  GeneratorConfig config_;
  std::mt19937_64 rng_;
  RejectionCounts rejections_;
};

}  // namespace kummer

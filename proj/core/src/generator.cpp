#include "kummer/generator.hpp"

#include "kummer/errors.hpp"

namespace kummer {

InstanceGenerator::InstanceGenerator(GeneratorConfig config, u64 seed) : config_(std::move(config)), rng_(seed) {
  if (config_.primes_p.empty() || config_.exponents_n.empty() || config_.factor_counts.empty())
    throw DomainError("generator needs at least one choice of p, n and m");
}

u64 InstanceGenerator::pick_prime_l(u64 p, u64 avoid) {
  std::vector<u64> candidates;
  for (u64 x = 2; x < config_.l_bound; ++x)
    if (is_prime(x) && x != p && x != avoid) candidates.push_back(x);
  if (candidates.empty()) throw DomainError("no admissible prime l below the bound");
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng_)];
}

TowerSpec InstanceGenerator::next() {
  auto choose = [&](const auto& v) {
    std::uniform_int_distribution<std::size_t> pick(0, v.size() - 1);
    return v[pick(rng_)];
  };
  const u64 p = choose(config_.primes_p);
  const unsigned n = choose(config_.exponents_n);
  const int m = choose(config_.factor_counts);
  const u64 l1 = config_.l1 ? *config_.l1 : pick_prime_l(p, 0);
  const u64 l2 = config_.l2 ? *config_.l2 : pick_prime_l(p, l1);
  const PrimePowerCtx ctx = PrimePowerCtx::make(p, n);
  std::uniform_int_distribution<i64> coord(0, static_cast<i64>(ctx.modulus()) - 1);

  for (std::size_t attempt = 0; attempt < config_.max_attempts; ++attempt) {
    std::vector<std::pair<i64, i64>> pairs;
    for (int i = 0; i <= m; ++i) pairs.emplace_back(coord(rng_), coord(rng_));
    TowerSpec spec = make_spec(p, n, l1, l2, pairs);
    try {
      validate(spec);
      return spec;
    } catch (const InvalidInstance& e) {
      if (e.hypothesis() == "zero-pair") {
        ++rejections_.zero_pair;
      } else if (e.hypothesis() == "intersection") {
        ++rejections_.intersection;
      } else if (e.hypothesis() == "eps0-minimal") {
        ++rejections_.eps0_minimal;
      } else {
        throw;
      }
    }
  }
  throw Error("instance generator exhausted its attempt budget");
}

}  // namespace kummer

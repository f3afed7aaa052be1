#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rk2/extremal.hpp"

namespace rk2 {

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
};

struct VerifyOptions {
  long crystal_samples = 2000;
  std::uint64_t seed = 20240611;
  long budget = 100000;
  unsigned threads = 1;
};

const std::vector<std::string>& suite_names();  // without "all"
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

// Cartan grid of the sequence checks
const std::vector<std::pair<int, int>>& sequence_grid();

// random vector with support in [-span, span], at most max_support entries,
// entries in [-bound, bound] with x_k >= 0 for k > 0 and x_k <= 0 for k < 0
template <class Rng>
LambdaVector random_vector(const CartanRank2& c, const Weight& w, Rng& rng, long span, int max_support,
                           long bound);

}  // namespace rk2

#include <random>

namespace rk2 {

template <class Rng>
LambdaVector random_vector(const CartanRank2& c, const Weight& w, Rng& rng, long span, int max_support,
                           long bound) {
  std::uniform_int_distribution<int> count(0, max_support);
  std::uniform_int_distribution<long> where(-span, span - 1);
  std::uniform_int_distribution<long> mag(1, bound);
  LambdaVector v(c, w);
  int n = count(rng);
  for (int t = 0; t < n; ++t) {
    long k = where(rng);
    if (k >= 0) ++k;
    v.entries[k] = k > 0 ? mag(rng) : -mag(rng);
  }
  return v;
}

}  // namespace rk2

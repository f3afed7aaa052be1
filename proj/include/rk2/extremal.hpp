#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rk2/crystal.hpp"

namespace rk2 {

// h_{-j} = p*lambda1 + q*lambda2, returned as (p, q)
std::pair<Int, Int> h_basis(const CartanRank2& c, long j);
// l_j = p*lambda1 + q*lambda2
std::pair<Int, Int> l_basis(const CartanRank2& c, long j);

Int h_coeff(const CartanRank2& c, const Weight& w, long j);
Int l_coeff(const CartanRank2& c, const Weight& w, long j);

// H_{-n}: x_{-m} = h_{-m} for 1 <= m <= n; L_n: x_m = l_m for 1 <= m <= n
LambdaVector make_h_vector(const CartanRank2& c, const Weight& w, long n);
LambdaVector make_l_vector(const CartanRank2& c, const Weight& w, long n);

std::optional<LambdaVector> highest_vector(const CartanRank2& c, const Weight& w);
std::optional<LambdaVector> lowest_vector(const CartanRank2& c, const Weight& w);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExtremalReport {
  WeightClassification classification;
  std::optional<LambdaVector> highest, lowest;
  long highest_steps = -1, lowest_steps = -1;  // -1 when not run
  std::vector<Check> checks;
  bool passed() const;
};

// checks every extremal vector the classification provides
ExtremalReport verify_extremal(const CartanRank2& c, const Weight& w, long budget);

// appendix classification for A2, B2, G2 and transposes: (highest index, lowest index)
std::pair<std::optional<long>, std::optional<long>> classical_table(const CartanRank2& c, const Weight& w);

}  // namespace rk2

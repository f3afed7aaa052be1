#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rk2/cartan_seq.hpp"

namespace rk2 {

// iota = (..., 1, 2, 1, t_lambda, 2, 1, 2, ...), read with index k in Z \ {0}
int iota(long k);
long k_plus(long k);
long k_minus(long k);

using Entries = std::map<long, Int>;  // never stores zeros, never key 0

struct LambdaVector {
  CartanRank2 cartan;
  Weight weight;
  Entries entries;

  LambdaVector(CartanRank2 c, Weight w, Entries e = {});

  Int at(long k) const;
  void add(long k, const Int& delta);
  bool is_zero() const { return entries.empty(); }
  long min_support() const;  // 0 when empty
  long max_support() const;
  Int total() const;
  bool same_point(const LambdaVector& o) const { return entries == o.entries; }
};

Int sigma(const LambdaVector& x, long k);

// sigma_k for every k != 0 in [min(minsupp,-1)-2, max(maxsupp,1)+2]
std::map<long, Int> sigma_window(const LambdaVector& x);

struct SigmaProfile {
  Int max_value;
  std::vector<long> maximizers;  // inside the evaluation window
  bool neg_tail_attains = false;
  bool pos_tail_attains = false;
  Int neg_tail_value;  // -<h_i, wt(x)>
};

SigmaProfile sigma_profile(const LambdaVector& x, int i);

std::optional<LambdaVector> e_tilde(const LambdaVector& x, int i);
std::optional<LambdaVector> f_tilde(const LambdaVector& x, int i);

// (<h_1, wt>, <h_2, wt>)
std::pair<Int, Int> wt(const LambdaVector& x);
Int epsilon(const LambdaVector& x, int i);
Int phi(const LambdaVector& x, int i);

enum class RaiseMode { Raise, Lower };

struct RaiseResult {
  LambdaVector vector;
  long steps = 0;
  bool step_limit = false;
};

// applies e~ (Raise) or f~ (Lower), trying i = 2 before i = 1, until both are Null
RaiseResult raise_to_extremal(const LambdaVector& x, RaiseMode mode, long max_steps);

struct BfsOptions {
  long depth = 8;
  std::size_t node_budget = 1000000;
  bool use_f = true;
  bool use_e = false;
  unsigned threads = 1;
};

struct CrystalGraph {
  LambdaVector seed;
  long depth = 0;
  std::vector<LambdaVector> nodes;                      // canonical order
  std::vector<std::tuple<std::size_t, int, std::size_t>> edges;  // f~_i(nodes[a]) = nodes[b]
  bool saturated = false;
};

CrystalGraph bfs_component(const LambdaVector& seed, const BfsOptions& opt);

}  // namespace rk2

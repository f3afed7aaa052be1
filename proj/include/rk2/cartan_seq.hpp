#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rk2/errors.hpp"

namespace rk2 {

using Int = boost::multiprecision::cpp_int;

enum class CartanKind { Finite, Affine, Hyperbolic };

// Cartan matrix [[2, -c1], [-c2, 2]]
struct CartanRank2 {
  Int c1, c2;

  CartanRank2(Int c1_, Int c2_);

  // <h_i, alpha_j>
  Int pairing(int i, int j) const;
  Int x() const { return c1 * c2 - 2; }
  CartanKind kind() const;
  bool operator==(const CartanRank2& o) const { return c1 == o.c1 && c2 == o.c2; }
};

struct Weight {
  Int l1, l2;
  const Int& at(int i) const { return i == 1 ? l1 : l2; }
  bool operator==(const Weight& o) const { return l1 == o.l1 && l2 == o.l2; }
};

const char* kind_name(CartanKind k);

Int chebyshev(long k, const Int& X);
Int a_seq(const CartanRank2& c, long l);
Int a_prime_seq(const CartanRank2& c, long l);

// Cached a_l, a'_l for one Cartan datum. Not shared between threads.
class Sequences {
 public:
  explicit Sequences(const CartanRank2& c);
  const Int& a(long l);
  const Int& ap(long l);
  const CartanRank2& cartan() const { return c_; }

 private:
  void grow(long l);
  CartanRank2 c_;
  std::vector<Int> cheb_;  // cheb_[k+1] = P_k
  std::vector<Int> a_, ap_;
};

// num/den with den >= 0; den == 0 stands for +infinity
struct Ratio {
  Int num, den;
  bool infinite() const { return den == 0; }
  std::string str() const;
};
int compare(const Ratio& x, const Ratio& y);

enum class AlphaBeta { AboveAlpha, EqualAlphaBeta, Between, BelowBeta, EqualBoundary };
const char* alpha_beta_name(AlphaBeta p);

Int discriminant(const CartanRank2& c, const Weight& w);
AlphaBeta compare_with_alpha_beta(const CartanRank2& c, const Weight& w);

enum class Regime {
  TrivialDominant,
  TrivialAntidominant,
  HighestOdd,
  HighestEven,
  LowestOdd,
  LowestEven,
  AffineLevelZero,
  HyperbolicGapNeither,
};
const char* regime_name(Regime r);

// Decreasing ladder T_n (highest weight side) and increasing ladder U_n (lowest).
// T_{2k-1} = a_{2k}/a_{2k-1}, T_{2k} = a'_{2k+1}/a'_{2k}
// U_0 = 0, U_{2k-1} = a'_{2k-1}/a'_{2k}, U_{2k} = a_{2k}/a_{2k+1}
Ratio decreasing_ladder(Sequences& s, long n);
Ratio increasing_ladder(Sequences& s, long n);

// one extremal side of a classification: H_{-index} or L_index
struct ExtremalSide {
  Regime regime;
  long k = 0;
  long index = 0;  // 0 means the zero vector
  // highest: upper > r >= lower; lowest: lower < r <= upper; absent upper means no constraint
  std::optional<Ratio> lower, upper;
};

struct WeightClassification {
  Regime regime = Regime::HyperbolicGapNeither;
  long k = 0;
  Ratio r{0, 1};  // lambda1 / (-lambda2) unreduced, meaningful for mixed signs
  // finite type with mixed signs fills both sides; regime then names the highest one
  std::optional<ExtremalSide> highest, lowest;

  bool is_highest() const { return regime == Regime::HighestOdd || regime == Regime::HighestEven; }
  bool is_lowest() const { return regime == Regime::LowestOdd || regime == Regime::LowestEven; }
  std::string describe() const;
};

WeightClassification classify_weight(const CartanRank2& c, const Weight& w, long scan_bound = 100000);

}  // namespace rk2

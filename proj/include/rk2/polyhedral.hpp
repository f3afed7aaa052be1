#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rk2/crystal.hpp"

namespace rk2 {

// sum_k coeffs[k] x_k + p*lambda1 + q*lambda2
struct LinearForm {
  Entries coeffs;
  Int p = 0, q = 0;

  static LinearForm coordinate(long k, const Int& c = 1);
  Int coeff(long k) const;
  void add_term(long k, const Int& c);
  void add_scaled(const LinearForm& o, const Int& s);  // this += s * o
  Int constant(const Weight& w) const { return p * w.l1 + q * w.l2; }
  Int evaluate(const LambdaVector& x) const;
  long min_support() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
  long max_support() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }
  bool within(long window) const;  // support inside [-window, window]
  std::string str() const;

  bool operator==(const LinearForm& o) const { return coeffs == o.coeffs && p == o.p && q == o.q; }
  bool operator<(const LinearForm& o) const;
};

// sigma_k - sigma_{k+}
LinearForm beta_bar(const CartanRank2& c, long k);
LinearForm s_bar(const CartanRank2& c, long k, const LinearForm& form);

enum class FamilyName { XiClosure, XiDisplayed, Xi1, Xi2, Xi3, Xi4, XiHalfPositive, XiHalfNegative };
const char* family_name(FamilyName n);

struct FormFamily {
  FamilyName name = FamilyName::XiClosure;
  long k = 0;
  long window = 0;
  long depth = 0;
  bool fixpoint = false;  // closure stopped because nothing new appeared
  std::vector<LinearForm> generators;
  std::vector<LinearForm> forms;  // sorted, deduplicated
};

// x_j and -x_{-j} for 1 <= j <= window
std::vector<LinearForm> default_generators(long window);

FormFamily xi_closure(const CartanRank2& c, const std::vector<LinearForm>& generators, long window,
                      long max_depth, std::size_t budget = 1000000);

// a_m x_m - a_{m-1} x_{m+1} and -a'_m x_{-m} + a'_{m-1} x_{-m-1} for 1 <= m <= m_max
FormFamily xi_displayed(const CartanRank2& c, long m_max);

// closure forms that are not literally among the displayed ones
std::vector<LinearForm> undisplayed_forms(const FormFamily& closure, const FormFamily& displayed);

// Regime generators. which = 1..4 for HighestOdd, HighestEven, LowestOdd, LowestEven with index k.
// Shifted generators x_{-m} - h_{-m} (m <= n) plus x_{-m} for n < m <= window on the highest side;
// -x_m + l_m (m <= n) plus -x_m for n < m <= window on the lowest side. n = 2k-1 or 2k.
std::vector<LinearForm> xi_generators(const CartanRank2& c, int which, long k, long window);

// the same shape for any extremal index n >= 0; n = 0 pins the far half to zero
std::vector<LinearForm> side_generators(const CartanRank2& c, bool highest, long n, long window);

// base closure plus the closure of the generators of the weight's extremal side (highest if both)
std::vector<LinearForm> component_forms(const CartanRank2& c, const Weight& w, long window, long depth,
                                        std::size_t budget = 1000000);

// closed-form rows of the table for `which`, instantiated for 1 <= j <= j_max, 0 <= i <= i_max
struct TableRow {
  int row;  // 1..8 in table order
  long j, i;
  LinearForm form;
};
std::vector<TableRow> xi_table_rows(const CartanRank2& c, int which, long k, long j_max, long i_max);

FamilyName which_family(int which);
int regime_which(Regime r);  // 1..4, or 0 for non-extremal regimes

// generators and instantiated rows; RegimeMismatch unless the weight classifies into `which` with k
FormFamily xi_family(const CartanRank2& c, const Weight& w, int which, long k, long j_max, long i_max,
                     long window);

struct Membership {
  bool member = true;
  std::optional<LinearForm> violated;
};

// forms whose support leaves [-window-2, window+2] are ignored; x must lie inside [-window, window]
Membership is_member(const LambdaVector& x, const std::vector<LinearForm>& forms, long window);

enum class BoxDirection { Down, Up };

// integer points on [-window, window] with sign-correct halves, sum in [sum_min, sum_max],
// satisfying every form supported in [-window-2, window+2]; canonical order
std::vector<LambdaVector> enumerate_box(const CartanRank2& c, const Weight& w,
                                        const std::vector<LinearForm>& forms, long window,
                                        const Int& sum_min, const Int& sum_max,
                                        std::size_t budget = 10000000);

// sum window relative to a seed: Down means [total(seed), total(seed)+bound], Up the mirror
std::vector<LambdaVector> enumerate_box(const LambdaVector& seed, const std::vector<LinearForm>& forms,
                                        long window, long bound, BoxDirection dir,
                                        std::size_t budget = 10000000);

// closed form of the chain S_{-k+l-1} ... S_{-k}(x_{-k}), skipping index 0
LinearForm phi_chain_closed(const CartanRank2& c, long l, long k);
LinearForm phi_chain_iterated(const CartanRank2& c, long l, long k);

// half-line operator S_k with beta_k zero once it would reach across t_lambda
LinearForm s_half_positive(const CartanRank2& c, long k, const LinearForm& form);
LinearForm s_half_negative(const CartanRank2& c, long k, const LinearForm& form);

FormFamily half_closure(const CartanRank2& c, bool positive, long window, long depth,
                        std::size_t budget = 1000000);

bool check_pn_assumptions(const CartanRank2& c, long depth, long window, std::size_t budget = 1000000);

}  // namespace rk2

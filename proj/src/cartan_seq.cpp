#include "rk2/cartan_seq.hpp"

#include <sstream>

namespace rk2 {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::IndexZero: return "IndexZero";
    case ErrorKind::ScanOverflow: return "ScanOverflow";
    case ErrorKind::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorKind::FormBudgetExceeded: return "FormBudgetExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::RegimeMismatch: return "RegimeMismatch";
    case ErrorKind::WindowViolation: return "WindowViolation";
    case ErrorKind::UnsupportedCartan: return "UnsupportedCartan";
  }
  return "?";
}

CartanRank2::CartanRank2(Int c1_, Int c2_) : c1(std::move(c1_)), c2(std::move(c2_)) {
  if (c1 < 1 || c2 < 1)
    throw Error(ErrorKind::PreconditionViolation, "Cartan entries c1, c2 must be >= 1");
}

Int CartanRank2::pairing(int i, int j) const {
  if (i == j) return 2;
  return i == 1 ? Int(-c1) : Int(-c2);
}

CartanKind CartanRank2::kind() const {
  Int p = c1 * c2;
  if (p <= 3) return CartanKind::Finite;
  if (p == 4) return CartanKind::Affine;
  return CartanKind::Hyperbolic;
}

const char* kind_name(CartanKind k) {
  switch (k) {
    case CartanKind::Finite: return "Finite";
    case CartanKind::Affine: return "Affine";
    case CartanKind::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

Int chebyshev(long k, const Int& X) {
  if (k < -1) throw Error(ErrorKind::PreconditionViolation, "chebyshev needs k >= -1");
  if (k == -1) return 0;
  Int prev = 0, cur = 1;
  for (long i = 0; i < k; ++i) {
    Int next = X * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

static Int seq_value(const CartanRank2& c, long l, bool prime) {
  if (l < 0) throw Error(ErrorKind::PreconditionViolation, "sequence index must be >= 0");
  if (l == 0) return 0;
  if (l == 1) return 1;
  Int X = c.x();
  if (l % 2 == 0) return (prime ? c.c2 : c.c1) * chebyshev(l / 2 - 1, X);
  long k = (l - 1) / 2;
  return chebyshev(k, X) + chebyshev(k - 1, X);
}

Int a_seq(const CartanRank2& c, long l) { return seq_value(c, l, false); }
Int a_prime_seq(const CartanRank2& c, long l) { return seq_value(c, l, true); }

Sequences::Sequences(const CartanRank2& c) : c_(c) {
  cheb_ = {Int(0), Int(1)};
  a_ = {Int(0), Int(1)};
  ap_ = {Int(0), Int(1)};
}

void Sequences::grow(long l) {
  if (l < 0) throw Error(ErrorKind::PreconditionViolation, "sequence index must be >= 0");
  Int X = c_.x();
  while (static_cast<long>(a_.size()) <= l) {
    long n = static_cast<long>(a_.size());
    long need = n / 2 + 1;  // P_k up to k = n/2
    while (static_cast<long>(cheb_.size()) <= need)
      cheb_.push_back(X * cheb_[cheb_.size() - 1] - cheb_[cheb_.size() - 2]);
    // cheb_[k + 1] = P_k
    if (n % 2 == 0) {
      const Int& p = cheb_[n / 2];  // P_{n/2 - 1}
      a_.push_back(c_.c1 * p);
      ap_.push_back(c_.c2 * p);
    } else {
      long k = (n - 1) / 2;
      Int v = cheb_[k + 1] + cheb_[k];
      a_.push_back(v);
      ap_.push_back(v);
    }
  }
}

const Int& Sequences::a(long l) {
  grow(l);
  return a_[l];
}

const Int& Sequences::ap(long l) {
  grow(l);
  return ap_[l];
}

std::string Ratio::str() const {
  if (infinite()) return "inf";
  return num.str() + "/" + den.str();
}

int compare(const Ratio& x, const Ratio& y) {
  if (x.infinite() && y.infinite()) return 0;
  if (x.infinite()) return 1;
  if (y.infinite()) return -1;
  Int l = x.num * y.den, r = y.num * x.den;
  return l < r ? -1 : (l > r ? 1 : 0);
}

const char* alpha_beta_name(AlphaBeta p) {
  switch (p) {
    case AlphaBeta::AboveAlpha: return "AboveAlpha";
    case AlphaBeta::EqualAlphaBeta: return "EqualAlphaBeta";
    case AlphaBeta::Between: return "Between";
    case AlphaBeta::BelowBeta: return "BelowBeta";
    case AlphaBeta::EqualBoundary: return "EqualBoundary";
  }
  return "?";
}

Int discriminant(const CartanRank2& c, const Weight& w) {
  return c.c2 * w.l1 * w.l1 + c.c1 * c.c2 * w.l1 * w.l2 + c.c1 * w.l2 * w.l2;
}

AlphaBeta compare_with_alpha_beta(const CartanRank2& c, const Weight& w) {
  if (c.c1 * c.c2 < 4)
    throw Error(ErrorKind::PreconditionViolation, "alpha/beta comparison needs c1*c2 >= 4");
  if (!(w.l1 > 0 && w.l2 < 0))
    throw Error(ErrorKind::PreconditionViolation, "alpha/beta comparison needs l1 > 0 > l2");
  Int D = discriminant(c, w);
  if (D < 0) return AlphaBeta::Between;
  if (D == 0) return c.kind() == CartanKind::Affine ? AlphaBeta::EqualAlphaBeta : AlphaBeta::EqualBoundary;
  // r > c1/2  <=>  2 l1 > c1 (-l2)
  return 2 * w.l1 > c.c1 * (-w.l2) ? AlphaBeta::AboveAlpha : AlphaBeta::BelowBeta;
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::TrivialDominant: return "TrivialDominant";
    case Regime::TrivialAntidominant: return "TrivialAntidominant";
    case Regime::HighestOdd: return "HighestOdd";
    case Regime::HighestEven: return "HighestEven";
    case Regime::LowestOdd: return "LowestOdd";
    case Regime::LowestEven: return "LowestEven";
    case Regime::AffineLevelZero: return "AffineLevelZero";
    case Regime::HyperbolicGapNeither: return "HyperbolicGapNeither";
  }
  return "?";
}

Ratio decreasing_ladder(Sequences& s, long n) {
  if (n < 1) throw Error(ErrorKind::PreconditionViolation, "ladder index must be >= 1");
  if (n % 2) return {s.a(n + 1), s.a(n)};
  return {s.ap(n + 1), s.ap(n)};
}

Ratio increasing_ladder(Sequences& s, long n) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolation, "ladder index must be >= 0");
  if (n == 0) return {0, 1};
  if (n % 2) return {s.ap(n), s.ap(n + 1)};
  return {s.a(n), s.a(n + 1)};
}

namespace {

ExtremalSide highest_side(long n, std::optional<Ratio> upper, Ratio lower) {
  ExtremalSide h{n % 2 ? Regime::HighestOdd : Regime::HighestEven, (n + 1) / 2, n, std::move(lower),
                 std::move(upper)};
  return h;
}

// first n with r >= T_n; finite types stop once a numerator vanishes (T_n = 0)
ExtremalSide scan_highest(Sequences& s, const Ratio& r, long bound) {
  std::optional<Ratio> prev;
  for (long n = 1; n <= bound; ++n) {
    Ratio t = decreasing_ladder(s, n);
    if (t.den <= 0 || t.num < 0)
      throw Error(ErrorKind::ScanOverflow, "decreasing ladder left the positive range");
    if (compare(r, t) >= 0) return highest_side(n, prev, t);
    prev = t;
  }
  throw Error(ErrorKind::ScanOverflow, "highest weight ladder scan exceeded bound");
}

// first n with r <= U_n; a vanishing denominator is +infinity
ExtremalSide scan_lowest(Sequences& s, const Ratio& r, long bound) {
  Ratio prev = increasing_ladder(s, 0);
  for (long n = 1; n <= bound; ++n) {
    Ratio u = increasing_ladder(s, n);
    if (u.den < 0 || u.num < 0)
      throw Error(ErrorKind::ScanOverflow, "increasing ladder left the positive range");
    if (compare(r, u) <= 0) {
      ExtremalSide l{n % 2 ? Regime::LowestOdd : Regime::LowestEven, (n + 1) / 2, n, prev, u};
      return l;
    }
    prev = u;
  }
  throw Error(ErrorKind::ScanOverflow, "lowest weight ladder scan exceeded bound");
}

}  // namespace

WeightClassification classify_weight(const CartanRank2& c, const Weight& w, long scan_bound) {
  WeightClassification out;
  const bool dominant = w.l1 >= 0 && w.l2 >= 0;
  const bool antidominant = w.l1 <= 0 && w.l2 <= 0;
  if (dominant || antidominant) {
    out.regime = dominant ? Regime::TrivialDominant : Regime::TrivialAntidominant;
    if (dominant) out.highest = ExtremalSide{Regime::TrivialDominant, 0, 0, std::nullopt, std::nullopt};
    if (antidominant) out.lowest = ExtremalSide{Regime::TrivialAntidominant, 0, 0, std::nullopt, std::nullopt};
    return out;
  }
  if (w.l1 < 0)
    throw Error(ErrorKind::PreconditionViolation, "mixed sign l1 < 0 < l2 is not covered");

  out.r = Ratio{w.l1, -w.l2};
  Sequences s(c);
  if (c.kind() == CartanKind::Finite) {
    out.highest = scan_highest(s, out.r, scan_bound);
    out.lowest = scan_lowest(s, out.r, scan_bound);
    out.regime = out.highest->regime;
    out.k = out.highest->k;
    return out;
  }
  switch (compare_with_alpha_beta(c, w)) {
    case AlphaBeta::AboveAlpha:
      out.highest = scan_highest(s, out.r, scan_bound);
      out.regime = out.highest->regime;
      out.k = out.highest->k;
      break;
    case AlphaBeta::BelowBeta:
      out.lowest = scan_lowest(s, out.r, scan_bound);
      out.regime = out.lowest->regime;
      out.k = out.lowest->k;
      break;
    case AlphaBeta::EqualAlphaBeta:
      out.regime = Regime::AffineLevelZero;
      break;
    case AlphaBeta::Between:
    case AlphaBeta::EqualBoundary:
      out.regime = Regime::HyperbolicGapNeither;
      break;
  }
  return out;
}

static std::string bracket(const ExtremalSide& s, const Ratio& r, bool highest) {
  std::ostringstream os;
  if (highest) {
    if (s.upper) os << s.upper->str() << " > ";
    os << r.str() << " ≥ " << s.lower->str();
  } else {
    os << s.lower->str() << " < " << r.str() << " ≤ " << s.upper->str();
  }
  return os.str();
}

std::string WeightClassification::describe() const {
  std::ostringstream os;
  os << regime_name(regime);
  if (is_highest() || is_lowest()) os << " k=" << k;
  if (highest && highest->lower) {
    os << "; " << bracket(*highest, r, true);
  }
  if (lowest && lowest->upper) {
    if (highest && highest->lower) os << "; " << regime_name(lowest->regime) << " k=" << lowest->k;
    os << "; " << bracket(*lowest, r, false);
  }
  if (highest && lowest && highest->lower && lowest->upper)
    os << "; (H_-" << highest->index << ", L_" << lowest->index << ")";
  return os.str();
}

}  // namespace rk2

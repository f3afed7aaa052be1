#include "rk2/extremal.hpp"

#include <sstream>

namespace rk2 {

std::pair<Int, Int> h_basis(const CartanRank2& c, long j) {
  if (j < 1) throw Error(ErrorKind::PreconditionViolation, "h index must be >= 1");
  Sequences s(c);
  if (j % 2) return {s.ap(j - 1), s.ap(j)};
  return {s.a(j - 1), s.a(j)};
}

std::pair<Int, Int> l_basis(const CartanRank2& c, long j) {
  if (j < 1) throw Error(ErrorKind::PreconditionViolation, "l index must be >= 1");
  Sequences s(c);
  if (j % 2) return {s.a(j), s.a(j - 1)};
  return {s.ap(j), s.ap(j - 1)};
}

Int h_coeff(const CartanRank2& c, const Weight& w, long j) {
  auto [p, q] = h_basis(c, j);
  return p * w.l1 + q * w.l2;
}

Int l_coeff(const CartanRank2& c, const Weight& w, long j) {
  auto [p, q] = l_basis(c, j);
  return p * w.l1 + q * w.l2;
}

LambdaVector make_h_vector(const CartanRank2& c, const Weight& w, long n) {
  LambdaVector v(c, w);
  for (long m = 1; m <= n; ++m) v.add(-m, h_coeff(c, w, m));
  return v;
}

LambdaVector make_l_vector(const CartanRank2& c, const Weight& w, long n) {
  LambdaVector v(c, w);
  for (long m = 1; m <= n; ++m) v.add(m, l_coeff(c, w, m));
  return v;
}

std::optional<LambdaVector> highest_vector(const CartanRank2& c, const Weight& w) {
  auto cls = classify_weight(c, w);
  if (!cls.highest) return std::nullopt;
  return make_h_vector(c, w, cls.highest->index);
}

std::optional<LambdaVector> lowest_vector(const CartanRank2& c, const Weight& w) {
  auto cls = classify_weight(c, w);
  if (!cls.lowest) return std::nullopt;
  return make_l_vector(c, w, cls.lowest->index);
}

bool ExtremalReport::passed() const {
  for (auto& ch : checks)
    if (!ch.pass) return false;
  return true;
}

namespace {

Int abs_total(const LambdaVector& v) {
  Int s = 0;
  for (auto& [k, x] : v.entries) s += abs(x);
  return s;
}

void check_side(ExtremalReport& rep, const LambdaVector& v, long n, bool highest, long budget) {
  const std::string side = highest ? "highest" : "lowest";
  auto add = [&rep, &side](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({side + "/" + name, ok, detail});
  };
  const CartanRank2& c = v.cartan;
  const Weight& w = v.weight;

  bool annihilated = true;
  for (int i = 1; i <= 2; ++i) annihilated = annihilated && !(highest ? e_tilde(v, i) : f_tilde(v, i));
  add(highest ? "annihilated-by-e" : "annihilated-by-f", annihilated);

  auto wv = wt(v);
  if (highest) {
    bool ok = true;
    std::ostringstream d;
    for (long j = 1; j <= n; ++j)
      if (sigma(v, -j) != 0) ok = false, d << "sigma_-" << j << "=" << sigma(v, -j) << " ";
    Int next = sigma(v, -(n + 1));
    Int want = -h_coeff(c, w, n + 1);
    if (next != want) ok = false, d << "sigma_-" << n + 1 << "=" << next << " want " << want;
    add("sigma-profile", ok, d.str());
    add("weight-dominant", wv.first >= 0 && wv.second >= 0);
  } else {
    add("phi-vanishes", phi(v, 1) == 0 && phi(v, 2) == 0);
    add("weight-antidominant", wv.first <= 0 && wv.second <= 0);
  }

  LambdaVector zero(c, w);
  auto r = raise_to_extremal(zero, highest ? RaiseMode::Raise : RaiseMode::Lower, budget);
  (highest ? rep.highest_steps : rep.lowest_steps) = r.steps;
  bool reached = !r.step_limit && r.vector.same_point(v);
  add("reached-from-zero", reached, r.step_limit ? "step limit" : "");
  add("step-count", reached && Int(r.steps) == abs_total(v),
      "steps=" + std::to_string(r.steps) + " sum|x|=" + abs_total(v).str());
}

}  // namespace

ExtremalReport verify_extremal(const CartanRank2& c, const Weight& w, long budget) {
  if (budget < 0) throw Error(ErrorKind::PreconditionViolation, "budget must be >= 0");
  ExtremalReport rep;
  rep.classification = classify_weight(c, w);
  if (rep.classification.highest) {
    long n = rep.classification.highest->index;
    rep.highest = make_h_vector(c, w, n);
    check_side(rep, *rep.highest, n, true, budget);
  }
  if (rep.classification.lowest) {
    long n = rep.classification.lowest->index;
    rep.lowest = make_l_vector(c, w, n);
    check_side(rep, *rep.lowest, n, false, budget);
  }
  return rep;
}

std::pair<std::optional<long>, std::optional<long>> classical_table(const CartanRank2& c, const Weight& w) {
  if (c.kind() != CartanKind::Finite)
    throw Error(ErrorKind::UnsupportedCartan, "classical table needs c1*c2 <= 3");
  if (!(w.l1 > 0 && w.l2 < 0)) throw Error(ErrorKind::PreconditionViolation, "classical table needs l1 > 0 > l2");
  auto cls = classify_weight(c, w);
  return {cls.highest->index, cls.lowest->index};
}

}  // namespace rk2

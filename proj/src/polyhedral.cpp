#include "rk2/polyhedral.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rk2/extremal.hpp"

namespace rk2 {

LinearForm LinearForm::coordinate(long k, const Int& c) {
  LinearForm f;
  f.add_term(k, c);
  return f;
}

Int LinearForm::coeff(long k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? Int(0) : it->second;
}

void LinearForm::add_term(long k, const Int& c) {
  if (k == 0) throw Error(ErrorKind::IndexZero, "form coefficient at index 0");
  if (c == 0) return;
  Int& v = coeffs[k];
  v += c;
  if (v == 0) coeffs.erase(k);
}

void LinearForm::add_scaled(const LinearForm& o, const Int& s) {
  if (s == 0) return;
  for (auto& [k, v] : o.coeffs) add_term(k, s * v);
  p += s * o.p;
  q += s * o.q;
}

Int LinearForm::evaluate(const LambdaVector& x) const {
  Int s = constant(x.weight);
  for (auto& [k, v] : coeffs) s += v * x.at(k);
  return s;
}

bool LinearForm::within(long window) const {
  return coeffs.empty() || (min_support() >= -window && max_support() <= window);
}

std::string LinearForm::str() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Int& v, const std::string& sym) {
    if (v == 0) return;
    Int a = abs(v);
    if (first)
      os << (v < 0 ? "-" : "");
    else
      os << (v < 0 ? " - " : " + ");
    if (a != 1 || sym.empty()) os << a;
    os << sym;
    first = false;
  };
  for (auto& [k, v] : coeffs) term(v, "x[" + std::to_string(k) + "]");
  term(p, "l1");
  term(q, "l2");
  if (first) os << "0";
  return os.str();
}

bool LinearForm::operator<(const LinearForm& o) const {
  if (coeffs != o.coeffs) return coeffs < o.coeffs;
  if (p != o.p) return p < o.p;
  return q < o.q;
}

LinearForm beta_bar(const CartanRank2& c, long k) {
  long kp = k_plus(k);
  int ik = iota(k);
  LinearForm f;
  f.add_term(k, 1);
  for (long j = k + 1; j < kp; ++j)
    if (j != 0) f.add_term(j, c.pairing(ik, iota(j)));
  f.add_term(kp, 1);
  if (k < 0 && kp > 0) (ik == 1 ? f.p : f.q) = -1;
  return f;
}

LinearForm s_bar(const CartanRank2& c, long k, const LinearForm& form) {
  Int fk = form.coeff(k);
  if (k == 0) throw Error(ErrorKind::IndexZero, "S at index 0");
  if (fk == 0) return form;
  LinearForm out = form;
  out.add_scaled(beta_bar(c, fk > 0 ? k : k_minus(k)), -fk);
  return out;
}

const char* family_name(FamilyName n) {
  switch (n) {
    case FamilyName::XiClosure: return "XiClosure";
    case FamilyName::XiDisplayed: return "XiDisplayed";
    case FamilyName::Xi1: return "Xi1";
    case FamilyName::Xi2: return "Xi2";
    case FamilyName::Xi3: return "Xi3";
    case FamilyName::Xi4: return "Xi4";
    case FamilyName::XiHalfPositive: return "XiHalfPositive";
    case FamilyName::XiHalfNegative: return "XiHalfNegative";
  }
  return "?";
}

std::vector<LinearForm> default_generators(long window) {
  std::vector<LinearForm> g;
  for (long j = 1; j <= window; ++j) {
    g.push_back(LinearForm::coordinate(j));
    g.push_back(LinearForm::coordinate(-j, -1));
  }
  return g;
}

namespace {

template <class Op>
FormFamily closure_by(const std::vector<LinearForm>& generators, long window, long max_depth,
                      std::size_t budget, Op op) {
  if (max_depth < 0) throw Error(ErrorKind::PreconditionViolation, "closure depth must be >= 0");
  FormFamily fam;
  fam.window = window;
  fam.depth = max_depth;
  fam.generators = generators;
  std::set<LinearForm> seen(generators.begin(), generators.end());
  std::vector<LinearForm> frontier(seen.begin(), seen.end());
  long d = 0;
  for (; d < max_depth && !frontier.empty(); ++d) {
    std::vector<LinearForm> next;
    for (auto& f : frontier)
      for (auto& [k, v] : f.coeffs) {
        if (k < -window || k > window) continue;
        LinearForm g = op(k, f);
        if (seen.insert(g).second) {
          if (seen.size() > budget) throw Error(ErrorKind::FormBudgetExceeded, "form budget exceeded");
          next.push_back(std::move(g));
        }
      }
    frontier = std::move(next);
  }
  fam.fixpoint = frontier.empty();
  fam.forms.assign(seen.begin(), seen.end());
  return fam;
}

}  // namespace

FormFamily xi_closure(const CartanRank2& c, const std::vector<LinearForm>& generators, long window,
                      long max_depth, std::size_t budget) {
  return closure_by(generators, window, max_depth, budget,
                    [&c](long k, const LinearForm& f) { return s_bar(c, k, f); });
}

FormFamily xi_displayed(const CartanRank2& c, long m_max) {
  Sequences s(c);
  FormFamily fam;
  fam.name = FamilyName::XiDisplayed;
  fam.window = m_max + 1;
  std::set<LinearForm> out;
  for (long m = 1; m <= m_max; ++m) {
    LinearForm pos, neg;
    pos.add_term(m, s.a(m));
    pos.add_term(m + 1, -s.a(m - 1));
    neg.add_term(-m, -s.ap(m));
    neg.add_term(-m - 1, s.ap(m - 1));
    out.insert(pos);
    out.insert(neg);
  }
  fam.forms.assign(out.begin(), out.end());
  return fam;
}

std::vector<LinearForm> undisplayed_forms(const FormFamily& closure, const FormFamily& displayed) {
  std::set<LinearForm> d(displayed.forms.begin(), displayed.forms.end());
  std::vector<LinearForm> out;
  for (auto& f : closure.forms)
    if (!d.count(f)) out.push_back(f);
  return out;
}

FamilyName which_family(int which) {
  switch (which) {
    case 1: return FamilyName::Xi1;
    case 2: return FamilyName::Xi2;
    case 3: return FamilyName::Xi3;
    case 4: return FamilyName::Xi4;
  }
  throw Error(ErrorKind::PreconditionViolation, "family must be 1..4");
}

int regime_which(Regime r) {
  switch (r) {
    case Regime::HighestOdd: return 1;
    case Regime::HighestEven: return 2;
    case Regime::LowestOdd: return 3;
    case Regime::LowestEven: return 4;
    default: return 0;
  }
}

std::vector<LinearForm> side_generators(const CartanRank2& c, bool highest, long n, long window) {
  if (n < 0) throw Error(ErrorKind::PreconditionViolation, "extremal index must be >= 0");
  std::vector<LinearForm> g;
  for (long m = 1; m <= std::max(n, window); ++m) {
    if (highest) {
      LinearForm f = LinearForm::coordinate(-m);
      if (m <= n) std::tie(f.p, f.q) = h_basis(c, m);
      if (m <= n) f.p = -f.p, f.q = -f.q;
      g.push_back(f);
    } else {
      LinearForm f = LinearForm::coordinate(m, -1);
      if (m <= n) std::tie(f.p, f.q) = l_basis(c, m);
      g.push_back(f);
    }
  }
  return g;
}

std::vector<LinearForm> xi_generators(const CartanRank2& c, int which, long k, long window) {
  if (k < 1) throw Error(ErrorKind::PreconditionViolation, "family index k must be >= 1");
  which_family(which);
  return side_generators(c, which <= 2, which % 2 ? 2 * k - 1 : 2 * k, window);
}

std::vector<LinearForm> component_forms(const CartanRank2& c, const Weight& w, long window, long depth,
                                        std::size_t budget) {
  auto cls = classify_weight(c, w);
  const auto& side = cls.highest ? cls.highest : cls.lowest;
  if (!side) throw Error(ErrorKind::PreconditionViolation, std::string("no extremal vector: ") + regime_name(cls.regime));
  auto forms = xi_closure(c, default_generators(window), window, depth, budget).forms;
  auto extra = xi_closure(c, side_generators(c, bool(cls.highest), side->index, window), window, depth, budget).forms;
  forms.insert(forms.end(), extra.begin(), extra.end());
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  return forms;
}

namespace {

LinearForm two_term(const Int& c1, long i1, const Int& c2, long i2, const Int& p, const Int& q) {
  LinearForm f;
  f.add_term(i1, c1);
  f.add_term(i2, c2);
  f.p = p;
  f.q = q;
  return f;
}

}  // namespace

std::vector<TableRow> xi_table_rows(const CartanRank2& c, int which, long k, long j_max, long i_max) {
  which_family(which);
  Sequences s(c);
  auto a = [&s](long l) { return l < 0 ? Int(0) : s.a(l); };
  auto ap = [&s](long l) { return l < 0 ? Int(0) : s.ap(l); };
  std::vector<TableRow> rows;
  auto put = [&rows](int row, long j, long i, LinearForm f) { rows.push_back({row, j, i, std::move(f)}); };
  for (long j = 1; j <= j_max; ++j)
    for (long i = 0; i <= i_max; ++i) {
      if (which == 1) {
        if (j <= k) {
          if (i <= 2 * j - 3)
            put(1, j, i, two_term(ap(i + 1), -2 * j + i + 1, -ap(i), -2 * j + i + 2, -ap(2 * j - 2), -ap(2 * j - 1)));
          if (i == 2 * j - 2) put(2, j, i, two_term(ap(2 * j - 1), -1, -ap(2 * j - 2), 1, 0, -ap(2 * j - 1)));
          if (i >= 2 * j - 1) put(3, j, i, two_term(ap(i + 1), -2 * j + i + 2, -ap(i), -2 * j + i + 3, 0, 0));
          if (i <= 2 * j - 4)
            put(4, j, i, two_term(a(i + 1), -2 * j + i + 2, -a(i), -2 * j + i + 3, -a(2 * j - 3), -a(2 * j - 2)));
        } else {
          if (i >= 2 * j - 1)
            put(5, j, i, two_term(ap(i + 1), -2 * j + i + 2, -ap(i), -2 * j + i + 3, ap(2 * j - 2), ap(2 * j - 1)));
          if (i <= 2 * j - 4) put(6, j, i, two_term(a(i + 1), -2 * j + i + 2, -a(i), -2 * j + i + 3, 0, 0));
          if (i == 2 * j - 3) put(7, j, i, two_term(a(2 * j - 2), -1, -a(2 * j - 3), 1, a(2 * j - 3), 0));
          if (i >= 2 * j - 2)
            put(8, j, i, two_term(a(i + 1), -2 * j + i + 3, -a(i), -2 * j + i + 4, a(2 * j - 3), a(2 * j - 2)));
        }
      } else if (which == 2) {
        if (j <= k) {
          if (i <= 2 * j - 2)
            put(1, j, i, two_term(a(i + 1), -2 * j + i, -a(i), -2 * j + i + 1, -a(2 * j - 1), -a(2 * j)));
          if (i == 2 * j - 1) put(2, j, i, two_term(a(2 * j), -1, -a(2 * j - 1), 1, 0, -a(2 * j)));
          if (i >= 2 * j) put(3, j, i, two_term(a(i + 1), -2 * j + i + 1, -a(i), -2 * j + i + 2, 0, 0));
          if (i <= 2 * j - 3)
            put(4, j, i, two_term(ap(i + 1), -2 * j + i + 1, -ap(i), -2 * j + i + 2, -ap(2 * j - 2), -ap(2 * j - 1)));
        } else if (j >= k + 2) {
          // the printed table starts these rows at j = k+1, where they are not in the closure
          if (i >= 2 * j - 2)
            put(5, j, i, two_term(a(i + 1), -2 * j + i + 3, -a(i), -2 * j + i + 4, a(2 * j - 3), a(2 * j - 2)));
          if (i <= 2 * j - 5) put(6, j, i, two_term(ap(i + 1), -2 * j + i + 3, -ap(i), -2 * j + i + 4, 0, 0));
          if (i == 2 * j - 4) put(7, j, i, two_term(ap(2 * j - 3), -1, -ap(2 * j - 4), 1, ap(2 * j - 4), 0));
          if (i >= 2 * j - 3)
            put(8, j, i, two_term(ap(i + 1), -2 * j + i + 4, -ap(i), -2 * j + i + 5, ap(2 * j - 4), ap(2 * j - 3)));
        }
      } else if (which == 3) {
        if (j <= k) {
          if (i <= 2 * j - 3)
            put(1, j, i, two_term(-a(i + 1), 2 * j - i - 1, a(i), 2 * j - i - 2, a(2 * j - 1), a(2 * j - 2)));
          if (i == 2 * j - 2) put(2, j, i, two_term(-a(2 * j - 1), 1, a(2 * j - 2), -1, a(2 * j - 1), 0));
          if (i >= 2 * j - 1) put(3, j, i, two_term(-a(i + 1), 2 * j - i - 2, a(i), 2 * j - i - 3, 0, 0));
          if (i <= 2 * j - 4)
            put(4, j, i, two_term(-ap(i + 1), 2 * j - i - 2, ap(i), 2 * j - i - 3, ap(2 * j - 2), ap(2 * j - 3)));
        } else {
          if (i >= 2 * j - 1)
            put(5, j, i, two_term(-a(i + 1), 2 * j - i - 2, a(i), 2 * j - i - 3, -a(2 * j - 1), -a(2 * j - 2)));
          if (i <= 2 * j - 4) put(6, j, i, two_term(-ap(i + 1), 2 * j - i - 2, ap(i), 2 * j - i - 3, 0, 0));
          if (i == 2 * j - 3) put(7, j, i, two_term(-ap(2 * j - 2), 1, ap(2 * j - 3), -1, 0, -ap(2 * j - 3)));
          if (i >= 2 * j - 2)
            put(8, j, i, two_term(-ap(i + 1), 2 * j - i - 3, ap(i), 2 * j - i - 4, -ap(2 * j - 2), -ap(2 * j - 3)));
        }
      } else {
        if (j <= k) {
          if (i <= 2 * j - 2)
            put(1, j, i, two_term(-ap(i + 1), 2 * j - i, ap(i), 2 * j - i - 1, ap(2 * j), ap(2 * j - 1)));
          if (i == 2 * j - 1) put(2, j, i, two_term(-ap(2 * j), 1, ap(2 * j - 1), -1, ap(2 * j), 0));
          if (i >= 2 * j) put(3, j, i, two_term(-ap(i + 1), 2 * j - i - 1, ap(i), 2 * j - i - 2, 0, 0));
          if (i <= 2 * j - 3)
            put(4, j, i, two_term(-a(i + 1), 2 * j - i - 1, a(i), 2 * j - i - 2, a(2 * j - 1), a(2 * j - 2)));
        } else {
          if (i >= 2 * j)
            put(5, j, i, two_term(-ap(i + 1), 2 * j - i - 1, ap(i), 2 * j - i - 2, -ap(2 * j), -ap(2 * j - 1)));
          if (i <= 2 * j - 3) put(6, j, i, two_term(-a(i + 1), 2 * j - i - 1, a(i), 2 * j - i - 2, 0, 0));
          if (i == 2 * j - 2) put(7, j, i, two_term(-a(2 * j - 1), 1, a(2 * j - 2), -1, 0, -a(2 * j - 2)));
          if (i >= 2 * j - 1)
            put(8, j, i, two_term(-a(i + 1), 2 * j - i - 2, a(i), 2 * j - i - 3, -a(2 * j - 1), -a(2 * j - 2)));
        }
      }
    }
  return rows;
}

FormFamily xi_family(const CartanRank2& c, const Weight& w, int which, long k, long j_max, long i_max,
                     long window) {
  auto cls = classify_weight(c, w);
  bool ok = false;
  if (cls.highest && which <= 2) ok = regime_which(cls.highest->regime) == which && cls.highest->k == k;
  if (cls.lowest && which >= 3) ok = regime_which(cls.lowest->regime) == which && cls.lowest->k == k;
  if (!ok)
    throw Error(ErrorKind::RegimeMismatch, std::string("weight is classified as ") + regime_name(cls.regime) +
                                               " k=" + std::to_string(cls.k));
  FormFamily fam;
  fam.name = which_family(which);
  fam.k = k;
  fam.window = window;
  fam.generators = xi_generators(c, which, k, window);
  for (auto& r : xi_table_rows(c, which, k, j_max, i_max)) fam.forms.push_back(r.form);
  std::sort(fam.forms.begin(), fam.forms.end());
  fam.forms.erase(std::unique(fam.forms.begin(), fam.forms.end()), fam.forms.end());
  return fam;
}

Membership is_member(const LambdaVector& x, const std::vector<LinearForm>& forms, long window) {
  if (!x.is_zero() && (x.min_support() < -window || x.max_support() > window))
    throw Error(ErrorKind::WindowViolation, "vector support exceeds the family window");
  Membership m;
  for (auto& f : forms) {
    if (!f.within(window + 2)) continue;
    if (f.evaluate(x) < 0) {
      m.member = false;
      m.violated = f;
      return m;
    }
  }
  return m;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

struct NumForm {
  std::vector<std::pair<std::size_t, Int>> terms;  // (position, coefficient), ascending position
  Int c0;
};

struct Bound {
  std::optional<Int> lo, hi;
};

// tighten variable bounds from sum c_j x_j + c0 >= 0 until nothing changes
void propagate(std::vector<Bound>& b, const std::vector<NumForm>& forms) {
  for (int round = 0; round < 200; ++round) {
    bool changed = false;
    for (auto& f : forms) {
      Int finite_max = f.c0;
      int unbounded = 0;
      std::vector<std::optional<Int>> mx(f.terms.size());
      for (std::size_t t = 0; t < f.terms.size(); ++t) {
        auto& [pos, cf] = f.terms[t];
        const auto& side = cf > 0 ? b[pos].hi : b[pos].lo;
        if (side) {
          mx[t] = cf * *side;
          finite_max += *mx[t];
        } else {
          ++unbounded;
        }
      }
      for (std::size_t t = 0; t < f.terms.size(); ++t) {
        auto& [pos, cf] = f.terms[t];
        int others_unbounded = unbounded - (mx[t] ? 0 : 1);
        if (others_unbounded > 0) continue;
        Int rest = mx[t] ? Int(finite_max - *mx[t]) : finite_max;
        // cf * x >= -rest
        if (cf > 0) {
          Int lo = ceil_div(-rest, cf);
          if (!b[pos].lo || lo > *b[pos].lo) b[pos].lo = lo, changed = true;
        } else {
          Int hi = floor_div(-rest, cf);
          if (!b[pos].hi || hi < *b[pos].hi) b[pos].hi = hi, changed = true;
        }
      }
    }
    if (!changed) return;
  }
}

}  // namespace

std::vector<LambdaVector> enumerate_box(const CartanRank2& c, const Weight& w,
                                        const std::vector<LinearForm>& forms, long window,
                                        const Int& sum_min, const Int& sum_max, std::size_t budget) {
  if (window < 1) throw Error(ErrorKind::PreconditionViolation, "window must be >= 1");
  std::vector<long> index;
  for (long k = -window; k <= window; ++k)
    if (k != 0) index.push_back(k);
  auto pos_of = [window](long k) { return static_cast<std::size_t>(k < 0 ? k + window : k + window - 1); };
  const std::size_t n = index.size();

  std::vector<NumForm> nforms;
  for (auto& f : forms) {
    if (!f.within(window + 2)) continue;
    NumForm nf{{}, f.constant(w)};
    for (auto& [k, v] : f.coeffs)
      if (k >= -window && k <= window) nf.terms.emplace_back(pos_of(k), v);
    if (nf.terms.empty()) {
      if (nf.c0 < 0) return {};
      continue;
    }
    nforms.push_back(std::move(nf));
  }
  std::vector<NumForm> with_sum = nforms;
  NumForm lo_sum{{}, -sum_min}, hi_sum{{}, sum_max};
  for (std::size_t t = 0; t < n; ++t) {
    lo_sum.terms.emplace_back(t, 1);
    hi_sum.terms.emplace_back(t, -1);
  }
  with_sum.push_back(lo_sum);
  with_sum.push_back(hi_sum);

  std::vector<Bound> b(n);
  for (std::size_t t = 0; t < n; ++t) (index[t] < 0 ? b[t].hi : b[t].lo) = Int(0);
  propagate(b, with_sum);
  for (auto& bd : b) {
    if (!bd.lo || !bd.hi)
      throw Error(ErrorKind::PreconditionViolation, "box is unbounded for the given forms and sum range");
    if (*bd.lo > *bd.hi) return {};
  }

  // forms are tested when their last variable is set, with an optimistic bound on the way
  std::vector<std::vector<const NumForm*>> touching(n);
  for (auto& f : nforms)
    for (auto& [p, cf] : f.terms) touching[p].push_back(&f);
  std::vector<Int> suf_lo(n + 1, 0), suf_hi(n + 1, 0);
  for (std::size_t t = n; t-- > 0;) {
    suf_lo[t] = suf_lo[t + 1] + *b[t].lo;
    suf_hi[t] = suf_hi[t + 1] + *b[t].hi;
  }

  std::vector<Int> x(n, 0);
  std::vector<LambdaVector> out;
  std::size_t visited = 0;
  auto feasible = [&](std::size_t level) {
    for (const NumForm* f : touching[level]) {
      Int v = f->c0;
      for (auto& [p, cf] : f->terms) {
        if (p <= level)
          v += cf * x[p];
        else
          v += cf * (cf > 0 ? *b[p].hi : *b[p].lo);
      }
      if (v < 0) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t level, const Int& s) -> void {
    if (++visited > budget) throw Error(ErrorKind::BudgetExceeded, "box enumeration budget exceeded");
    if (level == n) {
      Entries e;
      for (std::size_t t = 0; t < n; ++t)
        if (x[t] != 0) e.emplace(index[t], x[t]);
      out.emplace_back(c, w, std::move(e));
      return;
    }
    Int lo = std::max(*b[level].lo, Int(sum_min - s - suf_hi[level + 1]));
    Int hi = std::min(*b[level].hi, Int(sum_max - s - suf_lo[level + 1]));
    for (Int v = lo; v <= hi; ++v) {
      x[level] = v;
      if (feasible(level)) self(self, level + 1, s + v);
    }
    x[level] = 0;
  };
  rec(rec, 0, Int(0));
  std::sort(out.begin(), out.end(), [](const LambdaVector& p, const LambdaVector& q) { return p.entries < q.entries; });
  return out;
}

std::vector<LambdaVector> enumerate_box(const LambdaVector& seed, const std::vector<LinearForm>& forms,
                                        long window, long bound, BoxDirection dir, std::size_t budget) {
  if (bound < 0) throw Error(ErrorKind::PreconditionViolation, "sum bound must be >= 0");
  Int s0 = seed.total();
  Int lo = dir == BoxDirection::Down ? s0 : Int(s0 - bound);
  Int hi = dir == BoxDirection::Down ? Int(s0 + bound) : s0;
  return enumerate_box(seed.cartan, seed.weight, forms, window, lo, hi, budget);
}

LinearForm phi_chain_closed(const CartanRank2& c, long l, long k) {
  if (l < 0 || k < 1) throw Error(ErrorKind::PreconditionViolation, "chain needs l >= 0, k >= 1");
  Sequences s(c);
  auto seq = [&](long m) { return k % 2 ? s.ap(m) : s.a(m); };
  auto at = [](long t) { return t < 0 ? t : t + 1; };  // t + theta(t)
  LinearForm f;
  f.add_term(at(l - k), seq(l + 1));
  f.add_term(at(l - k + 1), -seq(l));
  if (l >= k) {
    f.p = seq(k - 1);
    f.q = seq(k);
  } else if (l == k - 1) {
    f.p = seq(k - 1);
  }
  return f;
}

LinearForm phi_chain_iterated(const CartanRank2& c, long l, long k) {
  if (l < 0 || k < 1) throw Error(ErrorKind::PreconditionViolation, "chain needs l >= 0, k >= 1");
  LinearForm f = LinearForm::coordinate(-k);
  long at = -k;
  for (long step = 0; step < l; ++step) {
    f = s_bar(c, at, f);
    at = at == -1 ? 1 : at + 1;
  }
  return f;
}

LinearForm s_half_positive(const CartanRank2& c, long k, const LinearForm& form) {
  if (k < 1) throw Error(ErrorKind::PreconditionViolation, "positive half needs k >= 1");
  Int fk = form.coeff(k);
  if (fk == 0) return form;
  LinearForm out = form;
  if (fk > 0)
    out.add_scaled(beta_bar(c, k), -fk);
  else if (k - 2 >= 1)
    out.add_scaled(beta_bar(c, k - 2), -fk);
  return out;
}

LinearForm s_half_negative(const CartanRank2& c, long k, const LinearForm& form) {
  if (k > -1) throw Error(ErrorKind::PreconditionViolation, "negative half needs k <= -1");
  Int fk = form.coeff(k);
  if (fk == 0) return form;
  LinearForm out = form;
  if (fk > 0) {
    if (k <= -3) out.add_scaled(beta_bar(c, k), -fk);
  } else {
    out.add_scaled(beta_bar(c, k - 2), -fk);
  }
  return out;
}

FormFamily half_closure(const CartanRank2& c, bool positive, long window, long depth, std::size_t budget) {
  std::vector<LinearForm> gens;
  for (long j = 1; j <= window; ++j)
    gens.push_back(positive ? LinearForm::coordinate(j) : LinearForm::coordinate(-j, -1));
  FormFamily fam = closure_by(gens, window, depth, budget, [&](long k, const LinearForm& f) {
    if (positive) return k >= 1 ? s_half_positive(c, k, f) : f;
    return k <= -1 ? s_half_negative(c, k, f) : f;
  });
  fam.name = positive ? FamilyName::XiHalfPositive : FamilyName::XiHalfNegative;
  return fam;
}

bool check_pn_assumptions(const CartanRank2& c, long depth, long window, std::size_t budget) {
  // (P): first occurrences k = 1, 2 carry coefficients >= 0; (N): k = -1, -2 carry <= 0
  for (auto& f : half_closure(c, true, window, depth, budget).forms)
    if (f.coeff(1) < 0 || f.coeff(2) < 0) return false;
  for (auto& f : half_closure(c, false, window, depth, budget).forms)
    if (f.coeff(-1) > 0 || f.coeff(-2) > 0) return false;
  return true;
}

}  // namespace rk2

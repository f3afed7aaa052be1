// one line per acceptance criterion; oracles here are written independently of the library
#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "rk2/extremal.hpp"
#include "rk2/polyhedral.hpp"

using namespace rk2;

namespace {

struct Case {
  int c1, c2;
  long l1, l2;
};

std::string tag(const Case& cs) {
  std::ostringstream os;
  os << "(" << cs.c1 << "," << cs.c2 << ";" << cs.l1 << "," << cs.l2 << ")";
  return os.str();
}

const std::vector<std::pair<int, int>> kGrid{{2, 2}, {1, 4}, {4, 1}, {2, 3}, {3, 2}, {3, 3}, {1, 5}};

// ---- sequence oracle: the four recursions from a_0 = 0, a_1 = 1 ----
struct RecSeq {
  std::vector<Int> a, ap;
  RecSeq(long c1, long c2, long n) : a{0, 1}, ap{0, 1} {
    for (long l = 2; l <= n; ++l) {
      if (l % 2 == 0) {
        a.push_back(c1 * a[l - 1] - a[l - 2]);
        ap.push_back(c2 * a[l - 1] - ap[l - 2]);
      } else {
        a.push_back(c2 * a[l - 1] - a[l - 2]);
        ap.push_back(a.back());
      }
    }
  }
};

// power series 1/(1 - Xz + z^2) up to degree d
std::vector<Int> inverse_series(const Int& X, long d) {
  std::vector<Int> den{1, -X, 1}, out;
  for (long n = 0; n <= d; ++n) {
    Int v = n == 0 ? Int(1) : Int(0);
    for (long t = 1; t <= std::min<long>(n, 2); ++t) v -= den[t] * out[n - t];
    out.push_back(v);
  }
  return out;
}

// ---- crystal oracle: iota, sigma, weight, string lengths ----
int iota_o(long k) { return k > 0 ? (k % 2 ? 1 : 2) : ((-k) % 2 ? 2 : 1); }

Int pair_o(const CartanRank2& c, int i, int j) {
  if (i == j) return 2;
  return i == 1 ? Int(-c.c1) : Int(-c.c2);
}

Int sigma_o(const LambdaVector& x, long k) {
  int ik = iota_o(k);
  Int s = x.at(k);
  if (k < 0) s -= ik == 1 ? x.weight.l1 : x.weight.l2;
  long hi = std::max(x.max_support(), 1L);
  for (long j = k + 1; j <= hi; ++j)
    if (j != 0) s += pair_o(x.cartan, ik, iota_o(j)) * x.at(j);
  return s;
}

std::pair<Int, Int> wt_o(const LambdaVector& x) {
  Int w1 = x.weight.l1, w2 = x.weight.l2;
  for (auto& [k, v] : x.entries) {
    int i = iota_o(k);
    w1 -= v * pair_o(x.cartan, 1, i);
    w2 -= v * pair_o(x.cartan, 2, i);
  }
  return {w1, w2};
}

long string_length(LambdaVector x, int i, bool up, long cap) {
  long n = 0;
  while (n < cap) {
    auto y = up ? e_tilde(x, i) : f_tilde(x, i);
    if (!y) return n;
    x = *y;
    ++n;
  }
  return -1;
}

struct Line {
  int id;
  bool pass;
  std::string text;
};

// ---- 1 ----
Line crit_sequences() {
  const long L = 50;
  std::vector<std::string> bad;
  for (auto [c1, c2] : kGrid) {
    CartanRank2 c(c1, c2);
    RecSeq o(c1, c2, 64);
    Sequences s(c);
    std::string t = "(" + std::to_string(c1) + "," + std::to_string(c2) + ")";
    for (long l = 0; l <= L + 2; ++l)
      if (a_seq(c, l) != o.a[l] || a_prime_seq(c, l) != o.ap[l] || s.a(l) != o.a[l] || s.ap(l) != o.ap[l])
        bad.push_back("definition " + t + " l=" + std::to_string(l));
    for (long k = 1; 2 * k + 2 <= L; ++k) {
      bool ok = s.a(2 * k + 2) == c1 * s.a(2 * k + 1) - s.a(2 * k) &&
                s.a(2 * k + 1) == c2 * s.a(2 * k) - s.a(2 * k - 1) &&
                s.ap(2 * k + 2) == c2 * s.a(2 * k + 1) - s.ap(2 * k) &&
                s.a(2 * k + 1) == c1 * s.ap(2 * k) - s.a(2 * k - 1);
      if (!ok) bad.push_back("recursion " + t);
    }
    for (long l = 0; l <= L; ++l)
      if (o.a[l + 1] * o.ap[l + 1] - o.a[l + 2] * o.ap[l] != 1) bad.push_back("determinant " + t);
    // ladders: a_{2k}/a_{2k-1} and a'_{2k+1}/a'_{2k} decrease, a'_{2k-1}/a'_{2k} and a_{2k}/a_{2k+1} increase
    std::vector<std::pair<Int, Int>> down, up;
    for (long k = 1; 2 * k + 1 <= L; ++k) {
      down.push_back({o.a[2 * k], o.a[2 * k - 1]});
      down.push_back({o.ap[2 * k + 1], o.ap[2 * k]});
      up.push_back({o.ap[2 * k - 1], o.ap[2 * k]});
      up.push_back({o.a[2 * k], o.a[2 * k + 1]});
    }
    for (std::size_t n = 1; n < down.size(); ++n) {
      if (!(down[n].first * down[n - 1].second < down[n - 1].first * down[n].second))
        bad.push_back("decreasing ladder " + t);
      if (!(up[n - 1].first * up[n].second < up[n].first * up[n - 1].second)) bad.push_back("increasing ladder " + t);
      if (!(up[n].first * down[n].second < down[n].first * up[n].second)) bad.push_back("ladders cross " + t);
    }
    for (long n = 1; n <= 40; ++n) {
      Ratio d = decreasing_ladder(s, n);
      const auto& want = down[n - 1];
      if (d.num * want.second != want.first * d.den) bad.push_back("library ladder " + t);
    }
    // generating functions to degree 30: P_k = [z^k] 1/(1 - Xz + z^2), a_{2k+1} = P_k + P_{k-1}, a_{2k} = c1 P_{k-1}
    Int X = Int(c1 * c2 - 2);
    auto ser = inverse_series(X, 30);
    for (long k = 0; k <= 30; ++k) {
      if (chebyshev(k, X) != ser[k]) bad.push_back("chebyshev series " + t);
      Int prev = k ? ser[k - 1] : Int(0);
      if (o.a[2 * k + 1] != ser[k] + prev) bad.push_back("odd generating function " + t);
      if (k >= 1 && o.a[2 * k] != c1 * ser[k - 1]) bad.push_back("even generating function " + t);
      // Chebyshev identity P_k^2 - P_{k+1} P_{k-1} = 1
      if (k >= 1 && k < 30 && ser[k] * ser[k] - ser[k + 1] * ser[k - 1] != 1) bad.push_back("chebyshev identity " + t);
    }
  }
  return {1, bad.empty(), bad.empty() ? "sequence suite on 7 Cartan pairs, l <= 50" : "sequence suite: " + bad.front()};
}

// ---- 2 ----
Line crit_known_values(bool& known_pattern) {
  int a3 = 0, a5 = 0, a7 = 0, a7_shift = 0;
  for (auto [c1, c2] : kGrid) {
    RecSeq o(c1, c2, 8);
    Int m = c1 * c2;
    a3 += o.a[3] == m - 1;
    a5 += o.a[5] == (m - 1) * (m - 2) - 1;
    a7 += o.a[7] == m * (m - 2) * (m - 3);
    a7_shift += o.a[7] == m * (m - 2) * (m - 3) - 1;
  }
  int n = int(kGrid.size());
  bool pass = a3 == n && a5 == n && a7 == n;
  known_pattern = a3 == n && a5 == n && a7 == 0 && a7_shift == n;
  std::ostringstream os;
  os << "known values: a3 holds " << a3 << "/" << n << ", a5 holds " << a5 << "/" << n
     << ", a7 = m(m-2)(m-3) holds " << a7 << "/" << n;
  if (!pass && known_pattern) os << " [unattainable as stated: a7 = m(m-2)(m-3) - 1 on all " << n << " pairs]";
  return {2, pass, os.str()};
}

// ---- 3 ----
struct Labelled {
  Case c;
  Regime regime;
};
const std::vector<Labelled> kRegimeCases{
    {{2, 2, 6, -5}, Regime::HighestOdd},  {{1, 4, 4, -7}, Regime::HighestOdd},  {{2, 3, 8, -5}, Regime::HighestOdd},
    {{1, 5, 3, -4}, Regime::HighestOdd},  {{3, 3, 3, -1}, Regime::HighestOdd},  {{2, 3, 5, -2}, Regime::HighestOdd},
    {{2, 2, 3, -2}, Regime::HighestEven}, {{2, 2, 7, -6}, Regime::HighestEven}, {{1, 4, 5, -8}, Regime::HighestEven},
    {{2, 3, 5, -3}, Regime::HighestEven}, {{1, 5, 4, -5}, Regime::HighestEven}, {{3, 3, 8, -3}, Regime::HighestEven},
    {{2, 2, 1, -2}, Regime::LowestOdd},   {{2, 2, 5, -6}, Regime::LowestOdd},   {{1, 4, 3, -8}, Regime::LowestOdd},
    {{2, 3, 5, -12}, Regime::LowestOdd},  {{1, 5, 1, -5}, Regime::LowestOdd},   {{3, 3, 1, -3}, Regime::LowestOdd},
    {{2, 2, 6, -7}, Regime::LowestEven},  {{1, 4, 4, -9}, Regime::LowestEven},  {{2, 3, 2, -5}, Regime::LowestEven},
    {{1, 5, 1, -4}, Regime::LowestEven},  {{3, 3, 3, -8}, Regime::LowestEven},  {{1, 5, 3, -11}, Regime::LowestEven},
    {{2, 3, 3, -8}, Regime::LowestEven}};

Line crit_extremal() {
  std::vector<std::string> bad;
  for (auto& [cs, regime] : kRegimeCases) {
    CartanRank2 c(cs.c1, cs.c2);
    Weight w{cs.l1, cs.l2};
    auto cls = classify_weight(c, w);
    if (cls.regime != regime) bad.push_back(tag(cs) + " regime");
    bool highest = regime == Regime::HighestOdd || regime == Regime::HighestEven;
    auto v = highest ? highest_vector(c, w) : lowest_vector(c, w);
    if (!v) {
      bad.push_back(tag(cs) + " missing vector");
      continue;
    }
    if (!verify_extremal(c, w, 1000000).passed()) bad.push_back(tag(cs) + " verify_extremal");
    // annihilation
    for (int i = 1; i <= 2; ++i)
      if (highest ? bool(e_tilde(*v, i)) : bool(f_tilde(*v, i))) bad.push_back(tag(cs) + " not annihilated");
    // sigma profile: sigma_{-j}(H) = 0 for j <= n, sigma_{-n-1}(H) = -h_{-n-1}
    long n = highest ? -v->min_support() : v->max_support();
    if (highest) {
      for (long j = 1; j <= n; ++j)
        if (sigma_o(*v, -j) != 0) bad.push_back(tag(cs) + " sigma profile");
      Sequences s(c);
      long j = n + 1;
      Int h_next = j % 2 ? s.ap(j - 1) * cs.l1 + s.ap(j) * cs.l2 : s.a(j - 1) * cs.l1 + s.a(j) * cs.l2;
      if (sigma_o(*v, -j) != -h_next) bad.push_back(tag(cs) + " sigma at next index");
    } else {
      auto [w1, w2] = wt_o(*v);
      if (w1 > 0 || w2 > 0) bad.push_back(tag(cs) + " lowest weight not antidominant");
    }
    // walk from zero with a fixed alternating schedule, counting steps
    LambdaVector x(c, w);
    long steps = 0;
    for (;;) {
      std::optional<LambdaVector> y;
      for (int i : {1, 2})
        if (!y) y = highest ? e_tilde(x, i) : f_tilde(x, i);
      if (!y) break;
      x = *y;
      if (++steps > 1000000) break;
    }
    Int mass = 0;
    for (auto& [k, val] : v->entries) mass += abs(val);
    if (!x.same_point(*v)) bad.push_back(tag(cs) + " walk terminus");
    if (Int(steps) != mass) bad.push_back(tag(cs) + " step count");
  }
  return {3, bad.empty(),
          bad.empty() ? "extremal suite: 25 instances across four regimes" : "extremal suite: " + bad.front()};
}

// ---- 4 ----
Line crit_box() {
  std::vector<std::string> notes;
  bool ok = true;
  for (auto cs : {Case{2, 2, 3, -2}, Case{2, 2, 1, -2}, Case{2, 3, 5, -2}}) {
    CartanRank2 c(cs.c1, cs.c2);
    Weight w{cs.l1, cs.l2};
    auto h = highest_vector(c, w);
    LambdaVector seed = h ? *h : *lowest_vector(c, w);
    BfsOptions bo;
    bo.depth = 6;
    bo.use_f = bool(h);
    bo.use_e = !h;
    auto g = bfs_component(seed, bo);
    auto box = enumerate_box(seed, component_forms(c, w, 12, 12), 12, 6, h ? BoxDirection::Down : BoxDirection::Up);
    std::set<Entries> a, b;
    for (auto& x : g.nodes) a.insert(x.entries);
    for (auto& x : box) b.insert(x.entries);
    ok = ok && a == b && a.size() == g.nodes.size() && b.size() == box.size();
    notes.push_back(tag(cs) + " " + std::to_string(a.size()) + "/" + std::to_string(b.size()));
  }
  std::string t = "bfs equals box, depth 6, window 12, closure depth 12:";
  for (auto& n : notes) t += " " + n;
  return {4, ok, t};
}

// ---- 5 ----
LinearForm two(const Int& u, long iu, const Int& v, long iv, const Int& p, const Int& q) {
  LinearForm f;
  f.add_term(iu, u);
  f.add_term(iv, v);
  f.p = p;
  f.q = q;
  return f;
}

// the lower four rows of the second table, transcribed as printed for j = k+1
std::vector<LinearForm> printed_second_rows_at(const CartanRank2& c, long j, long i_max) {
  Sequences s(c);
  auto a = [&s](long l) { return l < 0 ? Int(0) : s.a(l); };
  auto ap = [&s](long l) { return l < 0 ? Int(0) : s.ap(l); };
  std::vector<LinearForm> rows;
  for (long i = 0; i <= i_max; ++i) {
    if (i >= 2 * j - 2) rows.push_back(two(a(i + 1), -2 * j + i + 3, -a(i), -2 * j + i + 4, a(2 * j - 3), a(2 * j - 2)));
    if (i <= 2 * j - 5) rows.push_back(two(ap(i + 1), -2 * j + i + 3, -ap(i), -2 * j + i + 4, 0, 0));
    if (i == 2 * j - 4) rows.push_back(two(ap(2 * j - 3), -1, -ap(2 * j - 4), 1, ap(2 * j - 4), 0));
    if (i >= 2 * j - 3)
      rows.push_back(two(ap(i + 1), -2 * j + i + 4, -ap(i), -2 * j + i + 5, ap(2 * j - 4), ap(2 * j - 3)));
  }
  return rows;
}

Line crit_xi(bool& known_pattern) {
  std::vector<std::string> bad;
  long rows_checked = 0, printed_missing = 0, printed_refuted = 0;
  for (auto& [cs, regime] : kRegimeCases) {
    CartanRank2 c(cs.c1, cs.c2);
    Weight w{cs.l1, cs.l2};
    auto cls = classify_weight(c, w);
    const auto& side = cls.highest ? *cls.highest : *cls.lowest;
    int which = regime_which(side.regime);
    auto fam = xi_closure(c, xi_generators(c, which, side.k, 12), 12, 12);
    std::set<LinearForm> closure(fam.forms.begin(), fam.forms.end());
    for (auto& r : xi_table_rows(c, which, side.k, 4, 8)) {
      ++rows_checked;
      if (!closure.count(r.form)) bad.push_back(tag(cs) + " row " + std::to_string(r.row));
    }
    // constants of the in-regime forms at this weight
    for (auto& f : component_forms(c, w, 12, 12))
      if (f.constant(w) < 0) bad.push_back(tag(cs) + " negative constant " + f.str());
    if (which == 2 && side.k + 1 <= 4) {
      BfsOptions bo;
      bo.depth = 8;
      auto g = bfs_component(*highest_vector(c, w), bo);
      for (auto& f : printed_second_rows_at(c, side.k + 1, 8)) {
        if (closure.count(f)) continue;
        ++printed_missing;
        bool refuted = std::any_of(g.nodes.begin(), g.nodes.end(), [&](const LambdaVector& x) { return f.evaluate(x) < 0; });
        printed_refuted += refuted;
      }
    }
  }
  // chain formula against an independent s_bar walk
  for (auto [c1, c2] : kGrid) {
    CartanRank2 c(c1, c2);
    for (long k = 1; k <= 9; ++k) {
      LinearForm f = LinearForm::coordinate(-k);
      long t = -k;
      for (long l = 0; l <= 12; ++l) {
        if (phi_chain_closed(c, l, k) != f) bad.push_back("chain k=" + std::to_string(k) + " l=" + std::to_string(l));
        f = s_bar(c, t, f);
        t = t == -1 ? 1 : t + 1;
      }
    }
  }
  bool pass = bad.empty() && printed_missing == 0;
  known_pattern = bad.empty() && printed_missing > 0 && printed_refuted == printed_missing;
  std::ostringstream os;
  os << "table rows in closure: " << rows_checked << " rows (second table lower rows from j = k+2)";
  if (!bad.empty()) os << "; first failure " << bad.front();
  os << "; chain k <= 9, l <= 12; constants >= 0";
  if (printed_missing)
    os << "; " << printed_missing << " lower rows of the second table as printed at j = k+1 are absent, "
       << printed_refuted << " of them take negative values on the bfs component";
  if (!pass && known_pattern) os << " [unattainable as stated: those printed rows are not valid inequalities]";
  return {5, pass, os.str()};
}

// ---- 6 ----
Line crit_appendix() {
  struct Row {
    int c1, c2;
    long l1, l2, h, l;
  };
  // one representative ratio per printed row
  const std::vector<Row> rows{
      {1, 1, 2, -1, 1, 2}, {1, 1, 1, -1, 1, 1}, {1, 1, 1, -2, 2, 1},                        // A2
      {2, 1, 3, -1, 1, 3}, {2, 1, 2, -1, 1, 2}, {2, 1, 3, -2, 2, 2}, {2, 1, 1, -1, 2, 1},  // B2
      {2, 1, 1, -2, 3, 1},                                                                  //
      {1, 3, 2, -1, 1, 5}, {1, 3, 1, -1, 1, 4}, {1, 3, 4, -5, 2, 4}, {1, 3, 2, -3, 2, 3},  // G2
      {1, 3, 3, -5, 3, 3}, {1, 3, 1, -2, 3, 2}, {1, 3, 2, -5, 4, 2}, {1, 3, 1, -3, 4, 1},  //
      {1, 3, 1, -4, 5, 1}};
  int ok = 0;
  std::string first;
  for (auto r : rows) {
    CartanRank2 c(r.c1, r.c2);
    Weight w{r.l1, r.l2};
    auto [h, l] = classical_table(c, w);
    // finite crystal oracle: the component of 0 is finite, its extremal nodes give the indices
    BfsOptions bo;
    bo.depth = 200;
    bo.use_e = bo.use_f = true;
    auto g = bfs_component(LambdaVector(c, w), bo);
    long oh = -1, ol = -1;
    for (auto& x : g.nodes) {
      if (!e_tilde(x, 1) && !e_tilde(x, 2)) oh = -x.min_support();
      if (!f_tilde(x, 1) && !f_tilde(x, 2)) ol = x.max_support();
    }
    bool good = g.saturated && h == r.h && l == r.l && oh == r.h && ol == r.l;
    ok += good;
    if (!good && first.empty()) first = tag({r.c1, r.c2, r.l1, r.l2});
  }
  return {6, ok == int(rows.size()),
          "appendix tables: " + std::to_string(ok) + "/17 rows (3 A2, 5 B2, 9 G2)" + (first.empty() ? "" : "; " + first)};
}

// ---- 7 ----
Line crit_existence() {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<long> pc(1, 6), pl(1, 40);
  int checked = 0, level_zero = 0;
  std::string first;
  while (checked < 200) {
    long c1 = pc(rng), c2 = pc(rng);
    if (c1 * c2 < 4) continue;
    long p = pl(rng), q = pl(rng);
    // force some level-zero points on affine data: 2 l1 = c1 q
    if (c1 * c2 == 4 && checked % 3 == 0) p = c1 * q, q = 2 * q;
    CartanRank2 c(c1, c2);
    Weight w{p, -q};
    // r = p/q > alpha  <=>  2 c2 p - c1 c2 q > 0 and (2 c2 p - c1 c2 q)^2 > (c1^2 c2^2 - 4 c1 c2) q^2
    Int disc = Int(c1 * c1 * c2 * c2 - 4 * c1 * c2) * q * q;
    Int up = Int(2 * c2 * p - c1 * c2 * q), dn = Int(c1 * c2 * q - 2 * c2 * p);
    bool above = up > 0 && up * up > disc, below = dn > 0 && dn * dn > disc;
    auto cls = classify_weight(c, w);
    bool ok = above ? cls.is_highest() : below ? cls.is_lowest() : (!cls.highest && !cls.lowest);
    if (c1 * c2 == 4) {
      bool zero = 2 * p - c1 * q == 0;
      level_zero += zero;
      ok = ok && zero == (cls.regime == Regime::AffineLevelZero);
      ok = ok && zero == (compare_with_alpha_beta(c, w) == AlphaBeta::EqualAlphaBeta);
      if (c1 == 2) ok = ok && zero == (p - q == 0);
    }
    if (!ok && first.empty()) first = tag({int(c1), int(c2), p, -q});
    checked += 1;
  }
  return {7, first.empty(),
          "existence: 200 random points, " + std::to_string(level_zero) + " affine level-zero" +
              (first.empty() ? "" : "; first mismatch " + first)};
}

// ---- 8 ----
Line crit_axioms() {
  std::mt19937_64 rng(8675309);
  std::uniform_int_distribution<int> pc(1, 5), count(0, 8), mag(0, 5);
  std::uniform_int_distribution<long> where(-8, 7), lam(-5, 5);
  long bad = 0;
  for (int t = 0; t < 10000; ++t) {
    CartanRank2 c(pc(rng), pc(rng));
    LambdaVector x(c, Weight{lam(rng), lam(rng)});
    int n = count(rng);
    for (int s = 0; s < n; ++s) {
      long k = where(rng);
      if (k >= 0) ++k;
      x.entries[k] = k > 0 ? mag(rng) : -mag(rng);
    }
    for (auto it = x.entries.begin(); it != x.entries.end();) it = it->second == 0 ? x.entries.erase(it) : std::next(it);
    auto [w1, w2] = wt_o(x);
    if (wt(x) != std::make_pair(w1, w2)) ++bad;
    for (int i = 1; i <= 2; ++i) {
      Int hw = i == 1 ? w1 : w2;
      long eps = string_length(x, i, true, 4000), ph = string_length(x, i, false, 4000);
      if (eps < 0 || ph < 0 || Int(ph) != Int(eps) + hw) ++bad;
      if (epsilon(x, i) != eps || phi(x, i) != ph) ++bad;
      auto e = e_tilde(x, i);
      auto f = f_tilde(x, i);
      if (bool(e) != (eps != 0) || bool(f) != (ph != 0)) ++bad;
      Int ai1 = pair_o(c, 1, i), ai2 = pair_o(c, 2, i);
      if (f) {
        auto back = e_tilde(*f, i);
        if (!back || !back->same_point(x)) ++bad;
        if (wt_o(*f) != std::pair<Int, Int>(w1 - ai1, w2 - ai2)) ++bad;
      }
      if (e) {
        auto back = f_tilde(*e, i);
        if (!back || !back->same_point(x)) ++bad;
        if (wt_o(*e) != std::pair<Int, Int>(w1 + ai1, w2 + ai2)) ++bad;
      }
    }
  }
  return {8, bad == 0, "crystal axioms on 10000 random vectors: " + std::to_string(bad) + " violations"};
}

// ---- 9 ----
Line crit_a2() {
  CartanRank2 c(1, 1);
  Weight w{1, -1};
  auto h = highest_vector(c, w);
  if (!h) return {9, false, "A2 component: no highest vector"};
  BfsOptions bo;
  bo.depth = 50;
  auto g = bfs_component(*h, bo);
  auto [a, b] = wt_o(*h);
  Int weyl = (a + 1) * (b + 1) * (a + b + 2) / 2;
  bool ok = g.saturated && g.nodes.size() == 3 && weyl == 3;
  return {9, ok, "A2 component from H_-1 at (1,-1): " + std::to_string(g.nodes.size()) + " nodes" +
                     (g.saturated ? ", saturated" : ", not saturated")};
}

}  // namespace

int main() {
  std::vector<Line> lines;
  std::set<int> known_red;
  auto guarded = [&](int id, const std::function<Line()>& f) {
    try {
      lines.push_back(f());
    } catch (const std::exception& e) {
      lines.push_back({id, false, std::string("exception: ") + e.what()});
    }
  };
  bool k2 = false, k5 = false;
  guarded(1, crit_sequences);
  guarded(2, [&] { return crit_known_values(k2); });
  guarded(3, crit_extremal);
  guarded(4, crit_box);
  guarded(5, [&] { return crit_xi(k5); });
  guarded(6, crit_appendix);
  guarded(7, crit_existence);
  guarded(8, crit_axioms);
  guarded(9, crit_a2);
  if (k2) known_red.insert(2);
  if (k5) known_red.insert(5);

  int passed = 0, unexpected = 0;
  for (auto& l : lines) {
    std::cout << (l.pass ? "PASS " : "FAIL ") << l.id << " " << l.text << "\n";
    passed += l.pass;
    unexpected += !l.pass && !known_red.count(l.id);
  }
  std::cout << passed << "/" << lines.size() << " criteria pass";
  if (!known_red.empty()) {
    std::cout << "; red as stated, with the documented cause confirmed:";
    for (int id : known_red) std::cout << " " << id;
  }
  std::cout << "\n";
  return unexpected ? 1 : 0;
}

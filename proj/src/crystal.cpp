#include "rk2/crystal.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace rk2 {

int iota(long k) {
  if (k == 0) throw Error(ErrorKind::IndexZero, "index 0 is t_lambda");
  if (k > 0) return k % 2 ? 1 : 2;
  return (-k) % 2 ? 2 : 1;
}

long k_plus(long k) {
  if (k == 0) throw Error(ErrorKind::IndexZero, "index 0 is t_lambda");
  if (k == -1) return 2;
  if (k == -2) return 1;
  return k + 2;
}

long k_minus(long k) {
  if (k == 0) throw Error(ErrorKind::IndexZero, "index 0 is t_lambda");
  if (k == 1) return -2;
  if (k == 2) return -1;
  return k - 2;
}

LambdaVector::LambdaVector(CartanRank2 c, Weight w, Entries e)
    : cartan(std::move(c)), weight(std::move(w)) {
  for (auto& [k, v] : e) {
    if (k == 0) throw Error(ErrorKind::IndexZero, "vector entry at index 0");
    if (v != 0) entries.emplace(k, v);
  }
}

Int LambdaVector::at(long k) const {
  auto it = entries.find(k);
  return it == entries.end() ? Int(0) : it->second;
}

void LambdaVector::add(long k, const Int& delta) {
  if (k == 0) throw Error(ErrorKind::IndexZero, "vector entry at index 0");
  Int& v = entries[k];
  v += delta;
  if (v == 0) entries.erase(k);
}

long LambdaVector::min_support() const { return entries.empty() ? 0 : entries.begin()->first; }
long LambdaVector::max_support() const { return entries.empty() ? 0 : entries.rbegin()->first; }

Int LambdaVector::total() const {
  Int s = 0;
  for (auto& [k, v] : entries) s += v;
  return s;
}

Int sigma(const LambdaVector& x, long k) {
  int ik = iota(k);
  Int s = k < 0 ? Int(-x.weight.at(ik)) : Int(0);
  for (auto it = x.entries.upper_bound(k); it != x.entries.end(); ++it) {
    if (it->first == k) continue;
    s += x.cartan.pairing(ik, iota(it->first)) * it->second;
  }
  return s + x.at(k);
}

std::map<long, Int> sigma_window(const LambdaVector& x) {
  long lo = std::min(x.min_support(), -1L) - 2;
  long hi = std::max(x.max_support(), 1L) + 2;
  const Int p11 = 2, p12 = x.cartan.pairing(1, 2), p21 = x.cartan.pairing(2, 1), p22 = 2;
  Int s1 = 0, s2 = 0;  // suffix sums of x_j over j > k, split by colour
  std::map<long, Int> out;
  for (long k = hi; k >= lo; --k) {
    if (k == 0) continue;
    int ik = iota(k);
    const Int xk = x.at(k);
    Int v = xk + (ik == 1 ? p11 * s1 + p12 * s2 : p21 * s1 + p22 * s2);
    if (k < 0) v -= x.weight.at(ik);
    out.emplace_hint(out.begin(), k, std::move(v));
    (ik == 1 ? s1 : s2) += xk;
  }
  return out;
}

std::pair<Int, Int> wt(const LambdaVector& x) {
  Int w1 = x.weight.l1, w2 = x.weight.l2;
  for (auto& [k, v] : x.entries) {
    // alpha_1 -> (2, -c2), alpha_2 -> (-c1, 2)
    if (iota(k) == 1) {
      w1 -= 2 * v;
      w2 += x.cartan.c2 * v;
    } else {
      w1 += x.cartan.c1 * v;
      w2 -= 2 * v;
    }
  }
  return {w1, w2};
}

SigmaProfile sigma_profile(const LambdaVector& x, int i) {
  auto w = wt(x);
  SigmaProfile p;
  p.neg_tail_value = -(i == 1 ? w.first : w.second);
  p.max_value = 0;  // positive tail
  if (p.neg_tail_value > p.max_value) p.max_value = p.neg_tail_value;
  auto sg = sigma_window(x);
  for (auto& [k, v] : sg)
    if (iota(k) == i && v > p.max_value) p.max_value = v;
  for (auto& [k, v] : sg)
    if (iota(k) == i && v == p.max_value) p.maximizers.push_back(k);
  p.pos_tail_attains = p.max_value == 0;
  p.neg_tail_attains = p.neg_tail_value == p.max_value;
  return p;
}

std::optional<LambdaVector> f_tilde(const LambdaVector& x, int i) {
  auto p = sigma_profile(x, i);
  if (p.neg_tail_attains) return std::nullopt;
  LambdaVector y = x;
  y.add(p.maximizers.front(), 1);
  return y;
}

std::optional<LambdaVector> e_tilde(const LambdaVector& x, int i) {
  auto p = sigma_profile(x, i);
  if (p.pos_tail_attains) return std::nullopt;
  LambdaVector y = x;
  y.add(p.maximizers.back(), -1);
  return y;
}

Int epsilon(const LambdaVector& x, int i) { return sigma_profile(x, i).max_value; }

Int phi(const LambdaVector& x, int i) {
  auto w = wt(x);
  return (i == 1 ? w.first : w.second) + epsilon(x, i);
}

RaiseResult raise_to_extremal(const LambdaVector& x, RaiseMode mode, long max_steps) {
  if (max_steps < 0) throw Error(ErrorKind::PreconditionViolation, "max_steps must be >= 0");
  auto step = [mode](const LambdaVector& v, int i) {
    return mode == RaiseMode::Raise ? e_tilde(v, i) : f_tilde(v, i);
  };
  RaiseResult r{x, 0, false};
  for (;;) {
    auto y = step(r.vector, 2);
    if (!y) y = step(r.vector, 1);
    if (!y) return r;
    if (r.steps == max_steps) {
      r.step_limit = true;
      return r;
    }
    r.vector = std::move(*y);
    ++r.steps;
  }
}

namespace {

std::vector<LambdaVector> successors(const LambdaVector& v, const BfsOptions& opt) {
  std::vector<LambdaVector> out;
  for (int i = 1; i <= 2; ++i) {
    if (opt.use_f)
      if (auto y = f_tilde(v, i)) out.push_back(std::move(*y));
    if (opt.use_e)
      if (auto y = e_tilde(v, i)) out.push_back(std::move(*y));
  }
  return out;
}

std::vector<std::vector<LambdaVector>> expand(const std::vector<LambdaVector>& frontier,
                                              const BfsOptions& opt) {
  std::vector<std::vector<LambdaVector>> out(frontier.size());
  unsigned nt = std::max(1u, opt.threads);
  if (nt == 1 || frontier.size() < 2 * nt) {
    for (std::size_t n = 0; n < frontier.size(); ++n) out[n] = successors(frontier[n], opt);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nt; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t n = t; n < frontier.size(); n += nt) out[n] = successors(frontier[n], opt);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace

CrystalGraph bfs_component(const LambdaVector& seed, const BfsOptions& opt) {
  if (opt.depth < 0) throw Error(ErrorKind::PreconditionViolation, "depth must be >= 0");
  std::set<Entries> seen{seed.entries};
  std::vector<LambdaVector> all{seed};
  std::vector<LambdaVector> frontier{seed};
  CrystalGraph g{seed, opt.depth, {}, {}, false};

  // merged in frontier order, so the result does not depend on the thread count
  auto absorb = [&](const std::vector<std::vector<LambdaVector>>& next, bool record) {
    std::vector<LambdaVector> nf;
    for (auto& group : next)
      for (auto& y : group)
        if (!seen.count(y.entries)) {
          if (!record) return std::vector<LambdaVector>{y};
          seen.insert(y.entries);
          if (seen.size() > opt.node_budget)
            throw Error(ErrorKind::NodeBudgetExceeded, "BFS node budget exceeded");
          all.push_back(y);
          nf.push_back(y);
        }
    return nf;
  };

  for (long d = 0; d < opt.depth && !frontier.empty(); ++d) frontier = absorb(expand(frontier, opt), true);
  g.saturated = frontier.empty() || absorb(expand(frontier, opt), false).empty();

  std::sort(all.begin(), all.end(),
            [](const LambdaVector& a, const LambdaVector& b) { return a.entries < b.entries; });
  std::map<Entries, std::size_t> index;
  for (std::size_t n = 0; n < all.size(); ++n) index.emplace(all[n].entries, n);
  for (std::size_t n = 0; n < all.size(); ++n)
    for (int i = 1; i <= 2; ++i)
      if (auto y = f_tilde(all[n], i)) {
        auto it = index.find(y->entries);
        if (it != index.end()) g.edges.emplace_back(n, i, it->second);
      }
  g.nodes = std::move(all);
  return g;
}

}  // namespace rk2

#include "rk2/serialize.hpp"

#include <limits>
#include <sstream>

namespace rk2 {

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::PreconditionViolation, "expected an integer, got " + j.dump());
}

json entries_to_json(const Entries& e) {
  json out = json::object();
  for (auto& [k, v] : e) out[std::to_string(k)] = int_to_json(v);
  return out;
}

Entries entries_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::PreconditionViolation, "entries must be an object");
  Entries e;
  for (auto it = j.begin(); it != j.end(); ++it) {
    long k = 0;
    try {
      std::size_t used = 0;
      k = std::stol(it.key(), &used);
      if (used != it.key().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::PreconditionViolation, "bad index key '" + it.key() + "'");
    }
    if (k == 0) throw Error(ErrorKind::IndexZero, "entry at index 0");
    Int v = int_from_json(it.value());
    if (v != 0) e[k] = v;
  }
  return e;
}

json vector_to_json(const LambdaVector& v) {
  json out;
  out["cartan"] = {int_to_json(v.cartan.c1), int_to_json(v.cartan.c2)};
  out["lambda"] = {int_to_json(v.weight.l1), int_to_json(v.weight.l2)};
  out["entries"] = entries_to_json(v.entries);
  return out;
}

LambdaVector vector_from_json(const json& j, const std::optional<CartanRank2>& cartan,
                              const std::optional<Weight>& weight) {
  if (!j.is_object()) throw Error(ErrorKind::PreconditionViolation, "vector document must be an object");
  auto pair_of = [&j](const char* key) -> std::optional<std::pair<Int, Int>> {
    if (!j.contains(key)) return std::nullopt;
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != 2)
      throw Error(ErrorKind::PreconditionViolation, std::string(key) + " must be a pair");
    return std::make_pair(int_from_json(a[0]), int_from_json(a[1]));
  };
  std::optional<CartanRank2> c = cartan;
  std::optional<Weight> w = weight;
  if (auto p = pair_of("cartan")) c.emplace(p->first, p->second);
  if (auto p = pair_of("lambda")) w = Weight{p->first, p->second};
  if (!c || !w) throw Error(ErrorKind::PreconditionViolation, "vector needs cartan and lambda");
  return LambdaVector(*c, *w, j.contains("entries") ? entries_from_json(j.at("entries")) : Entries{});
}

std::string vector_to_text(const LambdaVector& v) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto& [k, x] : v.entries) {
    os << (first ? "" : ", ") << k << ": " << x;
    first = false;
  }
  os << "}";
  return os.str();
}

json graph_to_json(const CrystalGraph& g) {
  json out;
  out["cartan"] = {int_to_json(g.seed.cartan.c1), int_to_json(g.seed.cartan.c2)};
  out["lambda"] = {int_to_json(g.seed.weight.l1), int_to_json(g.seed.weight.l2)};
  out["seed"] = entries_to_json(g.seed.entries);
  out["depth"] = g.depth;
  out["saturated"] = g.saturated;
  json nodes = json::array();
  for (auto& n : g.nodes) nodes.push_back(entries_to_json(n.entries));
  out["nodes"] = nodes;
  json edges = json::array();
  for (auto& [a, i, b] : g.edges) edges.push_back({a, i, b});
  out["edges"] = edges;
  return out;
}

std::string graph_to_dot(const CrystalGraph& g) {
  std::ostringstream os;
  os << "digraph crystal {\n";
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    auto w = wt(g.nodes[n]);
    os << "  n" << n << " [label=\"" << vector_to_text(g.nodes[n]) << "\\nwt=(" << w.first << "," << w.second
       << ")\"];\n";
  }
  for (auto& [a, i, b] : g.edges) os << "  n" << a << " -> n" << b << " [label=\"" << i << "\"];\n";
  os << "}\n";
  return os.str();
}

json form_to_json(const LinearForm& f) {
  json out;
  out["coeffs"] = entries_to_json(f.coeffs);
  out["const"] = {int_to_json(f.p), int_to_json(f.q)};
  return out;
}

LinearForm form_from_json(const json& j) {
  LinearForm f;
  f.coeffs = entries_from_json(j.at("coeffs"));
  if (j.contains("const")) {
    f.p = int_from_json(j.at("const").at(0));
    f.q = int_from_json(j.at("const").at(1));
  }
  return f;
}

json family_to_json(const FormFamily& f) {
  json out;
  out["name"] = family_name(f.name);
  out["k"] = f.k;
  out["window"] = f.window;
  if (f.name == FamilyName::XiClosure || f.name == FamilyName::XiHalfPositive ||
      f.name == FamilyName::XiHalfNegative) {
    out["depth"] = f.depth;
    out["fixpoint"] = f.fixpoint;
  }
  json gens = json::array();
  for (auto& g : f.generators) gens.push_back(form_to_json(g));
  if (!f.generators.empty()) out["generators"] = gens;
  json forms = json::array();
  for (auto& g : f.forms) forms.push_back(form_to_json(g));
  out["forms"] = forms;
  return out;
}

static json side_to_json(const ExtremalSide& s) {
  json out;
  out["regime"] = regime_name(s.regime);
  out["k"] = s.k;
  out["index"] = s.index;
  if (s.lower) out["lower"] = s.lower->str();
  if (s.upper) out["upper"] = s.upper->str();
  return out;
}

json classification_to_json(const WeightClassification& c) {
  json out;
  out["regime"] = regime_name(c.regime);
  out["k"] = c.k;
  if (c.highest && c.highest->lower) out["r"] = c.r.str();
  else if (c.lowest && c.lowest->upper) out["r"] = c.r.str();
  if (c.highest) out["highest"] = side_to_json(*c.highest);
  if (c.lowest) out["lowest"] = side_to_json(*c.lowest);
  out["text"] = c.describe();
  return out;
}

json report_to_json(const ExtremalReport& r) {
  json out;
  out["classification"] = classification_to_json(r.classification);
  if (r.highest) out["highest"] = entries_to_json(r.highest->entries);
  if (r.lowest) out["lowest"] = entries_to_json(r.lowest->entries);
  if (r.highest_steps >= 0) out["highest_steps"] = r.highest_steps;
  if (r.lowest_steps >= 0) out["lowest_steps"] = r.lowest_steps;
  json checks = json::array();
  for (auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  out["checks"] = checks;
  out["passed"] = r.passed();
  return out;
}

}  // namespace rk2

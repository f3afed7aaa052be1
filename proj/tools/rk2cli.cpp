#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rk2/serialize.hpp"
#include "rk2/verify.hpp"

using namespace rk2;

namespace {

enum Exit { kOk = 0, kNegative = 1, kPrecondition = 2, kBudget = 3, kUsage = 64 };

struct RunConfig {
  long long c1 = 0, c2 = 0, l1 = 0, l2 = 0;
  long depth = 8;
  long window = 12;
  long long budget = 1000000;
  std::string format = "text";
  unsigned threads = 1;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need_cartan(CLI::App& app) {
  for (const char* key : {"--c1", "--c2", "--l1", "--l2"})
    if (app.count(key) == 0) throw Usage(std::string("missing ") + key);
}

json read_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::PreconditionViolation, "cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::PreconditionViolation, std::string("bad JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crystal computations for rank-2 Kac-Moody data"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file with the same keys as the flags");
  RunConfig cfg;
  app.add_option("--c1", cfg.c1, "Cartan entry c1 (<h1,alpha2> = -c1)");
  app.add_option("--c2", cfg.c2, "Cartan entry c2 (<h2,alpha1> = -c2)");
  app.add_option("--l1", cfg.l1, "weight coefficient lambda1");
  app.add_option("--l2", cfg.l2, "weight coefficient lambda2");
  app.add_option("--depth", cfg.depth, "BFS depth / closure depth")->capture_default_str();
  app.add_option("--window", cfg.window, "index window")->capture_default_str();
  app.add_option("--budget", cfg.budget, "node / form / step budget")->capture_default_str();
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads for BFS")->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify the weight");
  auto* hwv = app.add_subcommand("hwv", "highest weight vector of the component");
  auto* lwv = app.add_subcommand("lwv", "lowest weight vector of the component");
  auto* graph = app.add_subcommand("graph", "bounded BFS of the component");
  std::string seed_kind = "auto";
  bool both_ops = false;
  graph->add_option("--seed", seed_kind, "auto, hwv, lwv or zero")
      ->check(CLI::IsMember({"auto", "hwv", "lwv", "zero"}));
  graph->add_flag("--with-e", both_ops, "also follow the raising operators");
  auto* xi = app.add_subcommand("xi", "inequality families");
  std::string family = "closure";
  long fam_k = 0, jmax = 4, imax = 8;
  xi->add_option("--family", family, "closure, displayed, 1, 2, 3, 4, half-positive, half-negative")
      ->check(CLI::IsMember({"closure", "displayed", "1", "2", "3", "4", "half-positive", "half-negative"}));
  xi->add_option("--k", fam_k, "regime index k (defaults to the classification)");
  xi->add_option("--jmax", jmax, "table rows up to j")->capture_default_str();
  xi->add_option("--imax", imax, "table rows up to i")->capture_default_str();
  auto* member = app.add_subcommand("member", "membership of a vector in the component's inequalities");
  std::string vector_file;
  member->add_option("--vector", vector_file, "vector JSON file, - for stdin")->required();
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite = "all";
  verify->add_option("--suite", suite, "sequences, crystal, polyhedral, extremal, appendix or all")
      ->check(CLI::IsMember({"sequences", "crystal", "polyhedral", "extremal", "appendix", "all"}));
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) {
      VerifyOptions vo;
      vo.threads = cfg.threads;
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      json out = json::array();
      for (auto& n : names) {
        auto r = run_suite(n, vo);
        ok = ok && r.passed();
        if (cfg.format == "json") {
          json checks = json::array();
          for (auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
          out.push_back({{"suite", n}, {"passed", r.passed()}, {"checks", checks}});
        } else {
          for (auto& c : r.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << n << ": " << c.name
                      << (c.detail.empty() || c.pass ? "" : " [" + c.detail + "]") << "\n";
        }
      }
      if (cfg.format == "json")
        std::cout << out.dump(2) << "\n";
      else
        std::cout << (ok ? "all passed" : "FAILURES") << "\n";
      return ok ? kOk : kNegative;
    }

    if (xi->parsed() && (family == "displayed" || family == "half-positive" || family == "half-negative")) {
      if (app.count("--c1") == 0 || app.count("--c2") == 0) throw Usage("missing --c1/--c2");
      CartanRank2 c(cfg.c1, cfg.c2);
      FormFamily f = family == "displayed" ? xi_displayed(c, cfg.window)
                                           : half_closure(c, family == "half-positive", cfg.window, cfg.depth,
                                                          static_cast<std::size_t>(cfg.budget));
      std::cout << family_to_json(f).dump(2) << "\n";
      return kOk;
    }

    if (member->parsed()) {
      std::optional<CartanRank2> dc;
      std::optional<Weight> dw;
      if (app.count("--c1") && app.count("--c2")) dc.emplace(cfg.c1, cfg.c2);
      if (app.count("--l1") && app.count("--l2")) dw = Weight{cfg.l1, cfg.l2};
      LambdaVector x = vector_from_json(read_json_file(vector_file), dc, dw);
      auto forms = component_forms(x.cartan, x.weight, cfg.window, cfg.depth, static_cast<std::size_t>(cfg.budget));
      auto m = is_member(x, forms, cfg.window);
      if (cfg.format == "json") {
        json out{{"member", m.member}};
        if (m.violated) out["violated"] = form_to_json(*m.violated);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << (m.member ? "member" : "not a member; violated: " + m.violated->str() + " >= 0") << "\n";
      }
      return m.member ? kOk : kNegative;
    }
    need_cartan(app);
    CartanRank2 c(cfg.c1, cfg.c2);
    Weight w{cfg.l1, cfg.l2};

    if (classify->parsed()) {
      auto cls = classify_weight(c, w);
      if (cfg.format == "json")
        std::cout << classification_to_json(cls).dump(2) << "\n";
      else
        std::cout << cls.describe() << "\n";
      return kOk;
    }

    if (hwv->parsed() || lwv->parsed()) {
      auto v = hwv->parsed() ? highest_vector(c, w) : lowest_vector(c, w);
      if (!v) {
        std::cout << "none\n";
        return kNegative;
      }
      if (cfg.format == "json")
        std::cout << vector_to_json(*v).dump(2) << "\n";
      else
        std::cout << vector_to_json(*v).dump() << "\n";
      return kOk;
    }

    if (graph->parsed()) {
      auto h = highest_vector(c, w);
      auto l = lowest_vector(c, w);
      BfsOptions bo;
      bo.depth = cfg.depth;
      bo.node_budget = static_cast<std::size_t>(cfg.budget);
      bo.threads = cfg.threads;
      LambdaVector seed(c, w);
      if (seed_kind == "hwv" || (seed_kind == "auto" && h)) {
        if (!h) throw Error(ErrorKind::PreconditionViolation, "no highest weight vector for this weight");
        seed = *h;
      } else if (seed_kind == "lwv" || (seed_kind == "auto" && l)) {
        if (!l) throw Error(ErrorKind::PreconditionViolation, "no lowest weight vector for this weight");
        seed = *l;
        bo.use_f = false;
        bo.use_e = true;
      }
      if (both_ops) bo.use_f = bo.use_e = true;
      auto g = bfs_component(seed, bo);
      if (cfg.format == "dot") {
        std::cout << graph_to_dot(g);
      } else if (cfg.format == "json") {
        std::cout << graph_to_json(g).dump(2) << "\n";
      } else {
        std::cout << "nodes " << g.nodes.size() << " edges " << g.edges.size() << " saturated "
                  << (g.saturated ? "yes" : "no") << "\n";
        for (std::size_t n = 0; n < g.nodes.size(); ++n) std::cout << n << " " << vector_to_text(g.nodes[n]) << "\n";
        for (auto& [a, i, b] : g.edges) std::cout << a << " -" << i << "-> " << b << "\n";
      }
      return kOk;
    }

    if (xi->parsed()) {
      FormFamily f;
      if (family == "closure") {
        f = xi_closure(c, default_generators(cfg.window), cfg.window, cfg.depth, static_cast<std::size_t>(cfg.budget));
      } else {
        int which = std::stoi(family);
        long k = fam_k;
        if (xi->count("--k") == 0) {
          auto cls = classify_weight(c, w);
          const auto& side = which <= 2 ? cls.highest : cls.lowest;
          if (!side || regime_which(side->regime) != which)
            throw Error(ErrorKind::RegimeMismatch,
                        std::string("weight is classified as ") + regime_name(cls.regime));
          k = side->k;
        }
        f = xi_family(c, w, which, k, jmax, imax, cfg.window);
      }
      std::cout << family_to_json(f).dump(2) << "\n";
      return kOk;
    }

  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.is_budget() ? kBudget : kPrecondition;
  }
  return kUsage;
}

// tightpath command-line front end. Talks to the library only through the
// C interface.
//
// Exit status: 0 success or pattern-free, 1 pattern found, 2 usage or input
// error, 3 search budget exhausted.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tightpath/tightpath.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFound = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Failure {
  tp_status status;
  std::string message;
};

void check(tp_status status) {
  if (status != TP_OK) throw Failure{status, tp_last_error()};
}

struct HypergraphDeleter {
  void operator()(tp_hypergraph* h) const { tp_hypergraph_free(h); }
};
struct WitnessDeleter {
  void operator()(tp_witness* w) const { tp_witness_free(w); }
};
using HypergraphPtr = std::unique_ptr<tp_hypergraph, HypergraphDeleter>;
using WitnessPtr = std::unique_ptr<tp_witness, WitnessDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  tp_string_free(s);
  return out;
}

HypergraphPtr read_input(const std::string& path) {
  tp_hypergraph* h = nullptr;
  check(tp_hypergraph_read_file(path.c_str(), &h));
  return HypergraphPtr(h);
}

tp_pattern pattern_of(const std::string& name) {
  tp_pattern p{};
  check(tp_pattern_from_name(name.c_str(), &p));
  return p;
}

std::string sequence_text(const nlohmann::json& seq) {
  std::string out;
  for (const auto& v : seq) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v.get<int>());
  }
  return out;
}

struct Globals {
  bool json = false;
  std::uint64_t seed = 0;
};

struct ConstructArgs {
  std::string family;
  int n = 0, r = 0, k = 0, m = 1;
  std::string in, out;
};

int run_construct(const Globals& g, const ConstructArgs& a) {
  tp_hypergraph* raw = nullptr;
  if (a.family == "lift_plus") {
    if (a.in.empty()) throw Failure{TP_ERR_DOMAIN, "lift_plus needs --in"};
    auto base = read_input(a.in);
    check(tp_lift_plus(base.get(), a.m, &raw));
  } else {
    tp_family fam{};
    if (a.family == "stack_free") fam = TP_FAMILY_STACK_FREE;
    else if (a.family == "short_side") fam = TP_FAMILY_SHORT_SIDE;
    else if (a.family == "clique_union") fam = TP_FAMILY_CLIQUE_UNION;
    else if (a.family == "transversal") fam = TP_FAMILY_TRANSVERSAL;
    check(tp_construct(fam, a.n, a.r, a.k, &raw));
  }
  HypergraphPtr h(raw);
  if (!a.out.empty()) check(tp_hypergraph_write_file(h.get(), a.out.c_str()));
  if (g.json) {
    char* s = nullptr;
    check(tp_hypergraph_to_json(h.get(), &s));
    std::cout << take(s) << '\n';
  } else if (a.out.empty()) {
    char* s = nullptr;
    check(tp_hypergraph_to_text(h.get(), &s));
    std::cout << take(s);
  } else {
    std::cout << a.family << ": " << tp_hypergraph_edge_count(h.get()) << " edges written to "
              << a.out << '\n';
  }
  return kExitOk;
}

struct DetectArgs {
  std::string in, pattern;
  int k = 0;
};

int run_detect(const Globals& g, const DetectArgs& a) {
  auto h = read_input(a.in);
  tp_witness* raw = nullptr;
  check(tp_find_pattern(h.get(), pattern_of(a.pattern), a.k, &raw));
  WitnessPtr w(raw);
  if (!w) {
    std::cout << (g.json ? R"({"free":true})" : "free") << '\n';
    return kExitOk;
  }
  char* s = nullptr;
  check(tp_witness_to_json(w.get(), &s));
  const auto j = nlohmann::json::parse(take(s));
  if (g.json) {
    std::cout << nlohmann::json{{"free", false}, {"witness", j}}.dump() << '\n';
  } else {
    std::cout << "found " << a.pattern << " k=" << a.k << ": " << sequence_text(j["sequence"])
              << '\n';
  }
  return kExitFound;
}

struct BoundArgs {
  int n = 0, r = 0, k = 0;
};

int run_bound(const Globals& g, const BoundArgs& a) {
  char* s = nullptr;
  check(tp_bound_table(a.n, a.r, a.k, &s));
  const auto j = nlohmann::json::parse(take(s));
  if (g.json) {
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  std::printf("bounds for n=%d r=%d k=%d\n", a.n, a.r, a.k);
  for (const auto& row : j["bounds"]) {
    const std::string kind = row["kind"];
    if (row["applicable"].get<bool>()) {
      std::printf("  %-14s %s  (~%.6g)%s\n", kind.c_str(),
                  row["value"].get<std::string>().c_str(), row["approx"].get<double>(),
                  row.contains("asymptotic_only") ? "  asymptotic only" : "");
    } else {
      std::printf("  %-14s n/a: %s\n", kind.c_str(), row["reason"].get<std::string>().c_str());
    }
  }
  return kExitOk;
}

struct SearchArgs {
  int n = 0, r = 0, k = 0;
  std::string pattern = "tight_path";
  std::string geometry = "cgh";
  long long budget = 0;
  int threads = 1;
  std::string out;
};

int run_search(const Globals& g, const SearchArgs& a) {
  tp_search_options opts{a.budget, a.threads};
  int value = 0;
  int exhaustive = 0;
  tp_hypergraph* raw = nullptr;
  char* s = nullptr;
  check(tp_search(a.n, a.r, a.k, pattern_of(a.pattern), a.geometry == "cgh", &opts, &value,
                  &exhaustive, &raw, &s));
  HypergraphPtr witness(raw);
  const auto j = nlohmann::json::parse(take(s));
  if (!a.out.empty()) check(tp_hypergraph_write_file(witness.get(), a.out.c_str()));
  if (g.json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "value " << value << '\n'
              << "certificate " << j["certificate"].get<std::string>() << '\n'
              << "nodes " << j["nodes_explored"].get<long long>() << '\n'
              << "group " << j["group"].get<std::string>() << '\n';
    if (j["reference"].is_null()) {
      std::cout << "reference none (new data)\n";
    } else {
      std::cout << "reference " << j["reference"]["value"].get<long long>() << " ("
                << j["reference"]["source"].get<std::string>() << ", "
                << (!exhaustive                               ? "value above is a lower bound"
                    : j["reference"]["matches"].get<bool>() ? "matches"
                                                            : "differs")
                << ")\n";
    }
  }
  return exhaustive ? kExitOk : kExitBudget;
}

struct VerifyArgs {
  std::string in, pattern;
  int k = 0;
  int k_max = 0;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  auto h = read_input(a.in);
  int free = 0;
  char* s = nullptr;
  check(tp_verify_family(h.get(), pattern_of(a.pattern), a.k, &free, &s));
  nlohmann::json out{{"family", nlohmann::json::parse(take(s))}};

  // The counting check applies to even-uniform convex hypergraphs only.
  const int r = tp_hypergraph_r(h.get());
  std::optional<int> violations;
  if (tp_hypergraph_geometric(h.get()) && r >= 2 && r % 2 == 0) {
    int v = 0;
    char* c = nullptr;
    check(tp_verify_counting(h.get(), a.k_max > 0 ? a.k_max : a.k, 0, nullptr, 0, &v, &c));
    out["counting"] = nlohmann::json::parse(take(c));
    violations = v;
  }

  if (g.json) {
    std::cout << out.dump() << '\n';
  } else {
    std::cout << (free ? "free" : "pattern found") << ", "
              << out["family"]["edge_count"].get<long long>() << " edges\n";
    if (!free) {
      std::cout << "witness " << sequence_text(out["family"]["witness"]["sequence"]) << '\n';
    }
    if (violations) {
      std::cout << "counting violations " << *violations << '\n';
      for (const auto& row : out["counting"]["rows"]) {
        std::cout << "  k=" << row["k"] << " |S_k|=" << row["S_k"] << " >= " << row["lower_bound"]
                  << ", |T_k|=" << row["T_k"] << " <= " << row["T_bound"]
                  << ", |S_k+1|=" << row["S_k_plus_1"] << '\n';
      }
    } else {
      std::cout << "counting check skipped (needs a cgh with even r)\n";
    }
  }
  // A counting violation is a counterexample, reported like a found pattern.
  const bool clean = free && (!violations || *violations == 0);
  return clean ? kExitOk : kExitFound;
}

struct ExperimentArgs {
  std::string in;
  long long trials = 1000;
};

int run_experiment(const Globals& g, const ExperimentArgs& a) {
  auto h = read_input(a.in);
  char* s = nullptr;
  check(tp_experiment(h.get(), g.seed, a.trials, &s));
  const auto j = nlohmann::json::parse(take(s));
  if (g.json) {
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  std::printf("seed %llu, %lld trials\n", static_cast<unsigned long long>(g.seed), a.trials);
  std::printf("mean |G| %.4f (stderr %.4f), expected %.4f\n", j["mean_G"].get<double>(),
              j["stderr"].get<double>(), j["target_G"].get<double>());
  const auto& means = j["mean_shadow_i"];
  const auto& errs = j["stderr_shadow_i"];
  for (std::size_t i = 0; i < means.size(); ++i) {
    std::printf("mean |shadow_%zu G| %.4f (stderr %.4f), bound %.4f\n", i, means[i].get<double>(),
                errs[i].get<double>(), j["bound_shadow"].get<double>());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight paths, zigzags and stacks in convex geometric hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "print structured output");
  app.add_option("--seed", g.seed, "random seed")->default_val(0);

  const std::vector<std::string> patterns{"tight_path", "zigzag", "stack", "good_path"};

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "emit an explicit family");
  construct->add_option("--family", ca.family)
      ->required()
      ->check(CLI::IsMember(
          {"stack_free", "short_side", "clique_union", "transversal", "lift_plus"}));
  construct->add_option("--n", ca.n);
  construct->add_option("--r", ca.r);
  construct->add_option("--k", ca.k);
  construct->add_option("--m", ca.m, "fresh vertices for lift_plus")->default_val(1);
  construct->add_option("--in", ca.in, "base hypergraph for lift_plus");
  construct->add_option("-o,--out", ca.out, "output file");

  DetectArgs da;
  auto* detect = app.add_subcommand("detect", "look for a pattern in a hypergraph file");
  detect->add_option("--in", da.in)->required();
  detect->add_option("--pattern", da.pattern)->required()->check(CLI::IsMember(patterns));
  detect->add_option("--k", da.k)->required();

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "print the upper bound table");
  bound->add_option("--n", ba.n)->required();
  bound->add_option("--r", ba.r)->required();
  bound->add_option("--k", ba.k)->required();

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "compute an exact extremal number");
  search->add_option("--n", sa.n)->required();
  search->add_option("--r", sa.r)->required();
  search->add_option("--k", sa.k)->required();
  search->add_option("--pattern", sa.pattern)->check(CLI::IsMember(patterns));
  search->add_option("--geometry", sa.geometry)->check(CLI::IsMember({"cgh", "abstract"}));
  search->add_option("--budget", sa.budget, "node limit, 0 for none");
  search->add_option("--threads", sa.threads)->check(CLI::PositiveNumber);
  search->add_option("-o,--out", sa.out, "witness output file");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "certify pattern-freeness and counting identities");
  verify->add_option("--in", va.in)->required();
  verify->add_option("--pattern", va.pattern)->required()->check(CLI::IsMember(patterns));
  verify->add_option("--k", va.k)->required();
  verify->add_option("--k-max", va.k_max, "largest k for the counting check");

  ExperimentArgs ea;
  auto* experiment = app.add_subcommand("experiment", "random block-coloring statistics");
  experiment->add_option("--in", ea.in)->required();
  experiment->add_option("--trials", ea.trials)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return run_construct(g, ca);
    if (*detect) return run_detect(g, da);
    if (*bound) return run_bound(g, ba);
    if (*search) return run_search(g, sa);
    if (*verify) return run_verify(g, va);
    if (*experiment) return run_experiment(g, ea);
  } catch (const Failure& f) {
    std::cerr << "error (" << tp_status_name(f.status) << "): " << f.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

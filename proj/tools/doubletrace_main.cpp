// doubletrace: command-line surface over the library. Emits JSON on stdout
// (machine interface); diagnostics and optional human-readable tables go to
// stderr. Exit codes: 0 success, 2 parse/validation error, 3 budget exceeded,
// 4 evaluator disagreement under --method both, 1 unexpected failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "doubletrace/doubletrace.hpp"

namespace {

using doubletrace::BigInt;
using doubletrace::BraidWord;
using doubletrace::FiniteGroup;
using nlohmann::json;

struct disagreement_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string group_spec;
  std::string group_spec_b;  // screen only
  std::string braid_text;
  int strands = 0;
  std::string method = "fast";
  long long budget = doubletrace::kDefaultStateBudget;
  int threads = 0;
  std::string out_path;
  std::string format = "json";
  int lens_n = 1;
  std::string presentation;
  std::string battery_path;
  std::string perm_p, perm_q;
  int perm_size = 0;
  int smith_m = 0;
  std::vector<int> orbit_args;
};

long long budget_default_from_env() {
  const char* env = std::getenv("DOUBLETRACE_BUDGET");
  if (env == nullptr || *env == '\0') return doubletrace::kDefaultStateBudget;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw doubletrace::parse_error(std::string("DOUBLETRACE_BUDGET is not a positive integer: '") +
                                   env + "'");
  }
}

// Human-readable rendering of the output JSON, for --format table.
void print_table(const json& j, std::ostream& os, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        os << prefix << key << ":\n";
        print_table(value, os, prefix + "  ");
      } else {
        os << prefix << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        print_table(item, os, prefix + "  ");
        os << prefix << "  -\n";
      } else {
        os << prefix << "- " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

void emit(const json& j, const CliConfig& cfg) {
  const std::string text = j.dump(2) + "\n";
  if (!cfg.out_path.empty()) {
    std::ofstream out(cfg.out_path);
    if (!out) throw doubletrace::parse_error("cannot write output file '" + cfg.out_path + "'");
    out << text;
  } else {
    std::cout << text;
  }
  if (cfg.format == "table") print_table(j, std::cerr);
}

json run_tau(const CliConfig& cfg) {
  const FiniteGroup g = doubletrace::parse_group_spec(cfg.group_spec);
  const BraidWord b = doubletrace::parse_braid(cfg.braid_text, cfg.strands);
  const int threads = doubletrace::resolve_thread_count(cfg.threads);

  const auto start = std::chrono::steady_clock::now();
  BigInt tau;
  if (cfg.method == "fast") {
    tau = doubletrace::tau_fast(g, b, cfg.budget, threads);
  } else if (cfg.method == "brute") {
    tau = doubletrace::tau_brute(g, b, cfg.budget, threads);
  } else if (cfg.method == "both") {
    tau = doubletrace::tau_fast(g, b, cfg.budget, threads);
    const BigInt check = doubletrace::tau_brute(g, b, cfg.budget, threads);
    if (tau != check)
      throw disagreement_error("evaluators disagree: fast = " + tau.str() +
                               ", brute = " + check.str());
  } else {
    throw doubletrace::parse_error("unknown method '" + cfg.method + "' (fast|brute|both)");
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  return {{"command", "tau"},
          {"group", cfg.group_spec},
          {"braid", doubletrace::serialize_braid(b)},
          {"strands", b.strands},
          {"components", doubletrace::closure_component_count(b)},
          {"method", cfg.method},
          {"budget", cfg.budget},
          {"threads", threads},
          {"tau", tau.str()},
          {"elapsed", elapsed}};
}

json run_lens(const CliConfig& cfg) {
  const FiniteGroup g = doubletrace::parse_group_spec(cfg.group_spec);
  if (cfg.lens_n < 1) throw doubletrace::parse_error("--n must be at least 1");
  const BigInt tau = doubletrace::lens_tau_closed_form(g, cfg.lens_n);
  return {{"command", "lens"},
          {"group", cfg.group_spec},
          {"n", cfg.lens_n},
          {"braid", doubletrace::serialize_braid(doubletrace::lens_braid(cfg.lens_n))},
          {"tau", tau.str()}};
}

json run_homcount(const CliConfig& cfg) {
  const FiniteGroup g = doubletrace::parse_group_spec(cfg.group_spec);
  doubletrace::GroupPresentation pres;
  std::string resolved = cfg.presentation;
  if (std::filesystem::exists(cfg.presentation)) {
    std::ifstream in(cfg.presentation);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw doubletrace::parse_error("bad JSON in '" + cfg.presentation + "': " + e.what());
    }
    pres = doubletrace::presentation_from_json(j);
  } else {
    for (char& c : resolved) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    pres = doubletrace::preset_presentation(resolved);
  }
  const int threads = doubletrace::resolve_thread_count(cfg.threads);
  const long long count = doubletrace::count_homomorphisms(pres, g, threads);
  return {{"command", "homcount"},
          {"target", cfg.group_spec},
          {"presentation", resolved},
          {"generators", pres.generator_count},
          {"relators", static_cast<int>(pres.relators.size())},
          {"threads", threads},
          {"count", count}};
}

json run_rt(const CliConfig& cfg) {
  const FiniteGroup g = doubletrace::parse_group_spec(cfg.group_spec);
  const BraidWord b = doubletrace::parse_braid(cfg.braid_text, cfg.strands);
  const int threads = doubletrace::resolve_thread_count(cfg.threads);
  const int components = doubletrace::closure_component_count(b);
  const BigInt tau = doubletrace::tau_fast(g, b, cfg.budget, threads);
  const doubletrace::Rational value(tau, doubletrace::pow_bigint(BigInt(g.order), components + 1));
  return {{"command", "rt"},
          {"group", cfg.group_spec},
          {"braid", doubletrace::serialize_braid(b)},
          {"strands", b.strands},
          {"components", components},
          {"budget", cfg.budget},
          {"threads", threads},
          {"tau", tau.str()},
          {"value", doubletrace::rational_to_string(value)}};
}

json run_screen(const CliConfig& cfg) {
  const FiniteGroup a = doubletrace::parse_group_spec(cfg.group_spec);
  const FiniteGroup b = doubletrace::parse_group_spec(cfg.group_spec_b);
  doubletrace::ScreenConfig sc;
  sc.budget = cfg.budget;
  sc.threads = doubletrace::resolve_thread_count(cfg.threads);
  if (!cfg.battery_path.empty()) {
    std::ifstream in(cfg.battery_path);
    if (!in) throw doubletrace::parse_error("cannot open battery file '" + cfg.battery_path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw doubletrace::parse_error("bad JSON in '" + cfg.battery_path + "': " + e.what());
    }
    sc.user_words = doubletrace::battery_words_from_json(j);
  }
  const doubletrace::InvariantReport rep = doubletrace::screening_report(a, b, sc);
  return {{"command", "screen"},
          {"group_a", cfg.group_spec},
          {"group_b", cfg.group_spec_b},
          {"report", doubletrace::report_to_json(rep)}};
}

json run_perm(const CliConfig& cfg) {
  const int modes = (cfg.smith_m > 0 ? 1 : 0) + (!cfg.orbit_args.empty() ? 1 : 0) +
                    (!cfg.perm_p.empty() || !cfg.perm_q.empty() ? 1 : 0);
  if (modes != 1)
    throw doubletrace::parse_error(
        "perm needs exactly one mode: --p/--q (similarity), --smith M, or --orbits N M");

  if (cfg.smith_m > 0) {
    const doubletrace::SmithCheck s = doubletrace::smith_determinant_check(cfg.smith_m);
    return {{"command", "perm"},
            {"mode", "smith"},
            {"m", cfg.smith_m},
            {"determinant", s.determinant.str()},
            {"totient_product", s.totient_product.str()},
            {"equal", s.equal}};
  }
  if (!cfg.orbit_args.empty()) {
    if (cfg.orbit_args.size() != 2)
      throw doubletrace::parse_error("--orbits takes exactly two integers");
    const doubletrace::OrbitData o =
        doubletrace::cyclic_tensor_orbits(cfg.orbit_args[0], cfg.orbit_args[1]);
    return {{"command", "perm"},
            {"mode", "orbits"},
            {"n", cfg.orbit_args[0]},
            {"m", cfg.orbit_args[1]},
            {"orbit_count", o.orbit_count},
            {"orbit_size", o.orbit_size}};
  }
  if (cfg.perm_p.empty() || cfg.perm_q.empty())
    throw doubletrace::parse_error("similarity mode needs both --p and --q");
  doubletrace::Permutation p = doubletrace::parse_cycles(cfg.perm_p, cfg.perm_size);
  doubletrace::Permutation q = doubletrace::parse_cycles(cfg.perm_q, cfg.perm_size);
  if (p.size() != q.size()) {
    // sizes were inferred independently; pad the smaller with fixed points
    const int n = std::max(p.size(), q.size());
    p = doubletrace::parse_cycles(cfg.perm_p, n);
    q = doubletrace::parse_cycles(cfg.perm_q, n);
  }
  const doubletrace::SimilarityResult r = doubletrace::similar_as_matrices(p, q);
  json out = {{"command", "perm"}, {"mode", "similarity"}, {"p", cfg.perm_p},
              {"q", cfg.perm_q},   {"size", p.size()},     {"similar", r.similar}};
  if (r.similar) {
    out["conjugator"] = r.conjugator.images;
  } else {
    out["witness_exponent"] = r.witness_exponent;
    out["fixed_points_p_power"] = doubletrace::fixed_points(p.power(r.witness_exponent));
    out["fixed_points_q_power"] = doubletrace::fixed_points(q.power(r.witness_exponent));
  }
  return out;
}

json run_catalog() {
  json groups = json::array();
  for (const doubletrace::CatalogEntry& e : doubletrace::standard_catalog())
    groups.push_back({{"name", e.name},
                      {"order", e.group.order},
                      {"exponent", doubletrace::exponent(e.group)},
                      {"profile", doubletrace::profile_to_json(doubletrace::order_profile(e.group))}});
  return {{"command", "catalog"}, {"groups", groups}};
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Braid-action trace invariants of finite group doubles"};
  app.require_subcommand(1);

  const auto add_common = [&cfg](CLI::App* sub, bool with_budget) {
    sub->add_option("--threads", cfg.threads, "worker count (0 = all available)");
    sub->add_option("--out", cfg.out_path, "write JSON to this file instead of stdout");
    sub->add_option("--format", cfg.format, "json | table (table adds a summary on stderr)")
        ->check(CLI::IsMember({"json", "table"}));
    if (with_budget) sub->add_option("--budget", cfg.budget, "state budget for evaluators");
  };

  CLI::App* tau = app.add_subcommand("tau", "fixed-point count of a braid word's action");
  tau->add_option("-g,--group", cfg.group_spec, "group spec")->required();
  tau->add_option("-b,--braid", cfg.braid_text, "braid word, e.g. \"s1 s2^-1\"")->required();
  tau->add_option("--strands", cfg.strands, "strand count (default: inferred)");
  tau->add_option("--method", cfg.method, "fast | brute | both")
      ->check(CLI::IsMember({"fast", "brute", "both"}));
  add_common(tau, true);

  CLI::App* lens = app.add_subcommand("lens", "closed-form staircase value |G| * #{g : g^n = 1}");
  lens->add_option("-g,--group", cfg.group_spec, "group spec")->required();
  lens->add_option("--n", cfg.lens_n, "staircase length")->required();
  add_common(lens, false);

  CLI::App* hom = app.add_subcommand("homcount", "homomorphism count into a group");
  hom->add_option("--target", cfg.group_spec, "target group spec")->required();
  hom->add_option("--presentation", cfg.presentation, "preset name or presentation JSON file")
      ->required();
  add_common(hom, false);

  CLI::App* rt = app.add_subcommand("rt", "normalized closure value tau / |G|^(m+1)");
  rt->add_option("-g,--group", cfg.group_spec, "group spec")->required();
  rt->add_option("-b,--braid", cfg.braid_text, "braid word")->required();
  rt->add_option("--strands", cfg.strands, "strand count (default: inferred)");
  add_common(rt, true);

  CLI::App* screen = app.add_subcommand("screen", "pairwise invariant screening report");
  screen->add_option("--group-a", cfg.group_spec, "first group spec")->required();
  screen->add_option("--group-b", cfg.group_spec_b, "second group spec")->required();
  screen->add_option("--battery", cfg.battery_path, "JSON file with extra braid words");
  add_common(screen, true);

  CLI::App* perm = app.add_subcommand("perm", "permutation-matrix similarity and related checks");
  perm->add_option("--p", cfg.perm_p, "first permutation, cycle notation, 1-based");
  perm->add_option("--q", cfg.perm_q, "second permutation");
  perm->add_option("--size", cfg.perm_size, "degree (default: inferred)");
  perm->add_option("--smith", cfg.smith_m, "check Smith's determinant for the gcd matrix of size M");
  perm->add_option("--orbits", cfg.orbit_args, "orbit count/size of the diagonal shift on Z_N x Z_M")
      ->expected(2);
  add_common(perm, false);

  CLI::App* cat = app.add_subcommand("catalog", "list built-in groups");
  add_common(cat, false);

  try {
    cfg.budget = budget_default_from_env();
  } catch (const doubletrace::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json out;
    if (tau->parsed()) out = run_tau(cfg);
    else if (lens->parsed()) out = run_lens(cfg);
    else if (hom->parsed()) out = run_homcount(cfg);
    else if (rt->parsed()) out = run_rt(cfg);
    else if (screen->parsed()) out = run_screen(cfg);
    else if (perm->parsed()) out = run_perm(cfg);
    else out = run_catalog();
    emit(out, cfg);
    return 0;
  } catch (const disagreement_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const doubletrace::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const doubletrace::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const doubletrace::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}

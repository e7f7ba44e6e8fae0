// Command-line front end: evaluate construction expressions, query properties
// and hulls, enumerate universes, saturate families and run the sweeps.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fintop/classes.hpp"
#include "fintop/expr.hpp"
#include "fintop/io.hpp"
#include "fintop/verify.hpp"

namespace {

using namespace fintop;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Pred parse_pred(const std::string& name) {
  auto p = pred_from_name(name);
  if (!p) throw UsageError("unknown predicate '" + name + "' (all, t0, t1)");
  return *p;
}

std::string opens_text(const FinSpace& x) {
  std::string out = "[";
  bool first = true;
  for (const auto& u : sorted_opens(x)) {
    out += first ? "[" : ",[";
    first = false;
    for (std::size_t i = 0; i < u.size(); ++i) out += (i ? "," : "") + std::to_string(u[i]);
    out += "]";
  }
  return out + "]";
}

int cmd_eval(const std::string& src, bool json) {
  expr::Value v = expr::evaluate(expr::parse(src));
  const auto* x = std::get_if<FinSpace>(&v);
  if (json || !x) {
    std::cout << expr::value_json(v) << "\n";
    return kOk;
  }
  std::cout << "points: " << x->size() << "\nopens: " << opens_text(*x) << "\n";
  return kOk;
}

int cmd_check(const std::string& src, const std::string& prop_name, bool json) {
  auto prop = property_from_name(prop_name);
  if (!prop) throw UsageError("unknown property '" + prop_name + "'");
  bool value = check_property(expr::evaluate_space(src), *prop);
  if (json)
    std::cout << nlohmann::ordered_json{{"expr", src}, {"property", property_name(*prop)}, {"value", value}}.dump()
              << "\n";
  else
    std::cout << (value ? "true" : "false") << "\n";
  return value ? kOk : kFalse;
}

int cmd_hull(const std::string& kind_name, const std::vector<std::string>& args, bool json) {
  auto kind = hull_kind_from_name(kind_name);
  if (!kind) throw UsageError("unknown hull kind '" + kind_name + "' (coreflective, epireflective, bireflective)");
  if (args.size() < 2 || args[1] != "vs") throw UsageError("usage: hull KIND EXPR vs FAMILY...");
  FinSpace x = expr::evaluate_space(args[0]);
  std::vector<FinSpace> family;
  for (std::size_t i = 2; i < args.size(); ++i) family.push_back(expr::evaluate_space(args[i]));
  HullResult r = in_hull(*kind, x, family);
  if (json) {
    nlohmann::ordered_json j{{"kind", hull_kind_name(*kind)},
                             {"member", r.member},
                             {"reason", hull_reason_name(r.reason)},
                             {"certificate_maps", r.sink.size() + r.source.size()}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (r.member ? "true" : "false") << " (" << hull_reason_name(r.reason) << ", "
              << r.sink.size() + r.source.size() << " certificate maps)\n";
  }
  return r.member ? kOk : kFalse;
}

int cmd_universe(unsigned n, const std::string& pred_text, bool json) {
  auto u = universe(n, parse_pred(pred_text));
  if (json) {
    nlohmann::ordered_json j;
    j["points"] = n;
    j["predicate"] = pred_text;
    j["count"] = u.size();
    j["spaces"] = nlohmann::ordered_json::array();
    for (const FinSpace& x : u) j["spaces"].push_back(space_to_json(x));
    std::cout << j.dump() << "\n";
  } else {
    std::cout << u.size() << " spaces with " << n << " points\n";
    for (const FinSpace& x : u) std::cout << opens_text(x) << "\n";
  }
  return kOk;
}

int cmd_saturate(const std::vector<std::string>& seeds_src, const std::string& rules_text, unsigned bound,
                 unsigned copies, const std::string& pred_text, bool json) {
  auto rules = rules_from_names(rules_text);
  if (!rules) throw UsageError("unknown rule in '" + rules_text + "'");
  std::vector<FinSpace> seeds;
  for (const auto& s : seeds_src) seeds.push_back(expr::evaluate_space(s));
  FamilyClosure f = saturate(seeds, *rules, bound, copies, parse_pred(pred_text));
  if (json) {
    std::cout << closure_json(f) << "\n";
    return kOk;
  }
  HeredityReport h = heredity_report(f);
  std::cout << f.members.size() << " members (rules " << rules_names(f.rules) << ", bound " << bound << ", copies "
            << copies << ", " << pred_name(f.pred) << ")\n"
            << "closed under prime factors: " << (h.pf_closed ? "yes" : "no") << "\n"
            << "hereditary: " << (h.hereditary ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_verify(const std::string& suite, unsigned bound, std::uint64_t seed, bool json) {
  const auto& names = verify::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  verify::Report r = verify::run_suite(suite, verify::Options{bound, seed});
  std::cout << (json ? r.json() + "\n" : r.text());
  return r.ok() ? kOk : kFalse;
}

int cmd_dot(const std::string& src) {
  std::cout << to_dot(expr::evaluate_space(src), src);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite topological spaces: constructions, hulls and exhaustive checks"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string src, prop, kind, pred = "all", rules = "all", suite;
  std::vector<std::string> rest;
  unsigned n = 0, bound = 0, sat_bound = 6, copies = 3;
  std::uint64_t seed = 20240601;

  auto* eval = app.add_subcommand("eval", "evaluate an expression");
  eval->add_option("expr", src, "expression")->required();

  auto* check = app.add_subcommand("check", "test a property (exit 1 when false)");
  check->add_option("expr", src)->required();
  check->add_option("property", prop,
                    "T0, T1, connected, locally_connected, zero_dimensional, totally_disconnected, discrete, "
                    "indiscrete")
      ->required();

  auto* hull = app.add_subcommand("hull", "hull membership: hull KIND EXPR vs FAMILY...");
  hull->add_option("kind", kind)->required();
  hull->add_option("args", rest)->required();

  auto* uni = app.add_subcommand("universe", "list spaces with exactly N points");
  uni->add_option("n", n)->required();
  uni->add_option("--pred", pred, "all, t0 or t1");

  auto* sat = app.add_subcommand("saturate", "closure of seed spaces under rules");
  sat->add_option("seeds", rest)->required();
  sat->add_option("--rules", rules, "comma list of subspace, prime_factor, quotient, all");
  sat->add_option("--bound", sat_bound, "point bound");
  sat->add_option("--copies", copies, "summands per quotient");
  sat->add_option("--pred", pred, "all, t0 or t1");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite)->required();
  ver->add_option("--bound", bound, "override the suite's default bound");
  ver->add_option("--seed", seed, "seed for randomized sweeps");

  auto* dot = app.add_subcommand("export-dot", "specialization order as a DOT Hasse diagram");
  dot->add_option("expr", src)->required();

  for (auto* sub : {eval, check, hull, uni, sat, ver, dot}) sub->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(src, json);
    if (*check) return cmd_check(src, prop, json);
    if (*hull) return cmd_hull(kind, rest, json);
    if (*uni) return cmd_universe(n, pred, json);
    if (*sat) return cmd_saturate(rest, rules, sat_bound, copies, pred, json);
    if (*ver) return cmd_verify(suite, bound, seed, json);
    if (*dot) return cmd_dot(src);
  } catch (const expr::SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

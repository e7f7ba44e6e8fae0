#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fintop/classes.hpp"

namespace fintop::verify {

struct Report {
  explicit Report(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;     // informational lines
  std::vector<std::string> failed;    // first few failing cases
  bool ok() const { return failures == 0; }
  void fail(const std::string& what);
  void merge(const Report& other);
  std::string json() const;
  std::string text() const;
};

struct Options {
  unsigned bound = 0;  // 0: the suite's own default
  std::uint64_t seed = 20240601;
};

const std::vector<std::string>& suite_names();
/// Throws BadArgument for an unknown suite.
Report run_suite(const std::string& name, const Options& opt = {});

// Individual sweeps, also used directly by the acceptance harness.
Report prime_decomposition_sweep(unsigned bound);
Report retraction_sweep(unsigned bound);
Report pinch_order_sweep(unsigned bound);
Report pinch_quotient_sweep(unsigned bound);
Report heredity_sweep(unsigned seed_points, unsigned bound, unsigned copies);
Report t0_arrow_sweep(unsigned bound);
Report r0_membership_sweep(unsigned seed_points, unsigned bound, unsigned copies);
Report initial_fiber_sweep(unsigned bound);
Report tower_sweep(unsigned prime_points);
Report lmp_sweep(unsigned bound);
Report partition_p_sweep(unsigned bound);
Report excof_sweep(std::uint64_t seed, unsigned instances, unsigned max_f);
Report fincof_law_sweep(std::uint64_t seed, unsigned cases);
Report finite_mod_map_sweep(std::uint64_t seed, unsigned cases);

/// The rule sets swept for heredity: {q}, {pf,q}, {sub,q}, all.
const std::vector<unsigned>& swept_rule_sets();

/// Distinct saturated closures over every subset of universe_upto(seed_points, pred).
struct ClosureSweep {
  std::vector<FamilyClosure> closures;
  std::size_t seed_sets = 0;
};
const ClosureSweep& closure_sweep(unsigned rules, Pred pred, unsigned seed_points, unsigned bound, unsigned copies);

}  // namespace fintop::verify

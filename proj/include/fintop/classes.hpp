#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fintop/constructions.hpp"

namespace fintop {

/// Ambient category for family-level checks.
enum class Pred { All, T0, T1 };

bool satisfies(const FinSpace& x, Pred pred);
std::optional<Pred> pred_from_name(const std::string& name);
const char* pred_name(Pred pred);

struct T0Reflection {
  FinSpace rx;
  SpaceMap arrow;  // x ↦ class of x; classes numbered by first member
};
T0Reflection t0_reflection(const FinSpace& x);

enum class HullKind { Coreflective, Epireflective, Bireflective };
enum class HullReason { Member, NotMember, EmptyFamily };

std::optional<HullKind> hull_kind_from_name(const std::string& name);
const char* hull_kind_name(HullKind kind);
const char* hull_reason_name(HullReason reason);

struct HullResult {
  bool member = false;
  HullReason reason = HullReason::NotMember;
  /// Coreflective: maps D_i → X that refined the final topology.
  std::vector<Sink> sink;
  /// Epi/bireflective: maps X → D_i that refined the initial topology.
  std::vector<Source> source;
};

/// Coreflective: X is a quotient of a sum of D-spaces iff the final topology
/// of the sink of all continuous maps D_i → X equals X. Any witnessing
/// quotient of a sum is a subfamily of that sink, and enlarging a sink only
/// coarsens its final topology, which never drops below X.
/// Epi/bireflective: the source of all continuous maps X → D_i is initial
/// (and jointly injective for the epireflective hull).
HullResult in_hull(HullKind kind, const FinSpace& x, const std::vector<FinSpace>& d);

/// X satisfies the predicate and lies in the coreflective hull of D.
bool in_ad_hull(const FinSpace& x, const std::vector<FinSpace>& d, Pred pred);

/// Homeomorphism classes with exactly n points (n ≤ 7), canonical forms in
/// ascending order.
std::vector<FinSpace> universe(unsigned n, Pred pred = Pred::All);
/// All classes with 1..n points, plus the empty space first if requested.
std::vector<FinSpace> universe_upto(unsigned n, Pred pred = Pred::All, bool include_empty = false);

inline constexpr unsigned kMaxUniverse = 7;

enum Rule : unsigned {
  kSubspaceRule = 1,
  kPrimeFactorRule = 2,
  kQuotientRule = 4,
  kAllRules = 7,
};

std::optional<unsigned> rules_from_names(const std::string& csv);
std::string rules_names(unsigned rules);

struct FamilyClosure {
  std::vector<FinSpace> members;  // canonical, ascending
  std::vector<FinSpace> seeds;    // canonical, ascending
  unsigned rules = 0;
  unsigned point_bound = 0;
  unsigned sum_copy_bound = 0;
  Pred pred = Pred::All;
  bool saturated = false;

  /// Membership of any space, up to homeomorphism.
  bool contains(const FinSpace& x) const;
  bool contains_canonical(const FinSpace& c) const;
};

/// Fixed point of the enabled rules, keeping spaces with 1..point_bound
/// points that satisfy the predicate.
FamilyClosure saturate(const std::vector<FinSpace>& seeds, unsigned rules, unsigned point_bound,
                       unsigned sum_copy_bound, Pred pred);
/// saturate(base.seeds ∪ {extra}) computed from an existing fixed point.
FamilyClosure saturate_with(const FamilyClosure& base, const FinSpace& extra);

std::string closure_json(const FamilyClosure& f);

struct HeredityReport {
  bool pf_closed = false;
  bool hereditary = false;
  bool lemma_forward_ok = false;
  /// Whether the converse sweep ran: needs a hereditary family containing S.
  bool converse_applies = false;
  bool converse_ok_on_small = true;
  /// Prime factors X_a missing from the family, for members with 2|X| ≤ bound.
  std::vector<std::pair<FinSpace, Point>> counterexamples;
};
HeredityReport heredity_report(const FamilyClosure& f);

/// For a surjective initial f with f⁻¹(b) = {a}: builds g : Y → X choosing
/// fibre points with g(b) = a, and checks g : Y_b → X_a continuous,
/// f∘g = id and X_a ∈ CH(Y_b).
bool verify_initial_singleton_fiber(const SpaceMap& f, Point b);

/// Every continuous self-map is constant or the identity.
bool strongly_rigid(const FinSpace& x);

}  // namespace fintop

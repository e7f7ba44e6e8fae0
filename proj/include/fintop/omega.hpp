#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fintop/space.hpp"

namespace fintop::omega {

using Nat = std::uint64_t;

/// A finite subset of ω, or the complement of one. `support` is the listed
/// finite set in both modes.
class FinCofSet {
 public:
  enum class Mode { Finite, Cofinite };

  FinCofSet() = default;
  FinCofSet(Mode mode, std::vector<Nat> support);
  static FinCofSet finite(std::vector<Nat> pts) { return {Mode::Finite, std::move(pts)}; }
  static FinCofSet cofinite(std::vector<Nat> excluded) { return {Mode::Cofinite, std::move(excluded)}; }
  static FinCofSet empty() { return finite({}); }
  static FinCofSet all() { return cofinite({}); }

  Mode mode() const { return mode_; }
  bool is_finite() const { return mode_ == Mode::Finite; }
  bool is_cofinite() const { return mode_ == Mode::Cofinite; }
  const std::vector<Nat>& support() const { return support_; }

  bool contains(Nat x) const;
  FinCofSet complement() const { return {is_finite() ? Mode::Cofinite : Mode::Finite, support_}; }
  bool subset_of(const FinCofSet& other) const;

  friend FinCofSet operator|(const FinCofSet& a, const FinCofSet& b);
  friend FinCofSet operator&(const FinCofSet& a, const FinCofSet& b);
  friend bool operator==(const FinCofSet&, const FinCofSet&) = default;

  std::string str() const;

 private:
  Mode mode_ = Mode::Finite;
  std::vector<Nat> support_;  // sorted, unique
};

/// ω ∪ {∗} where ∗ is the only non-isolated point; V ∋ ∗ is open iff V ∩ ω
/// lies in the filter. The filter is either the cofinite filter (C_ω) or the
/// principal filter of a cofinite set G.
struct SymbolicPrimeSpace {
  enum class Filter { Cofinite, Principal };
  Filter filter = Filter::Cofinite;
  FinCofSet generator = FinCofSet::all();

  static SymbolicPrimeSpace c_omega() { return {}; }
  static SymbolicPrimeSpace principal(const FinCofSet& g);
  bool in_filter(const FinCofSet& v) const;
  friend bool operator==(const SymbolicPrimeSpace&, const SymbolicPrimeSpace&) = default;
};

/// ω with the cofinite topology.
struct CofiniteSpace {};

bool is_open(const SymbolicPrimeSpace& p, const FinCofSet& v, bool contains_star);
bool is_open(const CofiniteSpace&, const FinCofSet& v);
/// Q's filter is contained in P's filter.
bool finer_than_sym(const SymbolicPrimeSpace& p, const SymbolicPrimeSpace& q);

/// A self-map of ω (∪ {∗}) given by an explicit table on an initial segment
/// [0, K) and x ↦ x + shift beyond it. Gaps in the table passed to the
/// constructor are filled by the shift rule.
class FiniteModMap {
 public:
  FiniteModMap() = default;
  FiniteModMap(const std::map<Nat, Nat>& table, std::int64_t shift = 0,
               std::optional<Nat> star_image = std::nullopt);

  static FiniteModMap identity() { return {}; }
  /// Sends every point of s to `target` and fixes the rest. A cofinite s
  /// cannot be represented.
  static FiniteModMap collapse(const FinCofSet& s, Nat target);

  Nat operator()(Nat x) const;
  /// nullopt means ∗ ↦ ∗.
  std::optional<Nat> star_image() const { return star_image_; }
  std::int64_t shift() const { return shift_; }
  const std::vector<Nat>& table() const { return table_; }

  /// {x ∈ ω : f(x) ∈ s}
  FinCofSet preimage(const FinCofSet& s) const;
  /// f(d) when f is injective on d.
  std::optional<FinCofSet> injective_image(const FinCofSet& d) const;

  friend bool operator==(const FiniteModMap&, const FiniteModMap&) = default;

 private:
  std::vector<Nat> table_;
  std::int64_t shift_ = 0;
  std::optional<Nat> star_image_;
};

/// g ∘ f
FiniteModMap compose(const FiniteModMap& g, const FiniteModMap& f);

bool is_continuous_sym(const FiniteModMap& f, const SymbolicPrimeSpace& p, const SymbolicPrimeSpace& q);
bool is_continuous_sym(const FiniteModMap& f, const CofiniteSpace& p, const CofiniteSpace& q);

struct ExcofWitness {
  FiniteModMap f;
  bool continuous = false;
  bool fixes_b = false;
  bool preimage_is_v = false;     // f⁻¹(ω∖{u}) = ω∖F
  bool bijective_on_v = false;    // f maps ω∖F bijectively onto ω∖{u}
  bool collapses_f = false;       // f(F) ⊆ {u}
  bool all() const { return continuous && fixes_b && preimage_is_v && bijective_on_v && collapses_f; }
};

/// On the cofinite space: a continuous f with f(b) = b, f(F) = {u} and f
/// restricted to ω∖F a bijection onto ω∖{u}.
ExcofWitness excof_witness(const std::vector<Nat>& f_set, Nat u, Nat b);

}  // namespace fintop::omega

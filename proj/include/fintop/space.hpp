#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fintop {

using Point = unsigned;
using PointSet = std::uint64_t;

/// Hard capacity of a point set. Open families are only materialised for
/// much smaller spaces (see FinSpace::opens).
inline constexpr unsigned kMaxPoints = 64;

constexpr PointSet singleton(Point x) { return PointSet{1} << x; }
constexpr PointSet full_set(unsigned n) {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}
constexpr bool has(PointSet s, Point x) { return ((s >> x) & 1u) != 0; }
constexpr bool subset_of(PointSet a, PointSet b) { return (a & ~b) == 0; }
inline unsigned count(PointSet s) { return static_cast<unsigned>(std::popcount(s)); }
inline Point lowest(PointSet s) { return static_cast<Point>(std::countr_zero(s)); }

std::vector<Point> members(PointSet s);
PointSet make_set(const std::vector<Point>& pts);

enum class ErrorCode {
  NotATopology,
  CarrierMismatch,
  NotSurjective,
  TooLarge,
  BadSize,
  BadArgument,
  BNotClosed,
  NotPrimeSubspace,
  ArityMismatch,
  WitnessInvalid,
  MemberOutsideA,
  BoundTooSmall,
  NotSaturated,
  PreconditionFailed,
  BadParameters,
  UnsupportedMap,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Specialization preorder of a finite space. Orientation: x <= y iff
/// x lies in the closure of {y}, equivalently every open set containing x
/// also contains y. `above[x]` is the set {y : x <= y}.
struct Preorder {
  std::vector<PointSet> above;

  unsigned size() const { return static_cast<unsigned>(above.size()); }
  bool leq(Point x, Point y) const { return has(above[x], y); }
  bool reflexive() const;
  bool transitive() const;
  bool antisymmetric() const;
};

/// Reflexive-transitive closure of a relation given as successor sets.
std::vector<PointSet> rt_closure(std::vector<PointSet> rel);

/// A topology on {0..n-1}. Every finite topology is Alexandrov, so the space
/// is stored as its minimal open neighbourhoods; the open sets are exactly
/// the up-closed subsets and are enumerated on demand.
class FinSpace {
 public:
  FinSpace() = default;

  /// `up[x]` must contain x and be a valid (reflexive, transitive) preorder.
  static FinSpace from_min_nbhds(std::vector<PointSet> up);
  static FinSpace discrete(unsigned n);
  static FinSpace indiscrete(unsigned n);

  unsigned size() const { return static_cast<unsigned>(up_.size()); }
  PointSet carrier() const { return full_set(size()); }

  PointSet min_nbhd(Point x) const { return up_[x]; }
  PointSet closure(Point x) const { return down_[x]; }
  const std::vector<PointSet>& min_nbhds() const { return up_; }
  const std::vector<PointSet>& closures() const { return down_; }
  bool leq(Point x, Point y) const { return has(up_[x], y); }

  bool is_open(PointSet s) const;
  bool is_closed(PointSet s) const;
  /// Smallest open set containing s.
  PointSet open_hull(PointSet s) const;
  /// Smallest closed set containing s.
  PointSet closed_hull(PointSet s) const;

  /// All open sets in increasing numeric order. Throws TooLarge beyond
  /// kMaxOpenEnumeration points.
  std::vector<PointSet> opens() const;
  /// Calls fn(U) for every open U with `must` ⊆ U, without materialising.
  template <class Fn>
  void for_each_open_containing(PointSet must, Fn&& fn) const;

  Preorder preorder() const { return Preorder{up_}; }

  friend bool operator==(const FinSpace&, const FinSpace&) = default;
  friend std::strong_ordering operator<=>(const FinSpace& a, const FinSpace& b);

  static constexpr unsigned kMaxOpenEnumeration = 24;

 private:
  std::vector<PointSet> up_;
  std::vector<PointSet> down_;
};

struct FinSpaceHash {
  std::size_t operator()(const FinSpace& s) const noexcept;
};

/// A point function between two finite spaces. Nothing about continuity is
/// assumed; see classify_map.
class SpaceMap {
 public:
  SpaceMap(FinSpace dom, FinSpace cod, std::vector<Point> assignment);

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  const std::vector<Point>& assignment() const { return assignment_; }
  Point operator()(Point x) const { return assignment_[x]; }

  PointSet image(PointSet s) const;
  PointSet preimage(PointSet s) const;

 private:
  FinSpace dom_;
  FinSpace cod_;
  std::vector<Point> assignment_;
};

SpaceMap compose(const SpaceMap& g, const SpaceMap& f);
SpaceMap identity_map(const FinSpace& x);

template <class Fn>
void FinSpace::for_each_open_containing(PointSet must, Fn&& fn) const {
  const unsigned n = size();
  PointSet base = open_hull(must & carrier());
  // One representative per equivalence class outside `base`, ordered so that
  // strictly larger points (smaller min neighbourhoods) come first.
  std::vector<Point> sorted;
  PointSet seen = base;
  for (Point x = 0; x < n; ++x) {
    if (has(seen, x)) continue;
    seen |= up_[x] & down_[x];
    sorted.push_back(x);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [this](Point a, Point b) { return count(up_[a]) < count(up_[b]); });
  struct Frame {
    std::size_t idx;
    PointSet current;
  };
  std::vector<Frame> stack{{0, base}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.idx == sorted.size()) {
      fn(f.current);
      continue;
    }
    Point x = sorted[f.idx];
    stack.push_back({f.idx + 1, f.current});
    PointSet with = f.current | up_[x];
    // x can be added only if everything above it (outside its class) is in.
    if (subset_of(up_[x] & ~down_[x], f.current)) stack.push_back({f.idx + 1, with});
  }
}

}  // namespace fintop

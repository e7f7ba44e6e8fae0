#pragma once

#include <optional>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

enum class Completion { Reject, Generate };

/// Builds a space from an explicit open family. With Completion::Generate the
/// family is treated as a subbase; otherwise anything short of a topology
/// (missing ∅ or the whole set, not closed under ∪/∩) is rejected.
FinSpace make_space(unsigned n, const std::vector<PointSet>& opens,
                    Completion completion = Completion::Reject);

struct Structure {
  Preorder preorder;
  std::vector<PointSet> min_nbhd;
  std::vector<PointSet> closure;
};

Structure structure(const FinSpace& x);

enum class Property {
  T0,
  T1,
  Connected,
  LocallyConnected,
  ZeroDimensional,
  TotallyDisconnected,
  Discrete,
  Indiscrete,
};

bool check_property(const FinSpace& x, Property prop);
std::optional<Property> property_from_name(const std::string& name);
const char* property_name(Property prop);

/// Connected components of the subspace on `s`.
std::vector<PointSet> components(const FinSpace& x, PointSet s);

/// X ≺ Y: same carrier and X carries the finer topology.
bool finer_than(const FinSpace& x, const FinSpace& y);

struct Embedded {
  FinSpace space;
  SpaceMap inclusion;
};
/// Subspace on `s`, points renumbered in increasing order.
Embedded subspace(const FinSpace& x, PointSet s);

struct Summed {
  FinSpace space;
  std::vector<SpaceMap> injections;
};
Summed sum(const std::vector<FinSpace>& parts);

struct Product {
  FinSpace space;
  SpaceMap first;
  SpaceMap second;
};
/// Carrier is row-major: (x, y) ↦ x * Y.size() + y.
Product product(const FinSpace& x, const FinSpace& y);

struct Sink {
  FinSpace domain;
  std::vector<Point> map;
};
struct Source {
  std::vector<Point> map;
  FinSpace codomain;
};

/// Finest topology on {0..n-1} making every sink map continuous.
FinSpace final_topology(unsigned n, const std::vector<Sink>& sinks);
/// Coarsest topology on {0..n-1} making every source map continuous.
FinSpace initial_topology(unsigned n, const std::vector<Source>& sources);

struct Quotient {
  FinSpace space;
  SpaceMap map;
};
Quotient quotient_by_map(const FinSpace& x, const std::vector<Point>& f, unsigned target_size);

struct MapFlags {
  bool continuous = false;
  bool quotient = false;
  bool initial = false;
  bool embedding = false;
  bool retraction = false;
  bool surjective = false;
  bool injective = false;
};

bool is_continuous(const SpaceMap& f);
MapFlags classify_map(const SpaceMap& f);
/// A continuous s with f∘s = id, if one exists. Exhaustive over all sections.
std::optional<SpaceMap> find_section(const SpaceMap& f);

/// Visits every continuous map dom → cod. The callback returns false to stop.
template <class Fn>
void for_each_continuous_map(const FinSpace& dom, const FinSpace& cod, Fn&& fn);

// Named small spaces.
FinSpace sierpinski();
FinSpace point_space();

template <class Fn>
void for_each_continuous_map(const FinSpace& dom, const FinSpace& cod, Fn&& fn) {
  const unsigned n = dom.size();
  const unsigned m = cod.size();
  std::vector<Point> f(n, 0);
  if (n == 0) {
    fn(f);
    return;
  }
  if (m == 0) return;
  // Candidate images for x given the choices for 0..x-1.
  std::vector<PointSet> allowed(n + 1, 0);
  auto candidates = [&](Point x) {
    PointSet c = cod.carrier();
    PointSet before = dom.closure(x) & full_set(x);
    PointSet after = dom.min_nbhd(x) & full_set(x);
    for (Point y : members(before)) c &= cod.min_nbhd(f[y]);
    for (Point y : members(after)) c &= cod.closure(f[y]);
    return c;
  };
  Point x = 0;
  allowed[0] = candidates(0);
  while (true) {
    if (allowed[x] == 0) {
      if (x == 0) return;
      --x;
      continue;
    }
    Point y = lowest(allowed[x]);
    allowed[x] &= allowed[x] - 1;
    f[x] = y;
    if (x + 1 == n) {
      if (!fn(static_cast<const std::vector<Point>&>(f))) return;
      continue;
    }
    ++x;
    allowed[x] = candidates(x);
  }
}

}  // namespace fintop

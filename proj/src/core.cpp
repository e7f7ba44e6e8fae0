#include "fintop/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fintop {

namespace {

void require_size(unsigned n) {
  if (n > kMaxPoints)
    throw Error(ErrorCode::TooLarge,
                std::to_string(n) + " points exceeds the " + std::to_string(kMaxPoints) + "-point limit");
}

// Renumbers the members of `s` (a subset of `within`) to consecutive indices.
PointSet compress(PointSet s, PointSet within) {
  PointSet out = 0;
  unsigned i = 0;
  for (Point x : members(within)) {
    if (has(s, x)) out |= singleton(i);
    ++i;
  }
  return out;
}

}  // namespace

FinSpace make_space(unsigned n, const std::vector<PointSet>& opens, Completion completion) {
  require_size(n);
  const PointSet all = full_set(n);
  std::set<PointSet> family;
  for (PointSet u : opens) {
    if (!subset_of(u, all)) throw Error(ErrorCode::BadArgument, "open set outside {0..n-1}");
    family.insert(u);
  }
  if (completion == Completion::Reject) {
    if (!family.count(0)) throw Error(ErrorCode::NotATopology, "empty set missing");
    if (!family.count(all)) throw Error(ErrorCode::NotATopology, "whole set missing");
    for (PointSet a : family)
      for (PointSet b : family) {
        if (!family.count(a | b)) throw Error(ErrorCode::NotATopology, "not closed under union");
        if (!family.count(a & b)) throw Error(ErrorCode::NotATopology, "not closed under intersection");
      }
  }
  std::vector<PointSet> up(n, all);
  for (PointSet u : family)
    for (Point x : members(u)) up[x] &= u;
  return FinSpace::from_min_nbhds(std::move(up));
}

Structure structure(const FinSpace& x) {
  return Structure{x.preorder(), x.min_nbhds(), x.closures()};
}

std::vector<PointSet> components(const FinSpace& x, PointSet s) {
  std::vector<PointSet> out;
  PointSet left = s & x.carrier();
  while (left != 0) {
    PointSet comp = singleton(lowest(left));
    PointSet frontier = comp;
    while (frontier != 0) {
      PointSet next = 0;
      for (Point p : members(frontier)) next |= (x.min_nbhd(p) | x.closure(p)) & left;
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

namespace {

bool connected_subset(const FinSpace& x, PointSet s) { return components(x, s).size() <= 1; }

bool locally_connected(const FinSpace& x) {
  // Literal definition: every open neighbourhood U of p contains a connected
  // open neighbourhood of p. Larger spaces use the minimal-neighbourhood form.
  const unsigned n = x.size();
  if (n > 10) {
    for (Point p = 0; p < n; ++p)
      if (!connected_subset(x, x.min_nbhd(p))) return false;
    return true;
  }
  const auto all_opens = x.opens();
  for (Point p = 0; p < n; ++p) {
    for (PointSet u : all_opens) {
      if (!has(u, p)) continue;
      bool found = false;
      for (PointSet v : all_opens)
        if (has(v, p) && subset_of(v, u) && connected_subset(x, v)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

}  // namespace

bool check_property(const FinSpace& x, Property prop) {
  const unsigned n = x.size();
  switch (prop) {
    case Property::T0: {
      std::set<PointSet> seen(x.closures().begin(), x.closures().end());
      return seen.size() == n;
    }
    case Property::T1:
    case Property::Discrete:
      for (Point p = 0; p < n; ++p)
        if (x.min_nbhd(p) != singleton(p)) return false;
      return true;
    case Property::Indiscrete:
      for (Point p = 0; p < n; ++p)
        if (x.min_nbhd(p) != x.carrier()) return false;
      return true;
    case Property::Connected:
      return connected_subset(x, x.carrier());
    case Property::LocallyConnected:
      return locally_connected(x);
    case Property::ZeroDimensional:
      for (Point p = 0; p < n; ++p)
        if (!x.is_closed(x.min_nbhd(p))) return false;
      return true;
    case Property::TotallyDisconnected:
      for (PointSet c : components(x, x.carrier()))
        if (count(c) != 1) return false;
      return true;
  }
  return false;
}

namespace {
constexpr std::pair<Property, const char*> kPropertyNames[] = {
    {Property::T0, "T0"},
    {Property::T1, "T1"},
    {Property::Connected, "connected"},
    {Property::LocallyConnected, "locally_connected"},
    {Property::ZeroDimensional, "zero_dimensional"},
    {Property::TotallyDisconnected, "totally_disconnected"},
    {Property::Discrete, "discrete"},
    {Property::Indiscrete, "indiscrete"},
};
}  // namespace

std::optional<Property> property_from_name(const std::string& name) {
  for (auto [p, s] : kPropertyNames) {
    std::string lower = s;
    std::string probe = name;
    std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
    std::transform(probe.begin(), probe.end(), probe.begin(), ::tolower);
    if (lower == probe) return p;
  }
  return std::nullopt;
}

const char* property_name(Property prop) {
  for (auto [p, s] : kPropertyNames)
    if (p == prop) return s;
  return "?";
}

bool finer_than(const FinSpace& x, const FinSpace& y) {
  if (x.size() != y.size()) throw Error(ErrorCode::CarrierMismatch, "finer_than needs equal carriers");
  for (Point p = 0; p < x.size(); ++p)
    if (!subset_of(x.min_nbhd(p), y.min_nbhd(p))) return false;
  return true;
}

Embedded subspace(const FinSpace& x, PointSet s) {
  if (!subset_of(s, x.carrier())) throw Error(ErrorCode::BadArgument, "subspace: set outside carrier");
  std::vector<PointSet> up;
  std::vector<Point> incl;
  for (Point p : members(s)) {
    up.push_back(compress(x.min_nbhd(p) & s, s));
    incl.push_back(p);
  }
  FinSpace sub = FinSpace::from_min_nbhds(std::move(up));
  SpaceMap inclusion(sub, x, std::move(incl));
  return Embedded{std::move(sub), std::move(inclusion)};
}

Summed sum(const std::vector<FinSpace>& parts) {
  unsigned total = 0;
  for (const auto& p : parts) total += p.size();
  require_size(total);
  std::vector<PointSet> up;
  up.reserve(total);
  std::vector<unsigned> offsets;
  unsigned off = 0;
  for (const auto& p : parts) {
    offsets.push_back(off);
    for (PointSet u : p.min_nbhds()) up.push_back(u << off);
    off += p.size();
  }
  FinSpace space = FinSpace::from_min_nbhds(std::move(up));
  std::vector<SpaceMap> inj;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<Point> a(parts[i].size());
    std::iota(a.begin(), a.end(), offsets[i]);
    inj.emplace_back(parts[i], space, std::move(a));
  }
  return Summed{std::move(space), std::move(inj)};
}

Product product(const FinSpace& x, const FinSpace& y) {
  const unsigned nx = x.size(), ny = y.size();
  require_size(nx * ny);
  std::vector<PointSet> up(nx * ny, 0);
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b)
      for (Point a2 : members(x.min_nbhd(a)))
        for (Point b2 : members(y.min_nbhd(b))) up[a * ny + b] |= singleton(a2 * ny + b2);
  FinSpace space = FinSpace::from_min_nbhds(std::move(up));
  std::vector<Point> p1(nx * ny), p2(nx * ny);
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b) {
      p1[a * ny + b] = a;
      p2[a * ny + b] = b;
    }
  SpaceMap first(space, x, std::move(p1));
  SpaceMap second(space, y, std::move(p2));
  return Product{std::move(space), std::move(first), std::move(second)};
}

FinSpace final_topology(unsigned n, const std::vector<Sink>& sinks) {
  require_size(n);
  // V is open iff every preimage is up-closed, i.e. iff V is up-closed for the
  // relation pushed forward along all maps.
  std::vector<PointSet> rel(n, 0);
  for (const auto& s : sinks) {
    if (s.map.size() != s.domain.size()) throw Error(ErrorCode::BadArgument, "sink map size");
    for (Point u = 0; u < s.domain.size(); ++u) {
      if (s.map[u] >= n) throw Error(ErrorCode::BadArgument, "sink map value outside carrier");
      for (Point v : members(s.domain.min_nbhd(u))) rel[s.map[u]] |= singleton(s.map[v]);
    }
  }
  return FinSpace::from_min_nbhds(rt_closure(std::move(rel)));
}

FinSpace initial_topology(unsigned n, const std::vector<Source>& sources) {
  require_size(n);
  std::vector<PointSet> up(n, full_set(n));
  for (const auto& s : sources) {
    if (s.map.size() != n) throw Error(ErrorCode::BadArgument, "source map size");
    for (Point v : s.map)
      if (v >= s.codomain.size()) throw Error(ErrorCode::BadArgument, "source map value outside codomain");
    for (Point x = 0; x < n; ++x) {
      PointSet nb = 0;
      for (Point y = 0; y < n; ++y)
        if (s.codomain.leq(s.map[x], s.map[y])) nb |= singleton(y);
      up[x] &= nb;
    }
  }
  return FinSpace::from_min_nbhds(std::move(up));
}

Quotient quotient_by_map(const FinSpace& x, const std::vector<Point>& f, unsigned target_size) {
  if (f.size() != x.size()) throw Error(ErrorCode::BadArgument, "quotient map size");
  PointSet hit = 0;
  for (Point v : f) {
    if (v >= target_size) throw Error(ErrorCode::BadArgument, "quotient map value outside target");
    hit |= singleton(v);
  }
  if (hit != full_set(target_size)) throw Error(ErrorCode::NotSurjective, "quotient map misses a point");
  FinSpace q = final_topology(target_size, {Sink{x, f}});
  SpaceMap m(x, q, f);
  return Quotient{std::move(q), std::move(m)};
}

bool is_continuous(const SpaceMap& f) {
  const FinSpace& d = f.dom();
  for (Point x = 0; x < d.size(); ++x)
    for (Point y : members(d.min_nbhd(x)))
      if (!f.cod().leq(f(x), f(y))) return false;
  return true;
}

std::optional<SpaceMap> find_section(const SpaceMap& f) {
  const FinSpace& dom = f.dom();
  const FinSpace& cod = f.cod();
  const unsigned m = cod.size();
  std::vector<PointSet> fiber(m, 0);
  for (Point x = 0; x < dom.size(); ++x) fiber[f(x)] |= singleton(x);
  for (Point y = 0; y < m; ++y)
    if (fiber[y] == 0) return std::nullopt;
  std::optional<SpaceMap> found;
  // A section is a continuous map cod → dom landing in the fibres.
  std::vector<Point> s(m, 0);
  std::vector<PointSet> allowed(m + 1, 0);
  auto candidates = [&](Point y) {
    PointSet c = fiber[y];
    for (Point z : members(cod.closure(y) & full_set(y))) c &= dom.min_nbhd(s[z]);
    for (Point z : members(cod.min_nbhd(y) & full_set(y))) c &= dom.closure(s[z]);
    return c;
  };
  if (m == 0) return SpaceMap(cod, dom, {});
  Point y = 0;
  allowed[0] = candidates(0);
  while (true) {
    if (allowed[y] == 0) {
      if (y == 0) return std::nullopt;
      --y;
      continue;
    }
    s[y] = lowest(allowed[y]);
    allowed[y] &= allowed[y] - 1;
    if (y + 1 == m) return SpaceMap(cod, dom, s);
    ++y;
    allowed[y] = candidates(y);
  }
}

MapFlags classify_map(const SpaceMap& f) {
  MapFlags flags;
  const FinSpace& dom = f.dom();
  const FinSpace& cod = f.cod();
  PointSet hit = f.image(dom.carrier());
  flags.surjective = hit == cod.carrier();
  std::set<Point> distinct(f.assignment().begin(), f.assignment().end());
  flags.injective = distinct.size() == dom.size();
  flags.continuous = is_continuous(f);

  bool initial = true;
  for (Point x = 0; x < dom.size() && initial; ++x)
    for (Point y = 0; y < dom.size(); ++y)
      if (dom.leq(x, y) != cod.leq(f(x), f(y))) {
        initial = false;
        break;
      }
  flags.initial = initial;
  flags.embedding = flags.initial && flags.injective;

  if (flags.surjective && flags.continuous) {
    FinSpace pushed = final_topology(cod.size(), {Sink{dom, f.assignment()}});
    flags.quotient = pushed == cod;
  }
  if (flags.continuous && flags.surjective) flags.retraction = find_section(f).has_value();
  return flags;
}

FinSpace sierpinski() { return FinSpace::from_min_nbhds({0b11, 0b10}); }

FinSpace point_space() { return FinSpace::discrete(1); }

}  // namespace fintop

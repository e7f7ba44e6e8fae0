#include "fintop/space.hpp"

#include <functional>

namespace fintop {

std::vector<Point> members(PointSet s) {
  std::vector<Point> out;
  out.reserve(count(s));
  while (s != 0) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

PointSet make_set(const std::vector<Point>& pts) {
  PointSet s = 0;
  for (Point p : pts) {
    if (p >= kMaxPoints) throw Error(ErrorCode::TooLarge, "point index " + std::to_string(p));
    s |= singleton(p);
  }
  return s;
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::BNotClosed: return "BNotClosed";
    case ErrorCode::NotPrimeSubspace: return "NotPrimeSubspace";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::MemberOutsideA: return "MemberOutsideA";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::UnsupportedMap: return "UnsupportedMap";
  }
  return "Unknown";
}

bool Preorder::reflexive() const {
  for (Point x = 0; x < size(); ++x)
    if (!leq(x, x)) return false;
  return true;
}

bool Preorder::transitive() const {
  for (Point x = 0; x < size(); ++x)
    for (Point y : members(above[x]))
      if (!subset_of(above[y], above[x])) return false;
  return true;
}

bool Preorder::antisymmetric() const {
  for (Point x = 0; x < size(); ++x)
    for (Point y : members(above[x]))
      if (y != x && leq(y, x)) return false;
  return true;
}

std::vector<PointSet> rt_closure(std::vector<PointSet> rel) {
  const auto n = static_cast<Point>(rel.size());
  for (Point x = 0; x < n; ++x) rel[x] |= singleton(x);
  for (Point k = 0; k < n; ++k)
    for (Point i = 0; i < n; ++i)
      if (has(rel[i], k)) rel[i] |= rel[k];
  return rel;
}

FinSpace FinSpace::from_min_nbhds(std::vector<PointSet> up) {
  if (up.size() > kMaxPoints)
    throw Error(ErrorCode::TooLarge, std::to_string(up.size()) + " points exceeds capacity");
  const auto n = static_cast<unsigned>(up.size());
  const PointSet all = full_set(n);
  for (Point x = 0; x < n; ++x) {
    if (!has(up[x], x) || !subset_of(up[x], all))
      throw Error(ErrorCode::NotATopology, "minimal neighbourhood of point " + std::to_string(x));
  }
  Preorder check{up};
  if (!check.transitive()) throw Error(ErrorCode::NotATopology, "neighbourhoods are not transitive");
  FinSpace s;
  s.down_.assign(n, 0);
  for (Point x = 0; x < n; ++x)
    for (Point y : members(up[x])) s.down_[y] |= singleton(x);
  s.up_ = std::move(up);
  return s;
}

FinSpace FinSpace::discrete(unsigned n) {
  std::vector<PointSet> up(n);
  for (Point x = 0; x < n; ++x) up[x] = singleton(x);
  return from_min_nbhds(std::move(up));
}

FinSpace FinSpace::indiscrete(unsigned n) {
  if (n > kMaxPoints) throw Error(ErrorCode::TooLarge, "indiscrete space");
  return from_min_nbhds(std::vector<PointSet>(n, full_set(n)));
}

bool FinSpace::is_open(PointSet s) const {
  if (!subset_of(s, carrier())) return false;
  for (Point x : members(s))
    if (!subset_of(up_[x], s)) return false;
  return true;
}

bool FinSpace::is_closed(PointSet s) const {
  return subset_of(s, carrier()) && is_open(carrier() & ~s);
}

PointSet FinSpace::open_hull(PointSet s) const {
  PointSet out = 0;
  for (Point x : members(s & carrier())) out |= up_[x];
  return out;
}

PointSet FinSpace::closed_hull(PointSet s) const {
  PointSet out = 0;
  for (Point x : members(s & carrier())) out |= down_[x];
  return out;
}

std::vector<PointSet> FinSpace::opens() const {
  if (size() > kMaxOpenEnumeration)
    throw Error(ErrorCode::TooLarge, "open family of a " + std::to_string(size()) + "-point space");
  std::vector<PointSet> out;
  for_each_open_containing(0, [&](PointSet u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering operator<=>(const FinSpace& a, const FinSpace& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.up_ <=> b.up_;
}

std::size_t FinSpaceHash::operator()(const FinSpace& s) const noexcept {
  std::size_t h = s.size();
  for (PointSet u : s.min_nbhds()) h = h * 1000003u ^ std::hash<PointSet>{}(u);
  return h;
}

SpaceMap::SpaceMap(FinSpace dom, FinSpace cod, std::vector<Point> assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)), assignment_(std::move(assignment)) {
  if (assignment_.size() != dom_.size())
    throw Error(ErrorCode::BadArgument, "map assignment size differs from domain size");
  for (Point y : assignment_)
    if (y >= cod_.size()) throw Error(ErrorCode::BadArgument, "map value outside codomain");
}

PointSet SpaceMap::image(PointSet s) const {
  PointSet out = 0;
  for (Point x : members(s & dom_.carrier())) out |= singleton(assignment_[x]);
  return out;
}

PointSet SpaceMap::preimage(PointSet s) const {
  PointSet out = 0;
  for (Point x = 0; x < dom_.size(); ++x)
    if (has(s, assignment_[x])) out |= singleton(x);
  return out;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!(f.cod() == g.dom())) throw Error(ErrorCode::CarrierMismatch, "compose: codomain/domain differ");
  std::vector<Point> a(f.dom().size());
  for (Point x = 0; x < a.size(); ++x) a[x] = g(f(x));
  return SpaceMap(f.dom(), g.cod(), std::move(a));
}

SpaceMap identity_map(const FinSpace& x) {
  std::vector<Point> a(x.size());
  for (Point p = 0; p < a.size(); ++p) a[p] = p;
  return SpaceMap(x, x, std::move(a));
}

}  // namespace fintop

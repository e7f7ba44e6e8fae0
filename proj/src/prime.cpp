#include "fintop/prime.hpp"

namespace fintop {

PointSet accumulation_points(const FinSpace& x) {
  PointSet acc = 0;
  for (Point p = 0; p < x.size(); ++p)
    if (x.min_nbhd(p) != singleton(p)) acc |= singleton(p);
  return acc;
}

std::optional<PrimeView> is_prime(const FinSpace& x) {
  PointSet acc = accumulation_points(x);
  if (count(acc) != 1) return std::nullopt;
  return PrimeView{x, lowest(acc)};
}

FinSpace prime_factor(const FinSpace& x, Point a) {
  if (a >= x.size()) throw Error(ErrorCode::BadArgument, "prime_factor: point outside carrier");
  std::vector<PointSet> up(x.size());
  for (Point p = 0; p < x.size(); ++p) up[p] = p == a ? x.min_nbhd(a) : singleton(p);
  return FinSpace::from_min_nbhds(std::move(up));
}

PrimeDecomposition prime_decomposition(const FinSpace& x) {
  const unsigned n = x.size();
  if (n == 0) throw Error(ErrorCode::BadArgument, "prime_decomposition of the empty space");
  std::vector<FinSpace> factors;
  factors.reserve(n);
  for (Point a = 0; a < n; ++a) factors.push_back(prime_factor(x, a));
  Summed s = sum(factors);
  std::vector<Point> f(s.space.size());
  for (Point i = 0; i < f.size(); ++i) f[i] = i % n;
  SpaceMap m(s.space, x, std::move(f));
  return PrimeDecomposition{std::move(s.space), std::move(m)};
}

SpaceMap prime_retraction(const PrimeView& p, PointSet s) {
  if (!has(s, p.acc)) throw Error(ErrorCode::PreconditionFailed, "subspace must contain the accumulation point");
  if (!subset_of(s, p.space.carrier())) throw Error(ErrorCode::BadArgument, "subset outside carrier");
  Embedded sub = subspace(p.space, s);
  if (!is_prime(sub.space)) throw Error(ErrorCode::NotPrimeSubspace, "accumulation point isolated in the subspace");
  // position of each kept point in the renumbered subspace
  std::vector<Point> index(p.space.size(), 0);
  Point i = 0;
  for (Point q : members(s)) index[q] = i++;
  std::vector<Point> f(p.space.size());
  for (Point q = 0; q < p.space.size(); ++q) f[q] = has(s, q) ? index[q] : index[p.acc];
  return SpaceMap(p.space, sub.space, std::move(f));
}

FinSpace gen(GenKind kind, unsigned n) {
  switch (kind) {
    case GenKind::S:
      return sierpinski();
    case GenKind::D:
      if (n < 1) throw Error(ErrorCode::BadSize, "D(n) needs n >= 1");
      if (n > kMaxPoints) throw Error(ErrorCode::TooLarge, "D(n)");
      return FinSpace::discrete(n);
    case GenKind::I:
      if (n < 1) throw Error(ErrorCode::BadSize, "I(n) needs n >= 1");
      if (n > kMaxPoints) throw Error(ErrorCode::TooLarge, "I(n)");
      return FinSpace::indiscrete(n);
    case GenKind::C: {
      if (n < 1) throw Error(ErrorCode::BadSize, "C(n) needs n >= 1");
      if (n + 1 > kMaxPoints) throw Error(ErrorCode::TooLarge, "C(n)");
      std::vector<PointSet> up(n + 1);
      for (Point p = 0; p < n; ++p) up[p] = singleton(p);
      // the smallest tail {n-1, n}
      up[n] = singleton(n - 1) | singleton(n);
      return FinSpace::from_min_nbhds(std::move(up));
    }
    case GenKind::B: {
      if (n < 1) throw Error(ErrorCode::BadSize, "B(n) needs n >= 1");
      if (n + 1 > kMaxPoints) throw Error(ErrorCode::TooLarge, "B(n)");
      std::vector<PointSet> up(n + 1);
      for (Point p = 0; p <= n; ++p) up[p] = full_set(n + 1) & ~full_set(p);
      return FinSpace::from_min_nbhds(std::move(up));
    }
  }
  throw Error(ErrorCode::BadArgument, "unknown generator");
}

}  // namespace fintop

#include "fintop/constructions.hpp"

#include <map>
#include <stdexcept>

namespace fintop {

namespace {

void require_closed_point(const FinSpace& y, Point b) {
  if (b >= y.size()) throw Error(ErrorCode::BadArgument, "point b outside Y");
  if (!y.is_closed(singleton(b))) throw Error(ErrorCode::BNotClosed, "{b} is not closed in Y");
}

FinSpace triangle_base(const FinSpace& x, const FinSpace& y, Point b) {
  const unsigned nx = x.size(), ny = y.size();
  if (nx * ny > kMaxPoints) throw Error(ErrorCode::TooLarge, "pinch space carrier");
  std::vector<Sink> sinks;
  std::vector<Point> f(nx);
  for (Point p = 0; p < nx; ++p) f[p] = p * ny + b;
  sinks.push_back(Sink{x, std::move(f)});
  for (Point a = 0; a < nx; ++a) {
    std::vector<Point> g(ny);
    for (Point q = 0; q < ny; ++q) g[q] = a * ny + q;
    sinks.push_back(Sink{y, std::move(g)});
  }
  return final_topology(nx * ny, sinks);
}

FinSpace dtriangle_base(const FinSpace& x, const FinSpace& y, Point b) {
  const unsigned nx = x.size(), ny = y.size();
  if (nx * ny > kMaxPoints) throw Error(ErrorCode::TooLarge, "pinch space carrier");
  FinSpace prod = product(x, y).space;
  std::vector<Source> sources;
  for (Point a = 0; a < nx; ++a) {
    std::vector<Point> h(nx * ny);
    for (Point p = 0; p < nx; ++p)
      for (Point q = 0; q < ny; ++q) h[p * ny + q] = p == a ? p * ny + q : p * ny + b;
    sources.push_back(Source{std::move(h), prod});
  }
  return initial_topology(nx * ny, sources);
}

PinchSpace make_pinch(const FinSpace& x, const FinSpace& y, Point b, PinchKind kind) {
  require_closed_point(y, b);
  FinSpace tri = triangle_base(x, y, b);
  FinSpace dtri = dtriangle_base(x, y, b);
  if (!finer_than(tri, dtri)) throw std::logic_error("triangle is not finer than dtriangle");
  return PinchSpace{kind == PinchKind::Triangle ? std::move(tri) : std::move(dtri), x, y, b, kind};
}

}  // namespace

PinchSpace triangle(const FinSpace& x, const FinSpace& y, Point b) {
  return make_pinch(x, y, b, PinchKind::Triangle);
}

PinchSpace dtriangle(const FinSpace& x, const FinSpace& y, Point b) {
  return make_pinch(x, y, b, PinchKind::DTriangle);
}

Pinched pinched_subspace(const FinSpace& x, const FinSpace& y, Point a, Point b) {
  if (a >= x.size()) throw Error(ErrorCode::BadArgument, "point a outside X");
  PinchSpace tri = triangle(x, y, b);
  const unsigned ny = y.size();
  PointSet keep = singleton(a * ny + b);
  for (Point p = 0; p < x.size(); ++p)
    for (Point q = 0; q < ny; ++q)
      if (p != a && q != b) keep |= singleton(p * ny + q);
  Embedded sub = subspace(tri.base, keep);
  std::vector<Point> proj;
  for (Point i : members(keep)) proj.push_back(i / ny);
  SpaceMap q(sub.space, prime_factor(x, a), std::move(proj));
  return Pinched{std::move(sub.space), keep, std::move(q)};
}

ASum a_sum(const PrimeView& a, const std::vector<Pointed>& parts) {
  const FinSpace& base = a.space;
  std::vector<Point> isolated;
  for (Point p = 0; p < base.size(); ++p)
    if (p != a.acc) isolated.push_back(p);
  if (parts.size() != isolated.size())
    throw Error(ErrorCode::ArityMismatch, "a_sum needs one part per isolated point (" +
                                              std::to_string(isolated.size()) + "), got " +
                                              std::to_string(parts.size()));
  std::vector<FinSpace> summands{base};
  for (const auto& part : parts) {
    if (part.base >= part.space.size()) throw Error(ErrorCode::BadArgument, "a_sum base point outside part");
    summands.push_back(part.space);
  }
  Summed s = sum(summands);
  std::vector<Point> phi(s.space.size());
  Point next = base.size();
  for (Point p = 0; p < base.size(); ++p) phi[p] = p;
  std::vector<PointSet> bristles;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PointSet bristle = singleton(isolated[i]);
    for (Point p = 0; p < parts[i].space.size(); ++p) {
      Point in_sum = s.injections[i + 1](p);
      if (p == parts[i].base) {
        phi[in_sum] = isolated[i];
      } else {
        phi[in_sum] = next;
        bristle |= singleton(next);
        ++next;
      }
    }
    bristles.push_back(bristle);
  }
  Quotient q = quotient_by_map(s.space, phi, next);
  return ASum{std::move(q.space), std::move(q.map), std::move(bristles)};
}

unsigned tower_size(unsigned prime_size, unsigned n) {
  unsigned long long total = 1, term = 1;
  for (unsigned k = 1; k <= n; ++k) {
    term *= prime_size - 1;
    total += term;
    if (total > (1ull << 32)) return ~0u;
  }
  return static_cast<unsigned>(total);
}

Tower iterate_a(const PrimeView& a, unsigned n) {
  if (n < 1) throw Error(ErrorCode::BadSize, "tower needs n >= 1");
  if (tower_size(a.space.size(), n) > kTowerMaxPoints)
    throw Error(ErrorCode::TooLarge, "A_" + std::to_string(n) + " exceeds " + std::to_string(kTowerMaxPoints) +
                                         " points");
  Tower t{a, {a.space}, {}, {}};
  std::vector<std::vector<Point>> addr(a.space.size());
  std::vector<Point> isolated;
  for (Point p = 0; p < a.space.size(); ++p)
    if (p != a.acc) {
      addr[p] = {p};
      isolated.push_back(p);
    }
  t.addresses.push_back(addr);

  for (unsigned k = 1; k < n; ++k) {
    const FinSpace& prev = t.levels.back();
    const auto& prev_addr = t.addresses.back();
    std::vector<Pointed> parts(isolated.size(), Pointed{prev, a.acc});
    ASum s = a_sum(a, parts);
    std::vector<std::vector<Point>> next_addr(s.space.size());
    for (Point p = 0; p < a.space.size(); ++p) next_addr[p] = addr[p];
    Point label = a.space.size();
    for (Point b : isolated)
      for (Point p = 0; p < prev.size(); ++p) {
        if (p == a.acc) continue;
        std::vector<Point> w{b};
        w.insert(w.end(), prev_addr[p].begin(), prev_addr[p].end());
        next_addr[label++] = std::move(w);
      }

    std::map<std::vector<Point>, Point> where;
    for (Point p = 0; p < next_addr.size(); ++p) where[next_addr[p]] = p;
    std::vector<Point> emb(prev.size());
    for (Point p = 0; p < prev.size(); ++p) emb[p] = where.at(prev_addr[p]);
    SpaceMap e(prev, s.space, std::move(emb));
    if (!classify_map(e).embedding) throw std::logic_error("tower level does not embed into the next level");
    t.embeddings.push_back(std::move(e));
    t.levels.push_back(std::move(s.space));
    t.addresses.push_back(std::move(next_addr));
  }
  return t;
}

LevelBaseReport check_level_base(const Tower& t) {
  const FinSpace& top = t.levels.back();
  const auto& addr = t.addresses.back();
  const Point a = t.a_space.acc;
  const unsigned n = top.size();

  std::map<std::vector<Point>, Point> where;
  for (Point p = 0; p < n; ++p) where[addr[p]] = p;
  std::vector<Point> parent(n, a);
  for (Point p = 0; p < n; ++p)
    if (addr[p].size() > 1) parent[p] = where.at(std::vector<Point>(addr[p].begin(), addr[p].end() - 1));
  auto prefix_closed = [&](PointSet u) {
    for (Point p : members(u))
      if (!has(u, parent[p])) return false;
    return true;
  };

  LevelBaseReport r;
  std::vector<PointSet> nbhds;
  top.for_each_open_containing(singleton(a), [&](PointSet u) {
    nbhds.push_back(u);
    if (prefix_closed(u)) r.base.push_back(u);
  });
  std::sort(r.base.begin(), r.base.end());

  r.local_base = true;
  r.all_satisfy_eq1 = true;
  for (PointSet v : nbhds) {
    bool contains_member = false;
    for (PointSet u : r.base)
      if (subset_of(u, v)) {
        contains_member = true;
        break;
      }
    r.local_base = r.local_base && contains_member;

    // U_1 = V ∩ A_1, U_{k+1} = V ∩ A_{k+1} ∩ (U_k ∪ U_k × (A∖{a}))
    PointSet level_k = 0;
    for (Point p = 0; p < n; ++p)
      if (addr[p].size() <= 1) level_k |= singleton(p);
    PointSet u = v & level_k;
    for (std::size_t len = 2; len <= t.levels.size(); ++len) {
      PointSet grown = u;
      for (Point p = 0; p < n; ++p)
        if (addr[p].size() == len && has(u, parent[p]) && has(v, p)) grown |= singleton(p);
      u = grown;
    }
    bool ok = has(u, a) && subset_of(u, v) && top.is_open(u) && prefix_closed(u);
    r.all_satisfy_eq1 = r.all_satisfy_eq1 && ok;
  }
  r.all_clopen = true;
  for (PointSet u : r.base) r.all_clopen = r.all_clopen && top.is_closed(u);
  return r;
}

std::optional<PWitness> p_predicate(const FinSpace& y, Point b, const FinSpace& z) {
  require_closed_point(y, b);
  const PointSet target = y.min_nbhd(b);
  std::optional<PWitness> out;
  for_each_continuous_map(y, z, [&](const std::vector<Point>& f) {
    SpaceMap m(y, z, f);
    PointSet u0 = z.open_hull(m.image(target));
    if (m.preimage(u0) == target) {
      out = PWitness{f[b], u0, std::move(m)};
      return false;
    }
    return true;
  });
  return out;
}

bool verify_lmp_source(const FinSpace& x, const FinSpace& y, Point b, const FinSpace& z, const PWitness& w) {
  require_closed_point(y, b);
  const SpaceMap& f = w.f;
  if (!(f.dom() == y) || !(f.cod() == z) || !is_continuous(f) || f(b) != w.a || !z.is_open(w.u0) ||
      !has(w.u0, w.a) || f.preimage(w.u0) != y.min_nbhd(b))
    throw Error(ErrorCode::WitnessInvalid, "witness does not establish P(b, Y, Z)");

  // Base at b: every open neighbourhood realised as g⁻¹(U0) with g(b) = a.
  std::map<PointSet, std::vector<Point>> realiser;
  for_each_continuous_map(y, z, [&](const std::vector<Point>& g) {
    if (g[b] != w.a) return true;
    PointSet v = 0;
    for (Point q = 0; q < y.size(); ++q)
      if (has(w.u0, g[q])) v |= singleton(q);
    realiser.emplace(v, g);
    return true;
  });
  std::vector<const std::vector<Point>*> base;
  for (const auto& [v, g] : realiser) base.push_back(&g);

  const unsigned nx = x.size(), ny = y.size(), n = nx * ny;
  double combos = 1;
  for (unsigned i = 0; i < nx; ++i) combos *= static_cast<double>(base.size());
  if (combos > 65536) throw Error(ErrorCode::TooLarge, "index family X → base is too large to enumerate");

  PinchSpace tri = triangle(x, y, b);
  PinchSpace dtri = dtriangle(x, y, b);
  std::vector<Source> sources;
  std::vector<Point> p(n), q(n);
  for (Point i = 0; i < n; ++i) {
    p[i] = i / ny;
    q[i] = i;
  }
  sources.push_back(Source{p, x});
  sources.push_back(Source{q, dtri.base});
  // h_i(x, y) = g_{f_i(x)}(y) for every choice function f_i : X → base
  std::vector<std::size_t> choice(nx, 0);
  while (true) {
    std::vector<Point> h(n);
    for (Point px = 0; px < nx; ++px)
      for (Point py = 0; py < ny; ++py) h[px * ny + py] = (*base[choice[px]])[py];
    sources.push_back(Source{std::move(h), z});
    std::size_t i = 0;
    while (i < nx && ++choice[i] == base.size()) choice[i++] = 0;
    if (i == nx) break;
  }

  for (const auto& s : sources)
    if (!is_continuous(SpaceMap(tri.base, s.codomain, s.map))) return false;
  if (!(initial_topology(n, sources) == tri.base)) return false;
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) {
      bool separated = false;
      for (const auto& s : sources)
        if (s.map[u] != s.map[v]) {
          separated = true;
          break;
        }
      if (!separated) return false;
    }
  return true;
}

}  // namespace fintop

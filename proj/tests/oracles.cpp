#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

namespace {

// A space as a membership table over all 2^n subsets.
struct Table {
  unsigned n = 0;
  std::vector<char> open;
};

Table table_of(const FinSpace& x) {
  Table t{x.size(), std::vector<char>(std::size_t{1} << x.size(), 0)};
  for (PointSet u : opens(x)) t.open[u] = 1;
  return t;
}

Family family_of(const Table& t) {
  Family f;
  for (PointSet u = 0; u < t.open.size(); ++u)
    if (t.open[u]) f.push_back(u);
  return f;
}

PointSet relabel_set(PointSet s, const std::vector<unsigned>& perm) {
  PointSet out = 0;
  for (unsigned i = 0; i < perm.size(); ++i)
    if ((s >> i) & 1u) out |= PointSet{1} << perm[i];
  return out;
}

PointSet preimage(const std::vector<Point>& f, PointSet v) {
  PointSet out = 0;
  for (unsigned i = 0; i < f.size(); ++i)
    if ((v >> f[i]) & 1u) out |= PointSet{1} << i;
  return out;
}

// Calls fn on every nondecreasing index sequence of length 0..max_len over [0, k).
template <class Fn>
bool any_multiset(unsigned k, unsigned max_len, Fn&& fn) {
  std::vector<unsigned> seq;
  auto rec = [&](auto&& self, unsigned from) -> bool {
    if (fn(seq)) return true;
    if (seq.size() == max_len) return false;
    for (unsigned i = from; i < k; ++i) {
      seq.push_back(i);
      if (self(self, i)) return true;
      seq.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

Family opens(const FinSpace& x) {
  Family f;
  const unsigned n = x.size();
  for (PointSet u = 0; u < (PointSet{1} << n); ++u) {
    bool ok = true;
    for (Point p = 0; p < n && ok; ++p)
      if ((u >> p) & 1u) ok = (x.min_nbhd(p) & ~u) == 0;
    if (ok) f.push_back(u);
  }
  return f;
}

Family generated(unsigned n, const Family& subbase) {
  std::set<PointSet> s(subbase.begin(), subbase.end());
  s.insert(0);
  s.insert((PointSet{1} << n) - 1);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<PointSet> cur(s.begin(), s.end());
    for (PointSet a : cur)
      for (PointSet b : cur) grew |= s.insert(a | b).second | s.insert(a & b).second;
  }
  return {s.begin(), s.end()};
}

bool is_topology(unsigned n, const Family& f) {
  std::set<PointSet> s(f.begin(), f.end());
  if (!s.count(0) || !s.count((PointSet{1} << n) - 1)) return false;
  for (PointSet a : s)
    for (PointSet b : s)
      if (!s.count(a | b) || !s.count(a & b)) return false;
  return true;
}

Family canonical_family(unsigned n, const Family& f) {
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Family best;
  do {
    Family g;
    for (PointSet u : f) g.push_back(relabel_set(u, perm));
    std::sort(g.begin(), g.end());
    if (best.empty() || g < best) best = g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<Family> universe_by_relations(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> off;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<Family> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    std::vector<PointSet> up(n);
    for (unsigned i = 0; i < n; ++i) up[i] = PointSet{1} << i;
    for (unsigned k = 0; k < off.size(); ++k)
      if ((bits >> k) & 1u) up[off[k].first] |= PointSet{1} << off[k].second;
    bool transitive = true;
    for (unsigned i = 0; i < n && transitive; ++i)
      for (unsigned j = 0; j < n && transitive; ++j)
        if ((up[i] >> j) & 1u) transitive = (up[j] & ~up[i]) == 0;
    if (!transitive) continue;
    Family f;
    for (PointSet u = 0; u < (PointSet{1} << n); ++u) {
      bool ok = true;
      for (unsigned p = 0; p < n && ok; ++p)
        if ((u >> p) & 1u) ok = (up[p] & ~u) == 0;
      if (ok) f.push_back(u);
    }
    classes.insert(canonical_family(n, f));
  }
  return {classes.begin(), classes.end()};
}

std::vector<Family> universe_by_families(unsigned n) {
  const PointSet whole = (PointSet{1} << n) - 1;
  std::vector<PointSet> inner;
  for (PointSet u = 1; u < whole; ++u) inner.push_back(u);
  std::set<Family> classes;
  if (n == 0) return {Family{0}};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << inner.size()); ++bits) {
    Family f{0};
    for (unsigned k = 0; k < inner.size(); ++k)
      if ((bits >> k) & 1u) f.push_back(inner[k]);
    f.push_back(whole);
    if (is_topology(n, f)) classes.insert(canonical_family(n, f));
  }
  return {classes.begin(), classes.end()};
}

Family final_opens(unsigned n, const std::vector<RawSink>& sinks) {
  std::vector<Table> tables;
  for (const RawSink& s : sinks) tables.push_back(table_of(s.domain));
  Family f;
  for (PointSet v = 0; v < (PointSet{1} << n); ++v) {
    bool ok = true;
    for (std::size_t i = 0; i < sinks.size() && ok; ++i) ok = tables[i].open[preimage(sinks[i].map, v)];
    if (ok) f.push_back(v);
  }
  return f;
}

bool quotient_of_sums(const FinSpace& x, const std::vector<FinSpace>& d, unsigned max_summands) {
  const Family target = opens(x);
  const unsigned m = x.size();
  std::vector<Table> parts;
  for (const FinSpace& s : d) parts.push_back(table_of(s));
  return any_multiset(static_cast<unsigned>(d.size()), max_summands, [&](const std::vector<unsigned>& seq) {
    if (seq.empty()) return m == 0;
    // the sum as a table: U open iff every trace is open in its part
    unsigned n = 0;
    std::vector<unsigned> offset;
    for (unsigned i : seq) {
      offset.push_back(n);
      n += parts[i].n;
    }
    Table sum{n, std::vector<char>(std::size_t{1} << n, 1)};
    for (PointSet u = 0; u < sum.open.size(); ++u)
      for (std::size_t k = 0; k < seq.size(); ++k) {
        const Table& p = parts[seq[k]];
        if (!p.open[(u >> offset[k]) & ((PointSet{1} << p.n) - 1)]) sum.open[u] = 0;
      }
    std::vector<Point> f(n, 0);
    while (true) {
      PointSet image = 0;
      for (Point p : f) image |= PointSet{1} << p;
      if (image == (PointSet{1} << m) - 1) {
        Family q;
        for (PointSet v = 0; v < (PointSet{1} << m); ++v)
          if (sum.open[preimage(f, v)]) q.push_back(v);
        if (q == target) return true;
      }
      std::size_t i = 0;
      while (i < n && ++f[i] == m) f[i++] = 0;
      if (i == n) return false;
    }
  });
}

bool subspace_of_product(const FinSpace& x, const std::vector<FinSpace>& d, unsigned max_factors) {
  const Family target = opens(x);
  const unsigned m = x.size();
  std::vector<Family> factor_opens;
  for (const FinSpace& s : d) factor_opens.push_back(opens(s));
  return any_multiset(static_cast<unsigned>(d.size()), max_factors, [&](const std::vector<unsigned>& seq) {
    unsigned size = 1;
    for (unsigned i : seq) size *= d[i].size();
    if (size < m) return false;
    auto coord = [&](unsigned tuple, std::size_t k) {
      for (std::size_t j = 0; j < k; ++j) tuple /= d[seq[j]].size();
      return tuple % d[seq[k]].size();
    };
    // injective assignments of tuples to the points of x
    std::vector<unsigned> f;
    auto rec = [&](auto&& self) -> bool {
      if (f.size() == m) {
        Family sub;
        for (std::size_t k = 0; k < seq.size(); ++k)
          for (PointSet u : factor_opens[seq[k]]) {
            PointSet pre = 0;
            for (Point p = 0; p < m; ++p)
              if ((u >> coord(f[p], k)) & 1u) pre |= PointSet{1} << p;
            sub.push_back(pre);
          }
        return generated(m, sub) == target;
      }
      for (unsigned t = 0; t < size; ++t) {
        if (std::find(f.begin(), f.end(), t) != f.end()) continue;
        f.push_back(t);
        if (self(self)) return true;
        f.pop_back();
      }
      return false;
    };
    return rec(rec);
  });
}

std::vector<std::vector<Point>> continuous_maps(const FinSpace& dom, const FinSpace& cod) {
  std::vector<std::vector<Point>> out;
  const unsigned n = dom.size(), m = cod.size();
  if (m == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  const Table td = table_of(dom);
  const Family oc = opens(cod);
  std::vector<Point> f(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < oc.size() && ok; ++i) ok = td.open[preimage(f, oc[i])];
    if (ok) out.push_back(f);
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) return out;
  }
}

bool p_all_bases(const FinSpace& y, Point b, const FinSpace& z) {
  Family nbhds;
  for (PointSet u : opens(y))
    if ((u >> b) & 1u) nbhds.push_back(u);
  const auto maps = continuous_maps(y, z);
  const Family oz = opens(z);
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << nbhds.size()); ++pick) {
    Family base;
    for (std::size_t i = 0; i < nbhds.size(); ++i)
      if ((pick >> i) & 1u) base.push_back(nbhds[i]);
    bool local_base = std::all_of(nbhds.begin(), nbhds.end(), [&](PointSet n) {
      return std::any_of(base.begin(), base.end(), [&](PointSet v) { return (v & ~n) == 0; });
    });
    if (!local_base) continue;
    for (Point a = 0; a < z.size(); ++a)
      for (PointSet u0 : oz) {
        if (!((u0 >> a) & 1u)) continue;
        bool all = std::all_of(base.begin(), base.end(), [&](PointSet v) {
          return std::any_of(maps.begin(), maps.end(),
                             [&](const std::vector<Point>& f) { return f[b] == a && preimage(f, u0) == v; });
        });
        if (all) return true;
      }
  }
  return false;
}

}  // namespace oracle

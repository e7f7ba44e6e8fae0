#include "fintop/classes.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include <json.hpp>

#include "fintop/canonical.hpp"
#include "fintop/io.hpp"

namespace fintop {

bool satisfies(const FinSpace& x, Pred pred) {
  switch (pred) {
    case Pred::All:
      return true;
    case Pred::T0:
      return check_property(x, Property::T0);
    case Pred::T1:
      return check_property(x, Property::T1);
  }
  return false;
}

std::optional<Pred> pred_from_name(const std::string& name) {
  if (name == "all" || name == "All") return Pred::All;
  if (name == "t0" || name == "T0") return Pred::T0;
  if (name == "t1" || name == "T1") return Pred::T1;
  return std::nullopt;
}

const char* pred_name(Pred pred) {
  switch (pred) {
    case Pred::All:
      return "all";
    case Pred::T0:
      return "t0";
    case Pred::T1:
      return "t1";
  }
  return "?";
}

T0Reflection t0_reflection(const FinSpace& x) {
  const unsigned n = x.size();
  std::vector<Point> label(n);
  std::vector<PointSet> seen;
  for (Point p = 0; p < n; ++p) {
    auto it = std::find(seen.begin(), seen.end(), x.closure(p));
    label[p] = static_cast<Point>(it - seen.begin());
    if (it == seen.end()) seen.push_back(x.closure(p));
  }
  Quotient q = quotient_by_map(x, label, static_cast<unsigned>(seen.size()));
  return T0Reflection{std::move(q.space), std::move(q.map)};
}

std::optional<HullKind> hull_kind_from_name(const std::string& name) {
  if (name == "coreflective" || name == "co") return HullKind::Coreflective;
  if (name == "epireflective" || name == "epi") return HullKind::Epireflective;
  if (name == "bireflective" || name == "bi") return HullKind::Bireflective;
  return std::nullopt;
}

const char* hull_kind_name(HullKind kind) {
  switch (kind) {
    case HullKind::Coreflective:
      return "coreflective";
    case HullKind::Epireflective:
      return "epireflective";
    case HullKind::Bireflective:
      return "bireflective";
  }
  return "?";
}

const char* hull_reason_name(HullReason reason) {
  switch (reason) {
    case HullReason::Member:
      return "member";
    case HullReason::NotMember:
      return "not-member";
    case HullReason::EmptyFamily:
      return "empty-family";
  }
  return "?";
}

namespace {

HullResult coreflective(const FinSpace& x, const std::vector<FinSpace>& d) {
  HullResult r;
  const unsigned n = x.size();
  if (n == 0) {
    r.member = true;
    r.reason = HullReason::Member;
    return r;
  }
  std::vector<PointSet> rel(n, 0);
  PointSet hit = 0;
  bool done = false;
  for (const FinSpace& m : d) {
    for_each_continuous_map(m, x, [&](const std::vector<Point>& g) {
      bool grew = false;
      for (Point u = 0; u < m.size(); ++u) {
        PointSet img = 0;
        for (Point v : members(m.min_nbhd(u))) img |= singleton(g[v]);
        if (!subset_of(img, rel[g[u]])) {
          rel[g[u]] |= img;
          grew = true;
        }
      }
      if (!grew) return true;
      r.sink.push_back(Sink{m, g});
      for (Point u = 0; u < m.size(); ++u) hit |= singleton(g[u]);
      if (hit == x.carrier() && rt_closure(rel) == x.min_nbhds()) {
        done = true;
        return false;
      }
      return true;
    });
    if (done) break;
  }
  r.member = done;
  r.reason = done ? HullReason::Member : HullReason::NotMember;
  return r;
}

HullResult reflective(const FinSpace& x, const std::vector<FinSpace>& d, bool need_injective) {
  HullResult r;
  const unsigned n = x.size();
  std::vector<PointSet> rel(n, x.carrier());
  std::vector<PointSet> sep(n, 0);
  auto finished = [&] {
    if (rel != x.min_nbhds()) return false;
    if (!need_injective) return true;
    for (Point p = 0; p < n; ++p)
      if ((sep[p] | singleton(p)) != x.carrier()) return false;
    return true;
  };
  bool done = finished();
  for (const FinSpace& m : d) {
    if (done) break;
    for_each_continuous_map(x, m, [&](const std::vector<Point>& f) {
      bool grew = false;
      for (Point p = 0; p < n; ++p) {
        PointSet keep = 0, differ = 0;
        for (Point q = 0; q < n; ++q) {
          if (m.leq(f[p], f[q])) keep |= singleton(q);
          if (f[p] != f[q]) differ |= singleton(q);
        }
        if ((rel[p] & ~keep) != 0 || (differ & ~sep[p]) != 0) grew = true;
        rel[p] &= keep;
        sep[p] |= differ;
      }
      if (!grew) return true;
      r.source.push_back(Source{f, m});
      done = finished();
      return !done;
    });
  }
  r.member = done;
  r.reason = done ? HullReason::Member : HullReason::NotMember;
  return r;
}

}  // namespace

HullResult in_hull(HullKind kind, const FinSpace& x, const std::vector<FinSpace>& d) {
  if (d.empty()) return HullResult{false, HullReason::EmptyFamily, {}, {}};
  switch (kind) {
    case HullKind::Coreflective:
      return coreflective(x, d);
    case HullKind::Epireflective:
      return reflective(x, d, true);
    case HullKind::Bireflective:
      return reflective(x, d, false);
  }
  return {};
}

bool in_ad_hull(const FinSpace& x, const std::vector<FinSpace>& d, Pred pred) {
  for (const FinSpace& m : d)
    if (!satisfies(m, pred))
      throw Error(ErrorCode::MemberOutsideA, std::string("family member fails predicate ") + pred_name(pred));
  return satisfies(x, pred) && in_hull(HullKind::Coreflective, x, d).member;
}

// Universe ---------------------------------------------------------------

namespace {

std::mutex universe_mutex;
std::vector<std::vector<FinSpace>> universe_cache;

// Adds a point p = n to every space on n points: U is the strict up-set of p
// (an open set), D its strict down-set (a closed set below all of U).
std::vector<FinSpace> extend_universe(const std::vector<FinSpace>& smaller, unsigned n) {
  std::set<FinSpace> out;
  const Point p = n - 1;
  for (const FinSpace& x : smaller) {
    x.for_each_open_containing(0, [&](PointSet u) {
      PointSet below = x.carrier();
      for (Point q : members(u)) below &= x.closure(q);
      x.for_each_open_containing(x.carrier() & ~below, [&](PointSet outside) {
        PointSet down = x.carrier() & ~outside;
        std::vector<PointSet> up(x.min_nbhds());
        for (Point q : members(down)) up[q] |= singleton(p);
        up.push_back(u | singleton(p));
        out.insert(canonical_form(FinSpace::from_min_nbhds(std::move(up))));
      });
    });
  }
  return {out.begin(), out.end()};
}

std::vector<FinSpace> universe_all(unsigned n) {
  std::lock_guard<std::mutex> lock(universe_mutex);
  if (universe_cache.empty()) {
    universe_cache.push_back({FinSpace()});
    universe_cache.push_back({FinSpace::discrete(1)});
  }
  while (universe_cache.size() <= n)
    universe_cache.push_back(
        extend_universe(universe_cache.back(), static_cast<unsigned>(universe_cache.size())));
  return universe_cache[n];
}

}  // namespace

std::vector<FinSpace> universe(unsigned n, Pred pred) {
  if (n > kMaxUniverse)
    throw Error(ErrorCode::TooLarge, "universe is enumerated up to " + std::to_string(kMaxUniverse) + " points");
  std::vector<FinSpace> out;
  for (const FinSpace& x : universe_all(n))
    if (satisfies(x, pred)) out.push_back(x);
  return out;
}

std::vector<FinSpace> universe_upto(unsigned n, Pred pred, bool include_empty) {
  std::vector<FinSpace> out;
  if (include_empty) out.push_back(FinSpace());
  for (unsigned k = 1; k <= n; ++k) {
    auto part = universe(k, pred);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Saturation -------------------------------------------------------------

std::optional<unsigned> rules_from_names(const std::string& csv) {
  unsigned rules = 0;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "all")
      rules |= kAllRules;
    else if (item == "subspace" || item == "sub")
      rules |= kSubspaceRule;
    else if (item == "prime_factor" || item == "pf")
      rules |= kPrimeFactorRule;
    else if (item == "quotient" || item == "q" || item == "bounded_quotient_of_sums")
      rules |= kQuotientRule;
    else if (!item.empty())
      return std::nullopt;
  }
  return rules;
}

std::string rules_names(unsigned rules) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if ((rules & bit) == 0) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(kSubspaceRule, "subspace");
  add(kPrimeFactorRule, "prime_factor");
  add(kQuotientRule, "bounded_quotient_of_sums");
  return out;
}

bool FamilyClosure::contains_canonical(const FinSpace& c) const {
  return std::binary_search(members.begin(), members.end(), c);
}

bool FamilyClosure::contains(const FinSpace& x) const { return contains_canonical(canonical_form(x)); }

namespace {

FinSpace from_relation(std::vector<PointSet> rel) { return FinSpace::from_min_nbhds(rt_closure(std::move(rel))); }

// A quotient of M_1 ⊔ ... ⊔ M_k factors through the images g(M_i), which are
// quotients of single members glued injectively. For k ≥ 2, gluing the first
// two images gives a space no larger than the result, so at the fixed point
// it suffices to close under single quotients and pairwise injective gluings.
class Saturator {
 public:
  Saturator(unsigned rules, unsigned bound, unsigned copies, Pred pred)
      : rules_(rules), bound_(bound), copies_(copies), pred_(pred), pending_(bound + 1) {
    if (bound <= kMaxUniverse) total_ = universe_upto(bound, pred).size();
  }

  void adopt_fixed_point(const std::vector<FinSpace>& members) {
    for (const FinSpace& m : members) {
      members_.insert(m);
      processed_.push_back(m);
    }
  }

  void add(const FinSpace& x) {
    if (full() || x.size() == 0 || x.size() > bound_) return;
    if (!seen_.insert(x.min_nbhds()).second || !satisfies(x, pred_)) return;
    FinSpace c = canonical_form(x);
    if (members_.insert(c).second) pending_[c.size()].push_back(std::move(c));
  }

  void run() {
    while (!full()) {
      auto it = std::find_if(pending_.begin(), pending_.end(), [](const auto& v) { return !v.empty(); });
      if (it == pending_.end()) break;
      FinSpace x = std::move(it->back());
      it->pop_back();
      process(x);
      processed_.push_back(std::move(x));
    }
  }

  std::vector<FinSpace> result() const { return {members_.begin(), members_.end()}; }

 private:
  bool full() const { return members_.size() == total_; }

  void process(const FinSpace& x) {
    const unsigned n = x.size();
    if (rules_ & kSubspaceRule)
      for (PointSet s = 1; s < x.carrier() && !full(); ++s) add(subspace(x, s).space);
    if (rules_ & kPrimeFactorRule)
      for (Point a = 0; a < n && !full(); ++a) add(prime_factor(x, a));
    if ((rules_ & kQuotientRule) == 0 || copies_ == 0) return;
    quotients(x);
    if (copies_ < 2) return;
    glue(x, x);
    for (const FinSpace& y : processed_) {
      if (full()) return;
      glue(x, y);
    }
  }

  // All quotients of x, via restricted growth strings.
  void quotients(const FinSpace& x) {
    const unsigned n = x.size();
    std::vector<Point> label(n, 0);
    std::function<void(Point, unsigned)> rec = [&](Point p, unsigned blocks) {
      if (full()) return;
      if (p == n) {
        if (blocks == n) return;
        std::vector<PointSet> rel(blocks, 0);
        for (Point q = 0; q < n; ++q)
          for (Point r : members(x.min_nbhd(q))) rel[label[q]] |= singleton(label[r]);
        add(from_relation(std::move(rel)));
        return;
      }
      for (Point b = 0; b <= blocks && b < n; ++b) {
        label[p] = b;
        rec(p + 1, b == blocks ? blocks + 1 : blocks);
      }
    };
    rec(0, 0);
  }

  // Every space obtained from x ⊔ y by identifying some points of y with
  // distinct points of x.
  void glue(const FinSpace& x, const FinSpace& y) {
    const unsigned p = x.size(), q = y.size();
    std::vector<Point> phi(q, 0);
    std::function<void(Point, PointSet, unsigned)> rec = [&](Point j, PointSet used, unsigned fresh) {
      if (full()) return;
      if (j == q) {
        std::vector<PointSet> rel(x.min_nbhds());
        rel.resize(p + fresh, 0);
        for (Point i = p; i < p + fresh; ++i) rel[i] = singleton(i);
        for (Point k = 0; k < q; ++k)
          for (Point r : members(y.min_nbhd(k))) rel[phi[k]] |= singleton(phi[r]);
        add(from_relation(std::move(rel)));
        return;
      }
      if (p + fresh < bound_) {
        phi[j] = p + fresh;
        rec(j + 1, used, fresh + 1);
      }
      for (Point i = 0; i < p; ++i)
        if (!has(used, i)) {
          phi[j] = i;
          rec(j + 1, used | singleton(i), fresh);
        }
    };
    rec(0, 0, 0);
  }

  unsigned rules_, bound_, copies_;
  Pred pred_;
  std::size_t total_ = static_cast<std::size_t>(-1);
  std::set<FinSpace> members_;
  std::set<std::vector<PointSet>> seen_;  // labelled relations already canonicalised
  std::vector<FinSpace> processed_;
  std::vector<std::vector<FinSpace>> pending_;
};

std::vector<FinSpace> canonical_sorted(const std::vector<FinSpace>& xs) {
  std::set<FinSpace> s;
  for (const FinSpace& x : xs) s.insert(canonical_form(x));
  return {s.begin(), s.end()};
}

void check_seeds(const std::vector<FinSpace>& seeds, unsigned bound, Pred pred) {
  for (const FinSpace& s : seeds) {
    if (s.size() > bound)
      throw Error(ErrorCode::BoundTooSmall, "seed with " + std::to_string(s.size()) + " points exceeds bound " +
                                                std::to_string(bound));
    if (!satisfies(s, pred))
      throw Error(ErrorCode::MemberOutsideA, std::string("seed fails predicate ") + pred_name(pred));
  }
}

}  // namespace

FamilyClosure saturate(const std::vector<FinSpace>& seeds, unsigned rules, unsigned point_bound,
                       unsigned sum_copy_bound, Pred pred) {
  check_seeds(seeds, point_bound, pred);
  Saturator sat(rules, point_bound, sum_copy_bound, pred);
  for (const FinSpace& s : seeds) sat.add(s);
  sat.run();
  return FamilyClosure{sat.result(), canonical_sorted(seeds), rules, point_bound, sum_copy_bound, pred, true};
}

FamilyClosure saturate_with(const FamilyClosure& base, const FinSpace& extra) {
  if (!base.saturated) throw Error(ErrorCode::NotSaturated, "base family is not a fixed point");
  check_seeds({extra}, base.point_bound, base.pred);
  auto seeds = base.seeds;
  if (base.contains(extra)) {
    FamilyClosure same = base;
    seeds.push_back(extra);
    same.seeds = canonical_sorted(seeds);
    return same;
  }
  seeds.push_back(extra);
  Saturator sat(base.rules, base.point_bound, base.sum_copy_bound, base.pred);
  sat.adopt_fixed_point(base.members);
  sat.add(extra);
  sat.run();
  return FamilyClosure{sat.result(),       canonical_sorted(seeds), base.rules, base.point_bound,
                       base.sum_copy_bound, base.pred,               true};
}

std::string closure_json(const FamilyClosure& f) {
  nlohmann::ordered_json j;
  j["seeds"] = nlohmann::ordered_json::array();
  for (const FinSpace& s : f.seeds) j["seeds"].push_back(space_to_json(s));
  j["rules"] = rules_names(f.rules);
  j["bounds"] = {{"points", f.point_bound}, {"sum_copies", f.sum_copy_bound}};
  j["predicate"] = pred_name(f.pred);
  j["members"] = nlohmann::ordered_json::array();
  for (const FinSpace& m : f.members) j["members"].push_back(space_to_json(m));
  j["flags"] = {{"saturated", f.saturated}, {"count", f.members.size()}};
  return j.dump();
}

HeredityReport heredity_report(const FamilyClosure& f) {
  if (!f.saturated) throw Error(ErrorCode::NotSaturated, "heredity report needs a saturated family");
  HeredityReport r;
  r.pf_closed = true;
  r.hereditary = true;
  for (const FinSpace& x : f.members) {
    for (Point a = 0; a < x.size() && r.pf_closed; ++a)
      if (!f.contains(prime_factor(x, a))) r.pf_closed = false;
    for (PointSet s = 1; s < x.carrier() && r.hereditary; ++s)
      if (!f.contains(subspace(x, s).space)) r.hereditary = false;
  }
  r.lemma_forward_ok = !r.pf_closed || r.hereditary;

  r.converse_applies = r.hereditary && f.contains(sierpinski());
  if (r.converse_applies) {
    for (const FinSpace& x : f.members) {
      if (2 * x.size() > f.point_bound) continue;
      for (Point a = 0; a < x.size(); ++a)
        if (!f.contains(prime_factor(x, a))) r.counterexamples.emplace_back(x, a);
    }
    r.converse_ok_on_small = r.counterexamples.empty();
  }
  return r;
}

bool verify_initial_singleton_fiber(const SpaceMap& f, Point b) {
  const FinSpace& x = f.dom();
  const FinSpace& y = f.cod();
  if (b >= y.size()) throw Error(ErrorCode::PreconditionFailed, "b outside the codomain");
  MapFlags flags = classify_map(f);
  if (!flags.initial || !flags.surjective) throw Error(ErrorCode::PreconditionFailed, "f must be initial and onto");
  PointSet fibre = f.preimage(singleton(b));
  if (count(fibre) != 1) throw Error(ErrorCode::PreconditionFailed, "fibre over b is not a singleton");
  const Point a = lowest(fibre);

  std::vector<Point> g(y.size());
  for (Point q = 0; q < y.size(); ++q) g[q] = lowest(f.preimage(singleton(q)));
  FinSpace xa = prime_factor(x, a);
  FinSpace yb = prime_factor(y, b);
  SpaceMap gm(yb, xa, g);
  if (g[b] != a || !is_continuous(gm)) return false;
  for (Point q = 0; q < y.size(); ++q)
    if (f(g[q]) != q) return false;
  return in_hull(HullKind::Coreflective, xa, {yb}).member;
}

bool strongly_rigid(const FinSpace& x) {
  const unsigned n = x.size();
  bool rigid = true;
  for_each_continuous_map(x, x, [&](const std::vector<Point>& f) {
    bool constant = std::all_of(f.begin(), f.end(), [&](Point p) { return p == f[0]; });
    bool identity = true;
    for (Point p = 0; p < n; ++p) identity = identity && f[p] == p;
    if (!constant && !identity) rigid = false;
    return rigid;
  });
  return rigid;
}

}  // namespace fintop

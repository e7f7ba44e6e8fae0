#include "fintop/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "fintop/io.hpp"
#include "fintop/omega.hpp"

namespace fintop::verify {

namespace {

constexpr std::size_t kKeepFailures = 10;

std::string show(const FinSpace& x) { return space_to_json(x).dump(); }

}  // namespace

void Report::fail(const std::string& what) {
  ++failures;
  if (failed.size() < kKeepFailures) failed.push_back(what);
}

void Report::merge(const Report& other) {
  cases += other.cases;
  failures += other.failures;
  for (const auto& n : other.notes) notes.push_back(other.name + ": " + n);
  for (const auto& f : other.failed)
    if (failed.size() < kKeepFailures) failed.push_back(other.name + ": " + f);
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["suite"] = name;
  j["ok"] = ok();
  j["cases"] = cases;
  j["failures"] = failures;
  j["notes"] = notes;
  j["failed"] = failed;
  return j.dump();
}

std::string Report::text() const {
  std::ostringstream out;
  out << name << ": " << (ok() ? "ok" : "FAILED") << " (" << cases << " cases, " << failures << " failures)\n";
  for (const auto& n : notes) out << "  " << n << "\n";
  for (const auto& f : failed) out << "  failed: " << f << "\n";
  return out.str();
}

Report prime_decomposition_sweep(unsigned bound) {
  Report r{"prime_decomp"};
  for (const FinSpace& x : universe_upto(bound)) {
    ++r.cases;
    PrimeDecomposition d = prime_decomposition(x);
    MapFlags flags = classify_map(d.map);
    Quotient q = quotient_by_map(d.sum, d.map.assignment(), x.size());
    if (!flags.quotient || !(q.space == x)) r.fail(show(x));
  }
  r.notes.push_back("every space with at most " + std::to_string(bound) +
                    " points is the quotient of the sum of its prime factors");
  return r;
}

Report retraction_sweep(unsigned bound) {
  Report r{"retraction"};
  std::size_t primes = 0;
  for (const FinSpace& x : universe_upto(bound)) {
    auto p = is_prime(x);
    if (!p) continue;
    ++primes;
    for (PointSet s = 0; s <= x.carrier(); ++s) {
      if (!has(s, p->acc)) continue;
      if (!is_prime(subspace(x, s).space)) continue;
      ++r.cases;
      MapFlags flags = classify_map(prime_retraction(*p, s));
      if (!flags.continuous || !flags.retraction) r.fail(show(x) + " on " + std::to_string(s));
    }
  }
  r.notes.push_back(std::to_string(primes) + " prime spaces with at most " + std::to_string(bound) + " points");
  return r;
}

Report pinch_order_sweep(unsigned bound) {
  Report r{"pinch_order"};
  auto u = universe_upto(bound);
  for (const FinSpace& x : u)
    for (const FinSpace& y : u)
      for (Point b = 0; b < y.size(); ++b) {
        if (!y.is_closed(singleton(b))) continue;
        ++r.cases;
        if (!finer_than(triangle(x, y, b).base, dtriangle(x, y, b).base))
          r.fail(show(x) + " " + show(y) + " b=" + std::to_string(b));
      }
  return r;
}

Report pinch_quotient_sweep(unsigned bound) {
  Report r{"pinch_quotient"};
  auto u = universe_upto(bound);
  std::size_t outside = 0, outside_quotient = 0;
  for (const FinSpace& x : u)
    for (const FinSpace& y : u)
      for (Point b = 0; b < y.size(); ++b) {
        if (!y.is_closed(singleton(b))) continue;
        const bool hypothesis = !y.is_open(singleton(b));
        for (Point a = 0; a < x.size(); ++a) {
          bool quotient = classify_map(pinched_subspace(x, y, a, b).q).quotient;
          if (hypothesis) {
            ++r.cases;
            if (!quotient)
              r.fail(show(x) + " " + show(y) + " a=" + std::to_string(a) + " b=" + std::to_string(b));
          } else {
            ++outside;
            outside_quotient += quotient ? 1 : 0;
          }
        }
      }
  r.notes.push_back("all (X,Y,a,b) over universe(" + std::to_string(bound) + ") with {b} closed, not open: quotient=" +
                    (r.ok() ? "true" : "false"));
  r.notes.push_back("{b} clopen (recorded only): " + std::to_string(outside_quotient) + " of " +
                    std::to_string(outside) + " quotient");
  return r;
}

const std::vector<unsigned>& swept_rule_sets() {
  static const std::vector<unsigned> sets{kQuotientRule, kPrimeFactorRule | kQuotientRule,
                                          kSubspaceRule | kQuotientRule, kAllRules};
  return sets;
}

const ClosureSweep& closure_sweep(unsigned rules, Pred pred, unsigned seed_points, unsigned bound, unsigned copies) {
  static std::mutex mutex;
  static std::map<std::tuple<unsigned, Pred, unsigned, unsigned, unsigned>, ClosureSweep> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_tuple(rules, pred, seed_points, bound, copies);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto seeds = universe_upto(seed_points, pred);
  const std::size_t k = seeds.size();
  ClosureSweep out;
  std::map<std::vector<FinSpace>, std::size_t> ids;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> step;
  auto intern = [&](FamilyClosure f) {
    auto [it, fresh] = ids.emplace(f.members, out.closures.size());
    if (fresh) out.closures.push_back(std::move(f));
    return it->second;
  };
  auto subset = [&](std::size_t a, std::size_t b) {
    const auto& x = out.closures[a].members;
    const auto& y = out.closures[b].members;
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
  };
  // closure of a seed subset = closure of (subset minus its top seed) plus the
  // closure of that seed alone
  std::vector<std::size_t> of(std::size_t{1} << k);
  of[0] = intern(saturate({}, rules, bound, copies, pred));
  std::vector<std::size_t> single(k);
  for (std::size_t t = 0; t < k; ++t) single[t] = of[std::size_t{1} << t] = intern(saturate_with(out.closures[of[0]], seeds[t]));
  for (std::size_t m = 1; m < of.size(); ++m) {
    std::size_t top = 0;
    while ((m >> (top + 1)) != 0) ++top;
    std::size_t parent = of[m & ~(std::size_t{1} << top)];
    auto [it, fresh] = step.emplace(std::make_pair(parent, single[top]), 0);
    if (fresh) {
      if (subset(single[top], parent))
        it->second = parent;
      else if (subset(parent, single[top]))
        it->second = single[top];
      else
        it->second = intern(saturate_with(out.closures[parent], seeds[top]));
    }
    of[m] = it->second;
  }
  out.seed_sets = of.size();
  return cache.emplace(key, std::move(out)).first->second;
}

Report heredity_sweep(unsigned seed_points, unsigned bound, unsigned copies) {
  Report r{"heredity"};
  for (Pred pred : {Pred::All, Pred::T0})
    for (unsigned rules : swept_rule_sets()) {
      const ClosureSweep& sweep = closure_sweep(rules, pred, seed_points, bound, copies);
      std::size_t pf = 0, converse = 0;
      for (const FamilyClosure& f : sweep.closures) {
        ++r.cases;
        HeredityReport h = heredity_report(f);
        pf += h.pf_closed ? 1 : 0;
        converse += h.converse_applies ? 1 : 0;
        if (!h.lemma_forward_ok) r.fail(std::string("forward ") + pred_name(pred) + " " + closure_json(f));
        for (const auto& [x, a] : h.counterexamples)
          r.fail(std::string("converse ") + pred_name(pred) + " " + rules_names(rules) + " X=" + show(x) +
                 " a=" + std::to_string(a));
      }
      r.notes.push_back(std::string(pred_name(pred)) + " [" + rules_names(rules) + "]: " +
                        std::to_string(sweep.seed_sets) + " seed sets, " + std::to_string(sweep.closures.size()) +
                        " distinct closures, " + std::to_string(pf) + " closed under prime factors, " +
                        std::to_string(converse) + " checked for the converse");
    }
  return r;
}

Report t0_arrow_sweep(unsigned bound) {
  Report r{"t0_arrow"};
  for (const FinSpace& x : universe_upto(bound)) {
    ++r.cases;
    T0Reflection t = t0_reflection(x);
    MapFlags flags = classify_map(t.arrow);
    if (!flags.quotient || !flags.initial || !flags.retraction || !check_property(t.rx, Property::T0))
      r.fail(show(x));
  }
  return r;
}

Report r0_membership_sweep(unsigned seed_points, unsigned bound, unsigned copies) {
  Report r{"r0_membership"};
  const FinSpace at = FinSpace::indiscrete(2);
  const auto all = universe_upto(bound);
  std::vector<FinSpace> reflections;
  for (const FinSpace& x : all) reflections.push_back(t0_reflection(x).rx);
  std::size_t families = 0;
  for (unsigned rules : swept_rule_sets())
    for (const FamilyClosure& f : closure_sweep(rules, Pred::All, seed_points, bound, copies).closures) {
      if (!f.contains(at)) continue;
      ++families;
      for (std::size_t i = 0; i < all.size(); ++i) {
        ++r.cases;
        if (f.contains_canonical(all[i]) != f.contains(reflections[i]))
          r.fail("X=" + show(all[i]) + " in " + rules_names(rules) + " closure of " + std::to_string(f.members.size()));
      }
    }
  r.notes.push_back(std::to_string(families) + " closures containing the indiscrete pair");
  return r;
}

Report initial_fiber_sweep(unsigned bound) {
  Report r{"initial_fiber"};
  auto u = universe_upto(bound);
  for (const FinSpace& x : u)
    for (const FinSpace& y : u) {
      if (y.size() > x.size()) continue;
      std::vector<Point> f(x.size(), 0);
      // all functions x → y in lexicographic order
      while (true) {
        SpaceMap m(x, y, f);
        MapFlags flags = classify_map(m);
        if (flags.initial && flags.surjective)
          for (Point b = 0; b < y.size(); ++b) {
            if (count(m.preimage(singleton(b))) != 1) continue;
            ++r.cases;
            if (!verify_initial_singleton_fiber(m, b)) r.fail(show(x) + " -> " + show(y) + " b=" + std::to_string(b));
          }
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == y.size()) f[i++] = 0;
        if (i == f.size()) break;
      }
    }
  return r;
}

Report tower_sweep(unsigned prime_points) {
  Report r{"towers"};
  std::size_t clopen = 0, towers = 0;
  for (const FinSpace& x : universe_upto(prime_points)) {
    auto a = is_prime(x);
    if (!a) continue;
    for (unsigned n = 1; tower_size(x.size(), n) <= kTowerMaxPoints; ++n) {
      ++r.cases;
      ++towers;
      Tower t = iterate_a(*a, n);
      const std::string where = show(x) + " n=" + std::to_string(n);
      bool sizes = true;
      for (unsigned k = 0; k < t.levels.size(); ++k)
        sizes = sizes && t.levels[k].size() == tower_size(x.size(), k + 1);
      if (!sizes) r.fail("size " + where);
      for (const SpaceMap& e : t.embeddings)
        if (!classify_map(e).embedding) r.fail("embedding " + where);
      LevelBaseReport lb = check_level_base(t);
      const PointSet min_a = t.levels.back().min_nbhd(a->acc);
      bool has_min = std::find(lb.base.begin(), lb.base.end(), min_a) != lb.base.end();
      if (!lb.local_base || !lb.all_satisfy_eq1 || !has_min) r.fail("level base " + where);
      clopen += lb.all_clopen ? 1 : 0;
    }
  }
  r.notes.push_back(std::to_string(clopen) + " of " + std::to_string(towers) +
                    " top-level bases consist of clopen sets (recorded only)");
  return r;
}

Report lmp_sweep(unsigned bound) {
  Report r{"lmp"};
  auto u = universe_upto(bound);
  std::size_t holds = 0, triples = 0;
  for (const FinSpace& y : u)
    for (Point b = 0; b < y.size(); ++b) {
      if (!y.is_closed(singleton(b))) continue;
      for (const FinSpace& z : u) {
        ++triples;
        auto w = p_predicate(y, b, z);
        if (!w) continue;
        ++holds;
        for (const FinSpace& x : u) {
          ++r.cases;
          if (!verify_lmp_source(x, y, b, z, *w))
            r.fail("X=" + show(x) + " Y=" + show(y) + " b=" + std::to_string(b) + " Z=" + show(z));
        }
      }
    }
  r.notes.push_back("P(b,Y,Z) holds for " + std::to_string(holds) + " of " + std::to_string(triples) + " (Y,b,Z)");
  return r;
}

Report partition_p_sweep(unsigned bound) {
  Report r{"partition_p"};
  const FinSpace d2 = FinSpace::discrete(2);
  for (const FinSpace& y : universe_upto(bound)) {
    // partition topologies: every minimal neighbourhood is closed
    bool partition = true;
    for (Point p = 0; p < y.size(); ++p) partition = partition && y.is_closed(y.min_nbhd(p));
    if (!partition) continue;
    for (Point b = 0; b < y.size(); ++b) {
      if (!y.is_closed(singleton(b))) continue;
      ++r.cases;
      if (!p_predicate(y, b, d2)) r.fail(show(y) + " b=" + std::to_string(b));
    }
  }
  return r;
}

Report excof_sweep(std::uint64_t seed, unsigned instances, unsigned max_f) {
  using omega::Nat;
  Report r{"excof"};
  std::mt19937_64 rng(seed);
  auto check = [&](const std::vector<Nat>& f, Nat u, Nat b) {
    ++r.cases;
    omega::ExcofWitness w = omega::excof_witness(f, u, b);
    if (!w.all()) {
      std::string fs;
      for (Nat x : f) fs += std::to_string(x) + ",";
      r.fail("F={" + fs + "} u=" + std::to_string(u) + " b=" + std::to_string(b));
    }
  };
  check({}, 1, 0);
  check({3, 4}, 9, 0);
  std::uniform_int_distribution<Nat> point(0, 40);
  for (unsigned i = 0; i < instances; ++i) {
    const unsigned size = static_cast<unsigned>(rng() % (max_f + 1));
    std::set<Nat> f;
    while (f.size() < size) f.insert(point(rng));
    Nat u, b;
    do u = point(rng);
    while (f.count(u));
    do b = point(rng);
    while (f.count(b) || b == u);
    check({f.begin(), f.end()}, u, b);
  }
  return r;
}

namespace {

omega::FinCofSet random_fincof(std::mt19937_64& rng) {
  std::vector<omega::Nat> s;
  const unsigned size = static_cast<unsigned>(rng() % 7);
  for (unsigned i = 0; i < size; ++i) s.push_back(rng() % 12);
  return (rng() & 1) ? omega::FinCofSet::finite(s) : omega::FinCofSet::cofinite(s);
}

omega::FiniteModMap random_map(std::mt19937_64& rng) {
  std::map<omega::Nat, omega::Nat> table;
  const std::int64_t shift = static_cast<std::int64_t>(rng() % 5) - 2;
  const unsigned k = 2 + static_cast<unsigned>(rng() % 8);
  for (unsigned x = 0; x < k; ++x)
    if (x < 2 || (rng() & 1)) table[x] = rng() % 15;
  return omega::FiniteModMap(table, shift);
}

}  // namespace

Report fincof_law_sweep(std::uint64_t seed, unsigned cases) {
  using S = omega::FinCofSet;
  Report r{"fincof_laws"};
  std::mt19937_64 rng(seed);
  const S empty = S::empty(), all = S::all();
  for (unsigned i = 0; i < cases; ++i) {
    ++r.cases;
    S a = random_fincof(rng), b = random_fincof(rng), c = random_fincof(rng);
    bool ok = (a | b) == (b | a) && (a & b) == (b & a) && ((a | b) | c) == (a | (b | c)) &&
              ((a & b) & c) == (a & (b & c)) && (a | (b & c)) == ((a | b) & (a | c)) &&
              (a & (b | c)) == ((a & b) | (a & c)) && (a | (a & b)) == a && (a & (a | b)) == a &&
              (a | b).complement() == (a.complement() & b.complement()) &&
              (a & b).complement() == (a.complement() | b.complement()) && (a | a.complement()) == all &&
              (a & a.complement()) == empty && a.complement().complement() == a && (a | empty) == a &&
              (a & all) == a && a.subset_of(a | b) && (a & b).subset_of(a);
    for (omega::Nat x = 0; x < 16 && ok; ++x)
      ok = (a | b).contains(x) == (a.contains(x) || b.contains(x)) &&
           (a & b).contains(x) == (a.contains(x) && b.contains(x)) && a.complement().contains(x) == !a.contains(x);
    if (!ok) r.fail(a.str() + " " + b.str() + " " + c.str());
  }
  return r;
}

Report finite_mod_map_sweep(std::uint64_t seed, unsigned cases) {
  Report r{"finite_mod_maps"};
  std::mt19937_64 rng(seed);
  const omega::CofiniteSpace cof;
  const auto c_omega = omega::SymbolicPrimeSpace::c_omega();
  for (unsigned i = 0; i < cases; ++i) {
    ++r.cases;
    omega::FiniteModMap f = random_map(rng), g = random_map(rng);
    omega::FiniteModMap gf = compose(g, f);
    bool ok = true;
    for (omega::Nat x = 0; x < 64 && ok; ++x) ok = gf(x) == g(f(x));
    omega::FinCofSet s = random_fincof(rng);
    for (omega::Nat x = 0; x < 64 && ok; ++x) ok = f.preimage(s).contains(x) == s.contains(f(x));
    ok = ok && (!is_continuous_sym(f, cof, cof) || !is_continuous_sym(g, cof, cof) || is_continuous_sym(gf, cof, cof));
    ok = ok && (!is_continuous_sym(f, c_omega, c_omega) || !is_continuous_sym(g, c_omega, c_omega) ||
                is_continuous_sym(gf, c_omega, c_omega));
    if (!ok) r.fail("case " + std::to_string(i));
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prime_decomp", "pinch", "retraction", "heredity",
                                              "t0",           "towers", "lmp",       "omega"};
  return names;
}

Report run_suite(const std::string& name, const Options& opt) {
  auto bound = [&](unsigned dflt) { return opt.bound ? opt.bound : dflt; };
  Report r{name};
  if (name == "prime_decomp") {
    r.merge(prime_decomposition_sweep(bound(5)));
  } else if (name == "pinch") {
    r.merge(pinch_order_sweep(bound(3)));
    r.merge(pinch_quotient_sweep(bound(3)));
  } else if (name == "retraction") {
    r.merge(retraction_sweep(bound(6)));
  } else if (name == "heredity") {
    r.merge(heredity_sweep(3, bound(6), 3));
  } else if (name == "t0") {
    r.merge(t0_arrow_sweep(bound(5)));
    r.merge(r0_membership_sweep(3, 6, 3));
    r.merge(initial_fiber_sweep(3));
  } else if (name == "towers") {
    r.merge(tower_sweep(bound(4)));
  } else if (name == "lmp") {
    r.merge(lmp_sweep(bound(3)));
    r.merge(partition_p_sweep(5));
  } else if (name == "omega") {
    r.merge(excof_sweep(opt.seed, 100, 10));
    r.merge(fincof_law_sweep(opt.seed, 1000));
    r.merge(finite_mod_map_sweep(opt.seed, 1000));
  } else {
    throw Error(ErrorCode::BadArgument, "unknown suite " + name);
  }
  return r;
}

}  // namespace fintop::verify

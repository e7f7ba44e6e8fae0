#include <doctest.h>

#include "fintop/canonical.hpp"
#include "fintop/classes.hpp"
#include "fintop/io.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

const FinSpace S = sierpinski();
const FinSpace At = FinSpace::indiscrete(2);
const FinSpace D2 = FinSpace::discrete(2);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadArgument;
}

}  // namespace

TEST_CASE("predicates") {
  for (Pred p : {Pred::All, Pred::T0, Pred::T1}) CHECK(satisfies(D2, p));
  CHECK_FALSE(satisfies(At, Pred::T0));
  CHECK_FALSE(satisfies(S, Pred::T1));
  CHECK(pred_from_name("T0") == Pred::T0);
  CHECK_FALSE(pred_from_name("t2"));
}

TEST_CASE("T0 reflection") {
  T0Reflection a = t0_reflection(At);
  CHECK(a.rx == point_space());
  T0Reflection s = t0_reflection(S);
  CHECK(s.rx == S);
  CHECK(s.arrow.assignment() == std::vector<Point>{0, 1});
  FinSpace x = make_space(3, {0, 0b011, 0b111});
  T0Reflection r = t0_reflection(x);
  CHECK(r.arrow(0) == r.arrow(1));
  CHECK(find_homeomorphism(r.rx, S));
  for (const FinSpace& y : universe_upto(4)) {
    T0Reflection t = t0_reflection(y);
    MapFlags f = classify_map(t.arrow);
    CHECK((f.quotient && f.initial && f.retraction));
    CHECK(check_property(t.rx, Property::T0));
    for (Point p = 0; p < y.size(); ++p)
      for (Point q = 0; q < y.size(); ++q) CHECK((t.arrow(p) == t.arrow(q)) == (y.closure(p) == y.closure(q)));
  }
}

TEST_CASE("hull membership examples") {
  CHECK(in_hull(HullKind::Coreflective, At, {S}).member);
  CHECK_FALSE(in_hull(HullKind::Coreflective, S, {At}).member);
  CHECK_FALSE(in_hull(HullKind::Epireflective, At, {S}).member);
  CHECK(in_hull(HullKind::Bireflective, At, {S}).member);
  CHECK_FALSE(in_hull(HullKind::Epireflective, S, {D2}).member);
  HullResult empty = in_hull(HullKind::Coreflective, S, {});
  CHECK_FALSE(empty.member);
  CHECK(empty.reason == HullReason::EmptyFamily);
  CHECK(in_hull(HullKind::Epireflective, S, {}).reason == HullReason::EmptyFamily);
  HullResult cert = in_hull(HullKind::Coreflective, At, {S});
  CHECK(final_topology(2, cert.sink) == At);
}

TEST_CASE("coreflective oracle agrees with explicit quotients of sums") {
  auto xs = universe_upto(3);
  auto ds = universe_upto(2);
  for (unsigned mask = 1; mask < (1u << ds.size()); ++mask) {
    std::vector<FinSpace> d;
    for (unsigned i = 0; i < ds.size(); ++i)
      if ((mask >> i) & 1u) d.push_back(ds[i]);
    for (const FinSpace& x : xs) {
      CHECK(in_hull(HullKind::Coreflective, x, d).member == oracle::quotient_of_sums(x, d, 3));
      CHECK(in_hull(HullKind::Epireflective, x, d).member == oracle::subspace_of_product(x, d, 3));
      auto with_at = d;
      with_at.push_back(At);
      CHECK(in_hull(HullKind::Bireflective, x, d).member == oracle::subspace_of_product(x, with_at, 3));
    }
  }
}

TEST_CASE("AD hull") {
  CHECK(in_ad_hull(FinSpace::discrete(3), {D2}, Pred::T1));
  CHECK(in_ad_hull(FinSpace::discrete(3), {S}, Pred::T0));
  CHECK(in_ad_hull(S, {S}, Pred::All));
  CHECK_FALSE(in_ad_hull(At, {S}, Pred::T0));
  CHECK_FALSE(in_ad_hull(S, {D2}, Pred::T0));
  // S is not T1, so {S} is not a family inside Top1
  CHECK(code_of([] { in_ad_hull(FinSpace::discrete(3), {S}, Pred::T1); }) == ErrorCode::MemberOutsideA);
  CHECK(code_of([] { in_ad_hull(S, {S}, Pred::T1); }) == ErrorCode::MemberOutsideA);
}

TEST_CASE("universe enumeration") {
  CHECK(universe(2).size() == 3);
  const std::size_t all_counts[] = {1, 1, 3, 9, 33, 139, 718};
  const std::size_t t0_counts[] = {1, 1, 2, 5, 16, 63, 318};
  for (unsigned n = 1; n <= 6; ++n) {
    CHECK(universe(n).size() == all_counts[n]);
    CHECK(universe(n, Pred::T0).size() == t0_counts[n]);
    CHECK(universe(n, Pred::T1).size() == 1);
  }
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<oracle::Family> mine;
    for (const FinSpace& x : universe(n)) mine.push_back(oracle::canonical_family(n, oracle::opens(x)));
    std::sort(mine.begin(), mine.end());
    CHECK(mine == oracle::universe_by_relations(n));
    CHECK(mine == oracle::universe_by_families(n));
  }
  CHECK(universe_upto(2, Pred::All, true).front().size() == 0);
  CHECK(universe_upto(3).size() == 13);
  CHECK_THROWS_AS(universe(8), Error);
}

TEST_CASE("saturation") {
  FamilyClosure disc = saturate({D2}, kAllRules, 5, 3, Pred::All);
  CHECK(disc.members.size() == 5);
  for (const FinSpace& m : disc.members) CHECK(check_property(m, Property::Discrete));
  HeredityReport h = heredity_report(disc);
  CHECK(h.pf_closed);
  CHECK(h.hereditary);

  FamilyClosure t0 = saturate({S}, kAllRules, 4, 3, Pred::T0);
  for (const FinSpace& m : {point_space(), D2, S}) CHECK(t0.contains(m));
  for (const FinSpace& m : t0.members) CHECK(check_property(m, Property::T0));
  CHECK(t0.members.size() == universe_upto(4, Pred::T0).size());

  // monotone in the bound
  FamilyClosure small = saturate({At}, kAllRules, 3, 3, Pred::All);
  FamilyClosure large = saturate({At}, kAllRules, 5, 3, Pred::All);
  for (const FinSpace& m : small.members) CHECK(large.contains(m));

  // incremental saturation matches a fresh one
  FamilyClosure base = saturate({At}, kAllRules, 5, 3, Pred::All);
  FamilyClosure both = saturate({At, D2}, kAllRules, 5, 3, Pred::All);
  CHECK(saturate_with(base, D2).members == both.members);

  CHECK(code_of([] { saturate({FinSpace::discrete(4)}, kAllRules, 3, 3, Pred::All); }) == ErrorCode::BoundTooSmall);
  FamilyClosure unsat = disc;
  unsat.saturated = false;
  CHECK(code_of([&] { heredity_report(unsat); }) == ErrorCode::NotSaturated);

  FamilyClosure s6 = saturate({S}, kAllRules, 6, 3, Pred::T0);
  CHECK(heredity_report(s6).lemma_forward_ok);

  CHECK(rules_from_names("sub,pf") == (kSubspaceRule | kPrimeFactorRule));
  CHECK(rules_from_names("all") == kAllRules);
  CHECK_FALSE(rules_from_names("bogus"));
}

TEST_CASE("saturation against explicit quotients of sums") {
  // with only the quotient rule, the members with at most three points are
  // exactly the quotients of sums of at most three seeds
  for (const FinSpace& seed : universe_upto(2)) {
    FamilyClosure f = saturate({seed}, kQuotientRule, 3, 3, Pred::All);
    for (const FinSpace& x : universe_upto(3))
      CHECK(f.contains(x) == oracle::quotient_of_sums(x, {seed}, 3));
  }
}

TEST_CASE("closure reports serialise deterministically") {
  FamilyClosure f = saturate({S}, kAllRules, 3, 2, Pred::T0);
  std::string a = closure_json(f);
  CHECK(a == closure_json(saturate({relabel(S, {1, 0})}, kAllRules, 3, 2, Pred::T0)));
  auto j = nlohmann::json::parse(a);
  CHECK(j["members"].size() == f.members.size());
  CHECK(j["flags"]["saturated"] == true);
}

TEST_CASE("initial singleton fibres") {
  CHECK(verify_initial_singleton_fiber(identity_map(S), 0));
  FinSpace x = make_space(3, {0, 0b011, 0b111});
  T0Reflection r = t0_reflection(x);
  CHECK(verify_initial_singleton_fiber(r.arrow, r.arrow(2)));
  CHECK(code_of([&] { verify_initial_singleton_fiber(r.arrow, r.arrow(0)); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("strongly rigid spaces") {
  CHECK(strongly_rigid(point_space()));
  CHECK_FALSE(strongly_rigid(D2));
  for (const FinSpace& x : universe_upto(4)) {
    bool expect = true;
    for (const auto& f : oracle::continuous_maps(x, x)) {
      bool constant = std::all_of(f.begin(), f.end(), [&](Point p) { return p == f[0]; });
      bool id = true;
      for (Point p = 0; p < x.size(); ++p) id = id && f[p] == p;
      expect = expect && (constant || id);
    }
    CHECK(strongly_rigid(x) == expect);
  }
}

TEST_CASE("strongly rigid report up to five points") {
  std::vector<FinSpace> rigid;
  for (const FinSpace& x : universe_upto(5))
    if (x.size() >= 2 && strongly_rigid(x)) rigid.push_back(x);
  REQUIRE(rigid.size() == 1);
  CHECK(find_homeomorphism(rigid[0], S));
  // the triangle of S with itself stays in the epireflective hull of S
  CHECK(in_hull(HullKind::Epireflective, triangle(S, S, 0).base, {S}).member);
}

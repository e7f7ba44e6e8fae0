#include "fintop/omega.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fintop::omega {

namespace {

std::vector<Nat> normalize(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Nat> set_union(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_intersection(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Nat> set_difference(const std::vector<Nat>& a, const std::vector<Nat>& b) {
  std::vector<Nat> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

FinCofSet::FinCofSet(Mode mode, std::vector<Nat> support) : mode_(mode), support_(normalize(std::move(support))) {}

bool FinCofSet::contains(Nat x) const {
  bool listed = std::binary_search(support_.begin(), support_.end(), x);
  return is_finite() ? listed : !listed;
}

bool FinCofSet::subset_of(const FinCofSet& other) const { return (*this & other.complement()) == empty(); }

FinCofSet operator|(const FinCofSet& a, const FinCofSet& b) {
  using M = FinCofSet::Mode;
  if (a.is_finite() && b.is_finite()) return {M::Finite, set_union(a.support_, b.support_)};
  if (a.is_cofinite() && b.is_cofinite()) return {M::Cofinite, set_intersection(a.support_, b.support_)};
  const FinCofSet& fin = a.is_finite() ? a : b;
  const FinCofSet& cof = a.is_finite() ? b : a;
  return {M::Cofinite, set_difference(cof.support_, fin.support_)};
}

FinCofSet operator&(const FinCofSet& a, const FinCofSet& b) { return (a.complement() | b.complement()).complement(); }

std::string FinCofSet::str() const {
  std::ostringstream out;
  out << "{" << (is_finite() ? "finite" : "cofinite") << ":[";
  for (std::size_t i = 0; i < support_.size(); ++i) out << (i ? "," : "") << support_[i];
  out << "]}";
  return out.str();
}

SymbolicPrimeSpace SymbolicPrimeSpace::principal(const FinCofSet& g) {
  if (!g.is_cofinite()) throw Error(ErrorCode::BadArgument, "principal filter generator must be cofinite");
  return SymbolicPrimeSpace{Filter::Principal, g};
}

bool SymbolicPrimeSpace::in_filter(const FinCofSet& v) const {
  return filter == Filter::Cofinite ? v.is_cofinite() : generator.subset_of(v);
}

bool is_open(const SymbolicPrimeSpace& p, const FinCofSet& v, bool contains_star) {
  return !contains_star || p.in_filter(v);
}

bool is_open(const CofiniteSpace&, const FinCofSet& v) { return v.is_cofinite() || v == FinCofSet::empty(); }

bool finer_than_sym(const SymbolicPrimeSpace& p, const SymbolicPrimeSpace& q) {
  using F = SymbolicPrimeSpace::Filter;
  if (q.filter == F::Principal) {
    // {V ⊇ H} ⊆ P's filter iff H itself is in it (filters are up-closed)
    return p.in_filter(q.generator);
  }
  if (p.filter == F::Cofinite) return true;
  // The cofinite filter lies in {V ⊇ G} only if every ω∖{x} contains G;
  // test x = min G.
  for (Nat x = 0;; ++x)
    if (p.generator.contains(x)) return p.generator.subset_of(FinCofSet::cofinite({x}));
}

FiniteModMap::FiniteModMap(const std::map<Nat, Nat>& table, std::int64_t shift, std::optional<Nat> star_image)
    : shift_(shift), star_image_(star_image) {
  Nat k = table.empty() ? 0 : table.rbegin()->first + 1;
  if (shift < 0 && k < static_cast<Nat>(-shift))
    throw Error(ErrorCode::BadArgument, "table must cover every point that the shift would send below 0");
  for (Nat x = 0; x < k; ++x) {
    auto it = table.find(x);
    if (it != table.end()) {
      table_.push_back(it->second);
    } else {
      std::int64_t v = static_cast<std::int64_t>(x) + shift;
      if (v < 0) throw Error(ErrorCode::BadArgument, "shift sends an untabled point below 0");
      table_.push_back(static_cast<Nat>(v));
    }
  }
  // drop trailing entries the shift rule already produces
  while (!table_.empty()) {
    std::int64_t last = static_cast<std::int64_t>(table_.size()) - 1 + shift_;
    if (last < 0 || static_cast<std::int64_t>(table_.back()) != last) break;
    table_.pop_back();
  }
}

FiniteModMap FiniteModMap::collapse(const FinCofSet& s, Nat target) {
  if (s.is_cofinite()) throw Error(ErrorCode::UnsupportedMap, "collapsing an infinite set is not a finite modification");
  std::map<Nat, Nat> table;
  for (Nat x : s.support()) table[x] = target;
  return FiniteModMap(table);
}

Nat FiniteModMap::operator()(Nat x) const {
  if (x < table_.size()) return table_[x];
  return static_cast<Nat>(static_cast<std::int64_t>(x) + shift_);
}

FinCofSet FiniteModMap::preimage(const FinCofSet& s) const {
  const Nat k = table_.size();
  // tail points x ≥ K with x + shift among the listed support
  std::vector<Nat> tail;
  for (Nat e : s.support()) {
    std::int64_t x = static_cast<std::int64_t>(e) - shift_;
    if (x >= static_cast<std::int64_t>(k)) tail.push_back(static_cast<Nat>(x));
  }
  std::vector<Nat> head;
  for (Nat x = 0; x < k; ++x)
    if (s.contains(table_[x]) == s.is_finite()) head.push_back(x);
  // Finite s: head lists the hits. Cofinite s: head lists the misses.
  if (s.is_finite()) return FinCofSet::finite(set_union(head, normalize(tail)));
  return FinCofSet::cofinite(set_union(head, normalize(tail)));
}

std::optional<FinCofSet> FiniteModMap::injective_image(const FinCofSet& d) const {
  const Nat k = table_.size();
  if (d.is_finite()) {
    std::vector<Nat> img;
    for (Nat x : d.support()) img.push_back((*this)(x));
    auto uniq = normalize(img);
    if (uniq.size() != img.size()) return std::nullopt;
    return FinCofSet::finite(uniq);
  }
  std::vector<Nat> head;
  for (Nat x = 0; x < k; ++x)
    if (d.contains(x)) head.push_back(table_[x]);
  auto head_set = normalize(head);
  if (head_set.size() != head.size()) return std::nullopt;
  const Nat tail_start = static_cast<Nat>(static_cast<std::int64_t>(k) + shift_);
  std::vector<Nat> tail_missing;
  for (Nat e : d.support())
    if (e >= k) tail_missing.push_back(static_cast<Nat>(static_cast<std::int64_t>(e) + shift_));
  tail_missing = normalize(tail_missing);
  for (Nat v : head_set)
    if (v >= tail_start && !std::binary_search(tail_missing.begin(), tail_missing.end(), v)) return std::nullopt;
  std::vector<Nat> below;
  for (Nat v = 0; v < tail_start; ++v) below.push_back(v);
  std::vector<Nat> excluded = set_union(set_difference(below, head_set), set_difference(tail_missing, head_set));
  return FinCofSet::cofinite(excluded);
}

FiniteModMap compose(const FiniteModMap& g, const FiniteModMap& f) {
  const std::int64_t kf = static_cast<std::int64_t>(f.table().size());
  const std::int64_t kg = static_cast<std::int64_t>(g.table().size());
  const std::int64_t k = std::max(kf, kg - f.shift());
  std::map<Nat, Nat> table;
  for (std::int64_t x = 0; x < k; ++x) table[static_cast<Nat>(x)] = g(f(static_cast<Nat>(x)));
  std::optional<Nat> star = f.star_image() ? std::optional<Nat>(g(*f.star_image())) : g.star_image();
  return FiniteModMap(table, f.shift() + g.shift(), star);
}

bool is_continuous_sym(const FiniteModMap& f, const SymbolicPrimeSpace& p, const SymbolicPrimeSpace& q) {
  if (f.star_image()) {
    // {n} is open in Q; its preimage contains ∗ and must lie in P's filter.
    // Every other open containing n is larger, so this is the only test.
    return p.in_filter(f.preimage(FinCofSet::finite({*f.star_image()})));
  }
  // ∗ ↦ ∗: preimages of ∗-free sets are ∗-free, hence open. For V ∋ ∗ the
  // test is on V ∩ ω ranging over Q's filter.
  if (q.filter == SymbolicPrimeSpace::Filter::Principal) return p.in_filter(f.preimage(q.generator));
  if (p.filter == SymbolicPrimeSpace::Filter::Cofinite) {
    // f⁻¹(ω∖E) = ω ∖ f⁻¹(E) and preimages of finite sets are finite
    return f.preimage(FinCofSet::all()).is_cofinite() && f.preimage(FinCofSet::empty()).is_finite();
  }
  // Principal P: need G ⊆ f⁻¹(ω∖{e}) for every e; fails at e = f(min G).
  for (Nat x = 0;; ++x)
    if (p.generator.contains(x)) return p.generator.subset_of(f.preimage(FinCofSet::cofinite({f(x)})));
}

bool is_continuous_sym(const FiniteModMap& f, const CofiniteSpace&, const CofiniteSpace&) {
  // Open sets are ∅ and the cofinite sets; the preimage of ω∖E is the
  // complement of f⁻¹(E), which is finite.
  return f.preimage(FinCofSet::all()).is_cofinite() && f.preimage(FinCofSet::empty()).is_finite();
}

ExcofWitness excof_witness(const std::vector<Nat>& f_set, Nat u, Nat b) {
  const std::vector<Nat> fs = normalize(f_set);
  if (std::binary_search(fs.begin(), fs.end(), u)) throw Error(ErrorCode::BadParameters, "u must lie outside F");
  if (b == u || std::binary_search(fs.begin(), fs.end(), b))
    throw Error(ErrorCode::BadParameters, "b must lie outside F ∪ {u}");

  const Nat m = std::max({fs.empty() ? 0 : fs.back(), u, b}) + fs.size() + 2;
  // h0: the increasing bijection ω∖F → ω∖{u}, then adjusted to fix b.
  std::map<Nat, Nat> table;
  Nat next = 0;
  for (Nat x = 0; x <= m; ++x) {
    if (std::binary_search(fs.begin(), fs.end(), x)) {
      table[x] = u;
      continue;
    }
    if (next == u) ++next;
    table[x] = next++;
  }
  Nat c = 0;
  for (auto& [x, y] : table)
    if (y == b && !std::binary_search(fs.begin(), fs.end(), x)) c = x;
  std::swap(table[b], table[c]);
  // Beyond m the increasing enumeration is x ↦ x + 1 − |F|.
  const std::int64_t shift = 1 - static_cast<std::int64_t>(fs.size());

  ExcofWitness w;
  w.f = FiniteModMap(table, shift);
  const FinCofSet v = FinCofSet::cofinite(fs);
  const FinCofSet u0 = FinCofSet::cofinite({u});
  w.continuous = is_continuous_sym(w.f, CofiniteSpace{}, CofiniteSpace{});
  w.fixes_b = w.f(b) == b;
  w.preimage_is_v = w.f.preimage(u0) == v;
  auto img = w.f.injective_image(v);
  w.bijective_on_v = img && *img == u0;
  w.collapses_f = true;
  for (Nat x : fs) w.collapses_f = w.collapses_f && w.f(x) == u;
  return w;
}

}  // namespace fintop::omega

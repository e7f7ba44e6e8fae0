#include "fintop/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fintop {

std::vector<unsigned> refine_colors(const std::vector<const FinSpace*>& spaces,
                                    std::vector<std::vector<unsigned>>* per_space) {
  std::vector<std::pair<std::size_t, Point>> index;
  for (std::size_t s = 0; s < spaces.size(); ++s)
    for (Point p = 0; p < spaces[s]->size(); ++p) index.emplace_back(s, p);

  std::vector<std::vector<unsigned>> color(spaces.size());
  for (std::size_t s = 0; s < spaces.size(); ++s) color[s].assign(spaces[s]->size(), 0);

  using Signature = std::tuple<unsigned, std::vector<unsigned>, std::vector<unsigned>>;
  std::size_t classes = 1;
  for (int round = 0;; ++round) {
    std::vector<Signature> sig;
    sig.reserve(index.size());
    for (auto [s, p] : index) {
      const FinSpace& x = *spaces[s];
      std::vector<unsigned> ups, downs;
      for (Point q : members(x.min_nbhd(p) & ~singleton(p))) ups.push_back(color[s][q]);
      for (Point q : members(x.closure(p) & ~singleton(p))) downs.push_back(color[s][q]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      sig.emplace_back(color[s][p], std::move(ups), std::move(downs));
    }
    std::vector<Signature> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < index.size(); ++i) {
      auto [s, p] = index[i];
      color[s][p] = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    if (sorted.size() == classes && round > 0) break;
    classes = sorted.size();
  }
  std::vector<unsigned> flat;
  for (auto& c : color) flat.insert(flat.end(), c.begin(), c.end());
  if (per_space) *per_space = std::move(color);
  return flat;
}

std::optional<std::vector<Point>> find_homeomorphism(const FinSpace& x, const FinSpace& y) {
  if (x.size() != y.size()) return std::nullopt;
  const unsigned n = x.size();
  if (n <= 16 && x.opens().size() != y.opens().size()) return std::nullopt;
  std::vector<std::vector<unsigned>> colors;
  refine_colors({&x, &y}, &colors);
  {
    auto cx = colors[0], cy = colors[1];
    std::sort(cx.begin(), cx.end());
    std::sort(cy.begin(), cy.end());
    if (cx != cy) return std::nullopt;
  }
  std::vector<Point> h(n, 0);
  PointSet used = 0;
  std::vector<PointSet> allowed(n + 1, 0);
  auto candidates = [&](Point p) {
    PointSet c = 0;
    for (Point q = 0; q < n; ++q)
      if (!has(used, q) && colors[1][q] == colors[0][p]) c |= singleton(q);
    for (Point r = 0; r < p; ++r) {
      PointSet keep = 0;
      for (Point q : members(c))
        if (x.leq(p, r) == y.leq(q, h[r]) && x.leq(r, p) == y.leq(h[r], q)) keep |= singleton(q);
      c = keep;
    }
    return c;
  };
  if (n == 0) return h;
  Point p = 0;
  allowed[0] = candidates(0);
  while (true) {
    if (allowed[p] == 0) {
      if (p == 0) return std::nullopt;
      --p;
      used &= ~singleton(h[p]);
      continue;
    }
    Point q = lowest(allowed[p]);
    allowed[p] &= allowed[p] - 1;
    h[p] = q;
    if (p + 1 == n) return h;
    used |= singleton(q);
    ++p;
    allowed[p] = candidates(p);
  }
}

FinSpace relabel(const FinSpace& x, const std::vector<Point>& perm) {
  const unsigned n = x.size();
  std::vector<Point> inv(n);
  for (Point k = 0; k < n; ++k) inv[perm[k]] = k;
  std::vector<PointSet> up(n, 0);
  for (Point k = 0; k < n; ++k)
    for (Point q : members(x.min_nbhd(perm[k]))) up[k] |= singleton(inv[q]);
  return FinSpace::from_min_nbhds(std::move(up));
}

namespace {

// Two points are twins when swapping them is an automorphism.
bool twins(const FinSpace& x, Point u, Point v) {
  PointSet mask = ~(singleton(u) | singleton(v));
  return (x.min_nbhd(u) & mask) == (x.min_nbhd(v) & mask) && (x.closure(u) & mask) == (x.closure(v) & mask) &&
         x.leq(u, v) == x.leq(v, u);
}

struct CanonSearch {
  const FinSpace& x;
  unsigned n;
  std::vector<unsigned> slot_color;  // colour required at each position
  std::vector<unsigned> color;
  std::vector<Point> perm;
  std::vector<std::uint8_t> code;  // current shell code
  std::vector<std::uint8_t> best_code;
  std::vector<Point> best_perm;
  bool have_best = false;
  PointSet used = 0;

  // Shell k holds, for j < k, the pair (k<=j, j<=k).
  void extend(Point k) {
    if (k == n) {
      if (!have_best || code < best_code) {
        best_code = code;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    std::vector<Point> tried;
    for (Point q = 0; q < n; ++q) {
      if (has(used, q) || color[q] != slot_color[k]) continue;
      bool redundant = false;
      for (Point t : tried)
        if (twins(x, t, q)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(q);
      std::size_t mark = code.size();
      for (Point j = 0; j < k; ++j) {
        code.push_back(x.leq(q, perm[j]) ? 1 : 0);
        code.push_back(x.leq(perm[j], q) ? 1 : 0);
      }
      // Compare the new prefix with the best code's prefix.
      bool worse = false;
      if (have_best) {
        auto cmp = std::lexicographical_compare_three_way(code.begin(), code.end(), best_code.begin(),
                                                          best_code.begin() + static_cast<long>(code.size()));
        worse = cmp > 0;
      }
      if (!worse) {
        perm[k] = q;
        used |= singleton(q);
        extend(k + 1);
        used &= ~singleton(q);
      }
      code.resize(mark);
    }
  }
};

}  // namespace

std::vector<Point> canonical_labelling(const FinSpace& x) {
  const unsigned n = x.size();
  std::vector<std::vector<unsigned>> colors;
  refine_colors({&x}, &colors);
  CanonSearch search{x, n, {}, colors[0], std::vector<Point>(n, 0), {}, {}, {}};
  search.slot_color = colors[0];
  std::sort(search.slot_color.begin(), search.slot_color.end());
  search.extend(0);
  return search.best_perm;
}

FinSpace canonical_form(const FinSpace& x) { return relabel(x, canonical_labelling(x)); }

}  // namespace fintop

#pragma once

#include <optional>

#include "fintop/core.hpp"

namespace fintop {

/// A prime space: exactly one non-isolated point.
struct PrimeView {
  FinSpace space;
  Point acc = 0;
};

/// Points whose singleton is not open.
PointSet accumulation_points(const FinSpace& x);
std::optional<PrimeView> is_prime(const FinSpace& x);

/// Same carrier; every point other than `a` isolated, neighbourhoods of `a`
/// unchanged. Discrete when `a` is isolated in X.
FinSpace prime_factor(const FinSpace& x, Point a);

struct PrimeDecomposition {
  FinSpace sum;
  SpaceMap map;  // point x of summand X_a ↦ x
};
PrimeDecomposition prime_decomposition(const FinSpace& x);

/// The retraction P → P' fixing P' and sending everything else to the
/// accumulation point. `s` must contain acc and keep it non-isolated.
SpaceMap prime_retraction(const PrimeView& p, PointSet s);

enum class GenKind { S, D, I, C, B };

/// Named generators. S is Sierpiński (point 1 isolated); D(n)/I(n) discrete
/// and indiscrete on n points; C(n) and B(n) live on {0..n}:
///   C(n): 0..n-1 isolated, neighbourhoods of n are the tails {β..n}, β < n;
///   B(n): a chain whose opens are ∅ and the tails {β..n}, β ≤ n.
FinSpace gen(GenKind kind, unsigned n = 0);

}  // namespace fintop

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fintop/prime.hpp"

namespace fintop {

enum class PinchKind { Triangle, DTriangle };

/// X△_bY or X▲_bY on the carrier X×Y, row-major: (x, y) ↦ x·|Y| + y.
struct PinchSpace {
  FinSpace base;
  FinSpace x_space;
  FinSpace y_space;
  Point b = 0;
  PinchKind kind = PinchKind::Triangle;
};

inline Point pair_index(const FinSpace& y, Point x, Point yy) { return x * y.size() + yy; }

/// Final topology w.r.t. f(x) = (x, b) and g_a(y) = (a, y). {b} must be closed.
PinchSpace triangle(const FinSpace& x, const FinSpace& y, Point b);
/// Initial topology w.r.t. h_a : X×Y → X×Y (product), h_a(x,y) = (x,b) for
/// x ≠ a and h_a(a,y) = (a,y). {b} must be closed.
PinchSpace dtriangle(const FinSpace& x, const FinSpace& y, Point b);

struct Pinched {
  FinSpace sub;
  PointSet carrier;  // the subset of X×Y the subspace lives on
  SpaceMap q;        // onto prime_factor(X, a), (x, y) ↦ x
};
/// Subspace of X△_bY on {(a,b)} ∪ (X∖{a})×(Y∖{b}) and its projection.
Pinched pinched_subspace(const FinSpace& x, const FinSpace& y, Point a, Point b);

/// A pointed space glued onto an isolated point of the prime space.
struct Pointed {
  FinSpace space;
  Point base = 0;
};

struct ASum {
  FinSpace space;
  SpaceMap phi;  // defining quotient map A ⊔ ⨆ X_b → F
  /// bristle[i] = φ(X_b) for the i-th isolated point b of A
  std::vector<PointSet> bristles;
};

/// Glues parts[i] by its base point onto the i-th isolated point of A
/// (ascending order). Points of A keep their labels; the remaining points of
/// each part follow in order.
ASum a_sum(const PrimeView& a, const std::vector<Pointed>& parts);

inline constexpr unsigned kTowerMaxPoints = 16;

struct Tower {
  PrimeView a_space;
  std::vector<FinSpace> levels;  // A_1 .. A_n
  /// addresses[k][p]: the coordinates (x_1..x_j) over A∖{a} of point p in A_{k+1}
  std::vector<std::vector<std::vector<Point>>> addresses;
  /// embeddings[k] : A_{k+1} → A_{k+2}, verified as embeddings
  std::vector<SpaceMap> embeddings;
};

/// |A_n| = 1 + Σ_{k=1..n} (|A|-1)^k.
unsigned tower_size(unsigned prime_size, unsigned n);
Tower iterate_a(const PrimeView& a, unsigned n);

struct LevelBaseReport {
  std::vector<PointSet> base;  // opens U ∋ a on the top level with prefix-closed addresses
  bool local_base = false;     // every open neighbourhood of a contains a member
  bool all_satisfy_eq1 = false;  // the level-by-level shrink of every V is open, prefix-closed, ⊆ V
  bool all_clopen = false;
};
LevelBaseReport check_level_base(const Tower& t);

struct PWitness {
  Point a = 0;
  PointSet u0 = 0;
  SpaceMap f;
};

/// Decides P(b, Y, Z). In a finite space every open local base at b contains
/// min_nbhd(b) and {min_nbhd(b)} is itself a base, so it suffices to find a
/// continuous f : Y → Z and an open U0 ∋ f(b) with f⁻¹(U0) = min_nbhd(b).
std::optional<PWitness> p_predicate(const FinSpace& y, Point b, const FinSpace& z);

/// Rebuilds the initial source {p, q, h_i} onto X△_bY from a P-witness and
/// checks that it is initial and jointly injective.
bool verify_lmp_source(const FinSpace& x, const FinSpace& y, Point b, const FinSpace& z, const PWitness& w);

}  // namespace fintop

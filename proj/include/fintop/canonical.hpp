#pragma once

#include <optional>
#include <vector>

#include "fintop/space.hpp"

namespace fintop {

/// Isomorphism-invariant colouring of points by iterated refinement of
/// (|up|, |down|) with the colour multisets of strict up- and down-sets.
/// Colours are ranks of sorted signatures, so they are comparable across
/// spaces refined together.
std::vector<unsigned> refine_colors(const std::vector<const FinSpace*>& spaces,
                                    std::vector<std::vector<unsigned>>* per_space = nullptr);

/// A bijection x ↦ h[x] carrying opens of X onto opens of Y, if any.
std::optional<std::vector<Point>> find_homeomorphism(const FinSpace& x, const FinSpace& y);

/// Canonical relabelling: homeomorphic spaces get identical results.
/// Among labellings that list points by refined colour, picks the one whose
/// specialization matrix, read shell by shell, is lexicographically least.
FinSpace canonical_form(const FinSpace& x);

/// The permutation used by canonical_form: result point k is x's point perm[k].
std::vector<Point> canonical_labelling(const FinSpace& x);

/// Relabels: result point k is x's point perm[k].
FinSpace relabel(const FinSpace& x, const std::vector<Point>& perm);

}  // namespace fintop

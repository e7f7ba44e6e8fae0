#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fintop/space.hpp"

namespace fintop {

/// Open sets as point lists, ordered by size and then lexicographically.
std::vector<std::vector<Point>> sorted_opens(const FinSpace& x);

/// {"points": n, "opens": [[...], ...]}
nlohmann::ordered_json space_to_json(const FinSpace& x);
/// Strict: the listed family must already be a topology.
FinSpace space_from_json(const nlohmann::json& j);

/// Hasse diagram of the specialization preorder, drawn bottom to top.
/// Points with equal closures are joined by undirected edges.
std::string to_dot(const FinSpace& x, const std::string& name = "space");

}  // namespace fintop

#include "fintop/io.hpp"

#include <sstream>

#include "fintop/core.hpp"
#include "fintop/prime.hpp"

namespace fintop {

std::vector<std::vector<Point>> sorted_opens(const FinSpace& x) {
  std::vector<std::vector<Point>> out;
  for (PointSet u : x.opens()) out.push_back(members(u));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

nlohmann::ordered_json space_to_json(const FinSpace& x) {
  nlohmann::ordered_json j;
  j["points"] = x.size();
  j["opens"] = sorted_opens(x);
  return j;
}

FinSpace space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw Error(ErrorCode::BadArgument, "space literal needs \"points\" and \"opens\"");
  if (!j["points"].is_number_unsigned()) throw Error(ErrorCode::BadArgument, "\"points\" must be a count");
  const auto n = j["points"].get<unsigned>();
  if (n > kMaxPoints) throw Error(ErrorCode::TooLarge, "space literal");
  std::vector<PointSet> opens;
  for (const auto& u : j["opens"]) {
    PointSet s = 0;
    for (const auto& p : u) {
      if (!p.is_number_unsigned() || p.get<unsigned>() >= n)
        throw Error(ErrorCode::BadArgument, "open set mentions a point outside 0.." + std::to_string(n) + "-1");
      s |= singleton(p.get<unsigned>());
    }
    opens.push_back(s);
  }
  return make_space(n, opens);
}

std::string to_dot(const FinSpace& x, const std::string& name) {
  const unsigned n = x.size();
  const PointSet acc = accumulation_points(x);
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Point p = 0; p < n; ++p) {
    out << "  " << p;
    if (has(acc, p)) out << " [shape=doublecircle]";
    out << ";\n";
  }
  // strictly above p, as sets of points
  auto strict_up = [&](Point p) { return x.min_nbhd(p) & ~x.closure(p); };
  PointSet drawn = 0;
  for (Point p = 0; p < n; ++p) {
    PointSet cls = x.min_nbhd(p) & x.closure(p);
    // one chain of undirected edges per equivalence class
    Point prev = p;
    if (!has(drawn, p))
      for (Point q : members(cls & ~singleton(p))) {
        out << "  " << prev << " -> " << q << " [dir=none, style=dashed];\n";
        prev = q;
      }
    drawn |= cls;
  }
  PointSet reps = 0, seen = 0;
  for (Point p = 0; p < n; ++p)
    if (!has(seen, p)) {
      reps |= singleton(p);
      seen |= x.min_nbhd(p) & x.closure(p);
    }
  for (Point p : members(reps)) {
    PointSet above = strict_up(p) & reps;
    for (Point q : members(above)) {
      bool covered = true;
      for (Point r : members(above))
        if (r != q && has(strict_up(r), q)) covered = false;
      if (covered) out << "  " << p << " -> " << q << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fintop

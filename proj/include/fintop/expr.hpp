#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fintop/omega.hpp"
#include "fintop/space.hpp"

namespace fintop::expr {

/// Syntax tree of the construction language.
///   expr  := INT | list | json | fincof | NAME | NAME '(' args ')'
///   asum  := 'asum' '(' expr ';' [expr '@' INT {',' expr '@' INT}] ')'
struct Expr {
  enum class Kind { Int, List, Json, FinCof, Name, Call, At };
  Kind kind = Kind::Int;
  std::uint64_t number = 0;
  /// Name/Call: identifier. Json: compact text. FinCof: "finite" or "cofinite".
  std::string text;
  /// Call arguments, List/FinCof items, or {space, point} for At.
  std::vector<Expr> args;

  friend bool operator==(const Expr&, const Expr&) = default;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(unsigned line, unsigned col, std::string expected);
  unsigned line() const { return line_; }
  unsigned col() const { return col_; }
  const std::string& expected() const { return expected_; }

 private:
  unsigned line_, col_;
  std::string expected_;
};

Expr parse(const std::string& src);
std::string print(const Expr& e);

using Value = std::variant<FinSpace, omega::SymbolicPrimeSpace, omega::CofiniteSpace, omega::FinCofSet>;

Value evaluate(const Expr& e);
/// Evaluates and requires a finite space.
FinSpace evaluate_space(const Expr& e);
FinSpace evaluate_space(const std::string& src);

/// JSON text for any value; finite spaces use the space literal format.
std::string value_json(const Value& v);

}  // namespace fintop::expr

#include <doctest.h>

#include <random>

#include "fintop/canonical.hpp"
#include "fintop/classes.hpp"
#include "fintop/expr.hpp"
#include "fintop/io.hpp"

using namespace fintop;
using expr::Expr;

namespace {

Expr call(std::string name, std::vector<Expr> args) { return Expr{Expr::Kind::Call, 0, std::move(name), std::move(args)}; }
Expr name(std::string n) { return Expr{Expr::Kind::Name, 0, std::move(n), {}}; }
Expr num(std::uint64_t v) { return Expr{Expr::Kind::Int, v, {}, {}}; }

Expr random_expr(std::mt19937_64& rng, int depth) {
  static const std::vector<std::pair<std::string, unsigned>> ops{
      {"D", 1},   {"I", 1},    {"C", 1},     {"B", 1},     {"prod", 2}, {"sub", 2}, {"q", 2},
      {"pf", 2},  {"tri", 3},  {"dtri", 3},  {"pinch", 4}, {"tower", 2}, {"r0", 1}, {"sum", 0}};
  const unsigned pick = static_cast<unsigned>(rng() % (depth > 0 ? 9 : 5));
  switch (pick) {
    case 0:
      return num(rng() % 3 ? rng() % 10 : rng());
    case 1: {
      static const char* names[] = {"S", "Comega", "Cof"};
      return name(names[rng() % 3]);
    }
    case 2: {
      Expr e{Expr::Kind::FinCof, 0, rng() % 2 ? "finite" : "cofinite", {}};
      for (unsigned k = rng() % 4; k > 0; --k) e.args.push_back(num(rng() % 50));
      return e;
    }
    case 3: {
      auto xs = universe_upto(3);
      return Expr{Expr::Kind::Json, 0, nlohmann::json::parse(space_to_json(xs[rng() % xs.size()]).dump()).dump(), {}};
    }
    case 4: {
      Expr e{Expr::Kind::List, 0, {}, {}};
      for (unsigned k = rng() % 4; k > 0; --k) e.args.push_back(num(rng() % 9));
      return e;
    }
    case 5: {
      Expr e = call("asum", {random_expr(rng, depth - 1)});
      for (unsigned k = rng() % 3; k > 0; --k)
        e.args.push_back(Expr{Expr::Kind::At, 0, {}, {random_expr(rng, depth - 1), num(rng() % 4)}});
      return e;
    }
    default: {
      const auto& [op, arity] = ops[rng() % ops.size()];
      unsigned n = op == "sum" ? static_cast<unsigned>(rng() % 4) : arity;
      std::vector<Expr> args;
      for (unsigned i = 0; i < n; ++i) args.push_back(random_expr(rng, depth - 1));
      return call(op, std::move(args));
    }
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(expr::parse("tri(S, S, 0)") == call("tri", {name("S"), name("S"), num(0)}));
  CHECK(expr::parse("pf(sum(S,S), 2)") == call("pf", {call("sum", {name("S"), name("S")}), num(2)}));
  CHECK(expr::parse(" \n tri( S ,S,\t0 ) ") == expr::parse("tri(S,S,0)"));
  try {
    expr::parse("tri(S, S)");
    FAIL("accepted a short argument list");
  } catch (const expr::SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() == 9);
    CHECK(e.expected() == "3 arguments for tri");
  }
  try {
    expr::parse("sum(S,\n  foo(1))");
    FAIL("accepted an unknown name");
  } catch (const expr::SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
  CHECK_THROWS_AS(expr::parse("S(1)"), expr::SyntaxError);
  CHECK_THROWS_AS(expr::parse("D(1"), expr::SyntaxError);
  CHECK_THROWS_AS(expr::parse("D(1) x"), expr::SyntaxError);
  CHECK_THROWS_AS(expr::parse("asum(S; S)"), expr::SyntaxError);
  CHECK_THROWS_AS(expr::parse("{\"points\": 2"), expr::SyntaxError);
  CHECK_THROWS_AS(expr::parse("99999999999999999999"), expr::SyntaxError);
}

TEST_CASE("parse and print round-trip") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 2000; ++i) {
    Expr e = random_expr(rng, 4);
    std::string text = expr::print(e);
    CHECK_MESSAGE(expr::parse(text) == e, text);
    CHECK(expr::print(expr::parse(text)) == text);
  }
}

TEST_CASE("evaluation") {
  using expr::evaluate_space;
  CHECK(evaluate_space("B(2)").opens() == std::vector<PointSet>{0, 0b100, 0b110, 0b111});
  CHECK(evaluate_space("S") == sierpinski());
  CHECK(evaluate_space("sum(S, S)").opens().size() == 9);
  CHECK(evaluate_space("sum()").size() == 0);
  CHECK(evaluate_space("prod(D(2), D(2))") == FinSpace::discrete(4));
  CHECK(find_homeomorphism(evaluate_space("sub(C(3), [2, 3])"), sierpinski()));
  CHECK(evaluate_space("q(S, [0, 0])") == point_space());
  CHECK(evaluate_space("pf(sum(S,S), 2)") == prime_factor(sum({sierpinski(), sierpinski()}).space, 2));
  CHECK(evaluate_space("tri(S, S, 0)") == triangle(sierpinski(), sierpinski(), 0).base);
  CHECK(evaluate_space("dtri(S, S, 0)") == dtriangle(sierpinski(), sierpinski(), 0).base);
  CHECK(evaluate_space("pinch(S, S, 0, 0)").size() == 2);
  CHECK(evaluate_space("asum(S; S@0)").size() == 3);
  CHECK(evaluate_space("asum(C(2); S@0, I(2)@1)").size() == 5);
  CHECK(evaluate_space("tower(S, 3)").size() == 4);
  CHECK(evaluate_space("r0(I(2))") == point_space());
  CHECK(evaluate_space(R"({"points": 2, "opens": [[], [1], [0, 1]]})") == sierpinski());
  CHECK(check_property(evaluate_space("tri(S,S,0)"), Property::T0));

  CHECK_THROWS_AS(evaluate_space("pf(S, 2)"), Error);
  CHECK_THROWS_AS(evaluate_space("tri(S, S, 1)"), Error);
  CHECK_THROWS_AS(evaluate_space("asum(I(2); S@0)"), Error);
  CHECK_THROWS_AS(evaluate_space("Comega"), Error);
  CHECK_THROWS_AS(evaluate_space(R"({"points": 2, "opens": [[], [0]]})"), Error);
  CHECK_THROWS_AS(evaluate_space("prod(D(9), D(9))"), Error);
}

TEST_CASE("symbolic values") {
  auto v = expr::evaluate(expr::parse("Comega"));
  CHECK(std::holds_alternative<omega::SymbolicPrimeSpace>(v));
  CHECK(expr::value_json(v) == R"({"kind":"symbolic_prime","carrier":"omega+star","filter":"cofinite"})");
  auto c = expr::evaluate(expr::parse("{cofinite:[2, 1]}"));
  REQUIRE(std::holds_alternative<omega::FinCofSet>(c));
  CHECK(std::get<omega::FinCofSet>(c) == omega::FinCofSet::cofinite({1, 2}));
  CHECK(std::holds_alternative<omega::CofiniteSpace>(expr::evaluate(expr::parse("Cof"))));
  CHECK(expr::value_json(expr::evaluate(expr::parse("B(2)"))) ==
        R"({"points":3,"opens":[[],[2],[1,2],[0,1,2]]})");
}

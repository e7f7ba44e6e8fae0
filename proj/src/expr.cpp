#include "fintop/expr.hpp"

#include <cctype>
#include <map>
#include <optional>

#include <json.hpp>

#include "fintop/classes.hpp"
#include "fintop/io.hpp"

namespace fintop::expr {

SyntaxError::SyntaxError(unsigned line, unsigned col, std::string expected)
    : std::runtime_error("syntax error at " + std::to_string(line) + ":" + std::to_string(col) + ": expected " +
                         expected),
      line_(line),
      col_(col),
      expected_(std::move(expected)) {}

namespace {

struct Arity {
  unsigned min, max;
};
constexpr unsigned kMany = ~0u;

const std::map<std::string, Arity>& call_arities() {
  static const std::map<std::string, Arity> table{
      {"D", {1, 1}},     {"I", {1, 1}},    {"C", {1, 1}},   {"B", {1, 1}},     {"sum", {0, kMany}},
      {"prod", {2, 2}},  {"sub", {2, 2}},  {"q", {2, 2}},   {"pf", {2, 2}},    {"tri", {3, 3}},
      {"dtri", {3, 3}},  {"pinch", {4, 4}}, {"tower", {2, 2}}, {"r0", {1, 1}},
  };
  return table;
}

bool is_constant(const std::string& name) { return name == "S" || name == "Comega" || name == "Cof"; }

class Parser {
 public:
  explicit Parser(const std::string& src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip();
    if (pos_ != src_.size()) fail("end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    unsigned line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, expected);
  }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("'") + c + "'");
    ++pos_;
  }

  std::uint64_t integer() {
    skip();
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("integer");
    std::uint64_t v = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(src_[pos_] - '0');
      if (v > (~std::uint64_t{0} - d) / 10) fail("integer below 2^64");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return src_.substr(start, pos_ - start);
  }

  Expr expr() {
    skip();
    if (pos_ >= src_.size()) fail("expression");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr{Expr::Kind::Int, integer(), {}, {}};
    if (c == '[') return list();
    if (c == '{') return brace();
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail("expression");
  }

  Expr list() {
    expect('[');
    Expr e{Expr::Kind::List, 0, {}, {}};
    if (peek(']')) {
      ++pos_;
      return e;
    }
    while (true) {
      e.args.push_back(expr());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return e;
    }
  }

  Expr brace() {
    const std::size_t open = pos_;
    ++pos_;
    skip();
    std::size_t save = pos_;
    std::string key = ident();
    if (key == "finite" || key == "cofinite") {
      expect(':');
      Expr items = list();
      expect('}');
      for (const Expr& i : items.args)
        if (i.kind != Expr::Kind::Int) fail("natural numbers in a finite/cofinite literal");
      return Expr{Expr::Kind::FinCof, 0, key, items.args};
    }
    pos_ = save;
    // JSON space literal: take the balanced braces and hand them to the JSON parser.
    int depth = 1;
    bool in_string = false;
    while (pos_ < src_.size() && depth > 0) {
      char c = src_[pos_++];
      if (in_string) {
        if (c == '\\')
          ++pos_;
        else if (c == '"')
          in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '{') {
        ++depth;
      } else if (c == '}') {
        --depth;
      }
    }
    if (depth != 0) fail("'}'");
    auto j = nlohmann::json::parse(src_.substr(open, pos_ - open), nullptr, false);
    if (j.is_discarded()) {
      pos_ = open;
      fail("JSON space literal");
    }
    return Expr{Expr::Kind::Json, 0, j.dump(), {}};
  }

  Expr named() {
    const std::size_t start = pos_;
    std::string name = ident();
    if (is_constant(name)) {
      if (peek('(')) fail("no argument list after " + name);
      return Expr{Expr::Kind::Name, 0, name, {}};
    }
    if (name == "asum") return asum();
    auto it = call_arities().find(name);
    if (it == call_arities().end()) {
      pos_ = start;
      fail("generator or operator name");
    }
    expect('(');
    Expr e{Expr::Kind::Call, 0, name, {}};
    if (!peek(')')) {
      while (true) {
        e.args.push_back(expr());
        if (peek(',')) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    skip();
    const Arity a = it->second;
    if (e.args.size() < a.min || e.args.size() > a.max) {
      std::string want = a.min == a.max ? std::to_string(a.min) : "at least " + std::to_string(a.min);
      fail(want + " argument" + (a.min == 1 && a.max == 1 ? "" : "s") + " for " + name);
    }
    expect(')');
    return e;
  }

  Expr asum() {
    expect('(');
    Expr e{Expr::Kind::Call, 0, "asum", {}};
    e.args.push_back(expr());
    expect(';');
    if (!peek(')')) {
      while (true) {
        Expr part = expr();
        expect('@');
        Expr point{Expr::Kind::Int, integer(), {}, {}};
        e.args.push_back(Expr{Expr::Kind::At, 0, {}, {std::move(part), std::move(point)}});
        if (peek(',')) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect(')');
    return e;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(const std::string& src) { return Parser(src).parse_all(); }

std::string print(const Expr& e) {
  auto join = [](const std::vector<Expr>& xs, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < xs.size(); ++i) {
      if (i > from) out += ", ";
      out += print(xs[i]);
    }
    return out;
  };
  switch (e.kind) {
    case Expr::Kind::Int:
      return std::to_string(e.number);
    case Expr::Kind::List:
      return "[" + join(e.args, 0) + "]";
    case Expr::Kind::Json:
      return e.text;
    case Expr::Kind::FinCof: {
      std::string out = "{" + e.text + ":[";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "," : "") + std::to_string(e.args[i].number);
      return out + "]}";
    }
    case Expr::Kind::Name:
      return e.text;
    case Expr::Kind::At:
      return print(e.args[0]) + "@" + print(e.args[1]);
    case Expr::Kind::Call:
      if (e.text == "asum") return "asum(" + print(e.args[0]) + "; " + join(e.args, 1) + ")";
      return e.text + "(" + join(e.args, 0) + ")";
  }
  return {};
}

namespace {

std::uint64_t as_int(const Expr& e) {
  if (e.kind != Expr::Kind::Int) throw Error(ErrorCode::BadArgument, "expected an integer, got " + print(e));
  return e.number;
}

Point as_point(const Expr& e, const FinSpace& x) {
  std::uint64_t p = as_int(e);
  if (p >= x.size())
    throw Error(ErrorCode::BadArgument, "point " + std::to_string(p) + " outside a " + std::to_string(x.size()) +
                                            "-point space");
  return static_cast<Point>(p);
}

unsigned as_count(const Expr& e) {
  std::uint64_t n = as_int(e);
  if (n > 1000) throw Error(ErrorCode::TooLarge, "size argument " + std::to_string(n));
  return static_cast<unsigned>(n);
}

std::vector<std::uint64_t> as_list(const Expr& e) {
  if (e.kind != Expr::Kind::List) throw Error(ErrorCode::BadArgument, "expected a list, got " + print(e));
  std::vector<std::uint64_t> out;
  for (const Expr& i : e.args) out.push_back(as_int(i));
  return out;
}

}  // namespace

FinSpace evaluate_space(const Expr& e) {
  Value v = evaluate(e);
  if (auto* x = std::get_if<FinSpace>(&v)) return *x;
  throw Error(ErrorCode::BadArgument, print(e) + " is not a finite space");
}

FinSpace evaluate_space(const std::string& src) { return evaluate_space(parse(src)); }

Value evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Int:
    case Expr::Kind::List:
    case Expr::Kind::At:
      throw Error(ErrorCode::BadArgument, print(e) + " is not a space");
    case Expr::Kind::Json:
      return space_from_json(nlohmann::json::parse(e.text));
    case Expr::Kind::FinCof: {
      std::vector<omega::Nat> pts;
      for (const Expr& i : e.args) pts.push_back(i.number);
      return e.text == "finite" ? omega::FinCofSet::finite(pts) : omega::FinCofSet::cofinite(pts);
    }
    case Expr::Kind::Name:
      if (e.text == "S") return gen(GenKind::S);
      if (e.text == "Comega") return omega::SymbolicPrimeSpace::c_omega();
      return omega::CofiniteSpace{};
    case Expr::Kind::Call:
      break;
  }
  const std::string& op = e.text;
  const auto& a = e.args;
  if (op == "D") return gen(GenKind::D, as_count(a[0]));
  if (op == "I") return gen(GenKind::I, as_count(a[0]));
  if (op == "C") return gen(GenKind::C, as_count(a[0]));
  if (op == "B") return gen(GenKind::B, as_count(a[0]));
  if (op == "sum") {
    std::vector<FinSpace> parts;
    unsigned total = 0;
    for (const Expr& p : a) {
      parts.push_back(evaluate_space(p));
      total += parts.back().size();
    }
    if (total > kMaxPoints) throw Error(ErrorCode::TooLarge, "sum has " + std::to_string(total) + " points");
    return sum(parts).space;
  }
  if (op == "prod") {
    FinSpace x = evaluate_space(a[0]), y = evaluate_space(a[1]);
    if (x.size() * y.size() > kMaxPoints) throw Error(ErrorCode::TooLarge, "product carrier");
    return product(x, y).space;
  }
  if (op == "sub") {
    FinSpace x = evaluate_space(a[0]);
    PointSet s = 0;
    for (std::uint64_t p : as_list(a[1])) s |= singleton(as_point(Expr{Expr::Kind::Int, p, {}, {}}, x));
    return subspace(x, s).space;
  }
  if (op == "q") {
    FinSpace x = evaluate_space(a[0]);
    auto f = as_list(a[1]);
    if (f.size() != x.size())
      throw Error(ErrorCode::BadArgument, "quotient map needs one image per point (" + std::to_string(x.size()) + ")");
    std::vector<Point> g;
    Point m = 0;
    for (std::uint64_t v : f) {
      if (v >= kMaxPoints) throw Error(ErrorCode::TooLarge, "quotient target");
      g.push_back(static_cast<Point>(v));
      m = std::max(m, g.back() + 1);
    }
    return quotient_by_map(x, g, m).space;
  }
  if (op == "pf") {
    FinSpace x = evaluate_space(a[0]);
    return prime_factor(x, as_point(a[1], x));
  }
  if (op == "tri" || op == "dtri") {
    FinSpace x = evaluate_space(a[0]), y = evaluate_space(a[1]);
    Point b = as_point(a[2], y);
    return op == "tri" ? triangle(x, y, b).base : dtriangle(x, y, b).base;
  }
  if (op == "pinch") {
    FinSpace x = evaluate_space(a[0]), y = evaluate_space(a[1]);
    return pinched_subspace(x, y, as_point(a[2], x), as_point(a[3], y)).sub;
  }
  if (op == "asum" || op == "tower") {
    FinSpace base = evaluate_space(a[0]);
    auto view = is_prime(base);
    if (!view) throw Error(ErrorCode::BadArgument, op + " needs a prime space (exactly one accumulation point)");
    if (op == "tower") return iterate_a(*view, as_count(a[1])).levels.back();
    std::vector<Pointed> parts;
    for (std::size_t i = 1; i < a.size(); ++i) {
      FinSpace part = evaluate_space(a[i].args[0]);
      Point p = as_point(a[i].args[1], part);
      parts.push_back(Pointed{std::move(part), p});
    }
    return a_sum(*view, parts).space;
  }
  if (op == "r0") return t0_reflection(evaluate_space(a[0])).rx;
  throw Error(ErrorCode::BadArgument, "unknown operator " + op);
}

std::string value_json(const Value& v) {
  if (auto* x = std::get_if<FinSpace>(&v)) return space_to_json(*x).dump();
  nlohmann::ordered_json j;
  if (auto* p = std::get_if<omega::SymbolicPrimeSpace>(&v)) {
    j["kind"] = "symbolic_prime";
    j["carrier"] = "omega+star";
    if (p->filter == omega::SymbolicPrimeSpace::Filter::Cofinite) {
      j["filter"] = "cofinite";
    } else {
      j["filter"] = "principal";
      j["generator"] = p->generator.str();
    }
  } else if (std::holds_alternative<omega::CofiniteSpace>(v)) {
    j["kind"] = "cofinite_space";
    j["carrier"] = "omega";
  } else {
    const auto& s = std::get<omega::FinCofSet>(v);
    j["kind"] = "fincof";
    j["mode"] = s.is_finite() ? "finite" : "cofinite";
    j["support"] = s.support();
  }
  return j.dump();
}

}  // namespace fintop::expr

#include "polarpath/sysfile.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace polarpath {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;
  int line;

  explicit Lexer(const std::string& text, int line_no) : s(text), line(line_no) {}

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    skip_ws();
    return s[pos++];
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& why) { throw ParseError(why, line, col()); }
};

struct PolyParser {
  Lexer lex;
  const std::vector<std::string>& vars;
  int n;

  PolyParser(const std::string& text, const std::vector<std::string>& variables, int line)
      : lex(text, line), vars(variables), n(static_cast<int>(variables.size())) {}

  MultiPoly parse() {
    MultiPoly out = expr();
    if (!lex.eof()) lex.fail("unexpected trailing input");
    return out;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (!lex.eof()) {
      char c = lex.peek();
      if (c == '+') {
        lex.take();
        acc += term();
      } else if (c == '-') {
        lex.take();
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (!lex.eof()) {
      char c = lex.peek();
      if (c == '*') {
        lex.take();
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (!lex.eof() && lex.peek() == '^') {
      lex.take();
      long e = integer();
      if (e < 0) lex.fail("negative exponent");
      MultiPoly acc = MultiPoly::constant(n, Rational(1));
      for (long i = 0; i < e; ++i) acc = acc * b;
      return acc;
    }
    return b;
  }

  MultiPoly base() {
    char c = lex.peek();
    if (c == '(') {
      lex.take();
      MultiPoly inner = expr();
      if (lex.peek() != ')') lex.fail("expected ')'");
      lex.take();
      return inner;
    }
    if (c == '-') {
      lex.take();
      return -base();
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      Rational q = rational();
      return MultiPoly::constant(n, q);
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      for (int i = 0; i < n; ++i)
        if (vars[i] == name) return MultiPoly::variable(n, i, Rational(1));
      lex.fail("unknown variable '" + name + "'");
    }
    lex.fail("unexpected character");
  }

  std::string ident() {
    lex.skip_ws();
    size_t start = lex.pos;
    while (lex.pos < lex.s.size() &&
           (isalnum(static_cast<unsigned char>(lex.s[lex.pos])) || lex.s[lex.pos] == '_'))
      ++lex.pos;
    return lex.s.substr(start, lex.pos - start);
  }

  long integer() {
    lex.skip_ws();
    size_t start = lex.pos;
    while (lex.pos < lex.s.size() && isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
      ++lex.pos;
    if (start == lex.pos) lex.fail("expected an integer");
    return std::stol(lex.s.substr(start, lex.pos - start));
  }

  Rational rational() {
    lex.skip_ws();
    size_t start = lex.pos;
    while (lex.pos < lex.s.size() && isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
      ++lex.pos;
    std::string num = lex.s.substr(start, lex.pos - start);
    if (lex.pos < lex.s.size() && lex.s[lex.pos] == '/') {
      ++lex.pos;
      size_t dstart = lex.pos;
      while (lex.pos < lex.s.size() && isdigit(static_cast<unsigned char>(lex.s[lex.pos])))
        ++lex.pos;
      if (dstart == lex.pos) lex.fail("expected a denominator");
      std::string den = lex.s.substr(dstart, lex.pos - dstart);
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }
};

}  // namespace

MultiPoly parse_polynomial(const std::string& text,
                           const std::vector<std::string>& variables, int line_no) {
  PolyParser p(text, variables, line_no);
  return p.parse();
}

std::string print_polynomial(const MultiPoly& f, const std::vector<std::string>& variables) {
  return f.str(&variables);
}

SystemFile parse_system_file(const std::string& text) {
  SystemFile out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_vars = false;
  while (std::getline(in, line)) {
    ++line_no;
    // strip comments and whitespace-only lines
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    line = line.substr(i);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind("vars:", 0) == 0) {
      if (have_vars) throw ParseError("duplicate vars: line", line_no, 1);
      std::istringstream vs(line.substr(5));
      std::string v;
      while (vs >> v) {
        for (auto& existing : out.variables)
          if (existing == v) throw ParseError("duplicate variable " + v, line_no, 1);
        out.variables.push_back(v);
      }
      if (out.variables.empty()) throw ParseError("vars: line lists no variables", line_no, 6);
      have_vars = true;
    } else if (line.rfind("eq:", 0) == 0) {
      if (!have_vars) throw ParseError("eq: before vars:", line_no, 1);
      MultiPoly f = parse_polynomial(line.substr(3), out.variables, line_no);
      if (f.is_zero()) throw ParseError("zero equation", line_no, 4);
      out.equations.push_back(std::move(f));
    } else {
      throw ParseError("expected 'vars:' or 'eq:'", line_no, 1);
    }
  }
  if (!have_vars) throw ParseError("missing vars: line", line_no ? line_no : 1, 1);
  if (out.equations.empty()) throw ParseError("empty system", line_no, 1);
  return out;
}

QueryPoints parse_points_file(const std::string& text, int n, Rng& rng) {
  QueryPoints out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("points file is not valid JSON: ") + e.what());
  }
  if (j.contains("points")) {
    for (auto& row : j.at("points")) {
      std::vector<Rational> pt;
      for (auto& x : row) pt.push_back(parse_rational(x.get<std::string>()));
      if ((int)pt.size() != n) throw InvalidInput("query point arity mismatch");
      out.tuples.push_back(std::move(pt));
    }
    out.param = from_rational_points(n, out.tuples, rng);
    return out;
  }
  out.param = zero_dim_from_json(text);
  if (out.param.n != n) throw InvalidInput("query parametrization arity mismatch");
  auto rep = validate(out.param);
  if (!rep.ok) throw InvalidInput("query parametrization invalid: " + rep.reason);
  return out;
}

}  // namespace polarpath

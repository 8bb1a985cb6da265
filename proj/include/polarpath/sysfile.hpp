#ifndef POLARPATH_SYSFILE_HPP
#define POLARPATH_SYSFILE_HPP

#include "polarpath/params.hpp"

namespace polarpath {

// parsed `vars:` / `eq:` system file
struct SystemFile {
  std::vector<std::string> variables;
  std::vector<MultiPoly> equations;
};

struct ParseError : InvalidInput {
  int line, column;
  ParseError(const std::string& what, int l, int c)
      : InvalidInput(what + " (line " + std::to_string(l) + ", column " +
                     std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

SystemFile parse_system_file(const std::string& text);

// single infix polynomial over the given variables (used in tests and tools)
MultiPoly parse_polynomial(const std::string& text,
                           const std::vector<std::string>& variables, int line_no = 1);

std::string print_polynomial(const MultiPoly& f, const std::vector<std::string>& variables);

// query points file: {"points": [["1","0"], ...]} or a zero-dimensional
// parametrization JSON; returns the parametrization and explicit tuples when
// available
struct QueryPoints {
  ZeroDimParam param;
  std::vector<std::vector<Rational>> tuples;
};

QueryPoints parse_points_file(const std::string& text, int n, Rng& rng);

}  // namespace polarpath

#endif

#include "polarpath/monomial.hpp"

namespace polarpath {

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>* names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 0; i < m.n; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names ? (*names)[i] : "x" + std::to_string(i + 1);
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

}  // namespace polarpath

#include "polarpath/multipoly.hpp"

namespace polarpath {

MultiPoly primitive_part(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Int den_lcm = 1, num_gcd = 0;
  for (auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.c.get_den().get_mpz_t());
  }
  std::vector<MultiPoly::Term> ts;
  ts.reserve(f.term_count());
  for (auto& t : f.terms()) {
    Rational c = t.c * Rational(den_lcm);
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    ts.push_back({t.m, c});
  }
  if (sgn(ts.front().c) < 0) num_gcd = -num_gcd;
  for (auto& t : ts) {
    t.c /= Rational(num_gcd);
  }
  return MultiPoly::from_terms(f.nvars(), std::move(ts));
}

MultiPoly make_monic(const MultiPoly& f) {
  if (f.is_zero()) return f;
  Rational inv = 1 / f.lead().c;
  return f * inv;
}

ModPoly make_monic(const ModPoly& f) {
  if (f.is_zero()) return f;
  return f * f.lead().c.inv();
}

bool reduce_poly_mod(const MultiPoly& f, uint32_t p, ModPoly& out) {
  std::vector<ModPoly::Term> ts;
  ts.reserve(f.term_count());
  for (auto& t : f.terms()) {
    Zp c;
    if (!reduce_mod(t.c, p, c)) return false;
    if (!c.is_zero()) ts.push_back({t.m, c});
  }
  out = ModPoly::from_terms(f.nvars(), std::move(ts));
  return true;
}

Rational eval_at(const MultiPoly& f, const std::vector<Rational>& x) {
  RationalRing ring;
  return f.eval(ring, x);
}

template <>
std::string Poly<Rational>::str(const std::vector<std::string>* names) const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& t : t_) {
    std::string c = rational_to_string(t.c);
    bool neg = !c.empty() && c[0] == '-';
    if (s.empty()) {
      s += neg ? "-" : "";
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mag = neg ? c.substr(1) : c;
    std::string mono = monomial_to_string(t.m, names);
    if (mono == "1")
      s += mag;
    else if (mag == "1")
      s += mono;
    else
      s += mag + "*" + mono;
  }
  return s;
}

template <>
std::string Poly<Zp>::str(const std::vector<std::string>* names) const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto& t : t_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c.v) + "*" + monomial_to_string(t.m, names);
  }
  return s;
}

}  // namespace polarpath

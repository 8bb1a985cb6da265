#include "polarpath/rational.hpp"

namespace polarpath {

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
    throw std::invalid_argument("crt_pair: moduli not coprime");
  Int m = m1 * m2;
  Int t = ((r2 - r1) * inv) % m2;
  Int x = (r1 + t * m1) % m;
  if (x < 0) x += m;
  return x;
}

bool rational_reconstruct(const Int& a, const Int& m, Rational& out) {
  // half-extended Euclid; stop when remainder below sqrt(m/2)
  Int bound;
  mpz_sqrt(bound.get_mpz_t(), Int(m / 2).get_mpz_t());
  Int r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Int t0 = 0, t1 = 1;
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int t2 = t0 - q * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (t1 == 0) return false;
  if (sgn(t1) < 0) { t1 = -t1; r1 = -r1; }
  if (t1 > bound) return false;
  Int g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) {
    // non-normal form; reject so callers wait for more primes
    return false;
  }
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

}  // namespace polarpath

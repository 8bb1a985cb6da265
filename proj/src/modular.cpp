#include "polarpath/modular.hpp"

#include <algorithm>

namespace polarpath {

Zp Zp::inv() const {
  assert(v != 0);
  // extended Euclid on (v, p)
  int64_t a = v, b = p, x0 = 1, x1 = 0;
  while (b != 0) {
    int64_t q = a / b;
    int64_t t = a - q * b;
    a = b; b = t;
    t = x0 - q * x1;
    x0 = x1; x1 = t;
  }
  assert(a == 1);
  if (x0 < 0) x0 += p;
  return raw(static_cast<uint32_t>(x0), p);
}

uint32_t mod_of_int(const Int& z, uint32_t p) {
  Int r = z % p;
  if (r < 0) r += p;
  return static_cast<uint32_t>(r.get_ui());
}

bool reduce_mod(const Rational& q, uint32_t p, Zp& out) {
  uint32_t den = mod_of_int(q.get_den(), p);
  if (den == 0) return false;
  uint32_t num = mod_of_int(q.get_num(), p);
  out = Zp::raw(num, p) * Zp::raw(den, p).inv();
  return true;
}

uint32_t PrimeStream::next() {
  for (;;) {
    // random odd candidate in [2^30, 2^31)
    uint64_t c = (rng_.next() % (1u << 30)) + (1u << 30);
    c |= 1;
    Int z(static_cast<unsigned long>(c));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    if (z >= Int(1) << 31) continue;
    uint32_t p = static_cast<uint32_t>(z.get_ui());
    if (std::find(used_.begin(), used_.end(), p) != used_.end()) continue;
    used_.push_back(p);
    return p;
  }
}

}  // namespace polarpath

#ifndef POLARPATH_MODULAR_HPP
#define POLARPATH_MODULAR_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "polarpath/rational.hpp"

namespace polarpath {

// Element of Z/pZ for a 31-bit prime p, carried per element so that the
// polynomial templates stay context-free.
struct Zp {
  uint32_t v = 0;
  uint32_t p = 0;

  Zp() = default;
  Zp(uint64_t value, uint32_t prime) : v(static_cast<uint32_t>(value % prime)), p(prime) {}

  static Zp zero(uint32_t p) { return Zp(0, p); }
  static Zp one(uint32_t p) { return Zp(1, p); }

  bool is_zero() const { return v == 0; }

  Zp operator+(const Zp& o) const {
    assert(p == o.p);
    uint32_t s = v + o.v;
    if (s >= p) s -= p;
    return raw(s, p);
  }
  Zp operator-(const Zp& o) const {
    assert(p == o.p);
    uint32_t s = v >= o.v ? v - o.v : v + p - o.v;
    return raw(s, p);
  }
  Zp operator*(const Zp& o) const {
    assert(p == o.p);
    return raw(static_cast<uint32_t>((uint64_t)v * o.v % p), p);
  }
  Zp operator-() const { return raw(v == 0 ? 0 : p - v, p); }
  Zp inv() const;
  Zp operator/(const Zp& o) const { return *this * o.inv(); }
  bool operator==(const Zp& o) const { return v == o.v && p == o.p; }
  bool operator!=(const Zp& o) const { return !(*this == o); }

  Zp& operator+=(const Zp& o) { return *this = *this + o; }
  Zp& operator-=(const Zp& o) { return *this = *this - o; }
  Zp& operator*=(const Zp& o) { return *this = *this * o; }

  static Zp raw(uint32_t value, uint32_t prime) {
    Zp z;
    z.v = value;
    z.p = prime;
    return z;
  }
};

// Reduction of a rational mod p; false when the denominator vanishes.
bool reduce_mod(const Rational& q, uint32_t p, Zp& out);

uint32_t mod_of_int(const Int& z, uint32_t p);

// Deterministic stream of distinct 31-bit primes driven by a seed.
class PrimeStream {
 public:
  explicit PrimeStream(uint64_t seed) : rng_(seed) {}
  uint32_t next();

 private:
  Rng rng_;
  std::vector<uint32_t> used_;
};

}  // namespace polarpath

#endif

#ifndef POLARPATH_MONOMIAL_HPP
#define POLARPATH_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace polarpath {

// Hard cap on ambient variables (x-block + incidence + multiplier block).
constexpr int kMaxVars = 20;

// Exponent vector with cached total degree. Order is graded reverse
// lexicographic everywhere in this project.
struct Monomial {
  uint16_t e[kMaxVars] = {0};
  uint32_t deg = 0;
  uint8_t n = 0;

  static Monomial one(int nvars) {
    Monomial m;
    m.n = static_cast<uint8_t>(nvars);
    return m;
  }
  static Monomial var(int nvars, int i, uint16_t k = 1) {
    Monomial m = one(nvars);
    m.e[i] = k;
    m.deg = k;
    return m;
  }

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const {
    return n == o.n && deg == o.deg && std::memcmp(e, o.e, n * sizeof(uint16_t)) == 0;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < n; ++i) r.e[i] += o.e[i];
    r.deg += o.deg;
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg > o.deg) return false;
    for (int i = 0; i < n; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }
  // this / o, assuming o.divides(*this)
  Monomial operator/(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < n; ++i) r.e[i] -= o.e[i];
    r.deg -= o.deg;
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r = one(n);
    uint32_t d = 0;
    for (int i = 0; i < n; ++i) {
      r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
      d += r.e[i];
    }
    r.deg = d;
    return r;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull;
    for (int i = 0; i < n; ++i) {
      h ^= e[i];
      h *= 1099511628211ull;
    }
    return h;
  }
};

// grevlex: higher degree wins; on ties the last nonzero entry of a-b being
// negative means a > b. Returns >0 if a > b, <0 if a < b, 0 if equal.
inline int cmp_grevlex(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = a.n - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>* names = nullptr);

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace polarpath

#endif

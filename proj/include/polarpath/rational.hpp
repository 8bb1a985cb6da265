#ifndef POLARPATH_RATIONAL_HPP
#define POLARPATH_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polarpath {

using Int = mpz_class;
// Canonical rational numbers: gcd(num, den) = 1, den > 0, zero is 0/1.
// mpq_class maintains exactly this invariant through canonicalize().
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "num", "num/den", with optional sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& s);

// "num" or "num/den", matching the wire format used in all JSON schemas.
std::string rational_to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// x = r1 mod m1, x = r2 mod m2 for coprime moduli; result in [0, m1*m2).
Int crt_pair(const Int& r1, const Int& m1, const Int& r2, const Int& m2);

// Rational reconstruction of a mod m with |num|, den <= sqrt(m/2).
// Returns false when no such fraction exists.
bool rational_reconstruct(const Int& a, const Int& m, Rational& out);

struct MonteCarloFailure : std::runtime_error {
  explicit MonteCarloFailure(const std::string& w) : std::runtime_error(w) {}
};
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& w) : std::runtime_error(w) {}
};
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& w) : std::runtime_error(w) {}
};

// Deterministic generator: all randomized choices in the pipeline flow from
// one seed so reruns are byte-identical. mt19937_64's output sequence is
// pinned by the standard.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    // xorshift* — portable and enough for parameter sampling
    uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * 0x2545f4914f6cdd1dull;
  }
  // uniform-ish integer in [lo, hi], inclusive
  long integer(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  Rng fork() { return Rng(next() ^ 0xabcddcba12344321ull); }

 private:
  uint64_t state_;
};

}  // namespace polarpath

#endif

#ifndef POLARPATH_SLP_HPP
#define POLARPATH_SLP_HPP

#include <string>
#include <vector>

#include "polarpath/multipoly.hpp"
#include "polarpath/unipoly.hpp"

namespace polarpath {

// Division- and loop-free straight-line program over Q. Instruction operands
// use the source convention: references <= 0 denote inputs (ref r is variable
// x_{r+n}), references >= 1 denote earlier instructions, 1-based.
class Slp {
 public:
  enum class OpKind : uint8_t { Const, Add, Sub, Mul };

  struct Instr {
    OpKind kind;
    Rational cval;  // Const only
    int32_t a = 0, b = 0;
  };

  Slp() = default;
  Slp(int input_count, std::vector<Instr> instrs, std::vector<int32_t> outputs);

  int input_count() const { return n_; }
  const std::vector<Instr>& instructions() const { return ins_; }
  const std::vector<int32_t>& outputs() const { return outs_; }
  size_t output_count() const { return outs_.size(); }

  // The complexity unit E: arithmetic instructions only. Constant loads are
  // represented and serialized but do not count toward length (the paper's
  // operation counts, e.g. PhiGen's 6n-2, are op counts).
  size_t length() const { return oplen_; }
  size_t instruction_count() const { return ins_.size(); }

  template <class Ring>
  std::vector<typename Ring::Elem> eval(
      const Ring& ring, const std::vector<typename Ring::Elem>& point) const {
    if ((int)point.size() != n_)
      throw InvalidInput("slp_eval: point length mismatch (expected " +
                         std::to_string(n_) + ")");
    std::vector<typename Ring::Elem> slot;
    slot.reserve(ins_.size());
    auto fetch = [&](int32_t r) -> const typename Ring::Elem& {
      return r <= 0 ? point[r + n_ - 1] : slot[r - 1];
    };
    for (auto& it : ins_) {
      switch (it.kind) {
        case OpKind::Const:
          slot.push_back(ring.from_coeff(it.cval));
          break;
        case OpKind::Add:
          slot.push_back(ring.add(fetch(it.a), fetch(it.b)));
          break;
        case OpKind::Sub:
          slot.push_back(ring.sub(fetch(it.a), fetch(it.b)));
          break;
        case OpKind::Mul:
          slot.push_back(ring.mul(fetch(it.a), fetch(it.b)));
          break;
      }
    }
    std::vector<typename Ring::Elem> out;
    out.reserve(outs_.size());
    for (auto r : outs_) out.push_back(fetch(r));
    return out;
  }

  std::vector<Rational> eval_rational(const std::vector<Rational>& point) const;

  std::string to_json() const;
  static Slp from_json(const std::string& text);

 private:
  int n_ = 0;
  std::vector<Instr> ins_;
  std::vector<int32_t> outs_;
  size_t oplen_ = 0;

  friend class SlpBuilder;
};

// incremental construction helper
class SlpBuilder {
 public:
  explicit SlpBuilder(int input_count) : n_(input_count) {}

  int32_t input(int var) const { return var + 1 - n_; }  // 0-based var index
  int32_t constant(const Rational& c) {
    ins_.push_back({Slp::OpKind::Const, c, 0, 0});
    return static_cast<int32_t>(ins_.size());
  }
  int32_t add(int32_t a, int32_t b) { return op(Slp::OpKind::Add, a, b); }
  int32_t sub(int32_t a, int32_t b) { return op(Slp::OpKind::Sub, a, b); }
  int32_t mul(int32_t a, int32_t b) { return op(Slp::OpKind::Mul, a, b); }

  void mark_output(int32_t r) { outs_.push_back(r); }
  Slp build() { return Slp(n_, std::move(ins_), std::move(outs_)); }
  size_t op_count() const {
    size_t k = 0;
    for (auto& i : ins_)
      if (i.kind != Slp::OpKind::Const) ++k;
    return k;
  }

 private:
  int n_;
  std::vector<Slp::Instr> ins_;
  std::vector<int32_t> outs_;

  int32_t op(Slp::OpKind k, int32_t a, int32_t b) {
    ins_.push_back({k, Rational(0), a, b});
    return static_cast<int32_t>(ins_.size());
  }
};

// dense expansion of the computed polynomials
std::vector<MultiPoly> slp_to_polys(const Slp& slp);

// straight-line program evaluating the given polynomials term by term;
// length <= 3 * (total term count) * (max degree); empty input rejected
Slp slp_from_polys(const std::vector<MultiPoly>& fs);

// phi_1 = sum x_k^2 + alpha_{1,k} x_k, phi_2 = sum alpha_{2,k} x_k;
// length is exactly 6n-2 arithmetic instructions
Slp phigen(const std::vector<Rational>& alpha);

// incidence lift: (f, phi_1 - e_1, ..., phi_i - e_i) over (e_1..e_i, x);
// length is exactly len(gamma) + len(gamma_phi) + i
Slp inc_slp(const Slp& gamma, const Slp& gamma_phi, int i);

// Baur-Strassen reverse mode: outputs of gamma followed by all first partial
// derivatives (output-major); per-output arithmetic cost <= 5 * len(gamma)
Slp jac_slp(const Slp& gamma);

// ring adaptors usable with Slp::eval
struct SRationalRing {
  using Elem = Rational;
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  Elem from_coeff(const Rational& c) const { return c; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

struct SZpRing {
  uint32_t p;
  using Elem = Zp;
  Elem zero() const { return Zp::zero(p); }
  Elem one() const { return Zp::one(p); }
  Elem from_coeff(const Rational& c) const {
    Zp z;
    if (!reduce_mod(c, p, z)) throw InvalidInput("denominator vanishes mod p");
    return z;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

struct SPolyRing {
  int n;
  using Elem = MultiPoly;
  Elem zero() const { return MultiPoly::zero(n); }
  Elem one() const { return MultiPoly::constant(n, Rational(1)); }
  Elem from_coeff(const Rational& c) const { return MultiPoly::constant(n, c); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

// Q[u]/(q) with q monic
struct SUModRing {
  const QUPoly& q;
  using Elem = QUPoly;
  Elem zero() const { return QUPoly(); }
  Elem one() const { return QUPoly::constant(Rational(1)); }
  Elem from_coeff(const Rational& c) const { return QUPoly::constant(c); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % q; }
};

// (Z/p)[u]/(q)
struct SZpUModRing {
  const ZpUPoly& q;
  uint32_t p;
  using Elem = ZpUPoly;
  Elem zero() const { return ZpUPoly(); }
  Elem one() const { return ZpUPoly::constant(Zp::one(p)); }
  Elem from_coeff(const Zp& c) const { return ZpUPoly::constant(c); }
  Elem from_coeff(const Rational& c) const {
    Zp z;
    if (!reduce_mod(c, p, z)) throw InvalidInput("denominator vanishes mod p");
    return ZpUPoly::constant(z);
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % q; }
};

}  // namespace polarpath

#endif

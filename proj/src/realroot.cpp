#include "polarpath/realroot.hpp"

#include <deque>

namespace polarpath {

ZZPoly ZZPoly::derivative() const {
  ZZPoly r;
  if (c.size() <= 1) return r;
  r.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * (long)i;
  r.norm();
  return r;
}

Rational ZZPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
  return acc;
}

int ZZPoly::sign_at(const Rational& x) const {
  if (c.empty()) return 0;
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  int d = deg();
  Int acc = 0;
  Int dpow = 1;
  // acc = sum c[i] num^i den^(d-i), Horner from the top
  for (int i = d; i >= 0; --i) {
    acc = acc * num + c[i] * dpow;
    if (i) dpow *= den;
  }
  return sgn(acc);
}

ZZPoly ZZPoly::primitive() const {
  if (is_zero()) return *this;
  Int g = 0;
  for (auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (sgn(c.back()) < 0) g = -g;
  ZZPoly r;
  r.c.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] / g;
  return r;
}

ZZPoly zz_from_upoly(const QUPoly& f) {
  ZZPoly r;
  if (f.is_zero()) return r;
  Int l = 1;
  for (auto& q : f.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  r.c.resize(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i) {
    Rational v = f.c[i] * Rational(l);
    r.c[i] = v.get_num();
  }
  r.norm();
  return r;
}

QUPoly upoly_from_zz(const ZZPoly& f) {
  QUPoly r;
  r.c.reserve(f.c.size());
  for (auto& v : f.c) r.c.push_back(Rational(v));
  r.norm();
  return r;
}

namespace {

// pseudo-remainder; *steps receives the number of lc(b) multiplications
ZZPoly prem(const ZZPoly& a, const ZZPoly& b, int* steps) {
  ZZPoly r = a;
  int db = b.deg();
  const Int& lb = b.c.back();
  int s = 0;
  while (!r.is_zero() && r.deg() >= db) {
    int k = r.deg() - db;
    Int lr = r.c.back();
    for (auto& v : r.c) v *= lb;
    ++s;
    for (int i = 0; i <= db; ++i) r.c[i + k] -= lr * b.c[i];
    r.norm();
  }
  if (steps) *steps = s;
  return r;
}

int sign_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int sign_at_plus_inf(const ZZPoly& f) { return f.is_zero() ? 0 : sgn(f.c.back()); }
int sign_at_minus_inf(const ZZPoly& f) {
  if (f.is_zero()) return 0;
  int s = sgn(f.c.back());
  return (f.deg() % 2) ? -s : s;
}

}  // namespace

std::vector<ZZPoly> sturm_chain(const ZZPoly& f) {
  std::vector<ZZPoly> chain;
  if (f.is_zero()) return chain;
  chain.push_back(f.primitive());
  ZZPoly d = f.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d.primitive());
  while (true) {
    const ZZPoly& a = chain[chain.size() - 2];
    const ZZPoly& b = chain[chain.size() - 1];
    int steps = 0;
    ZZPoly r = prem(a, b, &steps);
    if (r.is_zero()) break;
    // the pseudo-remainder carries a factor lc(b)^steps; flip so that the new
    // element equals a negative positive-multiple of (a mod b)
    int mult_sign = (sgn(b.c.back()) < 0 && (steps % 2)) ? -1 : 1;
    for (auto& v : r.c) v = -v * mult_sign;
    Int g = 0;
    for (auto& v : r.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g != 0 && g != 1)
      for (auto& v : r.c) v /= g;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sturm_count_all(const std::vector<ZZPoly>& chain) {
  if (chain.empty()) return 0;
  std::vector<int> lo, hi;
  for (auto& p : chain) {
    lo.push_back(sign_at_minus_inf(p));
    hi.push_back(sign_at_plus_inf(p));
  }
  return sign_variations(lo) - sign_variations(hi);
}

int sturm_count(const std::vector<ZZPoly>& chain, const Rational& a, const Rational& b) {
  if (chain.empty()) return 0;
  std::vector<int> lo, hi;
  for (auto& p : chain) {
    lo.push_back(p.sign_at(a));
    hi.push_back(p.sign_at(b));
  }
  return sign_variations(lo) - sign_variations(hi);
}

namespace {

// Taylor shift by 1: p(x + 1), exact integer Horner
ZZPoly shift1(const ZZPoly& p) {
  ZZPoly r = p;
  int d = r.deg();
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) r.c[j] += r.c[j + 1];
  return r;
}

// 2^deg * p(x/2)
ZZPoly half_scale(const ZZPoly& p) {
  ZZPoly r = p;
  int d = r.deg();
  for (int i = 0; i <= d; ++i) r.c[i] <<= (d - i);
  return r;
}

ZZPoly reverse_poly(const ZZPoly& p, int d) {
  ZZPoly r;
  r.c.assign(d + 1, Int(0));
  for (int i = 0; i <= p.deg(); ++i) r.c[d - i] = p.c[i];
  r.norm();
  return r;
}

// Descartes bound for roots in the open interval (0, 1)
int descartes_01(const ZZPoly& p) {
  ZZPoly t = shift1(reverse_poly(p, p.deg()));
  std::vector<int> signs;
  signs.reserve(t.c.size());
  for (auto& v : t.c) signs.push_back(sgn(v));
  return sign_variations(signs);
}

void vca(const ZZPoly& p, const Rational& lo, const Rational& hi,
         std::vector<RootInterval>& out) {
  struct Node {
    ZZPoly q;
    Rational lo, hi;
  };
  std::deque<Node> work;
  work.push_back({p, lo, hi});
  while (!work.empty()) {
    Node nd = std::move(work.front());
    work.pop_front();
    int v = descartes_01(nd.q);
    if (v == 0) continue;
    if (v == 1) {
      out.push_back({nd.lo, nd.hi, false});
      continue;
    }
    Rational mid = (nd.lo + nd.hi) / 2;
    ZZPoly left = half_scale(nd.q);
    ZZPoly right = shift1(left);
    if (!right.c.empty() && right.c[0] == 0) out.push_back({mid, mid, true});
    work.push_back({left.primitive(), nd.lo, mid});
    work.push_back({right.primitive(), mid, nd.hi});
  }
}

// one bisection step; valid for squarefree f isolating exactly one interior
// root, endpoints may coincide with other roots of f
void refine_step(const ZZPoly& f, const std::vector<ZZPoly>*& chain,
                 std::vector<ZZPoly>& chain_store, RootInterval& iv) {
  if (iv.exact) return;
  Rational mid = iv.mid();
  int sm = f.sign_at(mid);
  if (sm == 0) {
    iv.lo = iv.hi = mid;
    iv.exact = true;
    return;
  }
  int sl = f.sign_at(iv.lo);
  if (sl != 0) {
    if (sl * sm < 0)
      iv.hi = mid;
    else
      iv.lo = mid;
    return;
  }
  int sh = f.sign_at(iv.hi);
  if (sh != 0) {
    if (sm * sh < 0)
      iv.lo = mid;
    else
      iv.hi = mid;
    return;
  }
  // both endpoints are (other) roots: decide with a Sturm count
  if (!chain) {
    chain_store = sturm_chain(f);
    chain = &chain_store;
  }
  if (sturm_count(*chain, iv.lo, mid) >= 1)
    iv.hi = mid;
  else
    iv.lo = mid;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const ZZPoly& f_in) {
  std::vector<RootInterval> out;
  if (f_in.is_zero()) throw InvalidInput("isolate_roots: zero polynomial");
  ZZPoly f = f_in.primitive();
  if (f.deg() == 0) return out;
  bool zero_root = (f.c[0] == 0);
  while (!f.c.empty() && f.c[0] == 0) f.c.erase(f.c.begin());
  if (f.deg() >= 1) {
    Int maxc = 0;
    for (auto& v : f.c) {
      Int a = abs(v);
      if (a > maxc) maxc = a;
    }
    Int lead = abs(f.c.back());
    Int bound = 2;
    while (bound * lead < maxc + lead) bound <<= 1;
    bound <<= 1;
    Rational B = Rational(bound);

    {  // positive roots: g(x) = f(bound * x), roots mapped from (0,1)
      ZZPoly g = f;
      Int bp = 1;
      for (size_t i = 0; i < g.c.size(); ++i) {
        g.c[i] *= bp;
        bp *= bound;
      }
      vca(g.primitive(), Rational(0), B, out);
    }
    {  // negative roots via f(-x)
      ZZPoly g = f;
      for (size_t i = 0; i < g.c.size(); ++i)
        if (i % 2) g.c[i] = -g.c[i];
      Int bp = 1;
      for (size_t i = 0; i < g.c.size(); ++i) {
        g.c[i] *= bp;
        bp *= bound;
      }
      std::vector<RootInterval> neg;
      vca(g.primitive(), Rational(0), B, neg);
      for (auto& iv : neg) out.push_back({-iv.hi, -iv.lo, iv.exact});
    }
  }
  if (zero_root) out.push_back({Rational(0), Rational(0), true});
  std::sort(out.begin(), out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

  const std::vector<ZZPoly>* chain = nullptr;
  std::vector<ZZPoly> chain_store;
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    while (!(out[i].hi < out[i + 1].lo)) {
      if (out[i].exact && out[i + 1].exact)
        throw InvalidInput("isolate_roots: duplicate root, input not squarefree");
      refine_step(f_in, chain, chain_store, out[i]);
      refine_step(f_in, chain, chain_store, out[i + 1]);
    }
  }
  return out;
}

void refine_root(const ZZPoly& f, RootInterval& iv, const Rational& eps) {
  const std::vector<ZZPoly>* chain = nullptr;
  std::vector<ZZPoly> chain_store;
  while (!iv.exact && iv.width() > eps) refine_step(f, chain, chain_store, iv);
}

QI qi_eval(const QUPoly& f, const QI& x) {
  QI acc;
  for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + QI(f.c[i]);
  return acc;
}

QI qi_eval2(const QBPoly& f, const QI& u, const QI& v) {
  QI acc;
  for (size_t i = f.cu.size(); i-- > 0;) acc = acc * u + qi_eval(f.cu[i], v);
  return acc;
}

}  // namespace polarpath

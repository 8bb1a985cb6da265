#ifndef POLARPATH_POLAR_HPP
#define POLARPATH_POLAR_HPP

#include "polarpath/elim.hpp"

namespace polarpath {
namespace polar {

enum class Route { Lagrange, Minors };

struct PolarOptions {
  uint64_t seed = 1;
  ElimLimits limits;
  Route route = Route::Lagrange;
  int retries = 5;
  bool check_level_full = false;
};

// one line of the per-step degree ledger
struct DegreeEntry {
  std::string step;
  long degree = 0;
  Rational bound;
  bool ok = true;
};

using DegreeLedger = std::vector<DegreeEntry>;

// type triple ((n, m), (p, q), e) of a Lagrange system
struct LagrangeType {
  int n = 0, m = 0;  // variable blocks: base vars X, multipliers L
  int p = 0, q = 0;  // equation blocks
  int e = 0;         // base dimension

  bool admissible() const { return (n + m) - (p + q) >= e; }
};

// triple (Gamma, Q, S): Gamma over variables (X_1..X_n, L_1..L_m)
struct LagrangeSystem {
  Slp gamma;
  ZeroDimParam qParam;  // base points in C^e (possibly empty-set param)
  ZeroDimParam sParam;  // excluded points in C^n
  LagrangeType type;
};

// chart-local determinantal data: h, the minor sequence Hphi(h, i, m''), and
// the product of open-set denominators m * m' * m''
struct MinorSystem {
  std::vector<MultiPoly> base;
  std::vector<MultiPoly> minors;
  MultiPoly openDenoms;
};

struct MinorSelection {
  int excluded_h_row = 0;      // row of h left out of m''
  std::vector<int> cols;       // c+i-1 column indices of m''
};

// all (c+i)-minors route: f plus every maximal minor of jac(f, phi_1..phi_i)
std::vector<MultiPoly> rank_drop_system(const std::vector<MultiPoly>& fs,
                                        const std::vector<MultiPoly>& phis, int i);

// Def 2.5: the sequence of (c+i)-minors obtained by successively adding the
// missing row and a missing column of jac([h, phi_i]) to m''
MinorSystem build_h_minors(const std::vector<MultiPoly>& h,
                           const std::vector<MultiPoly>& phi, int i,
                           const MinorSelection& sel);

// zero-dimensional parametrization of sing(V(f)); fails when the Jacobian
// criterion locus has positive dimension
ZeroDimParam singular_points(const Slp& gamma, const PolarOptions& opt,
                             DegreeLedger* ledger = nullptr);

// Def 4.7: F_u = (f, Lagrange(f, i, L), u_1 L_1 + ... + u_p L_p - 1) with
// Lagrange(f, i, L) the entries of [L_1 .. L_p] jac(f, i)
LagrangeSystem w_lag(const LagrangeSystem& L, const std::vector<Rational>& u, int i);

// Def 4.9: reinterpret the system over base points (Q'', S'')
LagrangeSystem f_lag(const LagrangeSystem& L, const ZeroDimParam& qpp,
                     const ZeroDimParam& spp);

// generators of the defining polynomial system of a Lagrange system, with the
// variable order (X, L) and base-point constraints of qParam included
std::vector<MultiPoly> lagrange_generators(const LagrangeSystem& L);

// K(phi_1, V(f)) union S             (Lemma 3.3)
ZeroDimParam crit(const Slp& gamma, const Slp& gphi, const ZeroDimParam& S,
                  const PolarOptions& opt, DegreeLedger* ledger = nullptr);

// W((phi_1, phi_2), V(f))            (Lemma 3.4)
OneDimParam solve_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& S,
                        const PolarOptions& opt, DegreeLedger* ledger = nullptr);

// W(phi_1, W_2) union Z(P)           (Lemma 3.5)
ZeroDimParam crit_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& P,
                        const PolarOptions& opt, DegreeLedger* ledger = nullptr,
                        const OneDimParam* cached_w2 = nullptr);

// (W_2 intersect phi_1^{-1}(Z(Q''))) union Z(P)   (Lemma 3.6)
ZeroDimParam fiber_polar(const Slp& gamma, const Slp& gphi, const ZeroDimParam& qpp,
                         const ZeroDimParam& P, const PolarOptions& opt,
                         DegreeLedger* ledger = nullptr);

// --- runtime genericity checks (H1..H6 of the connectivity proposition) ----

enum class CheckStatus { Pass, Fail, Structural, Bypassed };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

using CheckLedger = std::vector<CheckEntry>;

// H1: V equidimensional of dim n-c with finitely many singular points.
// For complete intersections dim(V) = n-c forces equidimensionality
// (unmixedness), and a finite Jacobian-criterion locus then certifies both
// smoothness-outside-finite and radicality, i.e. assumption (A).
CheckEntry check_h1(const std::vector<MultiPoly>& fs, int n, const PolarOptions& opt);

// H2 is structural: phi_1 = sum (x_k + a_k/2)^2 - sum a_k^2/4 is proper and
// bounded below on R^n
CheckEntry check_h2();

// H3: W2 empty or 1-equidimensional with sing(W2) inside Z(S)
CheckEntry check_h3(const std::vector<MultiPoly>& fs, const std::vector<MultiPoly>& phis,
                    const OneDimParam& w2, const ZeroDimParam& S,
                    const PolarOptions& opt);

// H4: the used fibers of phi_1 are empty or (d-1)-equidimensional
CheckEntry check_h4(const std::vector<MultiPoly>& fs, const MultiPoly& phi1,
                    const ZeroDimParam& Q, const PolarOptions& opt);

bool charts_cover_regular_point(const std::vector<MultiPoly>& fs,
                                const std::vector<MultiPoly>& phis,
                                const ZeroDimParam& pts, size_t point_index);

// helpers shared with the roadmap layer
std::vector<MultiPoly> expand_system(const Slp& gamma);
Rational solve_polar_bound(int n, int c, int D);
Rational crit_bound(int n, int c, int D);
Rational binomial(int a, int b);

}  // namespace polar
}  // namespace polarpath

#endif
